//! Fillings of Young diagrams by (possibly subscripted) symplectic letters:
//! semistandard and symplectic predicates, Schensted row insertion,
//! jeu de taquin slides and column deletion.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::letter::{Letter, Letterlike, SubscriptedLetter};
use crate::partition::{Cell, Partition};

/// A filling of a Young diagram, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<L> {
    rows: Vec<Vec<L>>,
}

/// One bump of a row insertion: `bumped` was displaced from `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BumpStep<L> {
    pub row: usize,
    pub col: usize,
    pub bumped: L,
}

/// The path of a completed row insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BumpTrace<L> {
    pub steps: Vec<BumpStep<L>>,
    /// Box where the last letter came to rest.
    pub rest: Cell,
}

/// Result of running the bumping phase with an interceptor.
pub(crate) enum Bumping<L> {
    Rested(BumpTrace<L>),
    /// The interceptor fired before `incoming` was written into `(row, col)`;
    /// rows above `row` already carry the earlier bumps.
    Intercepted {
        row: usize,
        col: usize,
        incoming: L,
        bumped: L,
    },
}

impl<L> Default for Tableau<L> {
    fn default() -> Self {
        Tableau { rows: Vec::new() }
    }
}

impl<L: Letterlike> Tableau<L> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a tableau from its rows; row lengths must form a partition.
    pub fn from_rows(rows: Vec<Vec<L>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::RaggedRows);
        }
        Ok(Tableau { rows })
    }

    /// Parses rows separated by `/`, letters separated by whitespace,
    /// e.g. `"1 1 2' / 2 2'"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "∅" {
            return Ok(Self::new());
        }
        let rows = text
            .split('/')
            .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<L>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> &[Vec<L>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<L>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("row lengths are a partition")
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, cell: Cell) -> Option<&L> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?)
    }

    /// All `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, &L)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, x)| (Cell::new(r + 1, c + 1), x)))
    }

    pub fn map<M: Letterlike>(&self, f: impl Fn(&L) -> M) -> Tableau<M> {
        Tableau {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    /// The same filling with decorations dropped.
    pub fn erase(&self) -> Tableau<Letter> {
        self.map(Letterlike::letter)
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    /// Semistandard, every letter at most `n̄`, at most `n` rows, and each
    /// entry of row `i` at least `i`.
    pub fn is_symplectic(&self, n: u32) -> bool {
        self.is_semistandard()
            && self.rows.len() <= n as usize
            && self.entries().all(|(cell, x)| {
                let v = x.letter().value();
                v <= n && v as usize >= cell.row
            })
    }

    /// Number of entries whose underlying letter is `letter`.
    pub fn multiplicity(&self, letter: Letter) -> usize {
        self.entries().filter(|(_, x)| x.letter() == letter).count()
    }

    /// Exponents `m(k) - m(k̄)` for `k = 1..=n`.
    pub fn weight_monomial(&self, n: u32) -> Vec<i64> {
        (1..=n)
            .map(|k| self.multiplicity(Letter::plain(k)) as i64 - self.multiplicity(Letter::bar(k)) as i64)
            .collect()
    }

    /// Cells holding `letter` (ignoring decorations), left to right.
    pub fn cells_of(&self, letter: Letter) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .entries()
            .filter(|(_, x)| x.letter() == letter)
            .map(|(c, _)| c)
            .collect();
        cells.sort_by_key(|c| (c.col, c.row));
        cells
    }

    /// Largest entry in the alphabet order, if any.
    pub fn max_letter(&self) -> Option<Letter> {
        self.entries().map(|(_, x)| x.letter()).max()
    }

    /// Schensted row insertion `T ← x`.
    pub fn row_insert(&self, x: L) -> (Tableau<L>, BumpTrace<L>) {
        let mut t = self.clone();
        match t.bump(x, |_, _, _| false) {
            Bumping::Rested(trace) => (t, trace),
            Bumping::Intercepted { .. } => unreachable!("interceptor never fires"),
        }
    }

    /// Runs the bumping phase, stopping before the first bump for which
    /// `intercept(row, incoming, bumped)` is true.
    pub(crate) fn bump(&mut self, x: L, mut intercept: impl FnMut(usize, &L, &L) -> bool) -> Bumping<L> {
        let mut incoming = x;
        let mut steps = Vec::new();
        for r in 0.. {
            if r == self.rows.len() {
                self.rows.push(vec![incoming]);
                return Bumping::Rested(BumpTrace {
                    steps,
                    rest: Cell::new(r + 1, 1),
                });
            }
            let row = &mut self.rows[r];
            let c = row.partition_point(|e| *e <= incoming);
            if c == row.len() {
                row.push(incoming);
                return Bumping::Rested(BumpTrace {
                    steps,
                    rest: Cell::new(r + 1, c + 1),
                });
            }
            let bumped = row[c];
            if intercept(r + 1, &incoming, &bumped) {
                return Bumping::Intercepted {
                    row: r + 1,
                    col: c + 1,
                    incoming,
                    bumped,
                };
            }
            row[c] = incoming;
            steps.push(BumpStep {
                row: r + 1,
                col: c + 1,
                bumped,
            });
            incoming = bumped;
        }
        unreachable!()
    }

    pub(crate) fn set(&mut self, cell: Cell, x: L) {
        self.rows[cell.row - 1][cell.col - 1] = x;
    }

    /// Turns the tableau into a punctured one with a hole at `hole`.
    pub fn puncture(&self, hole: Cell) -> Result<PuncturedTableau<L>> {
        if !self.shape().contains(hole) {
            return Err(Error::HoleOutsideShape(hole));
        }
        let mut rows: Vec<Vec<Option<L>>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().map(Some).collect())
            .collect();
        rows[hole.row - 1][hole.col - 1] = None;
        Ok(PuncturedTableau { rows, hole })
    }

    /// Column deletion of the letter `k` across the first `c` columns.
    ///
    /// The `k` at the bottom of column 1 is removed and the `k` at the bottom
    /// of each column `2..=c` shifts into the vacated bottom cell of its left
    /// neighbour. The box at the bottom of column `c` leaves the shape.
    pub fn column_delete(&self, k: Letter, c: usize) -> Result<Tableau<L>> {
        let shape = self.shape();
        let bottoms: Vec<Cell> = (1..=c).map(|j| Cell::new(shape.column_len(j), j)).collect();
        for b in &bottoms {
            if b.row == 0 || self.get(*b).map(Letterlike::letter) != Some(k) {
                return Err(Error::MissingK {
                    letter: k.to_string(),
                    column: b.col,
                });
            }
        }
        let last = bottoms[c - 1];
        if shape.part(last.row) != last.col {
            return Err(Error::NoCornerInRow { shape, row: last.row });
        }
        let mut out = self.clone();
        for j in 0..c - 1 {
            let moved = *self.get(bottoms[j + 1]).expect("checked above");
            out.set(bottoms[j], moved);
        }
        out.rows[last.row - 1].pop();
        if out.rows[last.row - 1].is_empty() {
            out.rows.pop();
        }
        Ok(out)
    }
}

impl Tableau<SubscriptedLetter> {
    /// True when every letter's subscripts increase from left to right.
    pub fn subscripts_increase(&self) -> bool {
        let mut by_letter: std::collections::BTreeMap<Letter, Vec<(usize, u32)>> = Default::default();
        for (cell, x) in self.entries() {
            by_letter.entry(x.letter).or_default().push((cell.col, x.subscript));
        }
        by_letter.values_mut().all(|v| {
            v.sort();
            v.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1)
        })
    }
}

impl<L: Letterlike> Tableau<L> {
    /// Multi-line rendering with overbars.
    pub fn pretty(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.pretty()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| crate::letter::display_width(s))
            .max()
            .unwrap_or(1);
        cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| format!("{s}{}", " ".repeat(width - crate::letter::display_width(s))))
                    .collect::<Vec<_>>()
                    .join(" ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl<L: Letterlike> fmt::Display for Tableau<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl<L: Letterlike> fmt::Debug for Tableau<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[derive(Serialize)]
struct RowsRef<'a, L> {
    rows: &'a [Vec<L>],
}

#[derive(Deserialize)]
struct RowsDoc<L> {
    rows: Vec<Vec<L>>,
}

impl<L: Letterlike + Serialize> Serialize for Tableau<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RowsRef { rows: &self.rows }.serialize(s)
    }
}

impl<'de, L: Letterlike + Deserialize<'de>> Deserialize<'de> for Tableau<L> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = RowsDoc::<L>::deserialize(d)?;
        Tableau::from_rows(doc.rows).map_err(serde::de::Error::custom)
    }
}

/// A tableau with one unfilled square, the hole.
#[derive(Clone, PartialEq, Eq)]
pub struct PuncturedTableau<L> {
    rows: Vec<Vec<Option<L>>>,
    hole: Cell,
}

/// Outcome of sliding a hole out to a corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slid<L: Letterlike> {
    pub tableau: Tableau<L>,
    /// Final position of the hole, a corner of the original shape.
    pub corner: Cell,
    /// Hole positions visited, starting with the initial hole.
    pub path: Vec<Cell>,
}

impl<L: Letterlike> PuncturedTableau<L> {
    pub fn hole(&self) -> Cell {
        self.hole
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("row lengths are a partition")
    }

    pub fn get(&self, cell: Cell) -> Option<&L> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)?
            .as_ref()
    }

    /// Semistandard with the hole skipped.
    pub fn is_semistandard(&self) -> bool {
        let filled = |r: &Vec<Option<L>>| r.iter().flatten().copied().collect::<Vec<L>>();
        let rows_ok = self.rows.iter().all(|r| filled(r).windows(2).all(|w| w[0] <= w[1]));
        let shape = self.shape();
        let cols_ok = (1..=shape.part(1)).all(|c| {
            let col: Vec<L> = (1..=shape.column_len(c))
                .filter_map(|r| self.get(Cell::new(r, c)).copied())
                .collect();
            col.windows(2).all(|w| w[0] < w[1])
        });
        rows_ok && cols_ok
    }

    /// Entries other than the hole, in row-major order.
    pub fn letters(&self) -> Vec<L> {
        self.rows.iter().flatten().flatten().copied().collect()
    }

    /// One backward slide: the smaller of the entries below and to the right
    /// of the hole moves into it, the one below winning ties.
    pub fn jdt_slide(mut self) -> Result<Self> {
        let h = self.hole;
        let below = self.get(Cell::new(h.row + 1, h.col)).copied();
        let right = self.get(Cell::new(h.row, h.col + 1)).copied();
        let from = match (below, right) {
            (None, None) => return Err(Error::HoleAtCorner(h)),
            (Some(_), None) => Cell::new(h.row + 1, h.col),
            (None, Some(_)) => Cell::new(h.row, h.col + 1),
            (Some(b), Some(r)) if b <= r => Cell::new(h.row + 1, h.col),
            (Some(_), Some(_)) => Cell::new(h.row, h.col + 1),
        };
        let moved = self.rows[from.row - 1][from.col - 1].take();
        self.rows[h.row - 1][h.col - 1] = moved;
        self.hole = from;
        Ok(self)
    }

    pub fn is_hole_at_corner(&self) -> bool {
        self.get(Cell::new(self.hole.row + 1, self.hole.col)).is_none()
            && self.get(Cell::new(self.hole.row, self.hole.col + 1)).is_none()
    }

    /// Slides until the hole reaches a corner, then drops the hole.
    pub fn slide_to_corner(mut self) -> Slid<L> {
        let mut path = vec![self.hole];
        while !self.is_hole_at_corner() {
            self = self.jdt_slide().expect("hole is not at a corner");
            path.push(self.hole);
        }
        let corner = self.hole;
        let mut rows = self.rows;
        let row = &mut rows[corner.row - 1];
        row.pop();
        if row.is_empty() {
            rows.pop();
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.expect("only the hole is empty")).collect())
            .collect();
        Slid {
            tableau: Tableau { rows },
            corner,
            path,
        }
    }
}

impl<L: Letterlike> fmt::Debug for PuncturedTableau<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.map_or("∘".to_string(), |x| x.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type T = Tableau<Letter>;
    type S = Tableau<SubscriptedLetter>;

    fn t(s: &str) -> T {
        T::parse(s).unwrap()
    }

    fn l(s: &str) -> Letter {
        s.parse().unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    const EXAMPLE_T: &str = "1 1 2' 2' / 2 2' 3 4' / 3 3' 4 / 4 4 4' / 5 5'";

    #[test]
    fn predicates_on_reference_tableau() {
        let big = t(EXAMPLE_T);
        assert!(big.is_semistandard());
        assert!(big.is_symplectic(5));
        assert!(!big.is_symplectic(4));
        assert!(!t("1' 1").is_semistandard());
        let col = t("1 / 1'");
        assert!(col.is_semistandard());
        assert!(!col.is_symplectic(2));
    }

    #[test]
    fn row_insert_traces_the_bumping_path() {
        let (out, trace) = t(EXAMPLE_T).row_insert(l("1'"));
        let steps: Vec<(usize, usize, String)> = trace
            .steps
            .iter()
            .map(|s| (s.row, s.col, s.bumped.to_string()))
            .collect();
        assert_eq!(
            steps,
            [
                (1, 3, "2'".to_string()),
                (2, 3, "3".to_string()),
                (3, 2, "3'".to_string()),
                (4, 1, "4".to_string()),
                (5, 1, "5".to_string()),
            ]
        );
        assert_eq!(trace.rest, Cell::new(6, 1));
        assert!(out.is_semistandard());
        assert!(!out.is_symplectic(5));
        assert_eq!(out.shape(), p(&[4, 4, 3, 3, 2, 1]));

        let (one, trace) = T::new().row_insert(l("3'"));
        assert_eq!(one, t("3'"));
        assert!(trace.steps.is_empty());
        assert_eq!(one.shape(), p(&[1]));

        let (out, trace) = t("1 1").row_insert(l("2"));
        assert_eq!(out, t("1 1 2"));
        assert!(trace.steps.is_empty() && trace.rest == Cell::new(1, 3));
    }

    #[test]
    fn slides_follow_the_reference_example() {
        // rows above the hole already carry the bumps of 1̄ and 2̄
        let before = t("1 1 1' 2' / 2 2' 2' 4' / 3 3' 4 / 4 4 4' / 5 5'");
        let punct = before.puncture(Cell::new(3, 2)).unwrap();
        let once = punct.clone().jdt_slide().unwrap();
        assert_eq!(once.hole(), Cell::new(4, 2));
        assert_eq!(once.get(Cell::new(3, 2)), Some(&l("4")));
        let twice = once.jdt_slide().unwrap();
        assert_eq!(twice.hole(), Cell::new(4, 3));
        assert_eq!(twice.get(Cell::new(4, 2)), Some(&l("4'")));
        assert!(matches!(twice.clone().jdt_slide(), Err(Error::HoleAtCorner(_))));

        let slid = punct.slide_to_corner();
        assert_eq!(slid.corner, Cell::new(4, 3));
        assert_eq!(slid.tableau, t("1 1 1' 2' / 2 2' 2' 4' / 3 4 4 / 4 4' / 5 5'"));
        assert_eq!(slid.path, vec![Cell::new(3, 2), Cell::new(4, 2), Cell::new(4, 3)]);
    }

    #[test]
    fn slide_in_a_column_and_at_a_corner() {
        let col = t("1 / 2").puncture(Cell::new(1, 1)).unwrap();
        let moved = col.jdt_slide().unwrap();
        assert_eq!(moved.hole(), Cell::new(2, 1));
        assert_eq!(moved.get(Cell::new(1, 1)), Some(&l("2")));

        let corner = t("1 2 / 3").puncture(Cell::new(1, 2)).unwrap();
        let slid = corner.slide_to_corner();
        assert_eq!(slid.tableau, t("1 / 3"));
        assert_eq!(slid.corner, Cell::new(1, 2));
    }

    #[test]
    fn subscripted_slide_moves_right_neighbour_left() {
        let before =
            S::parse("1_1 1_2 1'_1 2'_3 / 2_1 2'_1 2'_2 4'_2 / 3_1 3_2 4_3 / 4_1 4_2 4'_1 / 5_1 5'_1").unwrap();
        let slid = before.puncture(Cell::new(3, 1)).unwrap().slide_to_corner();
        assert_eq!(slid.path[1], Cell::new(3, 2));
        assert_eq!(slid.tableau.rows()[2][0].to_string(), "3_2");
        assert_eq!(slid.tableau.erase(), t("1 1 1' 2' / 2 2' 2' 4' / 3 4 4 / 4 4' / 5 5'"));
    }

    #[test]
    fn column_deletion() {
        assert_eq!(t("1 1 / 2 2").column_delete(l("2"), 2).unwrap(), t("1 1 / 2"));
        assert_eq!(t("2").column_delete(l("2"), 1).unwrap(), T::new());
        assert!(matches!(
            t("1 1 / 2").column_delete(l("2"), 2),
            Err(Error::MissingK { column: 2, .. })
        ));
        let s = S::parse("1_1 1_2 2_3 / 2_1 2_2").unwrap();
        let out = s.column_delete(l("2"), 3).unwrap();
        assert_eq!(out, S::parse("1_1 1_2 / 2_2 2_3").unwrap());
    }

    #[test]
    fn multiplicities() {
        let p = t("1 1' 2 2 2 / 2' 3' 3'");
        assert_eq!(p.multiplicity(l("2")), 3);
        assert_eq!(p.multiplicity(l("2'")), 1);
        assert_eq!(p.weight_monomial(3)[1], 2);
        assert_eq!(T::new().weight_monomial(3), vec![0, 0, 0]);
        assert_eq!(t("1 1'").weight_monomial(1), vec![0]);
    }

    #[test]
    fn json_shape() {
        let x = t("1 1' 2' / 2");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"rows":[["1","1'","2'"],["2"]]}"#);
        assert_eq!(serde_json::from_str::<T>(&s).unwrap(), x);
        assert!(serde_json::from_str::<T>(r#"{"rows":[["1"],["2","2"]]}"#).is_err());
        let sub = S::parse("1_1 1'_2").unwrap();
        assert_eq!(serde_json::to_string(&sub).unwrap(), r#"{"rows":[["1_1","1'_2"]]}"#);
    }

    /// Every semistandard filling over `Γ_n` with at most `max` boxes.
    fn all_semistandard(n: u32, max: usize) -> Vec<T> {
        fn fill(cells: &[Cell], i: usize, rows: &mut Vec<Vec<Letter>>, n: u32, out: &mut Vec<T>) {
            if i == cells.len() {
                out.push(T::from_rows(rows.clone()).unwrap());
                return;
            }
            let c = cells[i];
            for x in Letter::alphabet(n) {
                let left_ok = c.col == 1 || rows[c.row - 1][c.col - 2] <= x;
                let up_ok = c.row == 1 || rows[c.row - 2][c.col - 1] < x;
                if left_ok && up_ok {
                    if c.col == 1 {
                        rows.push(vec![x]);
                    } else {
                        rows[c.row - 1].push(x);
                    }
                    fill(cells, i + 1, rows, n, out);
                    if c.col == 1 {
                        rows.pop();
                    } else {
                        rows[c.row - 1].pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        for w in 0..=max {
            for shape in Partition::all_of_weight(w) {
                let cells: Vec<Cell> = (1..=shape.len())
                    .flat_map(|r| (1..=shape.part(r)).map(move |c| Cell::new(r, c)))
                    .collect();
                fill(&cells, 0, &mut Vec::new(), n, &mut out);
            }
        }
        out
    }

    /// Inverse of `column_delete`: bottom `k`s of columns `1..c` move one
    /// column right and a new `k` enters at the bottom of column 1.
    fn column_insert(t: &T, k: Letter, c: usize) -> T {
        let shape = t.shape();
        let mut rows = t.rows().to_vec();
        let new = Cell::new(shape.column_len(c) + 1, c);
        if new.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[new.row - 1].push(k);
        for j in (1..c).rev() {
            let b = Cell::new(shape.column_len(j), j);
            let moved = rows[b.row - 1][b.col - 1];
            let target = if j + 1 == c {
                new
            } else {
                Cell::new(shape.column_len(j + 1), j + 1)
            };
            rows[target.row - 1][target.col - 1] = moved;
        }
        if c > 1 {
            rows[shape.column_len(1) - 1][0] = k;
        }
        T::from_rows(rows).unwrap()
    }

    #[test]
    fn row_insert_preserves_semistandardness_exhaustively() {
        let all = all_semistandard(2, 4);
        assert!(all.len() > 100);
        for t in &all {
            for x in Letter::alphabet(2) {
                let (out, trace) = t.row_insert(x);
                assert!(out.is_semistandard(), "{t:?} <- {x}");
                assert_eq!(
                    t.shape().compare_cover(&out.shape()),
                    crate::partition::Cover::GrowthInRow(trace.rest.row)
                );
            }
        }
    }

    #[test]
    fn column_delete_is_undone_by_column_insertion() {
        let mut hits = 0;
        for t in all_semistandard(2, 6) {
            for k in Letter::alphabet(2) {
                for c in 1..=t.shape().part(1) {
                    let Ok(out) = t.column_delete(k, c) else { continue };
                    hits += 1;
                    let removed = Cell::new(t.shape().column_len(c), c);
                    assert_eq!(out.shape(), t.shape().without_cell(removed).unwrap());
                    assert!(out.is_semistandard());
                    assert_eq!(column_insert(&out, k, c), t, "{t:?} k={k} c={c}");
                }
            }
        }
        assert!(hits > 50);
    }
}
