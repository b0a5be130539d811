//! The two-dimensional presentation of the correspondence: the picture of a
//! word on a stratified grid, the local rules relating the four shapes around
//! each cell, and the recovery of `P` and `Q` from the grid's edges.
//!
//! Vertex `(i, j)` carries the shape `Λ(i, j)`; cell `(i, j)` is the square
//! whose bottom-right vertex is `(i, j)`. Row `i` of cells belongs to the
//! stratum of the letter whose subscripted copies have ordinals `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::berele::{standardize_word, UpDownTableau, Word};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::partition::{is_horizontal_strip, Cell, Cover, Partition};
use crate::tableau::Tableau;

/// Assignment of grid rows `1..=f` to letters, in contiguous blocks ordered
/// like the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stratification {
    n: u32,
    /// `sizes[γ.index()] = m_w(γ)`.
    sizes: Vec<usize>,
}

impl Stratification {
    /// Builds the stratification from block sizes indexed by alphabet position.
    pub fn new(n: u32, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != 2 * n as usize {
            return Err(Error::InvalidPair(format!("{} strata for n = {n}", sizes.len())));
        }
        Ok(Stratification { n, sizes })
    }

    pub fn of_word(w: &Word) -> Self {
        Stratification {
            n: w.n(),
            sizes: Letter::alphabet(w.n()).map(|l| w.multiplicity(l)).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Total number of rows `f`.
    pub fn size(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn multiplicity(&self, letter: Letter) -> usize {
        self.sizes.get(letter.index()).copied().unwrap_or(0)
    }

    /// First row of the `letter` block; for an empty block, the row where it
    /// would begin.
    pub fn start(&self, letter: Letter) -> usize {
        self.sizes[..letter.index()].iter().sum::<usize>() + 1
    }

    /// Last row of the `letter` block; `start - 1` for an empty block.
    pub fn end(&self, letter: Letter) -> usize {
        self.start(letter) + self.multiplicity(letter) - 1
    }

    pub fn rows(&self, letter: Letter) -> RangeInclusive<usize> {
        self.start(letter)..=self.end(letter)
    }

    /// The letter whose block contains grid row `row`.
    pub fn letter_of_row(&self, row: usize) -> Letter {
        let mut end = 0;
        for (i, &m) in self.sizes.iter().enumerate() {
            end += m;
            if row <= end {
                return Letter::from_index(i);
            }
        }
        panic!("row {row} lies outside the {} stratified rows", end)
    }
}

/// A word drawn on the stratified grid: column `j` holds one `×` in row
/// `ord(w̃_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Picture {
    strat: Stratification,
    cross_rows: Vec<usize>,
}

impl Picture {
    pub fn of_word(w: &Word) -> Self {
        let (sw, _) = standardize_word(w);
        Picture {
            strat: Stratification::of_word(w),
            cross_rows: sw.ordinals(),
        }
    }

    pub fn size(&self) -> usize {
        self.cross_rows.len()
    }

    pub fn stratification(&self) -> &Stratification {
        &self.strat
    }

    /// Row of the `×` in column `col`.
    pub fn cross_row(&self, col: usize) -> usize {
        self.cross_rows[col - 1]
    }

    pub fn has_cross(&self, cell: Cell) -> bool {
        self.cross_rows.get(cell.col.wrapping_sub(1)) == Some(&cell.row)
    }

    /// The word read off the crosses.
    pub fn word(&self) -> Word {
        let letters = self.cross_rows.iter().map(|&r| self.strat.letter_of_row(r)).collect();
        Word::new(letters, self.strat.n).expect("strata letters lie in the alphabet")
    }
}

/// The picture of `w`.
pub fn picture_of(w: &Word) -> Picture {
    Picture::of_word(w)
}

/// A symbol written in a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    Cross,
    Circle,
}

impl Serialize for Mark {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Mark::Cross => "x",
            Mark::Circle => "o",
        })
    }
}

impl<'de> Deserialize<'de> for Mark {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(d)?.as_str() {
            "x" => Ok(Mark::Cross),
            "o" => Ok(Mark::Circle),
            other => Err(serde::de::Error::custom(format!("unknown mark {other:?}"))),
        }
    }
}

/// Which local rule a cell follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalRuleCase {
    CarryAll,
    /// `A = B ≠ C = D`.
    CarryVert,
    /// `A = C ≠ B = D`.
    CarryHoriz,
    Cross,
    M,
    R,
    Circle,
    Jbar,
    J,
    JbarPrime,
    JPrime,
    W,
    Ya,
}

/// Output of a forward rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forward {
    pub d: Partition,
    pub case: LocalRuleCase,
    pub circle: bool,
}

/// Output of a backward rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Backward {
    pub a: Partition,
    pub mark: Option<Mark>,
    pub case: LocalRuleCase,
}

fn invalid(what: &str, parts: &[&Partition]) -> Error {
    let shapes: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    Error::InvalidConfiguration(format!("{what}: {}", shapes.join(", ")))
}

/// Computes `Λ(D)` from `Λ(A)`, `Λ(B)`, `Λ(C)`, the cell's content and its
/// stratum.
pub fn forward_rule(a: &Partition, b: &Partition, c: &Partition, cross: bool, stratum: Letter) -> Result<Forward> {
    use Cover::*;
    let v = stratum.value() as usize;
    let out = |d: Partition, case| Forward { d, case, circle: false };
    let bad = |what| invalid(what, &[a, b, c]);
    let ab = a.compare_cover(b);
    let ac = a.compare_cover(c);
    if cross {
        if ab == Equal && ac == Equal {
            return Ok(out(a.add_box(1)?, LocalRuleCase::Cross));
        }
        return Err(bad("× in a cell whose upper shapes differ"));
    }
    Ok(match (ab, ac) {
        (Unrelated, _) | (_, Unrelated) => return Err(bad("non-adjacent shapes")),
        (Equal, Equal) => out(a.clone(), LocalRuleCase::CarryAll),
        (Equal, _) => out(c.clone(), LocalRuleCase::CarryVert),
        (_, Equal) => out(b.clone(), LocalRuleCase::CarryHoriz),
        (GrowthInRow(k), GrowthInRow(k2)) if k != k2 => out(b.union(c), LocalRuleCase::M),
        (GrowthInRow(k), GrowthInRow(_)) if v > k => out(
            b.add_box(k + 1).map_err(|_| bad("R box not addable"))?,
            LocalRuleCase::R,
        ),
        (GrowthInRow(_), GrowthInRow(_)) => Forward {
            d: a.clone(),
            case: LocalRuleCase::Circle,
            circle: true,
        },
        (GrowthInRow(_), ShrinkInRow(_)) => {
            let x = b.diff_box(a)?;
            let y = a.diff_box(c)?;
            if x.is_adjacent(&y) {
                out(a.clone(), LocalRuleCase::Jbar)
            } else {
                out(c.with_cell(x).map_err(|_| bad("J box not addable"))?, LocalRuleCase::J)
            }
        }
        (ShrinkInRow(_), GrowthInRow(_)) => {
            let x = a.diff_box(b)?;
            let y = c.diff_box(a)?;
            if x.is_adjacent(&y) {
                out(a.clone(), LocalRuleCase::JbarPrime)
            } else {
                out(
                    b.with_cell(y).map_err(|_| bad("J′ box not addable"))?,
                    LocalRuleCase::JPrime,
                )
            }
        }
        (ShrinkInRow(k), ShrinkInRow(k2)) if k != k2 => out(b.intersect(c), LocalRuleCase::W),
        (ShrinkInRow(k), ShrinkInRow(_)) if k >= 2 => out(
            b.remove_box(k - 1).map_err(|_| bad("Ya box not removable"))?,
            LocalRuleCase::Ya,
        ),
        (ShrinkInRow(_), ShrinkInRow(_)) => return Err(bad("double shrink in row 1")),
    })
}

/// Recovers `Λ(A)` and the cell's content from `Λ(B)`, `Λ(C)`, `Λ(D)` and
/// the stratum.
pub fn backward_rule(b: &Partition, c: &Partition, d: &Partition, stratum: Letter) -> Result<Backward> {
    use Cover::*;
    let v = stratum.value() as usize;
    let out = |a: Partition, case| Backward { a, mark: None, case };
    let bad = |what| invalid(what, &[b, c, d]);
    let bd = b.compare_cover(d);
    let cd = c.compare_cover(d);
    if b == c {
        return Ok(match bd {
            Equal => out(d.clone(), LocalRuleCase::CarryAll),
            GrowthInRow(1) => Backward {
                a: b.clone(),
                mark: Some(Mark::Cross),
                case: LocalRuleCase::Cross,
            },
            GrowthInRow(j) if v >= j => out(
                b.remove_box(j - 1).map_err(|_| bad("R box not removable"))?,
                LocalRuleCase::R,
            ),
            GrowthInRow(_) => return Err(bad("growth below the stratum bound")),
            ShrinkInRow(r) if v <= r => Backward {
                a: d.clone(),
                mark: Some(Mark::Circle),
                case: LocalRuleCase::Circle,
            },
            ShrinkInRow(r) => out(
                b.add_box(r + 1).map_err(|_| bad("Ya box not addable"))?,
                LocalRuleCase::Ya,
            ),
            Unrelated => return Err(bad("non-adjacent shapes")),
        });
    }
    Ok(match (bd, cd) {
        (Unrelated, _) | (_, Unrelated) => return Err(bad("non-adjacent shapes")),
        (Equal, _) => out(c.clone(), LocalRuleCase::CarryHoriz),
        (_, Equal) => out(b.clone(), LocalRuleCase::CarryVert),
        (GrowthInRow(_), GrowthInRow(_)) => out(b.intersect(c), LocalRuleCase::M),
        (ShrinkInRow(_), GrowthInRow(_)) => {
            let b1 = b.diff_box(d)?;
            let b2 = d.diff_box(c)?;
            if b1.is_adjacent(&b2) {
                out(d.clone(), LocalRuleCase::Jbar)
            } else {
                out(c.with_cell(b1).map_err(|_| bad("J box not addable"))?, LocalRuleCase::J)
            }
        }
        (GrowthInRow(_), ShrinkInRow(_)) => {
            let b1 = d.diff_box(b)?;
            let b2 = c.diff_box(d)?;
            if b1.is_adjacent(&b2) {
                out(d.clone(), LocalRuleCase::JbarPrime)
            } else {
                out(
                    b.with_cell(b2).map_err(|_| bad("J′ box not addable"))?,
                    LocalRuleCase::JPrime,
                )
            }
        }
        (ShrinkInRow(_), ShrinkInRow(_)) => out(b.union(c), LocalRuleCase::W),
    })
}

/// Order in which `fill_grid_with` visits cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillOrder {
    #[default]
    RowMajor,
    ColumnMajor,
}

/// The picture with every vertex labelled by its shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeGrid {
    strat: Stratification,
    vertices: Vec<Vec<Partition>>,
    cases: Vec<Vec<LocalRuleCase>>,
    marks: BTreeMap<Cell, Mark>,
}

/// Applies the local rules from the empty top and left borders.
pub fn fill_grid(pic: &Picture) -> Result<ShapeGrid> {
    fill_grid_with(pic, FillOrder::RowMajor)
}

pub fn fill_grid_with(pic: &Picture, order: FillOrder) -> Result<ShapeGrid> {
    let f = pic.size();
    let mut vertices = vec![vec![Partition::empty(); f + 1]; f + 1];
    let mut cases = vec![vec![LocalRuleCase::CarryAll; f]; f];
    let mut marks = BTreeMap::new();
    let cells: Vec<(usize, usize)> = match order {
        FillOrder::RowMajor => (1..=f).flat_map(|i| (1..=f).map(move |j| (i, j))).collect(),
        FillOrder::ColumnMajor => (1..=f).flat_map(|j| (1..=f).map(move |i| (i, j))).collect(),
    };
    for (i, j) in cells {
        let cell = Cell::new(i, j);
        let cross = pic.has_cross(cell);
        let r = forward_rule(
            &vertices[i - 1][j - 1],
            &vertices[i - 1][j],
            &vertices[i][j - 1],
            cross,
            pic.strat.letter_of_row(i),
        )
        .map_err(|e| match e {
            Error::InvalidConfiguration(s) => Error::InvalidConfiguration(format!("cell {cell}: {s}")),
            e => e,
        })?;
        if cross {
            marks.insert(cell, Mark::Cross);
        } else if r.circle {
            marks.insert(cell, Mark::Circle);
        }
        vertices[i][j] = r.d;
        cases[i - 1][j - 1] = r.case;
    }
    Ok(ShapeGrid {
        strat: pic.strat.clone(),
        vertices,
        cases,
        marks,
    })
}

impl ShapeGrid {
    /// Grid size `f`.
    pub fn size(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn stratification(&self) -> &Stratification {
        &self.strat
    }

    /// `Λ(i, j)`.
    pub fn vertex(&self, i: usize, j: usize) -> &Partition {
        &self.vertices[i][j]
    }

    pub fn vertices(&self) -> &[Vec<Partition>] {
        &self.vertices
    }

    pub fn case(&self, cell: Cell) -> LocalRuleCase {
        self.cases[cell.row - 1][cell.col - 1]
    }

    pub fn mark(&self, cell: Cell) -> Option<Mark> {
        self.marks.get(&cell).copied()
    }

    pub fn marks(&self) -> &BTreeMap<Cell, Mark> {
        &self.marks
    }

    /// `Λ(f, 0..=f)`.
    pub fn bottom_edge(&self) -> &[Partition] {
        self.vertices.last().expect("at least one row")
    }

    /// `Λ(0..=f, f)`.
    pub fn right_edge(&self) -> Vec<Partition> {
        let f = self.size();
        self.vertices.iter().map(|row| row[f].clone()).collect()
    }

    /// The picture underlying the grid.
    pub fn picture(&self) -> Picture {
        let mut cross_rows = vec![0; self.size()];
        for (cell, m) in &self.marks {
            if *m == Mark::Cross {
                cross_rows[cell.col - 1] = cell.row;
            }
        }
        Picture {
            strat: self.strat.clone(),
            cross_rows,
        }
    }

    /// Every failure of the structural properties local rules guarantee:
    /// row and column templates, the row bound within each stratum, and
    /// agreement of the backward rules with every cell.
    pub fn violations(&self) -> Vec<String> {
        let f = self.size();
        let mut out = Vec::new();
        for i in 1..=f {
            let edges: Vec<Cover> = (0..=f)
                .map(|j| self.vertices[i - 1][j].compare_cover(&self.vertices[i][j]))
                .collect();
            let marks: Vec<Option<Mark>> = (1..=f).map(|j| self.mark(Cell::new(i, j))).collect();
            if let Err(e) = check_template(&edges, &marks) {
                out.push(format!("row {i}: {e}"));
            }
            let k = self.strat.letter_of_row(i).value() as usize;
            for j in 0..=f {
                if self.vertices[i][j].len() > k || self.vertices[i - 1][j].len() > k {
                    out.push(format!("vertex ({i},{j}) has more than {k} parts"));
                }
            }
        }
        for j in 1..=f {
            let edges: Vec<Cover> = (0..=f)
                .map(|i| self.vertices[i][j - 1].compare_cover(&self.vertices[i][j]))
                .collect();
            let marks: Vec<Option<Mark>> = (1..=f).map(|i| self.mark(Cell::new(i, j))).collect();
            if let Err(e) = check_template(&edges, &marks) {
                out.push(format!("column {j}: {e}"));
            }
        }
        for i in 1..=f {
            for j in 1..=f {
                let cell = Cell::new(i, j);
                let got = backward_rule(
                    &self.vertices[i - 1][j],
                    &self.vertices[i][j - 1],
                    &self.vertices[i][j],
                    self.strat.letter_of_row(i),
                );
                match got {
                    Ok(b)
                        if b.a == self.vertices[i - 1][j - 1]
                            && b.mark == self.mark(cell)
                            && b.case == self.case(cell) => {}
                    Ok(b) => out.push(format!(
                        "cell {cell}: backward rule gives {} {:?} {:?}",
                        b.a, b.mark, b.case
                    )),
                    Err(e) => out.push(format!("cell {cell}: {e}")),
                }
            }
        }
        out
    }

    /// Multi-line rendering as a shape array with marks between vertex rows.
    pub fn render_ascii(&self) -> String {
        let f = self.size();
        let width = self
            .vertices
            .iter()
            .flatten()
            .map(|p| p.compact().chars().count())
            .max()
            .unwrap_or(1)
            .max(1)
            + 1;
        let label_width = Letter::alphabet(self.strat.n)
            .map(|l| crate::letter::display_width(&l.pretty()))
            .max()
            .unwrap_or(1)
            + 1;
        let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(crate::letter::display_width(s))));
        let mut lines = Vec::new();
        for i in 0..=f {
            if i > 0 {
                let mut line = pad(&self.strat.letter_of_row(i).pretty(), label_width);
                line.push_str(&" ".repeat(width / 2 + 1));
                for j in 1..=f {
                    let sym = match self.mark(Cell::new(i, j)) {
                        Some(Mark::Cross) => "×",
                        Some(Mark::Circle) => "○",
                        None => "",
                    };
                    line.push_str(&pad(sym, width));
                }
                lines.push(line.trim_end().to_string());
            }
            let mut line = " ".repeat(label_width);
            for j in 0..=f {
                line.push_str(&pad(&self.vertices[i][j].compact(), width));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

/// Checks a line of edges against `=…= × growth… [○ shrink…]`.
fn check_template(edges: &[Cover], marks: &[Option<Mark>]) -> std::result::Result<(), String> {
    let crosses: Vec<usize> = (0..marks.len()).filter(|&j| marks[j] == Some(Mark::Cross)).collect();
    let circles: Vec<usize> = (0..marks.len()).filter(|&j| marks[j] == Some(Mark::Circle)).collect();
    let &[x] = crosses.as_slice() else {
        return Err(format!("{} crosses", crosses.len()));
    };
    if circles.len() > 1 {
        return Err(format!("{} circles", circles.len()));
    }
    let o = circles.first().copied();
    // cell at index j sits between edges j and j + 1
    for (e, cover) in edges.iter().enumerate() {
        let ok = if e <= x {
            *cover == Cover::Equal
        } else if o.is_some_and(|o| e > o) {
            matches!(cover, Cover::ShrinkInRow(_))
        } else {
            *cover == Cover::GrowthInRow(1) && e == x + 1 || matches!(cover, Cover::GrowthInRow(_)) && e > x + 1
        };
        if !ok {
            return Err(format!("edge {e} is {cover:?}"));
        }
    }
    if let Some(o) = o {
        if o <= x {
            return Err("○ before ×".into());
        }
    }
    Ok(())
}

/// The `Q`-symbol: the bottom edge of the grid.
pub fn extract_q(g: &ShapeGrid) -> UpDownTableau {
    UpDownTableau::new(g.bottom_edge().to_vec()).expect("adjacent bottom vertices differ by one box")
}

/// The `P`-symbol, read from the right edge of the grid.
pub fn extract_p(g: &ShapeGrid) -> Result<Tableau<Letter>> {
    let edge = g.right_edge();
    let strat = &g.strat;
    let malformed = |msg: String| Error::MalformedEdge(msg);
    let mut fill: BTreeMap<Cell, Letter> = BTreeMap::new();
    for k in 1..=strat.n {
        let plain = Letter::plain(k);
        let barred = Letter::bar(k);
        let lambda = &edge[strat.start(plain) - 1];
        for i in strat.rows(plain) {
            if !matches!(edge[i - 1].compare_cover(&edge[i]), Cover::GrowthInRow(_)) {
                return Err(malformed(format!("row {i} of the {plain} stratum is not a growth")));
            }
        }
        let mut turn = strat.start(barred) - 1;
        let mut growing = false;
        for i in strat.rows(barred) {
            match edge[i - 1].compare_cover(&edge[i]) {
                Cover::ShrinkInRow(_) if !growing => turn = i,
                Cover::GrowthInRow(_) => growing = true,
                other => {
                    return Err(malformed(format!("row {i} of the {barred} stratum is {other:?}")));
                }
            }
        }
        let mu = &edge[turn];
        let next = &edge[strat.end(barred)];
        let top_bar = &edge[strat.start(barred) - 1];
        if !is_horizontal_strip(lambda, top_bar) || !is_horizontal_strip(mu, top_bar) {
            return Err(malformed(format!("{plain} stratum: {lambda} to {top_bar} to {mu}")));
        }
        if !is_horizontal_strip(lambda, mu) || !is_horizontal_strip(mu, next) {
            return Err(malformed(format!(
                "{lambda} ⊆ {mu} ⊆ {next} is not a pair of horizontal strips"
            )));
        }
        for r in 1..=next.len() {
            for c in lambda.part(r) + 1..=mu.part(r) {
                fill.insert(Cell::new(r, c), plain);
            }
            for c in mu.part(r) + 1..=next.part(r) {
                fill.insert(Cell::new(r, c), barred);
            }
        }
    }
    let shape = &edge[g.size()];
    let rows = (1..=shape.len())
        .map(|r| (1..=shape.part(r)).map(|c| fill[&Cell::new(r, c)]).collect())
        .collect();
    Tableau::from_rows(rows)
}

/// A row of cells rebuilt by backward rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReconstruction {
    /// Shapes on the row's upper edge, columns `0..=f`.
    pub top: Vec<Partition>,
    pub cases: Vec<LocalRuleCase>,
    pub cross_col: usize,
    pub circle_col: Option<usize>,
}

/// Walks one row of cells from right to left given its lower edge, the
/// shape at its top-right vertex, and the stratum of the row.
pub fn reconstruct_row_backward(
    bottom: &[Partition],
    right_top: &Partition,
    stratum: Letter,
) -> Result<RowReconstruction> {
    let f = bottom.len() - 1;
    let mut top = vec![Partition::empty(); f + 1];
    let mut cases = vec![LocalRuleCase::CarryAll; f];
    top[f] = right_top.clone();
    let mut crosses = Vec::new();
    let mut circles = Vec::new();
    for j in (1..=f).rev() {
        let b = backward_rule(&top[j], &bottom[j - 1], &bottom[j], stratum)
            .map_err(|e| Error::RowRejected(format!("cell at column {j}: {e}")))?;
        match b.mark {
            Some(Mark::Cross) => crosses.push(j),
            Some(Mark::Circle) => circles.push(j),
            None => {}
        }
        top[j - 1] = b.a;
        cases[j - 1] = b.case;
    }
    if !top[0].is_empty() {
        return Err(Error::RowRejected(format!("leftmost upper shape is {}", top[0])));
    }
    let &[cross_col] = crosses.as_slice() else {
        return Err(Error::RowRejected(format!("{} crosses in the row", crosses.len())));
    };
    if circles.len() > 1 {
        return Err(Error::RowRejected(format!("{} circles in the row", circles.len())));
    }
    Ok(RowReconstruction {
        top,
        cases,
        cross_col,
        circle_col: circles.first().copied(),
    })
}

#[derive(Serialize, Deserialize)]
struct StratumDoc {
    letter: Letter,
    rows: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CellDoc {
    row: usize,
    col: usize,
    mark: Mark,
}

#[derive(Serialize, Deserialize)]
struct GridDoc {
    f: usize,
    strata: Vec<StratumDoc>,
    vertices: Vec<Vec<Partition>>,
    cells: Vec<CellDoc>,
}

impl Serialize for ShapeGrid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GridDoc {
            f: self.size(),
            strata: Letter::alphabet(self.strat.n)
                .map(|l| StratumDoc {
                    letter: l,
                    rows: self.strat.rows(l).collect(),
                })
                .collect(),
            vertices: self.vertices.clone(),
            cells: self
                .marks
                .iter()
                .map(|(c, &mark)| CellDoc {
                    row: c.row,
                    col: c.col,
                    mark,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShapeGrid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = GridDoc::deserialize(d)?;
        let n = (doc.strata.len() / 2) as u32;
        let mut next_row = 1;
        let mut sizes = Vec::new();
        for (i, s) in doc.strata.iter().enumerate() {
            let expected: Vec<usize> = (next_row..next_row + s.rows.len()).collect();
            if doc.strata.len() % 2 != 0 || s.letter != Letter::from_index(i) || s.rows != expected {
                return Err(D::Error::custom(
                    "strata must list every letter in order with contiguous rows",
                ));
            }
            next_row += s.rows.len();
            sizes.push(s.rows.len());
        }
        let strat = Stratification::new(n, sizes).map_err(D::Error::custom)?;
        let f = doc.f;
        if strat.size() != f || doc.vertices.len() != f + 1 || doc.vertices.iter().any(|r| r.len() != f + 1) {
            return Err(D::Error::custom("vertex array does not match f"));
        }
        let marks: BTreeMap<Cell, Mark> = doc.cells.iter().map(|c| (Cell::new(c.row, c.col), c.mark)).collect();
        let mut cases = vec![vec![LocalRuleCase::CarryAll; f]; f];
        let v = &doc.vertices;
        for i in 1..=f {
            for j in 1..=f {
                let cell = Cell::new(i, j);
                let cross = marks.get(&cell) == Some(&Mark::Cross);
                let r = forward_rule(
                    &v[i - 1][j - 1],
                    &v[i - 1][j],
                    &v[i][j - 1],
                    cross,
                    strat.letter_of_row(i),
                )
                .map_err(D::Error::custom)?;
                if r.d != v[i][j] || (r.circle != (marks.get(&cell) == Some(&Mark::Circle))) {
                    return Err(D::Error::custom(format!("cell {cell} breaks the local rules")));
                }
                cases[i - 1][j - 1] = r.case;
            }
        }
        Ok(ShapeGrid {
            strat,
            vertices: doc.vertices,
            cases,
            marks,
        })
    }
}

impl fmt::Display for ShapeGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: &str) -> Partition {
        Partition::from_digits(d).unwrap()
    }

    fn l(s: &str) -> Letter {
        s.parse().unwrap()
    }

    fn word(s: &str, n: u32) -> Word {
        Word::parse(s, n).unwrap()
    }

    const FIG13: &str = "2 2 2' 1 1 2 1' 1";

    #[test]
    fn picture_positions() {
        let pic = picture_of(&word("3' 1 2' 3' 3 1' 1 2 3' 1' 2' 2 3 2' 1' 2 2 3' 1 2", 3));
        let rows: Vec<usize> = (1..=20).map(|j| pic.cross_row(j)).collect();
        assert_eq!(
            rows,
            [17, 1, 12, 18, 15, 4, 2, 7, 19, 5, 13, 8, 16, 14, 6, 9, 10, 20, 3, 11]
        );
        let one = picture_of(&word("2'", 2));
        assert_eq!(one.cross_row(1), 1);
        let two = picture_of(&word("1 1'", 1));
        assert_eq!((two.cross_row(1), two.cross_row(2)), (1, 2));
        assert_eq!(two.stratification().letter_of_row(2), l("1'"));
    }

    #[test]
    fn forward_rule_examples() {
        let r = forward_rule(&p(""), &p(""), &p(""), true, l("3'")).unwrap();
        assert_eq!((r.d, r.case), (p("1"), LocalRuleCase::Cross));
        let r = forward_rule(&p("1"), &p("2"), &p("11"), false, l("1")).unwrap();
        assert_eq!((r.d, r.case), (p("21"), LocalRuleCase::M));
        let r = forward_rule(&p("32"), &p("33"), &p("33"), false, l("2'")).unwrap();
        assert_eq!((r.d, r.case, r.circle), (p("32"), LocalRuleCase::Circle, true));
        let r = forward_rule(&p("32"), &p("33"), &p("33"), false, l("3")).unwrap();
        assert_eq!((r.d, r.case), (p("331"), LocalRuleCase::R));
        assert!(matches!(
            forward_rule(&p("1"), &p(""), &p(""), false, l("2")),
            Err(Error::InvalidConfiguration(_))
        ));
        assert!(forward_rule(&p("1"), &p("1"), &p("2"), true, l("1")).is_err());
    }

    #[test]
    fn backward_rule_examples() {
        let b = backward_rule(&p("33"), &p("33"), &p("32"), l("2'")).unwrap();
        assert_eq!((b.a, b.mark), (p("32"), Some(Mark::Circle)));
        let b = backward_rule(&p("21"), &p("21"), &p("22"), l("2")).unwrap();
        assert_eq!((b.a, b.case), (p("11"), LocalRuleCase::R));
        let b = backward_rule(&p("31"), &p("31"), &p("31"), l("1")).unwrap();
        assert_eq!((b.a, b.mark), (p("31"), None));
        assert!(backward_rule(&p("21"), &p("21"), &p("22"), l("1'")).is_err());
    }

    /// Every rule case, run forward then backward.
    #[test]
    fn rules_invert_each_other_on_small_shapes() {
        let shapes: Vec<Partition> = (0..=5).flat_map(Partition::all_of_weight).collect();
        let near = |a: &Partition| -> Vec<Partition> {
            let mut v = vec![a.clone()];
            v.extend(a.cocorners().into_iter().map(|c| a.with_cell(c).unwrap()));
            v.extend(a.corners().into_iter().map(|c| a.without_cell(c).unwrap()));
            v
        };
        let mut seen = std::collections::BTreeSet::new();
        for a in &shapes {
            for b in near(a) {
                for c in near(a) {
                    for stratum in Letter::alphabet(3) {
                        for cross in [false, true] {
                            let Ok(fw) = forward_rule(a, &b, &c, cross, stratum) else {
                                continue;
                            };
                            let Ok(bw) = backward_rule(&b, &c, &fw.d, stratum) else {
                                continue;
                            };
                            if bw.a == *a && bw.case == fw.case {
                                seen.insert(format!("{:?}", fw.case));
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(seen.len(), 13, "{seen:?}");
    }

    #[test]
    fn small_grid_by_hand() {
        let g = fill_grid(&picture_of(&word("1' 1", 1))).unwrap();
        assert_eq!(extract_q(&g).to_string(), "(∅,1,∅)");
        assert_eq!(g.mark(Cell::new(2, 2)), Some(Mark::Circle));
        assert_eq!(g.case(Cell::new(2, 2)), LocalRuleCase::Circle);
        assert_eq!(extract_p(&g).unwrap(), Tableau::new());
        assert!(g.violations().is_empty());

        let empty = fill_grid(&picture_of(&word("", 2))).unwrap();
        assert_eq!(empty.vertices(), &[vec![Partition::empty()]]);
        assert_eq!(extract_q(&empty), UpDownTableau::empty());
        assert_eq!(extract_p(&empty).unwrap(), Tableau::new());
    }

    #[test]
    fn fig13_grid() {
        let g = fill_grid(&picture_of(&word(FIG13, 2))).unwrap();
        let crosses: Vec<(usize, usize)> = g
            .marks()
            .iter()
            .filter(|(_, m)| **m == Mark::Cross)
            .map(|(c, _)| (c.row, c.col))
            .collect();
        assert_eq!(
            crosses,
            [(1, 4), (2, 5), (3, 8), (4, 7), (5, 1), (6, 2), (7, 6), (8, 3)]
        );
        let circles: Vec<Cell> = g
            .marks()
            .iter()
            .filter(|(_, m)| **m == Mark::Circle)
            .map(|(c, _)| *c)
            .collect();
        assert_eq!(circles, [Cell::new(4, 8), Cell::new(8, 7)]);
        let edge: Vec<String> = g.right_edge().iter().map(Partition::compact).collect();
        assert_eq!(edge, ["∅", "1", "2", "3", "2", "21", "22", "32", "22"]);
        assert_eq!(extract_p(&g).unwrap(), Tableau::parse("1 1 / 2 2").unwrap());
        assert!(g.violations().is_empty(), "{:?}", g.violations());
        assert_eq!(
            g,
            fill_grid_with(&picture_of(&word(FIG13, 2)), FillOrder::ColumnMajor).unwrap()
        );
    }

    #[test]
    fn row_reconstruction() {
        let bottom: Vec<Partition> = ["", "1", "2", "3", "31", "32", "33", "32", "22"]
            .iter()
            .map(|d| p(d))
            .collect();
        let row = reconstruct_row_backward(&bottom, &p("32"), l("2'")).unwrap();
        let top: Vec<String> = row.top.iter().map(Partition::compact).collect();
        assert_eq!(top, ["∅", "1", "2", "2", "21", "22", "32", "33", "32"]);
        assert_eq!((row.cross_col, row.circle_col), (3, Some(7)));

        let one = [p(""), p("1")];
        let row = reconstruct_row_backward(&one, &p(""), l("1'")).unwrap();
        assert_eq!((row.cross_col, row.circle_col), (1, None));
        assert!(matches!(
            reconstruct_row_backward(&one, &p("1"), l("1")),
            Err(Error::RowRejected(_))
        ));
        assert!(matches!(
            reconstruct_row_backward(&one, &p("2"), l("1")),
            Err(Error::RowRejected(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = fill_grid(&picture_of(&word(FIG13, 2))).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with(r#"{"f":8,"strata":[{"letter":"1","rows":[1,2,3]},{"letter":"1'","rows":[4]}"#));
        assert!(json.contains(r#"{"row":4,"col":8,"mark":"o"}"#));
        let back: ShapeGrid = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        let broken = json.replacen(r#""mark":"o""#, r#""mark":"x""#, 1);
        assert!(serde_json::from_str::<ShapeGrid>(&broken).is_err());
    }

    #[test]
    fn ascii_has_marks_and_labels() {
        let g = fill_grid(&picture_of(&word(FIG13, 2))).unwrap();
        let text = g.render_ascii();
        assert_eq!(text.matches('×').count(), 8);
        assert_eq!(text.matches('○').count(), 2);
        assert_eq!(text.lines().count(), 17);
        assert!(text.lines().last().unwrap().trim_end().ends_with("22"));
    }
}
