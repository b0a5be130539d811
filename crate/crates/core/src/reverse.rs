//! Recovering the word from `(P, Q)` one grid row at a time, bottom row
//! first.

use crate::berele::{UpDownTableau, Word};
use crate::error::{Error, Result};
use crate::grid::{backward_rule, reconstruct_row_backward, Mark, RowReconstruction};
use crate::letter::Letter;
use crate::partition::{Cell, Cover, Partition};
use crate::tableau::Tableau;

/// How the shrink hypothesis test ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TestOutcome {
    /// A `○` cell was met at this column: the hypothesis holds.
    Circle(usize),
    /// The walk reached column 0 still shrinking.
    ReachedLeftEdge,
    /// No local rule applied at this column before either outcome.
    NoRule { col: usize, detail: String },
}

/// The walk made to decide between a last letter `l` and `l̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrinkTest {
    /// Upper shapes produced, from column `f` leftwards.
    pub top: Vec<Partition>,
    pub outcome: TestOutcome,
}

/// Identity of the last row of the grid and the tableau one row up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LastStep {
    /// The stratum of the bottom row, i.e. the largest letter of the word.
    pub stratum: Letter,
    /// `P^(f-1)`.
    pub p_prev: Tableau<Letter>,
    /// Which of the five cases decided the stratum.
    pub case_tag: u8,
    pub test: Option<ShrinkTest>,
}

/// One peeled row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseStep {
    pub last: LastStep,
    pub row: RowReconstruction,
    /// The up-down tableau after removing the row.
    pub q_prev: UpDownTableau,
}

/// A failed input check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation(pub String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Everything wrong with `(P, Q)` as an element of the image for `n`.
pub fn validate_pair(p: &Tableau<Letter>, q: &[Partition], n: u32) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut v = |s: String| out.push(Violation(s));
    if !p.is_semistandard() {
        v("P is not semistandard".into());
    }
    if let Some((cell, x)) = p.entries().find(|(_, x)| x.value() > n) {
        v(format!("P has {x} at {cell}, beyond n = {n}"));
    }
    if let Some((cell, x)) = p.entries().find(|(c, x)| (x.value() as usize) < c.row) {
        v(format!("P has {x} in row {}", cell.row));
    }
    if p.rows().len() > n as usize {
        v(format!("P has more than {n} rows"));
    }
    if let Err(e) = UpDownTableau::new(q.to_vec()) {
        v(format!("Q: {e}"));
    }
    if let Some(s) = q.iter().find(|s| s.len() > n as usize) {
        v(format!("Q contains {s}, longer than {n}"));
    }
    if q.last() != Some(&p.shape()) {
        v(format!(
            "sh(P) = {} but Q ends at {}",
            p.shape(),
            q.last().map_or("nothing".into(), Partition::to_string)
        ));
    }
    out
}

fn remove_rightmost(p: &Tableau<Letter>, letter: Letter) -> Result<Tableau<Letter>> {
    let cell = *p
        .cells_of(letter)
        .last()
        .ok_or_else(|| Error::InvalidPair(format!("P has no {letter} to remove")))?;
    let mut rows = p.rows().to_vec();
    if rows[cell.row - 1].len() != cell.col || rows.get(cell.row).is_some_and(|r| r.len() >= cell.col) {
        return Err(Error::InvalidPair(format!(
            "rightmost {letter} at {cell} is not a corner"
        )));
    }
    rows[cell.row - 1].pop();
    if rows[cell.row - 1].is_empty() {
        rows.pop();
    }
    Tableau::from_rows(rows)
}

/// `P` plus an `l` at the bottom of the first column without one.
fn add_to_first_column_without(p: &Tableau<Letter>, l: Letter) -> Result<Tableau<Letter>> {
    let shape = p.shape();
    let col = (1..)
        .find(|&c| (1..=shape.column_len(c)).all(|r| p.get(Cell::new(r, c)) != Some(&l)))
        .expect("some column lacks l");
    let cell = Cell::new(shape.column_len(col) + 1, col);
    shape
        .with_cell(cell)
        .map_err(|_| Error::InvalidPair(format!("cannot add {l} at {cell}")))?;
    let mut rows = p.rows().to_vec();
    if cell.row > rows.len() {
        rows.push(Vec::new());
    }
    rows[cell.row - 1].push(l);
    Tableau::from_rows(rows)
}

/// Walks leftwards along the bottom row assuming the stratum `l̄`, for as
/// long as the vertical edges stay shrinks.
pub fn shrink_test(q: &[Partition], right_top: &Partition, stratum: Letter) -> ShrinkTest {
    let f = q.len() - 1;
    let mut top = vec![right_top.clone()];
    for j in (1..=f).rev() {
        match backward_rule(top.last().expect("nonempty"), &q[j - 1], &q[j], stratum) {
            Ok(b) if b.mark == Some(Mark::Circle) => {
                top.push(b.a);
                return ShrinkTest {
                    top,
                    outcome: TestOutcome::Circle(j),
                };
            }
            Ok(b) => {
                let shrinking = matches!(b.a.compare_cover(&q[j - 1]), Cover::ShrinkInRow(_));
                top.push(b.a);
                if !shrinking {
                    return ShrinkTest {
                        top,
                        outcome: TestOutcome::NoRule {
                            col: j,
                            detail: format!("{:?} ended the shrinks without a circle", b.case),
                        },
                    };
                }
            }
            Err(e) => {
                return ShrinkTest {
                    top,
                    outcome: TestOutcome::NoRule {
                        col: j,
                        detail: e.to_string(),
                    },
                }
            }
        }
    }
    ShrinkTest {
        top,
        outcome: TestOutcome::ReachedLeftEdge,
    }
}

/// Decides the stratum of the bottom row and `P^(f-1)`.
pub fn classify_last_step(p: &Tableau<Letter>, q: &UpDownTableau, n: u32) -> Result<LastStep> {
    if q.degree() == 0 {
        return Err(Error::EmptyWord);
    }
    let violations = validate_pair(p, q.shapes(), n);
    if !violations.is_empty() {
        return Err(Error::InvalidPair(
            violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    let l = q.shapes().iter().map(Partition::len).max().unwrap_or(0) as u32;
    // an empty P (everything cancelled) never falls under case (1)
    let simple = |stratum: Letter, case_tag| -> Result<LastStep> {
        Ok(LastStep {
            stratum,
            p_prev: remove_rightmost(p, stratum)?,
            case_tag,
            test: None,
        })
    };
    if let Some(gamma) = p.max_letter().filter(|g| g.value() > l) {
        return simple(gamma, 1);
    }
    let (plain, barred) = (Letter::plain(l), Letter::bar(l));
    if p.multiplicity(barred) > 0 {
        return simple(barred, 2);
    }
    let has_l_shrink = q
        .shapes()
        .windows(2)
        .any(|w| w[0].compare_cover(&w[1]) == Cover::ShrinkInRow(l as usize));
    if !has_l_shrink {
        return simple(plain, 3);
    }
    let p_bar = add_to_first_column_without(p, plain)?;
    let test = shrink_test(q.shapes(), &p_bar.shape(), barred);
    match test.outcome {
        TestOutcome::Circle(_) => Ok(LastStep {
            stratum: barred,
            p_prev: p_bar,
            case_tag: 5,
            test: Some(test),
        }),
        TestOutcome::ReachedLeftEdge | TestOutcome::NoRule { .. } => Ok(LastStep {
            stratum: plain,
            p_prev: remove_rightmost(p, plain)?,
            case_tag: 4,
            test: Some(test),
        }),
    }
}

/// Peels the bottom row off `(P, Q)`.
pub fn reverse_step(p: &Tableau<Letter>, q: &UpDownTableau, n: u32) -> Result<ReverseStep> {
    let last = classify_last_step(p, q, n)?;
    let row = reconstruct_row_backward(q.shapes(), &last.p_prev.shape(), last.stratum)
        .map_err(|e| Error::InvalidPair(format!("bottom row in the {} stratum: {e}", last.stratum)))?;
    let mut shapes = row.top.clone();
    shapes.remove(row.cross_col);
    let q_prev = UpDownTableau::new(shapes).map_err(|e| Error::InvalidPair(e.to_string()))?;
    Ok(ReverseStep { last, row, q_prev })
}

/// Every row peeled while inverting the correspondence, bottom row first.
pub fn reverse_trace(p: &Tableau<Letter>, q: &UpDownTableau, n: u32) -> Result<Vec<ReverseStep>> {
    let violations = validate_pair(p, q.shapes(), n);
    if !violations.is_empty() {
        return Err(Error::InvalidPair(
            violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    let mut steps = Vec::with_capacity(q.degree());
    let (mut p, mut q) = (p.clone(), q.clone());
    while q.degree() > 0 {
        let step = reverse_step(&p, &q, n)?;
        p = step.last.p_prev.clone();
        q = step.q_prev.clone();
        steps.push(step);
    }
    if !p.is_empty() {
        return Err(Error::InvalidPair(format!("{p:?} left over after peeling every row")));
    }
    Ok(steps)
}

/// The word whose Berele pair is `(P, Q)`.
pub fn reverse_correspondence(p: &Tableau<Letter>, q: &UpDownTableau, n: u32) -> Result<Word> {
    let steps = reverse_trace(p, q, n)?;
    let mut letters: Vec<Letter> = Vec::with_capacity(steps.len());
    for step in steps.iter().rev() {
        letters.insert(step.row.cross_col - 1, step.last.stratum);
    }
    Word::new(letters, n)
}
