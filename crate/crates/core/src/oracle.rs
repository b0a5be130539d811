//! Brute-force enumeration and the cross-checks run over it.
//!
//! Every per-word check is a standalone function returning `Err(detail)` on
//! the first discrepancy; [`check_all`] runs them all over `Γ_n^f` and adds
//! the global checks (injectivity, surjectivity, the counting identity).

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::berele::{
    berele_correspondence, berele_insert, berele_trace, standardize_tableau, standardize_word, std_berele_trace,
    StepKind, UpDownTableau, Word,
};
use crate::error::{Error, Result};
use crate::grid::{extract_p, extract_q, fill_grid, fill_grid_with, picture_of, FillOrder, Mark, ShapeGrid};
use crate::letter::Letter;
use crate::partition::{is_horizontal_strip, Cell, Cover, Partition};
use crate::reverse::{reverse_correspondence, reverse_trace};
use crate::tableau::Tableau;

/// Largest number of words [`check_all`] will enumerate by default.
pub const DEFAULT_LIMIT: u128 = 1_000_000;

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// The offending word; empty for the global checks.
    pub word: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u32,
    pub f: usize,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All words of length `f` over `Γ_n`, in lexicographic order.
pub fn enumerate_words(n: u32, f: usize) -> Words {
    assert!(n >= 1, "the alphabet needs n >= 1");
    Words {
        n,
        digits: vec![0; f],
        done: false,
    }
}

/// Iterator returned by [`enumerate_words`].
#[derive(Debug, Clone)]
pub struct Words {
    n: u32,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let letters = self.digits.iter().map(|&d| Letter::from_index(d)).collect();
        let word = Word::new(letters, self.n).expect("letters lie in the alphabet");
        let base = 2 * self.n as usize;
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(word)
    }
}

fn word_count(n: u32, f: usize) -> Option<u128> {
    u32::try_from(f).ok().and_then(|f| (2 * n as u128).checked_pow(f))
}

/// Every partition with at most `n` parts and the given weight.
pub fn shapes_of_weight(weight: usize, n: u32) -> Vec<Partition> {
    Partition::all_of_weight(weight)
        .into_iter()
        .filter(|p| p.len() <= n as usize)
        .collect()
}

/// All `n`-symplectic tableaux of shape `shape`, by backtracking cell by
/// cell in row-reading order.
pub fn enumerate_sp_tableaux(n: u32, shape: &Partition) -> Result<Vec<Tableau<Letter>>> {
    if shape.len() > n as usize {
        return Err(Error::ShapeTooLong {
            shape: shape.clone(),
            n,
        });
    }
    let cells: Vec<Cell> = (1..=shape.len())
        .flat_map(|r| (1..=shape.part(r)).map(move |c| Cell::new(r, c)))
        .collect();
    let mut rows: Vec<Vec<Letter>> = (1..=shape.len()).map(|r| Vec::with_capacity(shape.part(r))).collect();
    let mut out = Vec::new();
    fill_cells(n, &cells, 0, &mut rows, &mut out);
    Ok(out)
}

fn fill_cells(n: u32, cells: &[Cell], at: usize, rows: &mut Vec<Vec<Letter>>, out: &mut Vec<Tableau<Letter>>) {
    let Some(&cell) = cells.get(at) else {
        out.push(Tableau::from_rows(rows.clone()).expect("rows follow the shape"));
        return;
    };
    let (r, c) = (cell.row - 1, cell.col - 1);
    // smallest letter allowed by the symplectic condition, the left neighbour
    // and the cell above
    let mut lo = Letter::plain(cell.row as u32).index();
    if c > 0 {
        lo = lo.max(rows[r][c - 1].index());
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c].index() + 1);
    }
    for idx in lo..2 * n as usize {
        rows[r].push(Letter::from_index(idx));
        fill_cells(n, cells, at + 1, rows, out);
        rows[r].pop();
    }
}

/// All up-down tableaux of degree `f` ending at `end` whose shapes have at
/// most `n` parts.
pub fn enumerate_updown(n: u32, f: usize, end: &Partition) -> Vec<UpDownTableau> {
    let mut out = Vec::new();
    if end.len() > n as usize {
        return out;
    }
    let mut path = vec![Partition::empty()];
    walk_updown(n as usize, f, end, &mut path, &mut out);
    out
}

fn lattice_distance(a: &Partition, b: &Partition) -> usize {
    a.weight() + b.weight() - 2 * a.intersect(b).weight()
}

fn walk_updown(n: usize, f: usize, end: &Partition, path: &mut Vec<Partition>, out: &mut Vec<UpDownTableau>) {
    let here = path.last().expect("path starts at the empty shape").clone();
    let left = f + 1 - path.len();
    if left == 0 {
        if &here == end {
            out.push(UpDownTableau::new(path.clone()).expect("each step is a cover"));
        }
        return;
    }
    let d = lattice_distance(&here, end);
    if d > left || (left - d) % 2 == 1 {
        return;
    }
    let grown = here
        .cocorners()
        .into_iter()
        .filter(|c| c.row <= n)
        .map(|c| here.with_cell(c));
    let shrunk = here.corners().into_iter().map(|c| here.without_cell(c));
    for next in grown.chain(shrunk) {
        path.push(next.expect("corners and cocorners are valid"));
        walk_updown(n, f, end, path, out);
        path.pop();
    }
}

/// The P-symbol and Q-symbol read off the growth grid agree with bumping.
pub fn check_grid_agreement(w: &Word) -> std::result::Result<(), String> {
    let pair = berele_correspondence(w);
    let grid = fill_grid(&picture_of(w)).map_err(|e| format!("fill_grid: {e}"))?;
    let q = extract_q(&grid);
    if q != pair.q {
        return Err(format!("grid Q {q} but bumping Q {}", pair.q));
    }
    let p = extract_p(&grid).map_err(|e| format!("extract_p: {e}"))?;
    if p != pair.p {
        return Err(format!("grid P {p} but bumping P {}", pair.p));
    }
    Ok(())
}

/// Reversing the pair gives back the word, and every peeled row has one
/// cross and a circle exactly when its right edge is a shrink.
pub fn check_round_trip(w: &Word) -> std::result::Result<(), String> {
    let pair = berele_correspondence(w);
    let steps = reverse_trace(&pair.p, &pair.q, w.n()).map_err(|e| e.to_string())?;
    let mut bottom = pair.q.last().clone();
    for step in &steps {
        let row = step.q_prev.degree() + 1;
        let top = step.last.p_prev.shape();
        let shrinks = matches!(top.compare_cover(&bottom), Cover::ShrinkInRow(_));
        if step.row.circle_col.is_some() != shrinks {
            return Err(format!(
                "row {row}: circle at {:?}, right edge {top} to {bottom}",
                step.row.circle_col
            ));
        }
        bottom = top;
    }
    let back = reverse_correspondence(&pair.p, &pair.q, w.n()).map_err(|e| e.to_string())?;
    if &back != w {
        return Err(format!("reversed to {back}"));
    }
    Ok(())
}

/// Standardization commutes with the correspondence, with surviving
/// subscripts `c_w(γ)+1, …, m_w(γ)` and balanced cancellation counts.
pub fn check_standardization(w: &Word) -> std::result::Result<(), String> {
    let trace = berele_trace(w);
    let pair = trace.pair();
    let (sw, _) = standardize_word(w);
    let (std_tableaux, std_q) = std_berele_trace(&sw);
    if std_q != pair.q {
        return Err(format!("standardized Q {std_q} but Q {}", pair.q));
    }
    for (i, (t, s)) in trace.tableaux.iter().zip(&std_tableaux).enumerate() {
        if &s.erase() != t {
            return Err(format!("P̃_{i} erases to {} but P_{i} is {t}", s.erase()));
        }
    }
    let c = &trace.cancellations;
    for k in 1..=w.n() {
        let (a, b) = (c[&Letter::plain(k)], c[&Letter::bar(k)]);
        if a != b {
            return Err(format!("c_w({k}) = {a} but c_w({k}') = {b}"));
        }
    }
    let total: usize = c.values().sum();
    if total + pair.p.size() != w.len() {
        return Err(format!("cancellations total {total} with |P| = {}", pair.p.size()));
    }
    let expected = standardize_tableau(&pair.p, c, &w.multiplicities()).map_err(|e| e.to_string())?;
    let p_std = std_tableaux.last().expect("P̃_0 is present");
    if &expected != p_std {
        return Err(format!("P̃ is {p_std}, subscripting P by c_w gives {expected}"));
    }
    Ok(())
}

/// A cancellation in row `k` only happens when the tableau holds a `k̄`,
/// and removes exactly one `k` and one `k̄`.
pub fn check_cancellations(w: &Word) -> std::result::Result<(), String> {
    let mut p = Tableau::new();
    for (i, &x) in w.letters().iter().enumerate() {
        let ins = berele_insert(&p, x, w.n()).map_err(|e| e.to_string())?;
        if let Some((k, kbar)) = ins.cancelled {
            if kbar != Letter::bar(k.value()) || p.multiplicity(kbar) == 0 {
                return Err(format!("step {}: cancelled {k} {kbar} from {p}", i + 1));
            }
            if !matches!(ins.step, StepKind::Shrink(_)) {
                return Err(format!("step {}: cancellation recorded as {:?}", i + 1, ins.step));
            }
        }
        p = ins.tableau;
    }
    Ok(())
}

/// Structural properties of the grid: templates, row bounds, backward
/// consistency, right-edge strips, and independence of the fill order.
pub fn check_grid_invariants(w: &Word) -> std::result::Result<(), String> {
    let pic = picture_of(w);
    let grid = fill_grid(&pic).map_err(|e| format!("fill_grid: {e}"))?;
    if let Some(v) = grid.violations().into_iter().next() {
        return Err(v);
    }
    check_right_edge(&grid)?;
    let by_columns = fill_grid_with(&pic, FillOrder::ColumnMajor).map_err(|e| format!("column-major fill: {e}"))?;
    if by_columns != grid {
        return Err("row-major and column-major fills differ".into());
    }
    Ok(())
}

fn check_right_edge(g: &ShapeGrid) -> std::result::Result<(), String> {
    let edge = g.right_edge();
    let strat = g.stratification();
    for k in 1..=strat.n() {
        let (plain, barred) = (Letter::plain(k), Letter::bar(k));
        let lambda = &edge[strat.start(plain) - 1];
        let top_bar = &edge[strat.start(barred) - 1];
        let bottom = &edge[strat.end(barred)];
        for i in strat.rows(plain) {
            if !matches!(edge[i - 1].compare_cover(&edge[i]), Cover::GrowthInRow(_)) {
                return Err(format!("right edge at row {i} of stratum {plain} is not a growth"));
            }
        }
        if !is_horizontal_strip(lambda, top_bar) {
            return Err(format!(
                "stratum {plain}: {top_bar} / {lambda} is not a horizontal strip"
            ));
        }
        let mut growing = false;
        let mut mu = top_bar.clone();
        for i in strat.rows(barred) {
            match edge[i - 1].compare_cover(&edge[i]) {
                Cover::ShrinkInRow(_) if !growing => mu = edge[i].clone(),
                Cover::GrowthInRow(_) => growing = true,
                other => return Err(format!("right edge at row {i} of stratum {barred} is {other:?}")),
            }
        }
        if !is_horizontal_strip(&mu, top_bar) || !is_horizontal_strip(&mu, bottom) || !is_horizontal_strip(lambda, &mu)
        {
            return Err(format!("stratum {barred}: {top_bar} to {mu} to {bottom} over {lambda}"));
        }
    }
    Ok(())
}

/// Every grid vertex `Λ(i,j)` is the P-shape of the letters in columns
/// `1..=j` whose ordinals are at most `i`.
pub fn check_vertices(w: &Word) -> std::result::Result<(), String> {
    let grid = fill_grid(&picture_of(w)).map_err(|e| format!("fill_grid: {e}"))?;
    let (sw, _) = standardize_word(w);
    let ord = sw.ordinals();
    let f = w.len();
    for i in 0..=f {
        for j in 0..=f {
            let letters: Vec<Letter> = (0..j).filter(|&t| ord[t] <= i).map(|t| w.letters()[t]).collect();
            let sub = Word::new(letters, w.n()).expect("subword of a valid word");
            let shape = berele_correspondence(&sub).p.shape();
            if grid.vertex(i, j) != &shape {
                return Err(format!(
                    "Λ({i},{j}) = {} but w({i},{j}) = {sub} has shape {shape}",
                    grid.vertex(i, j)
                ));
            }
        }
    }
    Ok(())
}

fn vertical(g: &ShapeGrid, i: usize, j: usize) -> Cover {
    g.vertex(i - 1, j).compare_cover(g.vertex(i, j))
}

/// Two stacked cells with consecutive shrinks on their right edge in
/// weakly increasing rows have the same on their left edge, unless a mark
/// intervenes; dually for growths in weakly decreasing rows and crosses.
pub fn check_stacked_cells(w: &Word) -> std::result::Result<(), String> {
    let g = fill_grid(&picture_of(w)).map_err(|e| format!("fill_grid: {e}"))?;
    let f = g.size();
    for i in 2..=f {
        for j in 1..=f {
            let upper = g.mark(Cell::new(i - 1, j));
            let lower = g.mark(Cell::new(i, j));
            if g.vertex(i, j - 1).compare_cover(g.vertex(i, j)) == Cover::Equal {
                continue;
            }
            let (right_top, right_bottom) = (vertical(&g, i - 1, j), vertical(&g, i, j));
            let (left_top, left_bottom) = (vertical(&g, i - 1, j - 1), vertical(&g, i, j - 1));
            match (right_top, right_bottom) {
                (Cover::ShrinkInRow(r), Cover::ShrinkInRow(s)) if r <= s && upper.is_none() && lower.is_none() => {
                    match (left_top, left_bottom) {
                        (Cover::ShrinkInRow(r2), Cover::ShrinkInRow(s2)) if r2 <= s2 => {}
                        other => {
                            return Err(format!(
                                "cells ({},{j}),({i},{j}): shrinks {r},{s} on the right, {other:?} on the left",
                                i - 1
                            ))
                        }
                    }
                }
                (Cover::GrowthInRow(r), Cover::GrowthInRow(s))
                    if r >= s && upper != Some(Mark::Cross) && lower != Some(Mark::Cross) =>
                {
                    match (left_top, left_bottom) {
                        (Cover::GrowthInRow(r2), Cover::GrowthInRow(s2)) if r2 >= s2 => {}
                        other => {
                            return Err(format!(
                                "cells ({},{j}),({i},{j}): growths {r},{s} on the right, {other:?} on the left",
                                i - 1
                            ))
                        }
                    }
                }
                _ => {}
            }
        }
    }
    Ok(())
}

type Check = fn(&Word) -> std::result::Result<(), String>;

/// The per-word checks run by [`check_all`], by name.
pub const WORD_CHECKS: [(&str, Check); 7] = [
    ("grid_agreement", check_grid_agreement),
    ("round_trip", check_round_trip),
    ("standardization", check_standardization),
    ("cancellations", check_cancellations),
    ("grid_invariants", check_grid_invariants),
    ("vertices", check_vertices),
    ("stacked_cells", check_stacked_cells),
];

/// Runs every check over `Γ_n^f` with the default size limit.
pub fn check_all(n: u32, f: usize) -> Result<VerificationReport> {
    check_all_with_limit(n, f, DEFAULT_LIMIT)
}

pub fn check_all_with_limit(n: u32, f: usize, limit: u128) -> Result<VerificationReport> {
    let words = word_count(n, f).unwrap_or(u128::MAX);
    if words > limit {
        return Err(Error::ScopeTooLarge { words, limit });
    }
    let mut failures = Vec::new();
    let mut seen: HashSet<(Tableau<Letter>, UpDownTableau)> = HashSet::new();
    let mut checked = 0;
    for w in enumerate_words(n, f) {
        checked += 1;
        for (name, check) in WORD_CHECKS {
            if let Err(detail) = check(&w) {
                failures.push(Failure {
                    word: w.to_string(),
                    check: name.into(),
                    detail,
                });
            }
        }
        let pair = berele_correspondence(&w);
        if !seen.insert((pair.p, pair.q)) {
            failures.push(Failure {
                word: w.to_string(),
                check: "injectivity".into(),
                detail: "pair already produced by an earlier word".into(),
            });
        }
    }
    let global = |check: &str, detail: String| Failure {
        word: String::new(),
        check: check.into(),
        detail,
    };
    if let Err(detail) = check_counting_identity(n, f) {
        failures.push(global("counting_identity", detail));
    }
    if let Err(detail) = check_surjectivity(n, f) {
        failures.push(global("surjectivity", detail));
    }
    Ok(VerificationReport {
        n,
        f,
        checked,
        failures,
    })
}

/// `Σ_λ |SpTab(λ)| · |UD(n,f,λ)| = (2n)^f`.
pub fn check_counting_identity(n: u32, f: usize) -> std::result::Result<(), String> {
    let mut total: u128 = 0;
    let mut terms = BTreeMap::new();
    for weight in (f % 2..=f).step_by(2) {
        for shape in shapes_of_weight(weight, n) {
            let tabs = enumerate_sp_tableaux(n, &shape).map_err(|e| e.to_string())?.len() as u128;
            let paths = enumerate_updown(n, f, &shape).len() as u128;
            total += tabs * paths;
            terms.insert(shape.compact(), (tabs, paths));
        }
    }
    let expected = word_count(n, f).ok_or("word count overflows")?;
    if total != expected {
        return Err(format!("sum is {total}, expected {expected}; terms {terms:?}"));
    }
    Ok(())
}

/// Every valid pair of degree `f` reverses to a word that maps back to it.
pub fn check_surjectivity(n: u32, f: usize) -> std::result::Result<(), String> {
    for weight in (f % 2..=f).step_by(2) {
        for shape in shapes_of_weight(weight, n) {
            let tabs = enumerate_sp_tableaux(n, &shape).map_err(|e| e.to_string())?;
            let paths = enumerate_updown(n, f, &shape);
            for p in &tabs {
                for q in &paths {
                    let w = reverse_correspondence(p, q, n).map_err(|e| format!("({p}, {q}): {e}"))?;
                    let back = berele_correspondence(&w);
                    if &back.p != p || &back.q != q {
                        return Err(format!(
                            "({p}, {q}) reversed to {w}, which maps to ({}, {})",
                            back.p, back.q
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
