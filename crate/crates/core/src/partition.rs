//! Partitions, Young diagrams and the covering relation of Young's lattice.
//!
//! Rows and columns are 1-based throughout, matching matrix coordinates on
//! the diagram: the box `(1, 1)` is the top-left square.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A square `(row, col)` of a Young diagram, both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// True when the two squares share a side.
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// How two partitions sit relative to each other in Young's lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cover {
    Equal,
    /// The second partition is the first plus one box in this row.
    GrowthInRow(usize),
    /// The second partition is the first minus one box in this row.
    ShrinkInRow(usize),
    Unrelated,
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so structural equality is equality of
/// partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses compact digit notation, e.g. `"431"` for (4,3,1).
    /// The empty string, `"0"` and `"∅"` all denote the empty partition.
    pub fn from_digits(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" || s == "-" {
            return Ok(Self::empty());
        }
        let parts = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::NotAPartition(Vec::new()))?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part in the given 1-based row; zero beyond the length.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of the given 1-based column.
    pub fn column_len(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.row <= self.len() && cell.col <= self.part(cell.row)
    }

    /// Containment of diagrams, `other ⊆ self`.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxes whose removal leaves a partition, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell::new(r, self.part(r)))
            .collect()
    }

    /// Boxes whose addition yields a partition, top to bottom.
    pub fn cocorners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| Cell::new(r, self.part(r) + 1))
            .collect()
    }

    pub fn can_add(&self, row: usize) -> bool {
        row >= 1 && row <= self.len() + 1 && self.part(row - 1) > self.part(row)
    }

    pub fn can_remove(&self, row: usize) -> bool {
        row >= 1 && row <= self.len() && self.part(row) > self.part(row + 1)
    }

    pub fn add_box(&self, row: usize) -> Result<Partition> {
        if !self.can_add(row) {
            return Err(Error::NoCocornerInRow {
                shape: self.clone(),
                row,
            });
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        if !self.can_remove(row) {
            return Err(Error::NoCornerInRow {
                shape: self.clone(),
                row,
            });
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Adds or removes the given square, whichever keeps a partition.
    pub fn with_cell(&self, cell: Cell) -> Result<Partition> {
        if self.contains(cell) {
            return Err(Error::NoCocornerInRow {
                shape: self.clone(),
                row: cell.row,
            });
        }
        if self.part(cell.row) + 1 != cell.col {
            return Err(Error::NoCocornerInRow {
                shape: self.clone(),
                row: cell.row,
            });
        }
        self.add_box(cell.row)
    }

    pub fn without_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.contains(cell) || self.part(cell.row) != cell.col {
            return Err(Error::NoCornerInRow {
                shape: self.clone(),
                row: cell.row,
            });
        }
        self.remove_box(cell.row)
    }

    /// Classifies `other` relative to `self`.
    pub fn compare_cover(&self, other: &Partition) -> Cover {
        match self.weight().cmp(&other.weight()) {
            Ordering::Equal if self == other => Cover::Equal,
            Ordering::Less if other.weight() == self.weight() + 1 => match single_row_difference(other, self) {
                Some(row) => Cover::GrowthInRow(row),
                None => Cover::Unrelated,
            },
            Ordering::Greater if self.weight() == other.weight() + 1 => match single_row_difference(self, other) {
                Some(row) => Cover::ShrinkInRow(row),
                None => Cover::Unrelated,
            },
            _ => Cover::Unrelated,
        }
    }

    /// Rowwise maximum: the join in Young's lattice.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (1..=n).map(|r| self.part(r).max(other.part(r))).collect(),
        }
    }

    /// Rowwise minimum: the meet in Young's lattice.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition {
            parts: (1..=n).map(|r| self.part(r).min(other.part(r))).collect(),
        }
    }

    /// The unique box of `self` not in `smaller`, when `self` covers it.
    pub fn diff_box(&self, smaller: &Partition) -> Result<Cell> {
        match smaller.compare_cover(self) {
            Cover::GrowthInRow(row) => Ok(Cell::new(row, self.part(row))),
            _ => Err(Error::NotACover {
                larger: self.clone(),
                smaller: smaller.clone(),
            }),
        }
    }

    /// Every partition of the given weight, in reverse lexicographic order.
    pub fn all_of_weight(weight: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(weight, weight, &mut Vec::new(), &mut out);
        out
    }

    /// Digit-string form used in grid renderings (`"431"`, `"∅"`).
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

/// Row where `larger` exceeds `smaller`, if they differ in exactly one box.
fn single_row_difference(larger: &Partition, smaller: &Partition) -> Option<usize> {
    let mut row = None;
    for r in 1..=larger.len().max(smaller.len()) {
        let (a, b) = (larger.part(r), smaller.part(r));
        if a == b {
            continue;
        }
        if a != b + 1 || row.is_some() {
            return None;
        }
        row = Some(r);
    }
    row
}

/// True iff `inner ⊆ outer` and `outer / inner` has at most one box per column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains_partition(inner) && (1..=outer.len()).all(|r| outer.part(r + 1) <= inner.part(r))
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
