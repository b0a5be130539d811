//! Berele insertion and the correspondence between words over `Γ_n` and
//! pairs (symplectic tableau, up-down tableau), in plain and standardized
//! form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::letter::{Letter, Letterlike, SubscriptedLetter};
use crate::partition::{Cell, Cover, Partition};
use crate::tableau::{Bumping, Tableau};

/// How one insertion changed the shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    /// A box was added in this row.
    Growth(usize),
    /// A box was removed from this row.
    Shrink(usize),
}

/// Result of a single Berele insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion<L: Letterlike> {
    pub tableau: Tableau<L>,
    pub step: StepKind,
    /// The `k` and `k̄` removed by a cancellation.
    pub cancelled: Option<(L, L)>,
}

/// A word over `Γ_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    n: u32,
}

impl Word {
    pub fn new(letters: Vec<Letter>, n: u32) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.value() > n) {
            return Err(Error::LetterOutOfRange {
                letter: bad.to_string(),
                n,
            });
        }
        Ok(Word { letters, n })
    }

    /// Parses whitespace-separated tokens such as `"3' 1 2'"`.
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        Word::new(letters, n)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `m_w(γ)`.
    pub fn multiplicity(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// `m_w(γ)` for every `γ ∈ Γ_n`, zeros included.
    pub fn multiplicities(&self) -> BTreeMap<Letter, usize> {
        Letter::alphabet(self.n).map(|l| (l, self.multiplicity(l))).collect()
    }

    /// The first `len` letters.
    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
            n: self.n,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A word whose repeated letters carry subscripts `1, 2, …` from left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardizedWord {
    letters: Vec<SubscriptedLetter>,
    n: u32,
}

impl StandardizedWord {
    pub fn new(letters: Vec<SubscriptedLetter>, n: u32) -> Result<Self> {
        let mut seen: BTreeMap<Letter, u32> = BTreeMap::new();
        for x in &letters {
            if x.letter.value() > n {
                return Err(Error::LetterOutOfRange {
                    letter: x.to_string(),
                    n,
                });
            }
            let last = seen.entry(x.letter).or_insert(0);
            if x.subscript != *last + 1 {
                return Err(Error::NotStandardized(format!("{x} out of order")));
            }
            *last = x.subscript;
        }
        Ok(StandardizedWord { letters, n })
    }

    pub fn parse(text: &str, n: u32) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<SubscriptedLetter>>>()?;
        StandardizedWord::new(letters, n)
    }

    pub fn letters(&self) -> &[SubscriptedLetter] {
        &self.letters
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn erase(&self) -> Word {
        Word {
            letters: self.letters.iter().map(|x| x.letter).collect(),
            n: self.n,
        }
    }

    /// The order-preserving bijection from the letters of the word onto `1..=f`.
    pub fn ord_map(&self) -> BTreeMap<SubscriptedLetter, usize> {
        let mut sorted = self.letters.clone();
        sorted.sort();
        sorted.into_iter().enumerate().map(|(i, x)| (x, i + 1)).collect()
    }

    /// `ord(w̃_j)` for `j = 1..=f`.
    pub fn ordinals(&self) -> Vec<usize> {
        let ord = self.ord_map();
        self.letters.iter().map(|x| ord[x]).collect()
    }
}

impl fmt::Display for StandardizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl fmt::Debug for StandardizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardizedWord({self})")
    }
}

/// Subscripts each letter's occurrences `1, 2, …` from left to right, and
/// returns the ordinal of every subscripted letter.
pub fn standardize_word(w: &Word) -> (StandardizedWord, BTreeMap<SubscriptedLetter, usize>) {
    let mut count: BTreeMap<Letter, u32> = BTreeMap::new();
    let letters = w
        .letters
        .iter()
        .map(|&l| {
            let c = count.entry(l).or_insert(0);
            *c += 1;
            SubscriptedLetter::new(l, *c)
        })
        .collect();
    let sw = StandardizedWord { letters, n: w.n };
    let ord = sw.ord_map();
    (sw, ord)
}

/// A sequence of shapes starting at `∅` in which each step adds or removes
/// one box.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct UpDownTableau {
    shapes: Vec<Partition>,
}

impl UpDownTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        match shapes.first() {
            None => return Err(Error::NotUpDown("no shapes".into())),
            Some(s) if !s.is_empty() => return Err(Error::NotUpDown(format!("starts at {s}"))),
            _ => {}
        }
        for (i, w) in shapes.windows(2).enumerate() {
            if !matches!(w[0].compare_cover(&w[1]), Cover::GrowthInRow(_) | Cover::ShrinkInRow(_)) {
                return Err(Error::NotUpDown(format!("step {}: {} to {}", i + 1, w[0], w[1])));
            }
        }
        Ok(UpDownTableau { shapes })
    }

    /// Also checks that no shape has more than `n` rows.
    pub fn with_bound(shapes: Vec<Partition>, n: u32) -> Result<Self> {
        let q = UpDownTableau::new(shapes)?;
        if let Some(s) = q.shapes.iter().find(|s| s.len() > n as usize) {
            return Err(Error::ShapeTooLong { shape: s.clone(), n });
        }
        Ok(q)
    }

    pub fn empty() -> Self {
        UpDownTableau {
            shapes: vec![Partition::empty()],
        }
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Number of steps `f`.
    pub fn degree(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn last(&self) -> &Partition {
        self.shapes.last().expect("never empty")
    }

    pub fn is_n_symplectic(&self, n: u32) -> bool {
        self.shapes.iter().all(|s| s.len() <= n as usize)
    }

    pub fn steps(&self) -> Vec<StepKind> {
        self.shapes
            .windows(2)
            .map(|w| match w[0].compare_cover(&w[1]) {
                Cover::GrowthInRow(r) => StepKind::Growth(r),
                Cover::ShrinkInRow(r) => StepKind::Shrink(r),
                _ => unreachable!("validated on construction"),
            })
            .collect()
    }

    /// The first `len + 1` shapes.
    pub fn prefix(&self, len: usize) -> UpDownTableau {
        UpDownTableau {
            shapes: self.shapes[..=len].to_vec(),
        }
    }

    pub(crate) fn push(&mut self, shape: Partition) {
        self.shapes.push(shape);
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(Partition::compact).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'de> Deserialize<'de> for UpDownTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let shapes = Vec::<Partition>::deserialize(d)?;
        UpDownTableau::new(shapes).map_err(serde::de::Error::custom)
    }
}

/// The image `(P, Q)` of a word under the correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BerelePair {
    pub p: Tableau<Letter>,
    pub q: UpDownTableau,
}

impl BerelePair {
    /// Checks that `p` is `n`-symplectic, `q` is `n`-symplectic, and their
    /// shapes agree.
    pub fn validate(&self, n: u32) -> Result<()> {
        if !self.p.is_symplectic(n) {
            return Err(Error::NotSymplectic { n });
        }
        if !self.q.is_n_symplectic(n) {
            return Err(Error::InvalidPair(format!("Q has a shape with more than {n} rows")));
        }
        if self.p.shape() != *self.q.last() {
            return Err(Error::InvalidPair(format!(
                "sh(P) = {} but Q ends at {}",
                self.p.shape(),
                self.q.last()
            )));
        }
        Ok(())
    }
}

/// Every intermediate state of the correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BereleTrace {
    /// `P_0, …, P_f`.
    pub tableaux: Vec<Tableau<Letter>>,
    pub steps: Vec<StepKind>,
    /// `c_w(γ)`: how many of each letter were removed in cancellations.
    pub cancellations: BTreeMap<Letter, usize>,
}

impl BereleTrace {
    pub fn pair(&self) -> BerelePair {
        let shapes = self.tableaux.iter().map(Tableau::shape).collect();
        BerelePair {
            p: self.tableaux.last().expect("P_0 is always present").clone(),
            q: UpDownTableau::new(shapes).expect("insertion changes the shape by one box"),
        }
    }
}

/// Row insertion with a cancellation at the first point where some `k`
/// would push a `k̄` out of row `k`.
///
/// Plain letters leave the hole where the `k̄` was. Subscripted letters put
/// the incoming `k` there and instead remove the leftmost `k` of row `k`.
fn insert_with_cancellation<L: Letterlike>(t: &Tableau<L>, x: L, standardized: bool) -> Insertion<L> {
    let mut work = t.clone();
    let bumping = work.bump(x, |row, _, bumped| bumped.letter().value() as usize <= row);
    match bumping {
        Bumping::Rested(trace) => Insertion {
            tableau: work,
            step: StepKind::Growth(trace.rest.row),
            cancelled: None,
        },
        Bumping::Intercepted {
            row,
            col,
            incoming,
            bumped,
            ..
        } => {
            let k = Letter::plain(row as u32);
            debug_assert_eq!(bumped.letter(), Letter::bar(row as u32));
            debug_assert_eq!(incoming.letter(), k);
            let (hole, removed) = if standardized {
                work.set(Cell::new(row, col), incoming);
                let first = *work.get(Cell::new(row, 1)).expect("row k is nonempty");
                debug_assert_eq!(first.letter(), k);
                (Cell::new(row, 1), first)
            } else {
                (Cell::new(row, col), incoming)
            };
            let slid = work.puncture(hole).expect("hole lies in the shape").slide_to_corner();
            Insertion {
                tableau: slid.tableau,
                step: StepKind::Shrink(slid.corner.row),
                cancelled: Some((removed, bumped)),
            }
        }
    }
}

/// Berele insertion `T ←_B γ`.
pub fn berele_insert(t: &Tableau<Letter>, x: Letter, n: u32) -> Result<Insertion<Letter>> {
    if !t.is_symplectic(n) {
        return Err(Error::NotSymplectic { n });
    }
    if x.value() > n {
        return Err(Error::LetterOutOfRange {
            letter: x.to_string(),
            n,
        });
    }
    Ok(insert_with_cancellation(t, x, false))
}

/// Runs the correspondence and keeps every intermediate tableau.
pub fn berele_trace(w: &Word) -> BereleTrace {
    let mut p = Tableau::new();
    let mut tableaux = vec![p.clone()];
    let mut steps = Vec::with_capacity(w.len());
    let mut cancellations: BTreeMap<Letter, usize> = Letter::alphabet(w.n).map(|l| (l, 0)).collect();
    for &x in &w.letters {
        let ins = insert_with_cancellation(&p, x, false);
        if let Some((k, kbar)) = ins.cancelled {
            *cancellations.get_mut(&k).expect("letter in alphabet") += 1;
            *cancellations.get_mut(&kbar).expect("letter in alphabet") += 1;
        }
        debug_assert!(ins.tableau.is_symplectic(w.n));
        p = ins.tableau;
        tableaux.push(p.clone());
        steps.push(ins.step);
    }
    BereleTrace {
        tableaux,
        steps,
        cancellations,
    }
}

/// Berele's correspondence `w ↦ (P, Q)`.
pub fn berele_correspondence(w: &Word) -> BerelePair {
    berele_trace(w).pair()
}

/// Standardized Berele insertion `T̃ ←_B̃ γ_t`.
pub fn std_berele_insert(
    t: &Tableau<SubscriptedLetter>,
    x: SubscriptedLetter,
    n: u32,
) -> Result<Insertion<SubscriptedLetter>> {
    if !t.erase().is_symplectic(n) {
        return Err(Error::NotStandardized(format!(
            "underlying tableau is not {n}-symplectic"
        )));
    }
    if !t.subscripts_increase() {
        return Err(Error::NotStandardized(
            "subscripts do not increase left to right".into(),
        ));
    }
    if t.entries().any(|(_, y)| *y == x) {
        return Err(Error::NotStandardized(format!("{x} already present")));
    }
    if x.letter.value() > n {
        return Err(Error::LetterOutOfRange {
            letter: x.to_string(),
            n,
        });
    }
    Ok(insert_with_cancellation(t, x, true))
}

/// Folds standardized insertion over `w̃`, returning `(P̃, Q̃)` and every
/// intermediate `P̃_i`.
pub fn std_berele_trace(w: &StandardizedWord) -> (Vec<Tableau<SubscriptedLetter>>, UpDownTableau) {
    let mut p = Tableau::new();
    let mut tableaux = vec![p.clone()];
    let mut q = UpDownTableau::empty();
    for &x in &w.letters {
        p = insert_with_cancellation(&p, x, true).tableau;
        q.push(p.shape());
        tableaux.push(p.clone());
    }
    (tableaux, q)
}

/// Standardized Berele's correspondence `w̃ ↦ (P̃, Q̃)`.
pub fn std_berele_correspondence(w: &StandardizedWord) -> (Tableau<SubscriptedLetter>, UpDownTableau) {
    let (mut tableaux, q) = std_berele_trace(w);
    (tableaux.pop().expect("P̃_0 is always present"), q)
}

/// Subscripts the occurrences of each `γ` in `P` by
/// `c(γ)+1, …, m(γ)` from left to right.
pub fn standardize_tableau(
    p: &Tableau<Letter>,
    cancel_counts: &BTreeMap<Letter, usize>,
    mult: &BTreeMap<Letter, usize>,
) -> Result<Tableau<SubscriptedLetter>> {
    let mut letters: Vec<Letter> = mult.keys().copied().collect();
    letters.extend(p.entries().map(|(_, l)| *l));
    letters.sort();
    letters.dedup();
    let mut subscript: BTreeMap<Cell, u32> = BTreeMap::new();
    for l in letters {
        let m = mult.get(&l).copied().unwrap_or(0);
        let c = cancel_counts.get(&l).copied().unwrap_or(0);
        let cells = p.cells_of(l);
        if c > m || cells.len() != m - c {
            return Err(Error::CountMismatch {
                letter: l.to_string(),
                found: cells.len(),
                expected: m.saturating_sub(c),
            });
        }
        for (i, cell) in cells.into_iter().enumerate() {
            subscript.insert(cell, (c + i + 1) as u32);
        }
    }
    let rows = p
        .rows()
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, &l)| SubscriptedLetter::new(l, subscript[&Cell::new(r + 1, c + 1)]))
                .collect()
        })
        .collect();
    Tableau::from_rows(rows)
}
