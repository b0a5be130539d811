//! The symplectic alphabet `1 < 1̄ < 2 < 2̄ < ⋯ < n < n̄` and its
//! subscripted (standardized) form.
//!
//! Machine-facing text writes a barred letter `k̄` as `k'`; subscripts are
//! written `k_3` / `k'_3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter of the symplectic alphabet.
///
/// Field order gives the alphabet order: by value, then unbarred before barred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    value: u32,
    barred: bool,
}

impl Letter {
    pub fn new(value: u32, barred: bool) -> Self {
        assert!(value >= 1, "letter values start at 1");
        Letter { value, barred }
    }

    pub fn plain(value: u32) -> Self {
        Letter::new(value, false)
    }

    pub fn bar(value: u32) -> Self {
        Letter::new(value, true)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_barred(&self) -> bool {
        self.barred
    }

    /// Position in the alphabet, starting from 0 for the letter 1.
    pub fn index(&self) -> usize {
        2 * (self.value as usize - 1) + self.barred as usize
    }

    pub fn from_index(index: usize) -> Self {
        Letter::new((index / 2 + 1) as u32, index % 2 == 1)
    }

    /// The alphabet `Γ_n` in increasing order.
    pub fn alphabet(n: u32) -> impl Iterator<Item = Letter> + Clone {
        (0..2 * n as usize).map(Letter::from_index)
    }

    /// Rendering with a combining overbar, for human-facing output.
    pub fn pretty(&self) -> String {
        if self.barred {
            format!("{}\u{0304}", self.value)
        } else {
            self.value.to_string()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, barred) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v >= 1 && digits.bytes().all(|b| b.is_ascii_digit()) => Ok(Letter::new(v, barred)),
            _ => Err(Error::BadLetter(s.to_string())),
        }
    }
}

/// Terminal columns taken by `s`, not counting combining overbars.
pub(crate) fn display_width(s: &str) -> usize {
    s.chars().filter(|&c| c != '\u{0304}').count()
}

/// A letter carrying a standardization subscript; ordered by letter, then
/// subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubscriptedLetter {
    pub letter: Letter,
    pub subscript: u32,
}

impl SubscriptedLetter {
    pub fn new(letter: Letter, subscript: u32) -> Self {
        SubscriptedLetter { letter, subscript }
    }

    pub fn pretty(&self) -> String {
        format!("{}_{}", self.letter.pretty(), self.subscript)
    }
}

impl fmt::Display for SubscriptedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.letter, self.subscript)
    }
}

impl FromStr for SubscriptedLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, sub) = s.split_once('_').ok_or_else(|| Error::BadLetter(s.to_string()))?;
        let subscript = sub
            .parse::<u32>()
            .ok()
            .filter(|&v| v >= 1)
            .ok_or_else(|| Error::BadLetter(s.to_string()))?;
        Ok(SubscriptedLetter::new(l.parse()?, subscript))
    }
}

/// Anything that can fill a symplectic tableau: a letter, possibly decorated.
///
/// Bumping and sliding use the type's own order; the symplectic condition
/// reads only the underlying [`Letter`].
pub trait Letterlike: Ord + Copy + fmt::Debug + fmt::Display + FromStr<Err = Error> {
    fn letter(&self) -> Letter;
    fn pretty(&self) -> String;
}

impl Letterlike for Letter {
    fn letter(&self) -> Letter {
        *self
    }

    fn pretty(&self) -> String {
        Letter::pretty(self)
    }
}

impl Letterlike for SubscriptedLetter {
    fn letter(&self) -> Letter {
        self.letter
    }

    fn pretty(&self) -> String {
        SubscriptedLetter::pretty(self)
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(Letter);
string_serde!(SubscriptedLetter);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_order() {
        let g: Vec<String> = Letter::alphabet(3).map(|l| l.to_string()).collect();
        assert_eq!(g, ["1", "1'", "2", "2'", "3", "3'"]);
        let mut sorted: Vec<Letter> = Letter::alphabet(3).collect();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, Letter::alphabet(3).collect::<Vec<_>>());
        assert!(Letter::bar(1) < Letter::plain(2));
        assert!(Letter::plain(2) < Letter::bar(2));
    }

    #[test]
    fn subscript_order() {
        let a = SubscriptedLetter::new(Letter::bar(1), 3);
        let b = SubscriptedLetter::new(Letter::plain(2), 1);
        let c = SubscriptedLetter::new(Letter::bar(1), 1);
        assert!(c < a && a < b);
    }

    #[test]
    fn parse_tokens() {
        assert_eq!("3'".parse::<Letter>().unwrap(), Letter::bar(3));
        assert_eq!("12".parse::<Letter>().unwrap(), Letter::plain(12));
        for bad in ["0", "", "'", "a", "1''", "-1", "+1"] {
            assert!(bad.parse::<Letter>().is_err(), "{bad}");
        }
        let s: SubscriptedLetter = "2'_3".parse().unwrap();
        assert_eq!(s, SubscriptedLetter::new(Letter::bar(2), 3));
        assert_eq!(s.to_string(), "2'_3");
        assert!("2_0".parse::<SubscriptedLetter>().is_err());
    }

    #[test]
    fn index_round_trip() {
        for (i, l) in Letter::alphabet(5).enumerate() {
            assert_eq!(l.index(), i);
            assert_eq!(Letter::from_index(i), l);
        }
    }
}
