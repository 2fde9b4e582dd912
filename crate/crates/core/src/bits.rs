//! Finite binary strings.
//!
//! [`BitString`] is the currency of the whole crate: programs, machine
//! outputs, codes and sequence prefixes are all bit strings. They render as
//! ASCII `'0'`/`'1'` and parse back from the same form.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseBitsError;

/// A finite string over `{0,1}`. Positions are 0-indexed in the API.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new() -> Self {
        Self { bits: Vec::new() }
    }

    pub fn with_capacity(cap: usize) -> Self {
        Self {
            bits: Vec::with_capacity(cap),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            bits: vec![false; n],
        }
    }

    pub fn ones(n: usize) -> Self {
        Self {
            bits: vec![true; n],
        }
    }

    /// The `len`-bit string whose most-significant-first reading is `value`.
    /// Bits of `value` above `len` are ignored.
    pub fn from_index(value: u64, len: usize) -> Self {
        let bits = (0..len)
            .map(|i| {
                let shift = len - 1 - i;
                shift < 64 && (value >> shift) & 1 == 1
            })
            .collect();
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.bits.get(i).copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn extend_from(&mut self, other: &BitString) {
        self.bits.extend_from_slice(&other.bits);
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        self.bits.iter().copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BitString) -> BitString {
        let mut out = Self::with_capacity(self.len() + other.len());
        out.extend_from(self);
        out.extend_from(other);
        out
    }

    pub fn slice(&self, start: usize, end: usize) -> BitString {
        Self {
            bits: self.bits[start..end].to_vec(),
        }
    }

    pub fn prefix(&self, n: usize) -> BitString {
        self.slice(0, n.min(self.len()))
    }

    pub fn reversed(&self) -> BitString {
        Self {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.bits.starts_with(&self.bits)
    }

    /// Neither string is a prefix of the other.
    pub fn is_incomparable_with(&self, other: &BitString) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_palindrome(&self) -> bool {
        self.bits.iter().eq(self.bits.iter().rev())
    }

    /// Reads the string as an MSB-first binary numeral. `None` on overflow.
    /// The empty string reads as 0.
    pub fn to_u64(&self) -> Option<u64> {
        let mut acc: u64 = 0;
        for b in self.iter() {
            acc = acc.checked_mul(2)?.checked_add(b as u64)?;
        }
        Some(acc)
    }

    /// Every string of length `len`, in lexicographic order.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = BitString> {
        assert!(
            len < 64,
            "exhaustive enumeration is limited to lengths below 64"
        );
        (0..1u64 << len).map(move |v| BitString::from_index(v, len))
    }

    /// Every string of length at most `max_len`, in length-then-lexicographic order.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = BitString> {
        (0..=max_len).flat_map(BitString::all_of_len)
    }

    /// Length-then-lexicographic comparison.
    pub fn shortlex_cmp(&self, other: &BitString) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl Index<usize> for BitString {
    type Output = bool;

    fn index(&self, i: usize) -> &bool {
        &self.bits[i]
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

impl From<Vec<bool>> for BitString {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl FromStr for BitString {
    type Err = ParseBitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseBitsError { pos, found: other }),
            })
            .collect()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for literal bit strings in tests and examples.
///
/// Panics on characters other than `'0'` and `'1'`.
pub fn bits(s: &str) -> BitString {
    s.parse().expect("literal bit string")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let b: BitString = "01011".parse().unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(b.to_string(), "01011");
        assert_eq!("".parse::<BitString>().unwrap(), BitString::new());
    }

    #[test]
    fn parse_rejects_other_symbols() {
        let err = "01x1".parse::<BitString>().unwrap_err();
        assert_eq!(err.pos, 2);
        assert_eq!(err.found, 'x');
    }

    #[test]
    fn from_index_is_msb_first() {
        assert_eq!(BitString::from_index(4, 3), bits("100"));
        assert_eq!(BitString::from_index(1, 4), bits("0001"));
        assert_eq!(BitString::from_index(0, 0), bits(""));
    }

    #[test]
    fn numeral_reading() {
        assert_eq!(bits("101").to_u64(), Some(5));
        assert_eq!(bits("").to_u64(), Some(0));
        assert_eq!(bits("0001").to_u64(), Some(1));
        assert_eq!(BitString::ones(65).to_u64(), None);
    }

    #[test]
    fn prefix_relations() {
        assert!(bits("01").is_prefix_of(&bits("011")));
        assert!(bits("").is_prefix_of(&bits("1")));
        assert!(!bits("011").is_prefix_of(&bits("01")));
        assert!(bits("00").is_incomparable_with(&bits("01")));
        assert!(!bits("0").is_incomparable_with(&bits("01")));
    }

    #[test]
    fn enumeration_order() {
        let all: Vec<String> = BitString::all_up_to(2).map(|b| b.to_string()).collect();
        assert_eq!(all, ["", "0", "1", "00", "01", "10", "11"]);
    }

    #[test]
    fn serde_as_ascii() {
        let json = serde_json::to_string(&bits("0110")).unwrap();
        assert_eq!(json, "\"0110\"");
        let back: BitString = serde_json::from_str(&json).unwrap();
        assert_eq!(back, bits("0110"));
    }
}
