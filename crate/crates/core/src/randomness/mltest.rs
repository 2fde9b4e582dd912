//! Finite stages of Martin-Löf tests.
//!
//! A test is a family of words `u_{n,m}`; level `n` covers the union of the
//! cylinders `I_u = u·{0,1}^ω` of its words and must have measure at most
//! `2^-n`. Only the words up to a cutoff are ever generated, so both the
//! load-time measure check and the verdicts are relative to that cutoff.
//!
//! File format: a JSON object mapping level numbers to word lists,
//! e.g. `{"1": ["0"], "2": ["00"]}`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::bits::BitString;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

use super::SequenceSource;

/// Exact measure of `∪ I_u`: words with a proper prefix in the set are
/// dropped, then `2^-|u|` is summed over the rest.
pub fn cylinder_measure(words: &[BitString]) -> Dyadic {
    let mut sorted = words.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<&BitString> = Vec::new();
    for w in &sorted {
        // in lexicographic order a dominating prefix is always the last kept word
        if kept.last().is_some_and(|p| p.is_prefix_of(w)) {
            continue;
        }
        kept.push(w);
    }
    kept.iter().map(|w| Dyadic::pow2_neg(w.len() as u64)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMLTest {
    levels: BTreeMap<u32, Vec<BitString>>,
}

impl FiniteMLTest {
    /// Validates every level's measure against `2^-n`.
    pub fn new(levels: BTreeMap<u32, Vec<BitString>>) -> Result<Self> {
        for (&level, words) in &levels {
            let measure = cylinder_measure(words);
            if measure > Dyadic::pow2_neg(u64::from(level)) {
                return Err(Error::MeasureViolation {
                    level,
                    measure: measure.to_string(),
                });
            }
        }
        Ok(Self { levels })
    }

    /// Collects `gen(n, m)` for `n ≤ levels` and `m ≤ cutoff`, stopping a
    /// level early when the generator returns `None`.
    pub fn from_generator(
        levels: u32,
        cutoff: usize,
        generator: impl Fn(u32, usize) -> Option<BitString>,
    ) -> Result<Self> {
        let map = (1..=levels)
            .map(|n| {
                let words = (0..=cutoff).map_while(|m| generator(n, m)).collect();
                (n, words)
            })
            .collect();
        Self::new(map)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, Vec<BitString>> = serde_json::from_str(text)?;
        let levels = raw
            .into_iter()
            .map(|(k, v)| {
                k.trim().parse::<u32>().map(|n| (n, v)).map_err(|_| {
                    Error::Precondition(format!("level key {k:?} is not a natural number"))
                })
            })
            .collect::<Result<_>>()?;
        Self::new(levels)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn levels(&self) -> &BTreeMap<u32, Vec<BitString>> {
        &self.levels
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// The observed prefix extends this word.
    Caught { witness: BitString },
    /// Every word is incomparable with the observed prefix.
    Escaped,
    /// Some word extends the observed prefix; more bits could still be caught.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub level: u32,
    #[serde(flatten)]
    pub verdict: Verdict,
}

pub fn ml_test_eval(
    test: &FiniteMLTest,
    source: &SequenceSource,
    prefix_len: usize,
) -> Result<Vec<LevelVerdict>> {
    let observed = source.prefix(prefix_len)?;
    Ok(test
        .levels
        .iter()
        .map(|(&level, words)| {
            let verdict = if let Some(w) = words.iter().find(|w| w.is_prefix_of(&observed)) {
                Verdict::Caught { witness: w.clone() }
            } else if words.iter().any(|w| observed.is_prefix_of(w)) {
                Verdict::Undetermined
            } else {
                Verdict::Escaped
            };
            LevelVerdict { level, verdict }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    fn zeros_test(levels: u32) -> FiniteMLTest {
        FiniteMLTest::from_generator(levels, 0, |n, _| Some(BitString::zeros(n as usize))).unwrap()
    }

    #[test]
    fn measure_examples() {
        assert_eq!(cylinder_measure(&[bits("0"), bits("1")]), Dyadic::one());
        assert_eq!(
            cylinder_measure(&[bits("0"), bits("01")]),
            Dyadic::pow2_neg(1)
        );
        assert_eq!(
            cylinder_measure(&[bits("00"), bits("01"), bits("10")]),
            Dyadic::new(3u32.into(), 2)
        );
        assert_eq!(cylinder_measure(&[]), Dyadic::zero());
        assert_eq!(cylinder_measure(&[bits("")]), Dyadic::one());
    }

    #[test]
    fn zeros_test_catches_zero_source() {
        let src: SequenceSource = "zeros".parse().unwrap();
        let v = ml_test_eval(&zeros_test(12), &src, 8).unwrap();
        for lv in &v {
            if lv.level <= 8 {
                assert_eq!(
                    lv.verdict,
                    Verdict::Caught {
                        witness: BitString::zeros(lv.level as usize)
                    }
                );
            } else {
                assert_eq!(lv.verdict, Verdict::Undetermined);
            }
        }
    }

    #[test]
    fn zeros_test_misses_leading_one() {
        let src: SequenceSource = "ones".parse().unwrap();
        let v = ml_test_eval(&zeros_test(6), &src, 4).unwrap();
        assert!(v.iter().all(|lv| lv.verdict == Verdict::Escaped));
    }

    #[test]
    fn load_rejects_oversized_level() {
        let err = FiniteMLTest::from_json(r#"{"2": ["00", "01", "10"]}"#).unwrap_err();
        assert!(matches!(err, Error::MeasureViolation { level: 2, .. }));
        assert!(FiniteMLTest::from_json(r#"{"2": ["00"], "1": ["1"]}"#).is_ok());
        assert!(FiniteMLTest::from_json(r#"{"x": ["00"]}"#).is_err());
    }
}
