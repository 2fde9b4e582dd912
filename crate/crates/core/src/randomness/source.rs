use std::path::PathBuf;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitString;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceKind {
    /// ChaCha8 seeded from the given value; bits are taken LSB-first from each `u64`.
    Prng(u64),
    /// `0101…`
    Alternating,
    /// Binary numerals `1, 10, 11, 100, …` concatenated.
    Champernowne,
    AllZeros,
    AllOnes,
    /// ASCII `'0'`/`'1'` from a file; whitespace is skipped.
    FileBits(PathBuf),
}

/// A replayable infinite (or file-backed finite) bit sequence.
///
/// Every call to [`SequenceSource::iter`] starts again from `a_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSource {
    kind: SourceKind,
    file_bits: Option<BitString>,
}

impl SequenceSource {
    pub fn new(kind: SourceKind) -> Self {
        Self {
            kind,
            file_bits: None,
        }
    }

    /// Opens a source, reading the file eagerly for [`SourceKind::FileBits`].
    pub fn open(kind: SourceKind) -> Result<Self> {
        let file_bits = match &kind {
            SourceKind::FileBits(path) => {
                let text = std::fs::read_to_string(path)?;
                let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
                Some(cleaned.parse::<BitString>()?)
            }
            _ => None,
        };
        Ok(Self { kind, file_bits })
    }

    pub fn kind(&self) -> &SourceKind {
        &self.kind
    }

    pub fn iter(&self) -> SourceIter<'_> {
        let state = match &self.kind {
            SourceKind::Prng(seed) => IterState::Prng {
                rng: ChaCha8Rng::seed_from_u64(*seed),
                word: 0,
                left: 0,
            },
            SourceKind::Champernowne => IterState::Champernowne {
                current: 1,
                digit: 0,
            },
            _ => IterState::Plain,
        };
        SourceIter {
            source: self,
            position: 0,
            state,
        }
    }

    /// The first `n` bits; fails if the source runs dry.
    pub fn prefix(&self, n: usize) -> Result<BitString> {
        let out: BitString = self.iter().take(n).collect();
        if out.len() < n {
            return Err(Error::SourceExhausted(out.len()));
        }
        Ok(out)
    }
}

impl FromStr for SequenceSource {
    type Err = Error;

    /// `prng:SEED`, `alternating`, `champernowne`, `zeros`, `ones` or `file:PATH`.
    fn from_str(spec: &str) -> Result<Self> {
        let kind = match spec {
            "alternating" => SourceKind::Alternating,
            "champernowne" => SourceKind::Champernowne,
            "zeros" => SourceKind::AllZeros,
            "ones" => SourceKind::AllOnes,
            _ => {
                if let Some(seed) = spec.strip_prefix("prng:") {
                    let seed = seed
                        .parse()
                        .map_err(|_| Error::BadSource(format!("bad seed in {spec:?}")))?;
                    SourceKind::Prng(seed)
                } else if let Some(path) = spec.strip_prefix("file:") {
                    SourceKind::FileBits(PathBuf::from(path))
                } else {
                    return Err(Error::BadSource(spec.to_string()));
                }
            }
        };
        SequenceSource::open(kind)
    }
}

enum IterState {
    Plain,
    Prng {
        rng: ChaCha8Rng,
        word: u64,
        left: u32,
    },
    Champernowne {
        current: u64,
        digit: u32,
    },
}

pub struct SourceIter<'a> {
    source: &'a SequenceSource,
    position: usize,
    state: IterState,
}

impl SourceIter<'_> {
    pub fn position(&self) -> usize {
        self.position
    }
}

impl Iterator for SourceIter<'_> {
    type Item = bool;

    fn next(&mut self) -> Option<bool> {
        let i = self.position;
        let bit = match (&self.source.kind, &mut self.state) {
            (SourceKind::Alternating, _) => i % 2 == 1,
            (SourceKind::AllZeros, _) => false,
            (SourceKind::AllOnes, _) => true,
            (SourceKind::FileBits(_), _) => self.source.file_bits.as_ref()?.get(i)?,
            (SourceKind::Prng(_), IterState::Prng { rng, word, left }) => {
                if *left == 0 {
                    *word = rng.next_u64();
                    *left = 64;
                }
                let b = *word & 1 == 1;
                *word >>= 1;
                *left -= 1;
                b
            }
            (SourceKind::Champernowne, IterState::Champernowne { current, digit }) => {
                let width = 64 - current.leading_zeros();
                let b = (*current >> (width - 1 - *digit)) & 1 == 1;
                *digit += 1;
                if *digit == width {
                    *current += 1;
                    *digit = 0;
                }
                b
            }
            _ => unreachable!("iterator state matches its source kind"),
        };
        self.position += 1;
        Some(bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    #[test]
    fn computable_sources() {
        let alt: SequenceSource = "alternating".parse().unwrap();
        assert_eq!(alt.prefix(6).unwrap(), bits("010101"));
        let ch: SequenceSource = "champernowne".parse().unwrap();
        assert_eq!(ch.prefix(12).unwrap(), bits("110111001011"));
        let z: SequenceSource = "zeros".parse().unwrap();
        assert_eq!(z.prefix(3).unwrap(), bits("000"));
    }

    #[test]
    fn prng_replays() {
        let a: SequenceSource = "prng:7".parse().unwrap();
        let b: SequenceSource = "prng:7".parse().unwrap();
        assert_eq!(a.prefix(300).unwrap(), b.prefix(300).unwrap());
        assert_eq!(a.prefix(300).unwrap(), a.prefix(300).unwrap());
        let c: SequenceSource = "prng:8".parse().unwrap();
        assert_ne!(a.prefix(300).unwrap(), c.prefix(300).unwrap());
    }

    #[test]
    fn file_source_exhausts() {
        let dir = std::env::temp_dir().join(format!("ait-src-{}", std::process::id()));
        std::fs::write(&dir, "0110\n11\n").unwrap();
        let src: SequenceSource = format!("file:{}", dir.display()).parse().unwrap();
        assert_eq!(src.prefix(6).unwrap(), bits("011011"));
        assert!(matches!(src.prefix(7), Err(Error::SourceExhausted(6))));
        std::fs::remove_file(&dir).unwrap();
    }

    #[test]
    fn bad_specs() {
        assert!("coin".parse::<SequenceSource>().is_err());
        assert!("prng:x".parse::<SequenceSource>().is_err());
    }
}
