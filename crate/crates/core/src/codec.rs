//! Self-delimiting codes for strings and pairs of strings.
//!
//! Three pairing schemes are provided, each embedding a header that marks
//! where the first component ends:
//!
//! | level | layout                          | length (for `|u| ≥ 1`)                           |
//! |-------|---------------------------------|--------------------------------------------------|
//! | 1     | `pad(u) 1 v`                    | `2|u| + |v| + 1`                                 |
//! | 2     | `pad(bin|u|) 1 u v`             | `|u| + |v| + 2⌊log|u|⌋ + 3`                      |
//! | 3     | `pad(bin|bin|u||) 1 bin|u| u v` | `|u| + |v| + ⌊log|u|⌋ + 2⌊log(1+⌊log|u|⌋)⌋ + 4` |
//!
//! `pad` doubles a string by inserting a `0` before every symbol, so the
//! header ends at the first `1` in an odd (1-indexed) position.
//! `bin(0)` is `"0"`, which keeps every scheme total on empty `u`.
//!
//! The level-3 constant is 4, not the 3 often quoted: the header spends
//! `2(⌊log|bin|u||⌋ + 1) + 1` bits and `bin|u|` itself `⌊log|u|⌋ + 1`.

use std::fmt;

use crate::bits::BitString;
use crate::error::DecodeError;

/// Selects one of the three pairing schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairLevel {
    One,
    Two,
    Three,
}

impl PairLevel {
    pub const ALL: [PairLevel; 3] = [PairLevel::One, PairLevel::Two, PairLevel::Three];

    pub fn number(self) -> u8 {
        match self {
            PairLevel::One => 1,
            PairLevel::Two => 2,
            PairLevel::Three => 3,
        }
    }
}

impl TryFrom<u8> for PairLevel {
    type Error = DecodeError;

    fn try_from(n: u8) -> Result<Self, DecodeError> {
        match n {
            1 => Ok(PairLevel::One),
            2 => Ok(PairLevel::Two),
            3 => Ok(PairLevel::Three),
            other => Err(DecodeError::BadLevel(other)),
        }
    }
}

impl fmt::Display for PairLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// An encoded pair tagged with the scheme that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCode {
    pub level: PairLevel,
    pub payload: BitString,
}

impl PairCode {
    pub fn new(level: PairLevel, u: &BitString, v: &BitString) -> Self {
        Self {
            level,
            payload: encode_pair(level, u, v),
        }
    }

    pub fn decode(&self) -> Result<(BitString, BitString), DecodeError> {
        decode_pair(self.level, &self.payload)
    }
}

/// Inserts a `0` in front of every symbol: `pad(01011) = 0001000101`.
pub fn pad(u: &BitString) -> BitString {
    let mut out = BitString::with_capacity(2 * u.len());
    for b in u.iter() {
        out.push(false);
        out.push(b);
    }
    out
}

/// MSB-first binary numeral without leading zeros; `bin(0) = "0"`.
pub fn bin(n: u64) -> BitString {
    if n == 0 {
        return BitString::zeros(1);
    }
    let width = 64 - n.leading_zeros() as usize;
    BitString::from_index(n, width)
}

/// `⌊log₂ n⌋` for `n ≥ 1`.
pub fn floor_log2(n: u64) -> u64 {
    assert!(n > 0, "floor_log2 of zero");
    63 - n.leading_zeros() as u64
}

/// Length of `pad(bin(n))·1`, the level-2 header for a first component of length `n`.
pub fn level2_header_len(n: u64) -> u64 {
    2 * bin(n).len() as u64 + 1
}

pub fn encode_pair(level: PairLevel, u: &BitString, v: &BitString) -> BitString {
    let mut out = match level {
        PairLevel::One => pad(u),
        PairLevel::Two => pad(&bin(u.len() as u64)),
        PairLevel::Three => pad(&bin(bin(u.len() as u64).len() as u64)),
    };
    out.push(true);
    match level {
        PairLevel::One => {}
        PairLevel::Two => out.extend_from(u),
        PairLevel::Three => {
            out.extend_from(&bin(u.len() as u64));
            out.extend_from(u);
        }
    }
    out.extend_from(v);
    out
}

/// Closed-form length of `encode_pair(level, u, v)` given the component lengths.
pub fn encoded_len(level: PairLevel, u_len: u64, v_len: u64) -> u64 {
    let bin_len = |n: u64| bin(n).len() as u64;
    match level {
        PairLevel::One => 2 * u_len + v_len + 1,
        PairLevel::Two => u_len + v_len + 2 * bin_len(u_len) + 1,
        PairLevel::Three => u_len + v_len + bin_len(u_len) + 2 * bin_len(bin_len(u_len)) + 1,
    }
}

/// Splits `w = pad(u)·1·v` into `(u, v)`.
fn split_padded(w: &BitString) -> Result<(BitString, BitString), DecodeError> {
    let mut head = BitString::new();
    let mut i = 0;
    loop {
        match (w.get(i), w.get(i + 1)) {
            (Some(true), _) => return Ok((head, w.slice(i + 1, w.len()))),
            (Some(false), Some(b)) => head.push(b),
            _ => return Err(DecodeError::MissingTerminator),
        }
        i += 2;
    }
}

fn take_counted(
    rest: &BitString,
    numeral: &BitString,
) -> Result<(BitString, BitString), DecodeError> {
    let declared = numeral.to_u64().ok_or(DecodeError::Truncated {
        declared: u64::MAX,
        available: rest.len(),
    })?;
    if declared > rest.len() as u64 {
        return Err(DecodeError::Truncated {
            declared,
            available: rest.len(),
        });
    }
    let n = declared as usize;
    Ok((rest.slice(0, n), rest.slice(n, rest.len())))
}

/// Inverse of [`encode_pair`]. Accepts any well-formed code, including
/// headers whose numerals carry leading zeros.
pub fn decode_pair(level: PairLevel, w: &BitString) -> Result<(BitString, BitString), DecodeError> {
    let (header, rest) = split_padded(w)?;
    match level {
        PairLevel::One => Ok((header, rest)),
        PairLevel::Two => take_counted(&rest, &header),
        PairLevel::Three => {
            let (len_numeral, rest) = take_counted(&rest, &header)?;
            take_counted(&rest, &len_numeral)
        }
    }
}

/// `pad(bin|v|)·1·u·v`: like level 2, but the header counts the second
/// component, so the overhead grows with `log|v|` instead of `log|u|`.
pub fn encode_pair_tail_counted(u: &BitString, v: &BitString) -> BitString {
    let mut out = pad(&bin(v.len() as u64));
    out.push(true);
    out.extend_from(u);
    out.extend_from(v);
    out
}

pub fn decode_pair_tail_counted(w: &BitString) -> Result<(BitString, BitString), DecodeError> {
    let (header, rest) = split_padded(w)?;
    let declared = header.to_u64().unwrap_or(u64::MAX);
    if declared > rest.len() as u64 {
        return Err(DecodeError::Truncated {
            declared,
            available: rest.len(),
        });
    }
    let cut = rest.len() - declared as usize;
    Ok((rest.slice(0, cut), rest.slice(cut, rest.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    #[test]
    fn pad_examples() {
        assert_eq!(pad(&bits("01011")), bits("0001000101"));
        assert_eq!(pad(&bits("")), bits(""));
        assert_eq!(pad(&bits("1")), bits("01"));
    }

    #[test]
    fn bin_examples() {
        assert_eq!(bin(4), bits("100"));
        assert_eq!(bin(0), bits("0"));
        assert_eq!(bin(5), bits("101"));
        assert_eq!(bin(1), bits("1"));
        for n in 1..1000u64 {
            assert_eq!(bin(n).len() as u64, 1 + floor_log2(n));
        }
    }

    #[test]
    fn level_one_examples() {
        let w = encode_pair(PairLevel::One, &bits("01011"), &bits("11"));
        assert_eq!(w, bits("0001000101111"));
        assert_eq!(w.len(), 13);
        assert_eq!(encode_pair(PairLevel::One, &bits(""), &bits("")), bits("1"));
        assert_eq!(
            decode_pair(PairLevel::One, &bits("1")).unwrap(),
            (bits(""), bits(""))
        );
        assert_eq!(
            decode_pair(PairLevel::One, &w).unwrap(),
            (bits("01011"), bits("11"))
        );
    }

    #[test]
    fn level_two_example() {
        // |u| = 4 → header pad("100")·1 = "010000" + "1"
        let w = encode_pair(PairLevel::Two, &bits("0101"), &bits("1"));
        assert_eq!(w.len(), 12);
        assert_eq!(w, bits("010000101011"));
        assert_eq!(
            decode_pair(PairLevel::Two, &w).unwrap(),
            (bits("0101"), bits("1"))
        );
    }

    #[test]
    fn level_three_layout() {
        // |u| = 5, bin = "101", |bin| = 3 → pad("11")·1·"101"·u·v
        let w = encode_pair(PairLevel::Three, &bits("11111"), &bits("0"));
        assert_eq!(w, bits("0101").concat(&bits("1101111110")));
        assert_eq!(w.len() as u64, encoded_len(PairLevel::Three, 5, 1));
    }

    #[test]
    fn decode_errors() {
        assert_eq!(
            decode_pair(PairLevel::Two, &bits("0000")),
            Err(DecodeError::MissingTerminator)
        );
        assert_eq!(
            decode_pair(PairLevel::One, &bits("")),
            Err(DecodeError::MissingTerminator)
        );
        assert_eq!(
            decode_pair(PairLevel::One, &bits("0")),
            Err(DecodeError::MissingTerminator)
        );
        // header says 3 bits follow, only 2 present
        assert_eq!(
            decode_pair(PairLevel::Two, &bits("0101111")),
            Err(DecodeError::Truncated {
                declared: 3,
                available: 2
            })
        );
        assert_eq!(PairLevel::try_from(4), Err(DecodeError::BadLevel(4)));
    }

    #[test]
    fn empty_first_component_uses_bin_zero() {
        for level in [PairLevel::Two, PairLevel::Three] {
            let w = encode_pair(level, &bits(""), &bits("101"));
            assert_eq!(decode_pair(level, &w).unwrap(), (bits(""), bits("101")));
            assert_eq!(w.len() as u64, encoded_len(level, 0, 3));
        }
        assert_eq!(
            encode_pair(PairLevel::Two, &bits(""), &bits("")),
            bits("001")
        );
    }

    #[test]
    fn tail_counted_pair() {
        let w = encode_pair_tail_counted(&bits("1101"), &bits("01"));
        assert_eq!(w, bits("0100").concat(&bits("1110101")));
        assert_eq!(
            decode_pair_tail_counted(&w).unwrap(),
            (bits("1101"), bits("01"))
        );
        assert!(decode_pair_tail_counted(&bits("0101")).is_err());
    }
}
