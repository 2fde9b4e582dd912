//! Complexity estimates from above.
//!
//! Every estimator searches programs in length-then-lexicographic order and
//! returns the first one that halts on the target within the horizon, which
//! caps both program length and step count. The result is always a replayable
//! witness, so the reported bound can only overstate the true complexity.
//! Failing to find a witness says nothing about the target except that the
//! horizon was too small.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bits::BitString;
use crate::codec::{encode_pair, encode_pair_tail_counted, level2_header_len, PairLevel};
use crate::machine::{
    conditional_exec, universal_exec, wrap_program, DEFAULT_TAPE_CELLS, E_COMP, E_MIX, E_MIX_TAIL,
};

/// Longest program length any estimator will enumerate exhaustively.
pub const MAX_SEARCH_LEN: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "given", rename_all = "lowercase")]
pub enum EstimateKind {
    Plain,
    Conditional(BitString),
    Pair,
    Prefix,
}

/// An upper bound on the complexity of `target`, certified by `witness`.
///
/// Only the estimators in this crate build these, so every value in
/// circulation carries a program that reproduces it:
///
/// ```compile_fail
/// use ait_core::complexity::{ComplexityEstimate, EstimateKind};
/// let forged = ComplexityEstimate {
///     target: ait_core::bits("1"),
///     bound: 0,
///     witness: ait_core::bits(""),
///     horizon: 1,
///     kind: EstimateKind::Plain,
/// };
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityEstimate {
    pub(crate) target: BitString,
    pub(crate) bound: u64,
    pub(crate) witness: BitString,
    pub(crate) horizon: u64,
    #[serde(flatten)]
    pub(crate) kind: EstimateKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EstimateError {
    #[error("no witness within horizon {horizon}")]
    NotFound { horizon: u64 },
    #[error("search would enumerate programs of length {len} (limit {limit})")]
    Refused { len: usize, limit: usize },
}

pub type Estimate = Result<ComplexityEstimate, EstimateError>;

/// First program (length-then-lex) of length `≤ max_len` accepted by `halts_on_target`.
pub(crate) fn shortest_program(
    max_len: usize,
    horizon: u64,
    halts_on_target: impl Fn(&BitString) -> bool + Sync,
) -> Result<BitString, EstimateError> {
    for len in 0..=max_len {
        if len > MAX_SEARCH_LEN {
            return Err(EstimateError::Refused {
                len,
                limit: MAX_SEARCH_LEN,
            });
        }
        let hit = (0..1u64 << len)
            .into_par_iter()
            .map(|i| BitString::from_index(i, len))
            .find_first(|q| halts_on_target(q));
        if let Some(q) = hit {
            return Ok(q);
        }
    }
    Err(EstimateError::NotFound { horizon })
}

fn horizon_len(horizon: u64) -> usize {
    usize::try_from(horizon).unwrap_or(usize::MAX)
}

/// Staged plain complexity: `min{|q| : |q| ≤ horizon, U(q) = x within horizon steps}`.
pub fn estimate_k(x: &BitString, horizon: u64) -> Estimate {
    // the identity machine halts on wrap(0, x) in one step, so no longer
    // program is ever needed once it fits the horizon
    let max_len = horizon_len(horizon).min(x.len() + 1);
    let witness = shortest_program(max_len, horizon, |q| {
        horizon > 0 && universal_exec(q, horizon, DEFAULT_TAPE_CELLS).halted_with(x)
    })?;
    Ok(ComplexityEstimate {
        target: x.clone(),
        bound: witness.len() as u64,
        witness,
        horizon,
        kind: EstimateKind::Plain,
    })
}

/// Staged conditional complexity of `x` given `y`, over [`crate::machine::conditional_run`].
pub fn estimate_k_cond(x: &BitString, y: &BitString, horizon: u64) -> Estimate {
    let witness = shortest_program(horizon_len(horizon), horizon, |q| {
        horizon > 0 && conditional_exec(q, y, horizon, DEFAULT_TAPE_CELLS).halted_with(x)
    })?;
    Ok(ComplexityEstimate {
        target: x.clone(),
        bound: witness.len() as u64,
        witness,
        horizon,
        kind: EstimateKind::Conditional(y.clone()),
    })
}

/// Pair complexity: the plain estimate of `⟨x, y⟩₂`.
pub fn estimate_k_pair(x: &BitString, y: &BitString, horizon: u64) -> Estimate {
    let mut est = estimate_k(&encode_pair(PairLevel::Two, x, y), horizon)?;
    est.kind = EstimateKind::Pair;
    Ok(est)
}

impl ComplexityEstimate {
    pub fn target(&self) -> &BitString {
        &self.target
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn witness(&self) -> &BitString {
        &self.witness
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn kind(&self) -> &EstimateKind {
        &self.kind
    }

    /// Re-runs the witness and checks it reaches the target within the horizon.
    pub fn replays(&self) -> bool {
        if self.horizon == 0 || self.bound != self.witness.len() as u64 {
            return false;
        }
        let outcome = match &self.kind {
            EstimateKind::Plain | EstimateKind::Pair => {
                universal_exec(&self.witness, self.horizon, DEFAULT_TAPE_CELLS)
            }
            EstimateKind::Conditional(y) => {
                conditional_exec(&self.witness, y, self.horizon, DEFAULT_TAPE_CELLS)
            }
            EstimateKind::Prefix => crate::prefix::prefix_exec(&self.witness, self.horizon),
        };
        outcome.halted_with(&self.target)
    }
}

/// A program for `f(U(p))`, where `e_f` computes `f`:
/// `wrap(E_COMP, wrap(e_f, p))`, of length `|p| + e_f + E_COMP + 2`.
pub fn compose_program(e_f: u64, p: &BitString) -> BitString {
    wrap_program(E_COMP, &wrap_program(e_f, p))
}

/// Length of [`mix_programs`]`(p, q)` for `|p| = p_len`, `|q| = q_len`:
/// `p_len + q_len + min(E_MIX + 1 + h(p_len), E_MIX_TAIL + 1 + h(q_len))`
/// where `h(n) = 2|bin(n)| + 1` is the level-2 header length.
pub fn mix_length(p_len: u64, q_len: u64) -> u64 {
    let head = E_MIX + 1 + level2_header_len(p_len);
    let tail = E_MIX_TAIL + 1 + level2_header_len(q_len);
    p_len + q_len + head.min(tail)
}

/// Merges a program `p` for `y` with a conditional program `q` for `x` given
/// `y` into one program for `x`. The shorter component gets the length
/// header, so the overhead is logarithmic in `min(|p|, |q|)`.
pub fn mix_programs(p: &BitString, q: &BitString) -> BitString {
    let head = E_MIX + 1 + level2_header_len(p.len() as u64);
    let tail = E_MIX_TAIL + 1 + level2_header_len(q.len() as u64);
    if head <= tail {
        wrap_program(E_MIX, &encode_pair(PairLevel::Two, p, q))
    } else {
        wrap_program(E_MIX_TAIL, &encode_pair_tail_counted(p, q))
    }
}

/// `K̂(y) − K̂(y | x)`, reported with both terms.
///
/// Both terms are upper bounds, so their difference is a heuristic and
/// bounds the algorithmic information in neither direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfoEstimate {
    pub value: i64,
    pub k_y: ComplexityEstimate,
    pub k_y_given_x: ComplexityEstimate,
}

pub fn info_estimate(
    x: &BitString,
    y: &BitString,
    horizon: u64,
) -> Result<InfoEstimate, EstimateError> {
    let k_y = estimate_k(y, horizon)?;
    let k_y_given_x = estimate_k_cond(y, x, horizon)?;
    Ok(InfoEstimate {
        value: k_y.bound as i64 - k_y_given_x.bound as i64,
        k_y,
        k_y_given_x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;
    use crate::machine::{universal_run, ExecBudget, E_FLIP, E_ID, E_SND};

    #[test]
    fn identity_bound() {
        for x in ["", "0", "1011", "0000000111"] {
            let x = bits(x);
            let est = estimate_k(&x, 64).unwrap();
            assert!(est.bound <= x.len() as u64 + E_ID + 1);
            assert!(est.replays());
        }
    }

    #[test]
    fn empty_string_has_one_bit_program() {
        let est = estimate_k(&bits(""), 5).unwrap();
        assert_eq!(est.witness, bits("1"));
    }

    #[test]
    fn zero_horizon_finds_nothing() {
        assert_eq!(
            estimate_k(&bits("01"), 0),
            Err(EstimateError::NotFound { horizon: 0 })
        );
    }

    #[test]
    fn long_zero_runs_compress() {
        // zeros machine: wrap(3, bin 32) has 4 + 6 bits
        let x = BitString::zeros(32);
        let est = estimate_k(&x, 64).unwrap();
        assert!(est.bound <= 10, "bound {}", est.bound);
        assert!(est.replays());
    }

    #[test]
    fn conditional_projection_bound() {
        let y = bits("110100");
        let est = estimate_k_cond(&y, &y, 64).unwrap();
        assert!(est.bound <= E_SND + 1);
        assert!(est.replays());
    }

    #[test]
    fn pair_is_plain_of_code() {
        let (x, y) = (bits("10"), bits("0"));
        let pair = estimate_k_pair(&x, &y, 64).unwrap();
        let plain = estimate_k(&encode_pair(PairLevel::Two, &x, &y), 64).unwrap();
        assert_eq!(pair.bound, plain.bound);
        assert_eq!(pair.witness, plain.witness);
        assert!(estimate_k_pair(&y, &x, 64).is_ok());
    }

    #[test]
    fn compose_with_flip() {
        let p = wrap_program(E_ID, &bits("1100"));
        let q = compose_program(E_FLIP, &p);
        assert_eq!(q.len() as u64, p.len() as u64 + E_FLIP + E_COMP + 2);
        let out = universal_run(&q, ExecBudget::steps(100));
        assert!(out.halted_with(&bits("0011")));
    }

    #[test]
    fn mix_picks_shorter_header() {
        let long = BitString::ones(40);
        let short = bits("1");
        assert_eq!(mix_programs(&long, &short).len() as u64, mix_length(40, 1));
        assert_eq!(parse_index(&mix_programs(&long, &short)), E_MIX_TAIL);
        assert_eq!(parse_index(&mix_programs(&short, &long)), E_MIX);
    }

    fn parse_index(q: &BitString) -> u64 {
        crate::machine::parse_program(q).unwrap().0
    }

    #[test]
    fn info_on_identical_strings() {
        for x in ["1", "01", "1101"] {
            let x = bits(x);
            let info = info_estimate(&x, &x, 64).unwrap();
            assert!(info.value >= 0);
            assert_eq!(
                info.value,
                info.k_y.bound as i64 - info.k_y_given_x.bound as i64
            );
        }
    }
}
