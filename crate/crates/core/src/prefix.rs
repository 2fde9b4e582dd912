//! The prefix-free lift `U'(pad(bin|q|) 1 q) = U(q)`, prefix complexity
//! estimates, Kraft sums and lower bounds on the lifted machine's Ω.
//!
//! Only canonical frames (numeral without leading zeros) are in the domain of
//! `U'`, and a frame fixes its own total length, so no halting program of
//! `U'` is a proper prefix of another. Framing a program of length `n ≥ 1`
//! adds `2⌊log₂ n⌋ + 3` bits, which gives, at any common horizon,
//! `K̂(x) < Ĥ(x) ≤ K̂(x) + 2⌊log₂ K̂(x)⌋ + 3` (the right side whenever the
//! framed plain witness fits the horizon).
//!
//! All sums are exact [`Dyadic`] values.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitString;
use crate::codec::{encode_pair, level2_header_len, PairLevel};
use crate::complexity::{
    shortest_program, ComplexityEstimate, Estimate, EstimateError, EstimateKind,
};
use crate::dyadic::Dyadic;
use crate::machine::{universal_exec, ExecBudget, RunOutcome, DEFAULT_TAPE_CELLS};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefixProgram {
    pub framed: BitString,
    pub inner: BitString,
}

/// Length of the frame around a program of length `n`.
pub fn framed_len(n: u64) -> u64 {
    n + level2_header_len(n)
}

pub fn lift_to_prefix(q: &BitString) -> PrefixProgram {
    PrefixProgram {
        framed: encode_pair(PairLevel::Two, q, &BitString::new()),
        inner: q.clone(),
    }
}

/// The inner program of a canonical frame, or `None`.
pub fn parse_framed(w: &BitString) -> Option<BitString> {
    let (q, rest) = crate::codec::decode_pair(PairLevel::Two, w).ok()?;
    (rest.is_empty() && framed_len(q.len() as u64) == w.len() as u64).then_some(q)
}

pub(crate) fn prefix_exec(w: &BitString, max_steps: u64) -> RunOutcome {
    match parse_framed(w) {
        Some(q) => universal_exec(&q, max_steps, DEFAULT_TAPE_CELLS),
        None => RunOutcome::StillRunning { steps: max_steps },
    }
}

/// Runs a framed program; anything that is not a canonical frame diverges.
pub fn prefix_universal_run(w: &BitString, budget: ExecBudget) -> RunOutcome {
    match parse_framed(w) {
        Some(q) => universal_exec(&q, budget.max_steps(), budget.max_tape_cells()),
        None => RunOutcome::StillRunning {
            steps: budget.max_steps(),
        },
    }
}

/// Longest inner program whose frame fits in `horizon` bits.
fn max_inner_len(horizon: u64) -> Option<usize> {
    (0..=horizon)
        .take_while(|&n| framed_len(n) <= horizon)
        .last()
        .map(|n| n as usize)
}

/// Staged prefix complexity: the shortest frame halting on `x` within `horizon`
/// steps, with frame length `≤ horizon`.
pub fn estimate_h(x: &BitString, horizon: u64) -> Estimate {
    let Some(max_len) = max_inner_len(horizon) else {
        return Err(EstimateError::NotFound { horizon });
    };
    // framing is monotone in length, so the identity witness caps the search
    let max_len = max_len.min(x.len() + 1);
    let inner = shortest_program(max_len, horizon, |q| {
        universal_exec(q, horizon, DEFAULT_TAPE_CELLS).halted_with(x)
    })?;
    let framed = lift_to_prefix(&inner).framed;
    Ok(ComplexityEstimate {
        target: x.clone(),
        bound: framed.len() as u64,
        witness: framed,
        horizon,
        kind: EstimateKind::Prefix,
    })
}

/// Number of framed programs with inner length `len` halting within `max_steps`.
fn halting_count(len: usize, max_steps: u64) -> u64 {
    (0..1u64 << len)
        .into_par_iter()
        .filter(|&i| {
            universal_exec(
                &BitString::from_index(i, len),
                max_steps,
                DEFAULT_TAPE_CELLS,
            )
            .is_halted()
        })
        .count() as u64
}

fn kraft_partial(horizon: u64) -> (Dyadic, u64) {
    let Some(max_len) = max_inner_len(horizon) else {
        return (Dyadic::zero(), 0);
    };
    if horizon == 0 {
        return (Dyadic::zero(), 0);
    }
    let mut sum = Dyadic::zero();
    let mut count = 0;
    for len in 0..=max_len {
        let c = halting_count(len, horizon);
        if c > 0 {
            let term = Dyadic::new(c.into(), framed_len(len as u64));
            sum += &term;
            count += c;
        }
    }
    (sum, count)
}

/// `Σ 2^-|w|` over frames `w` with `|w| ≤ horizon` halting within `horizon` steps.
pub fn kraft_sum(horizon: u64) -> Dyadic {
    kraft_partial(horizon).0
}

/// `Σ 2^-|w|` over an explicit word set, provided it is prefix-free.
/// Otherwise returns the first offending pair `(shorter, longer)`.
pub fn kraft_sum_of(words: &[BitString]) -> Result<Dyadic, (BitString, BitString)> {
    let mut sorted = words.to_vec();
    sorted.sort();
    sorted.dedup();
    for pair in sorted.windows(2) {
        if pair[0].is_prefix_of(&pair[1]) {
            return Err((pair[0].clone(), pair[1].clone()));
        }
    }
    Ok(sorted
        .iter()
        .map(|w| Dyadic::pow2_neg(w.len() as u64))
        .sum())
}

/// A lower bound on the halting probability of the lifted machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaEstimate {
    pub value: Dyadic,
    pub horizon: u64,
    pub contributing: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaJson {
    pub value_num: String,
    pub value_den_pow2: u64,
    pub contributing: u64,
    pub horizon: u64,
}

impl OmegaEstimate {
    /// Leading binary digits of the bound. They are digits of Ω only once
    /// they have stopped changing, which no finite horizon can certify.
    pub fn digits(&self, k: usize) -> String {
        self.value.binary_digits(k)
    }

    pub fn to_json(&self) -> OmegaJson {
        OmegaJson {
            value_num: self.value.numerator().to_string(),
            value_den_pow2: self.value.denominator_exp(),
            contributing: self.contributing,
            horizon: self.horizon,
        }
    }
}

pub fn omega_estimate(horizon: u64) -> OmegaEstimate {
    let (value, contributing) = kraft_partial(horizon);
    OmegaEstimate {
        value,
        horizon,
        contributing,
    }
}
