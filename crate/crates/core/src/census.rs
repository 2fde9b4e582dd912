//! Incompressibility counting.
//!
//! A census over all `2^n` strings of length `n` counts those for which a
//! witness shorter than `n − c` turns up within the horizon. Since witnesses
//! only overstate complexity, the count never exceeds the number of programs
//! shorter than `n − c`, i.e. `2^(n−c) − 1`, at any horizon.

use std::collections::HashSet;

use serde::Serialize;

use crate::complexity::EstimateError;
use crate::dovetail::halting_of_len;
use crate::error::{Error, Result};
use crate::prefix::{estimate_h, framed_len};
use crate::randomness::SequenceSource;

/// Largest string length a census will enumerate.
pub const MAX_CENSUS_LEN: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: u32,
    pub c: u32,
    pub horizon: u64,
    /// Strings of length `n` with a verified witness shorter than `n − c`.
    pub flagged: u64,
    pub total: u64,
    /// Witnesses were framed prefix programs rather than plain ones.
    pub prefix: bool,
}

impl CensusReport {
    /// `2^(n−c) − 1`.
    pub fn flag_limit(&self) -> u64 {
        (1u64 << (self.n - self.c)) - 1
    }
}

fn check_args(n: u32, c: u32) -> Result<()> {
    if n > MAX_CENSUS_LEN {
        return Err(Error::ResourceRefused(format!(
            "census length {n} exceeds the limit {MAX_CENSUS_LEN}"
        )));
    }
    if c > n {
        return Err(Error::Precondition(format!(
            "margin c = {c} exceeds n = {n}"
        )));
    }
    Ok(())
}

/// Census with plain witnesses: programs `q` with `|q| < n − c`, `|q| ≤ horizon`.
pub fn census(n: u32, c: u32, horizon: u64) -> Result<CensusReport> {
    check_args(n, c)?;
    let below = u64::from(n - c).min(horizon.saturating_add(1));
    let mut outputs = HashSet::new();
    for len in 0..below {
        for ev in halting_of_len(len as usize, horizon) {
            if ev.output.len() == n as usize {
                outputs.insert(ev.output);
            }
        }
    }
    Ok(CensusReport {
        n,
        c,
        horizon,
        flagged: outputs.len() as u64,
        total: 1 << n,
        prefix: false,
    })
}

/// Census with framed witnesses: frames `w` with `|w| < n − c`, `|w| ≤ horizon`.
pub fn census_prefix(n: u32, c: u32, horizon: u64) -> Result<CensusReport> {
    check_args(n, c)?;
    let limit = u64::from(n - c).min(horizon.saturating_add(1));
    let mut outputs = HashSet::new();
    for len in (0..).take_while(|&l| framed_len(l) < limit) {
        for ev in halting_of_len(len as usize, horizon) {
            if ev.output.len() == n as usize {
                outputs.insert(ev.output);
            }
        }
    }
    Ok(CensusReport {
        n,
        c,
        horizon,
        flagged: outputs.len() as u64,
        total: 1 << n,
        prefix: true,
    })
}

/// For `n = 1..=n_max`, the value `n − Ĥ(a_0 … a_{n−1})`, or `None` where no
/// framed witness exists at the horizon. Since `Ĥ` only overstates `H`, each
/// value understates the prefix deficiency `n − H`.
pub fn deficiency_profile(
    source: &SequenceSource,
    n_max: usize,
    horizon: u64,
) -> Result<Vec<Option<i64>>> {
    let prefix = source.prefix(n_max)?;
    (1..=n_max)
        .map(|n| match estimate_h(&prefix.prefix(n), horizon) {
            Ok(est) => Ok(Some(n as i64 - est.bound as i64)),
            Err(EstimateError::NotFound { .. }) => Ok(None),
            Err(e @ EstimateError::Refused { .. }) => Err(Error::ResourceRefused(e.to_string())),
        })
        .collect()
}
