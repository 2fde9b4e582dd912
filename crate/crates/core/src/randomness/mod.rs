//! Tests on infinite bit sequences, run on finite prefixes.
//!
//! The frequency and selection tests check the von Mises conditions, the LIL
//! statistic measures how far partial sums stray from `n/2`, and
//! [`mltest`] evaluates finite stages of Martin-Löf tests. No finite prefix
//! can certify a sequence random; these only ever find evidence against.

mod mltest;
mod selection;
mod source;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

pub use mltest::{cylinder_measure, ml_test_eval, FiniteMLTest, LevelVerdict, Verdict};
pub use selection::{select_subsequence, SelectionRule};
pub use source::{SequenceSource, SourceIter, SourceKind};

/// Number of ones among the first `n` bits, and that count over `n`.
pub fn frequency_stats(source: &SequenceSource, n: usize) -> Result<(u64, Ratio<u64>)> {
    if n == 0 {
        return Err(Error::Precondition("frequency needs n ≥ 1".into()));
    }
    let s = source.prefix(n)?.count_ones() as u64;
    Ok((s, Ratio::new(s, n as u64)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LilStatistic {
    pub n: u64,
    pub s_n: u64,
    /// `(S_n − n/2) / √(n/4)`.
    pub s_star: f64,
    /// `s_star / √(2 ln ln n)`.
    pub ratio: f64,
    /// Always `"ln"`; the iterated logarithm is natural.
    pub log: &'static str,
}

/// `S_n*` is formed as `(2 S_n − n) / √n`, which keeps the numerator exact.
pub fn lil_from_count(s_n: u64, n: u64) -> Result<LilStatistic> {
    if n < 16 {
        return Err(Error::Precondition(format!("LIL needs n ≥ 16, got {n}")));
    }
    let centered = 2 * i128::from(s_n) - i128::from(n);
    let s_star = centered as f64 / (n as f64).sqrt();
    let ratio = s_star / (2.0 * (n as f64).ln().ln()).sqrt();
    Ok(LilStatistic {
        n,
        s_n,
        s_star,
        ratio,
        log: "ln",
    })
}

pub fn lil_statistic(source: &SequenceSource, n: usize) -> Result<LilStatistic> {
    if n < 16 {
        return Err(Error::Precondition(format!("LIL needs n ≥ 16, got {n}")));
    }
    let (s, _) = frequency_stats(source, n)?;
    lil_from_count(s, n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn src(s: &str) -> SequenceSource {
        s.parse().unwrap()
    }

    #[test]
    fn frequencies() {
        assert_eq!(
            frequency_stats(&src("alternating"), 100).unwrap(),
            (50, Ratio::new(1, 2))
        );
        assert_eq!(
            frequency_stats(&src("zeros"), 37).unwrap(),
            (0, Ratio::new(0, 1))
        );
        assert!(frequency_stats(&src("zeros"), 0).is_err());
    }

    #[test]
    fn prng_golden() {
        let (s, _) = frequency_stats(&src("prng:42"), 1_000_000).unwrap();
        assert_eq!(s, PRNG_42_ONES);
        // independent count straight from the generator's words
        use rand::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let direct: u64 = (0..1_000_000 / 64)
            .map(|_| u64::from(rng.next_u64().count_ones()))
            .sum();
        assert_eq!(direct, PRNG_42_ONES);
    }

    const PRNG_42_ONES: u64 = 499_854;

    #[test]
    fn lil_examples() {
        let l = lil_statistic(&src("ones"), 100).unwrap();
        assert_eq!(l.s_star, 10.0);
        let expected = 10.0 / (2.0 * 100f64.ln().ln()).sqrt();
        assert!((l.ratio - expected).abs() <= 1e-12 * expected.abs());
        assert_eq!(lil_statistic(&src("alternating"), 64).unwrap().s_star, 0.0);
        assert!(lil_statistic(&src("ones"), 15).is_err());
    }
}
