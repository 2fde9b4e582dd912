//! Exact non-negative dyadic rationals `num / 2^exp`.
//!
//! Measure sums (Kraft sums, Ω lower bounds, cylinder measures) are kept in
//! this form so that digit claims are exact. There is no floating point on
//! these paths; [`Dyadic::to_f64`] exists for display only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Normalized: either `num` is odd, or the value is zero with `exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: BigUint,
    exp: u64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self {
            num: BigUint::one(),
            exp: 0,
        }
    }

    /// `2^-k`.
    pub fn pow2_neg(k: u64) -> Self {
        Self {
            num: BigUint::one(),
            exp: k,
        }
    }

    pub fn new(num: BigUint, exp: u64) -> Self {
        let mut d = Self { num, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp);
        if tz > 0 {
            self.num >>= tz;
            self.exp -= tz;
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    /// Exponent of the power-of-two denominator.
    pub fn denominator_exp(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn numerator_at(&self, exp: u64) -> BigUint {
        debug_assert!(exp >= self.exp);
        &self.num << (exp - self.exp)
    }

    /// First `k` binary digits after the point, i.e. `⌊value·2^k⌋ mod 2^k`
    /// written MSB-first. Integer part is dropped.
    pub fn binary_digits(&self, k: usize) -> String {
        let k64 = k as u64;
        let scaled = if k64 >= self.exp {
            &self.num << (k64 - self.exp)
        } else {
            &self.num >> (self.exp - k64)
        };
        (0..k)
            .map(|i| {
                if scaled.bit(k64 - 1 - i as u64) {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    pub fn to_f64(&self) -> f64 {
        // Lossy; display only.
        let n: f64 = self.num.to_string().parse().unwrap_or(f64::INFINITY);
        n * 2f64.powi(-(self.exp.min(i32::MAX as u64) as i32))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.numerator_at(exp).cmp(&other.numerator_at(exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        let exp = self.exp.max(rhs.exp);
        self.num = self.numerator_at(exp) + rhs.numerator_at(exp);
        self.exp = exp;
        self.normalize();
    }
}

impl Add<&Dyadic> for Dyadic {
    type Output = Dyadic;

    fn add(mut self, rhs: &Dyadic) -> Dyadic {
        self += rhs;
        self
    }
}

impl std::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Self {
        iter.fold(Dyadic::zero(), |acc, d| acc + &d)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.num, self.exp)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(num: u64, exp: u64) -> Dyadic {
        Dyadic::new(BigUint::from(num), exp)
    }

    #[test]
    fn normalizes() {
        assert_eq!(d(4, 3), d(1, 1));
        assert_eq!(d(0, 9), Dyadic::zero());
        assert_eq!(d(8, 0).denominator_exp(), 0);
    }

    #[test]
    fn addition_and_order() {
        let s = Dyadic::pow2_neg(1) + &Dyadic::pow2_neg(2) + &Dyadic::pow2_neg(2);
        assert_eq!(s, Dyadic::one());
        assert!(Dyadic::pow2_neg(3) < Dyadic::pow2_neg(2));
        assert!(d(3, 2) > Dyadic::pow2_neg(1));
        let total: Dyadic = [1u64, 2, 3].iter().map(|&k| Dyadic::pow2_neg(k)).sum();
        assert_eq!(total, d(7, 3));
    }

    #[test]
    fn digits() {
        assert_eq!(d(5, 3).binary_digits(3), "101");
        assert_eq!(d(5, 3).binary_digits(5), "10100");
        assert_eq!(d(5, 3).binary_digits(2), "10");
        assert_eq!(Dyadic::zero().binary_digits(4), "0000");
        assert_eq!(Dyadic::one().binary_digits(2), "00");
        assert_eq!(d(5, 3).to_f64(), 0.625);
    }
}
