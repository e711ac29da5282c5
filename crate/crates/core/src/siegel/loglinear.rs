//! Exact values `alpha + beta * log2(3)` with certified numeric enclosures.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub const LOG2_3: f64 = 1.584_962_500_721_156_2;

/// Default enclosure of `log2(3)`: `[1.5849625007, 1.5849625008]`.
pub fn default_log2_3() -> (BigRational, BigRational) {
    (q(15_849_625_007, 10_000_000_000), q(15_849_625_008, 10_000_000_000))
}

/// Bounds for `2 atanh(x) = ln((1 + x)/(1 - x))`, `0 < x < 1`, from `terms` series terms.
fn two_atanh(x: &BigRational, terms: u32) -> (BigRational, BigRational) {
    let x2 = x * x;
    let mut pow = x.clone();
    let mut sum = BigRational::zero();
    for k in 0..terms {
        sum += &pow / BigInt::from(2 * k + 1);
        pow = &pow * &x2;
    }
    // remaining terms are at most x^(2n+1) / ((2n+1)(1 - x^2))
    let tail = &pow / (BigRational::from_integer(BigInt::from(2 * terms + 1)) * (BigRational::one() - &x2));
    let two = BigInt::from(2);
    (&sum * &two, (sum + tail) * two)
}

/// A rational enclosure of `log2(3)` of width about `2^-bits`.
///
/// Uses `ln 2 = 2 atanh(1/3)` and `ln 3 = ln 2 + 2 atanh(1/5)`.
pub fn log2_3_enclosure(bits: u32) -> (BigRational, BigRational) {
    let terms = bits / 3 + 4;
    let (ln2_lo, ln2_hi) = two_atanh(&q(1, 3), terms);
    let (t_lo, t_hi) = two_atanh(&q(1, 5), terms);
    let ln3_lo = &ln2_lo + t_lo;
    let ln3_hi = &ln2_hi + t_hi;
    (ln3_lo / ln2_hi, ln3_hi / ln2_lo)
}

/// `alpha + beta * l` with `l = log2(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LogLinearValue {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl LogLinearValue {
    pub fn new(alpha: BigRational, beta: BigRational) -> Self {
        Self { alpha, beta }
    }

    pub fn rational(alpha: BigRational) -> Self {
        Self { alpha, beta: BigRational::zero() }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        Self::new(BigRational::from_integer(alpha.into()), BigRational::from_integer(beta.into()))
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.alpha * c, &self.beta * c)
    }

    /// Exact bounds given an enclosure `[l_lo, l_hi]` of `log2(3)`.
    pub fn bounds_with(&self, l: &(BigRational, BigRational)) -> (BigRational, BigRational) {
        let a = &self.alpha + &self.beta * &l.0;
        let b = &self.alpha + &self.beta * &l.1;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Exact bounds using the default enclosure of `log2(3)`.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        self.bounds_with(&default_log2_3())
    }

    /// Outward-rounded `f64` bounds using the default enclosure.
    pub fn numeric(&self) -> (f64, f64) {
        let (lo, hi) = self.bounds();
        (round_down(&lo), round_up(&hi))
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.alpha.to_f64().unwrap_or(f64::NAN);
        let b = self.beta.to_f64().unwrap_or(f64::NAN);
        a + b * LOG2_3
    }

    /// Certified sign, refining the enclosure of `log2(3)` until it separates the value from 0.
    pub fn signum(&self) -> Ordering {
        if self.beta.is_zero() {
            return self.alpha.cmp(&BigRational::zero());
        }
        // log2(3) is irrational, so a nonzero beta gives a nonzero value
        let mut enc = default_log2_3();
        let mut bits = 64;
        loop {
            let (lo, hi) = self.bounds_with(&enc);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
            enc = log2_3_enclosure(bits);
        }
    }
}

fn nudge(x: f64, up: bool) -> f64 {
    let eps = libm::fabs(x) * 4.0 * f64::EPSILON + f64::MIN_POSITIVE;
    if up {
        x + eps
    } else {
        x - eps
    }
}

pub(crate) fn round_down(x: &BigRational) -> f64 {
    nudge(x.to_f64().unwrap_or(f64::NEG_INFINITY), false)
}

pub(crate) fn round_up(x: &BigRational) -> f64 {
    nudge(x.to_f64().unwrap_or(f64::INFINITY), true)
}

impl Add for &LogLinearValue {
    type Output = LogLinearValue;
    fn add(self, o: &LogLinearValue) -> LogLinearValue {
        LogLinearValue::new(&self.alpha + &o.alpha, &self.beta + &o.beta)
    }
}

impl Sub for &LogLinearValue {
    type Output = LogLinearValue;
    fn sub(self, o: &LogLinearValue) -> LogLinearValue {
        LogLinearValue::new(&self.alpha - &o.alpha, &self.beta - &o.beta)
    }
}

impl Neg for &LogLinearValue {
    type Output = LogLinearValue;
    fn neg(self) -> LogLinearValue {
        LogLinearValue::new(-&self.alpha, -&self.beta)
    }
}

impl Mul<&BigRational> for &LogLinearValue {
    type Output = LogLinearValue;
    fn mul(self, c: &BigRational) -> LogLinearValue {
        self.scale(c)
    }
}

impl fmt::Display for LogLinearValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*log2(3)", self.alpha, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_enclosure_is_inside_default() {
        let (lo, hi) = log2_3_enclosure(128);
        let (dlo, dhi) = default_log2_3();
        assert!(dlo < lo && hi < dhi);
        assert!(&hi - &lo < q(1, 1 << 40));
        let mid = ((lo + hi) / BigInt::from(2)).to_f64().unwrap();
        assert!(libm::fabs(mid - 1.584962500721156) < 1e-15);
    }

    #[test]
    fn certified_signs() {
        // 3 l - 4.75488750216 is about 1e-12 > 0
        let tiny = LogLinearValue::new(-q(475_488_750_216, 100_000_000_000), BigRational::from_integer(3.into()));
        assert_eq!(tiny.signum(), Ordering::Greater);
        assert_eq!((-&tiny).signum(), Ordering::Less);
        assert_eq!(LogLinearValue::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn numeric_bounds_bracket() {
        let v = LogLinearValue::from_ints(-6066, 108);
        let (lo, hi) = v.numeric();
        let x = -6066.0 + 108.0 * 1.584962500721156;
        assert!(lo < x && x < hi);
    }
}
