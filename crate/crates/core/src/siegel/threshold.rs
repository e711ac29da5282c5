//! Smallest `|j|` (equivalently largest `I`) for which the `2k` solution bound applies.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::constants::{exponent_e, theta};
use crate::elliptic::arith::omega;
use crate::error::{Error, Result};

/// Which hypothesis fixes `j_min`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Binding {
    /// `h < j^2 / 4`.
    HalfSquare,
    /// `h < C2 j^E2`.
    Siegel,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdReport {
    pub k: u32,
    pub h: u64,
    pub j_min: f64,
    /// `-12 j_min^4`; forms with `J = 0` and `I < i_max` qualify.
    pub i_max: f64,
    pub bound: u32,
    pub binding: Binding,
    /// Both hypotheses are strict, so `j_min` and `i_max` are excluded.
    pub open_boundary: bool,
}

/// `j_min = max(2 sqrt(h), (h / C2)^(1/E2))` for `E2 = E2(2,k,0)`, `C2 = 2^Theta2(2,k,0)`.
pub fn threshold(k: u32, h: u64) -> Result<ThresholdReport> {
    if h == 0 {
        return Err(Error::Domain("h must be at least 1"));
    }
    let e2 = exponent_e(2, 2, k, 0)?.to_f64().unwrap_or(f64::NAN);
    let t2 = theta(2, 2, k, 0)?.to_f64();
    let lh = libm::log2(h as f64);
    let half = 1.0 + lh / 2.0;
    let siegel = (lh - t2) / e2;
    let (log_j, binding) = if siegel > half { (siegel, Binding::Siegel) } else { (half, Binding::HalfSquare) };
    let j_min = libm::exp2(log_j);
    Ok(ThresholdReport {
        k,
        h,
        j_min,
        i_max: -12.0 * libm::exp2(4.0 * log_j),
        bound: 2 * k,
        binding,
        open_boundary: true,
    })
}

/// Smallest `2k`, `3 <= k <= k_max`, whose threshold admits `I`.
pub fn solution_count_bound(i: &BigInt, h: u64, k_max: u32) -> Result<Option<u32>> {
    if i.sign() != num_bigint::Sign::Minus {
        return Err(Error::Domain("I must be negative"));
    }
    if k_max < 3 {
        return Err(Error::Domain("k_max must be at least 3"));
    }
    let i = i.to_f64().unwrap_or(f64::NEG_INFINITY);
    for k in 3..=k_max {
        if i < threshold(k, h)?.i_max {
            return Ok(Some(2 * k));
        }
    }
    Ok(None)
}

/// `8 * 4^omega(h)`.
pub fn bombieri_schmidt_count(h: u64) -> Result<u64> {
    if h == 0 {
        return Err(Error::Domain("h must be at least 1"));
    }
    Ok(8 << (2 * omega(h)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4() {
        let r = threshold(4, 1).unwrap();
        assert!(libm::fabs(r.j_min - 3.8367) < 1e-3, "{r:?}");
        assert!(libm::fabs(r.i_max + 2600.5) < 0.5, "{r:?}");
        assert_eq!(r.binding, Binding::Siegel);
        assert_eq!(r.bound, 8);
    }

    #[test]
    fn k3() {
        let r = threshold(3, 1).unwrap();
        assert!(r.i_max < -2.4e7 && r.i_max > -2.5e7, "{r:?}");
        assert!(threshold(4, 0).is_err());
        assert!(threshold(2, 1).is_err());
    }

    #[test]
    fn thresholds_relax_with_k() {
        let mut prev = threshold(3, 1).unwrap().i_max;
        for k in 4..=12 {
            let cur = threshold(k, 1).unwrap().i_max;
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn half_square_can_bind() {
        let r = threshold(12, 1 << 20).unwrap();
        let direct = 2.0 * libm::sqrt((1u64 << 20) as f64);
        assert!(r.j_min >= direct);
    }

    #[test]
    fn counts() {
        let b = |i: i64| solution_count_bound(&BigInt::from(i), 1, 10).unwrap();
        assert_eq!(b(-300_000_000), Some(6));
        assert_eq!(b(-2700), Some(8));
        assert_eq!(b(-12), None);
        assert!(solution_count_bound(&BigInt::from(5), 1, 10).is_err());
        assert_eq!(bombieri_schmidt_count(1).unwrap(), 8);
        assert_eq!(bombieri_schmidt_count(6).unwrap(), 128);
        assert_eq!(bombieri_schmidt_count(30).unwrap(), 512);
    }
}
