//! Continued-fraction convergents of a number known only through an enclosure.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::roots::RootEnclosure;

/// Convergents `(p, q)` with `1 <= q <= q_max` of the real number in `enc`.
///
/// For a non-degenerate enclosure the number is assumed irrational and to lie
/// strictly inside. The partial quotients of both endpoints are followed in
/// lockstep; once they disagree, the remaining convergents are certified only
/// if the next denominator provably exceeds `q_max`.
pub fn convergents(enc: &RootEnclosure, q_max: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    if enc.is_exact() {
        return Ok(rational_convergents(&enc.lo, q_max));
    }
    let mut out = Vec::new();
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut lo = enc.lo.clone();
    let mut hi = enc.hi.clone();
    loop {
        let a_lo = lo.floor();
        let a_hi = hi.floor();
        let lo_frac = &lo - &a_lo;
        if a_lo == a_hi && !lo_frac.is_zero() {
            let a = a_lo.to_integer();
            let p = &a * &p1 + &p0;
            let q = &a * &q1 + &q0;
            if &q > q_max {
                return Ok(out);
            }
            out.push((p.clone(), q.clone()));
            (p0, q0, p1, q1) = (p1, q1, p, q);
            let next_lo = (&hi - &a_hi).recip();
            let next_hi = lo_frac.recip();
            lo = next_lo;
            hi = next_hi;
            continue;
        }
        // The next partial quotient is only known to be at least `a_lo`
        // (at least 1 after the first step).
        let mut a_min = a_lo.to_integer();
        if !q1.is_zero() && a_min < BigInt::one() {
            a_min = BigInt::one();
        }
        let q_next = if q1.is_zero() { BigInt::one() } else { &a_min * &q1 + &q0 };
        if &q_next > q_max {
            return Ok(out);
        }
        return Err(Error::PrecisionExhausted);
    }
}

fn rational_convergents(x: &BigRational, q_max: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut x = x.clone();
    loop {
        let a = x.floor().to_integer();
        let p = &a * &p1 + &p0;
        let q = &a * &q1 + &q0;
        if &q > q_max {
            break;
        }
        out.push((p.clone(), q.clone()));
        (p0, q0, p1, q1) = (p1, q1, p, q);
        let frac = &x - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        x = frac.recip();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use crate::roots::real_roots;

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(p, q)| (BigInt::from(p), BigInt::from(q))).collect()
    }

    #[test]
    fn sqrt_two() {
        let roots = real_roots(&IntPoly::from_i64(&[-2, 0, 1]), 64);
        let c = convergents(&roots[1], &BigInt::from(50)).unwrap();
        assert_eq!(c, pairs(&[(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)]));
    }

    #[test]
    fn exact_integer() {
        let enc = RootEnclosure::exact(BigRational::from_integer(BigInt::from(2)));
        assert_eq!(convergents(&enc, &BigInt::from(10)).unwrap(), pairs(&[(2, 1)]));
    }

    #[test]
    fn fourth_root_of_two() {
        let roots = real_roots(&IntPoly::from_i64(&[-2, 0, 0, 0, 1]), 64);
        let c = convergents(&roots[1], &BigInt::from(100)).unwrap();
        assert!(c.contains(&(BigInt::from(6), BigInt::from(5))));
        assert_eq!(c[..3], pairs(&[(1, 1), (6, 5), (19, 16)])[..]);
    }

    #[test]
    fn negative_root() {
        let roots = real_roots(&IntPoly::from_i64(&[-2, 0, 1]), 64);
        let c = convergents(&roots[0], &BigInt::from(30)).unwrap();
        assert_eq!(c, pairs(&[(-2, 1), (-1, 1), (-3, 2), (-7, 5), (-17, 12), (-41, 29)]));
    }

    #[test]
    fn too_wide_enclosure() {
        let roots = real_roots(&IntPoly::from_i64(&[-2, 0, 1]), 8);
        assert_eq!(convergents(&roots[1], &BigInt::from(1_000_000)), Err(Error::PrecisionExhausted));
    }
}
