//! Exact real-root isolation by Sturm sequences and dyadic bisection.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{sturm_variations, IntPoly};

/// A closed interval `[lo, hi]` with rational endpoints.
///
/// Enclosures returned by the isolation routines contain exactly one real
/// root; either `lo == hi` is that root, or the root lies strictly inside and
/// the polynomial has opposite nonzero signs at the two ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootEnclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn exact(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Closed intervals overlap.
    pub fn overlaps(&self, other: &RootEnclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `2^k` with every real root of `p` in `(-2^k, 2^k)`.
fn cauchy_exponent(p: &IntPoly) -> u64 {
    let lead = p.leading().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    let q = max / lead + BigInt::from(2);
    q.bits()
}

/// Coarse isolating enclosures of the distinct real roots of `p`, ascending.
///
/// Works on the squarefree part, so repeated roots are reported once.
pub fn isolate(p: &IntPoly) -> Vec<RootEnclosure> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let s = p.squarefree_part();
    let chain = s.sturm_chain();
    let k = cauchy_exponent(&s);
    let bound = BigRational::from_integer(pow2(k));
    let lo = -bound.clone();
    let mut out = Vec::new();
    let mut stack = alloc::vec![(lo, bound)];
    while let Some((a, b)) = stack.pop() {
        let count = variations(&chain, &a) - variations(&chain, &b);
        if count == 0 {
            continue;
        }
        let sa = s.sign_at(&a);
        let sb = s.sign_at(&b);
        if count == 1 {
            if sb == Ordering::Equal {
                out.push(RootEnclosure::exact(b));
                continue;
            }
            if sa != Ordering::Equal {
                out.push(RootEnclosure::new(a, b));
                continue;
            }
        }
        let m = (&a + &b) / BigInt::from(2);
        // roots are counted on half-open intervals (a, b]
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

fn variations(chain: &[IntPoly], x: &BigRational) -> usize {
    sturm_variations(chain, x.numer(), x.denom())
}

/// Shrinks an isolating enclosure of a root of the squarefree `p` to width `<= max_width`.
pub fn refine(p: &IntPoly, r: &RootEnclosure, max_width: &BigRational) -> RootEnclosure {
    if r.is_exact() {
        return r.clone();
    }
    let mut lo = r.lo.clone();
    let mut hi = r.hi.clone();
    let s_lo = p.sign_at(&lo);
    debug_assert!(s_lo != Ordering::Equal);
    let two = BigInt::from(2);
    while &(&hi - &lo) > max_width {
        let m = (&lo + &hi) / &two;
        match p.sign_at(&m) {
            Ordering::Equal => return RootEnclosure::exact(m),
            s if s == s_lo => lo = m,
            _ => hi = m,
        }
    }
    RootEnclosure::new(lo, hi)
}

/// Isolating enclosures of the real roots of `p`, each of width `<= 2^(-bits/2)`.
pub fn real_roots(p: &IntPoly, precision_bits: u32) -> Vec<RootEnclosure> {
    let s = p.squarefree_part();
    let width = BigRational::new(BigInt::one(), pow2(u64::from(precision_bits / 2)));
    isolate(p).iter().map(|r| refine(&s, r, &width)).collect()
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational_in(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi);
    let c = lo.ceil();
    if &c <= hi {
        if c.is_zero() || (lo.is_negative() && hi.is_positive()) {
            return BigRational::zero();
        }
        return if hi.is_negative() { hi.floor() } else { c };
    }
    let a = lo.floor();
    // no integer in [lo, hi], so lo - a > 0
    let inner = simplest_rational_in(&(hi - &a).recip(), &(lo - &a).recip());
    a + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fourth_roots_of_one() {
        let roots = real_roots(&IntPoly::from_i64(&[-1, 0, 0, 0, 1]), 64);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&r(-1, 1)));
        assert!(roots[1].contains(&r(1, 1)));
    }

    #[test]
    fn fourth_roots_of_two() {
        let roots = real_roots(&IntPoly::from_i64(&[-2, 0, 0, 0, 1]), 128);
        assert_eq!(roots.len(), 2);
        let q = 2f64.powf(0.25);
        assert!((roots[1].to_f64() - q).abs() < 1e-15);
        assert!((roots[0].to_f64() + q).abs() < 1e-15);
        assert!(roots[1].width() <= BigRational::new(BigInt::one(), pow2(64)));
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots(&IntPoly::from_i64(&[1, 0, 0, 0, 1]), 64).is_empty());
    }

    #[test]
    fn close_and_repeated_roots() {
        // (10z - 1)(10z - 2)^2 (z - 50)
        let a = IntPoly::from_i64(&[-1, 10]);
        let b = IntPoly::from_i64(&[-2, 10]);
        let c = IntPoly::from_i64(&[-50, 1]);
        let mut coeffs = alloc::vec![BigInt::zero(); 5];
        for (i, x) in a.coeffs().iter().enumerate() {
            for (j, y) in b.coeffs().iter().enumerate() {
                for (k, z) in b.coeffs().iter().enumerate() {
                    for (l, w) in c.coeffs().iter().enumerate() {
                        coeffs[i + j + k + l] += x * y * z * w;
                    }
                }
            }
        }
        let p = IntPoly::new(coeffs);
        let roots = real_roots(&p, 80);
        assert_eq!(roots.len(), 3);
        assert!(roots[0].contains(&r(1, 10)));
        assert!(roots[1].contains(&r(1, 5)));
        assert!(roots[2].contains(&r(50, 1)));
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_rational_in(&r(13, 10), &r(17, 10)), r(3, 2));
        assert_eq!(simplest_rational_in(&r(-1, 2), &r(1, 3)), r(0, 1));
        assert_eq!(simplest_rational_in(&r(-17, 10), &r(-13, 10)), r(-3, 2));
        assert_eq!(simplest_rational_in(&r(7, 3), &r(7, 3)), r(7, 3));
        assert_eq!(simplest_rational_in(&r(5, 2), &r(7, 2)), r(3, 1));
    }
}
