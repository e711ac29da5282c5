//! Dense univariate polynomials with integer coefficients.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending order of degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `den^deg * p(num / den)`; has the sign of `p(num/den)` when `den > 0`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval_homogeneous(x.numer(), x.denom()).sign_ordering()
    }

    /// Enclosure of `p([lo, hi])` by interval Horner evaluation.
    pub fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut acc_lo = BigRational::zero();
        let mut acc_hi = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
            let mut mn = products[0].clone();
            let mut mx = products[0].clone();
            for p in &products[1..] {
                if *p < mn {
                    mn = p.clone();
                }
                if *p > mx {
                    mx = p.clone();
                }
            }
            let c = BigRational::from_integer(c.clone());
            acc_lo = mn + &c;
            acc_hi = mx + c;
        }
        (acc_lo, acc_hi)
    }

    /// A positive lower bound for `|p|` on `[lo, hi]`, when interval evaluation excludes zero.
    pub fn abs_lower_bound(&self, lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
        let (a, b) = self.eval_interval(lo, hi);
        if a.is_positive() {
            Some(a)
        } else if b.is_negative() {
            Some(-b)
        } else {
            None
        }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the (positive) content.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn add_constant(&self, k: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        if c.is_empty() {
            c.push(k.clone());
        } else {
            c[0] += k;
        }
        IntPoly::new(c)
    }

    /// Pseudo-remainder scaled by a positive factor, so its sign matches the true remainder.
    pub fn positive_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading();
        let lc_abs = lc.abs();
        let mut r = self.coeffs.clone();
        // Each elimination step multiplies the running remainder by |lc|; a negative
        // leading coefficient is absorbed by negating the subtracted multiple.
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            if t.is_zero() {
                r.pop();
                continue;
            }
            let shift = top - dd;
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            let factor = if lc.is_negative() { -t } else { t };
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[shift + k] -= &factor * dc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::new(r).primitive()
    }

    /// Greatest common divisor up to a constant factor, returned primitive.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b);
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Exact quotient over the rationals, returned primitive with positive leading coefficient.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = BigRational::from_integer(divisor.leading());
        let mut r: Vec<BigRational> = self.coeffs.iter().cloned().map(BigRational::from_integer).collect();
        let n = self.coeffs.len();
        if n <= dd {
            return IntPoly::new(alloc::vec![BigInt::zero()]);
        }
        let mut q = alloc::vec![BigRational::zero(); n - dd];
        for top in (dd..n).rev() {
            let t = &r[top] / &lc;
            let shift = top - dd;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[shift + k] -= &t * BigRational::from_integer(dc.clone());
            }
            q[shift] = t;
        }
        debug_assert!(r.iter().all(Zero::is_zero), "division was not exact");
        let den_lcm = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = q.iter().map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer()).collect();
        let p = IntPoly::new(ints).primitive();
        if p.leading().is_negative() {
            p.scale(&BigInt::from(-1))
        } else {
            p
        }
    }

    /// `p / gcd(p, p')`: same real roots, all simple.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) < 2 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        self.div_exact(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().unwrap_or(0) < 2 || self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Sturm chain `p, p', -rem(p, p'), ...` with positive rescalings only.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = alloc::vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = chain[n - 2].positive_pseudo_rem(&chain[n - 1]);
            chain.push(r.scale(&BigInt::from(-1)));
        }
        chain
    }
}

/// Sign variations of a Sturm chain at `num / den` (`den > 0`).
pub(crate) fn sturm_variations(chain: &[IntPoly], num: &BigInt, den: &BigInt) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for p in chain {
        let s = p.eval_homogeneous(num, den).sign_ordering();
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub(crate) trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl SignOrdering for BigRational {
    fn sign_ordering(&self) -> Ordering {
        self.numer().cmp(&BigInt::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn evaluation_agrees() {
        let p = IntPoly::from_i64(&[-2, 0, 0, 0, 1]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(14));
        assert_eq!(p.eval_rational(&r(1, 2)), r(-31, 16));
        assert_eq!(p.sign_at(&r(3, 2)), Ordering::Greater);
        assert_eq!(p.sign_at(&r(1, 1)), Ordering::Less);
    }

    #[test]
    fn interval_evaluation_encloses() {
        let p = IntPoly::from_i64(&[1, -3, 0, 2]);
        let (lo, hi) = p.eval_interval(&r(-1, 2), &r(3, 4));
        for k in -50..=75 {
            let v = p.eval_rational(&r(k, 100));
            assert!(lo <= v && v <= hi);
        }
    }

    #[test]
    fn squarefree_part_drops_repeated_factors() {
        // (z - 1)^2 (z^2 + 1)
        let p = IntPoly::from_i64(&[1, -2, 2, -2, 1]);
        assert!(!p.is_squarefree());
        let s = p.squarefree_part();
        assert_eq!(s, IntPoly::from_i64(&[-1, 1, -1, 1]));
        assert!(s.is_squarefree());
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let b = IntPoly::from_i64(&[-3, 0, 1]);
        assert_eq!(a.gcd(&b).degree(), Some(0));
    }

    #[test]
    fn sturm_counts_roots() {
        // z^4 - 2 has two real roots
        let p = IntPoly::from_i64(&[-2, 0, 0, 0, 1]);
        let chain = p.sturm_chain();
        let one = BigInt::one();
        let lo = sturm_variations(&chain, &BigInt::from(-10), &one);
        let hi = sturm_variations(&chain, &BigInt::from(10), &one);
        assert_eq!(lo - hi, 2);
        let mid = sturm_variations(&chain, &BigInt::zero(), &one);
        assert_eq!(lo - mid, 1);
    }
}
