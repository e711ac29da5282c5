//! Integral binary quartic forms and their classical invariants.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// `a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuarticForm {
    coeffs: [BigInt; 5],
}

/// The invariants `I`, `J` and the discriminant, tied by `27 disc = 4 I^3 - J^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTriple {
    pub i: BigInt,
    pub j: BigInt,
    pub disc: BigInt,
}

/// The seminvariants `H = 8 a0 a2 - 3 a1^2` and `R = a1^3 + 8 a0^2 a3 - 4 a0 a1 a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeminvariantPair {
    pub h: BigInt,
    pub r: BigInt,
}

/// An integer 2x2 matrix `[[a, b], [c, d]]`, acting by `(x, y) -> (a x + b y, c x + d y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Matrix2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }
}

impl InvariantTriple {
    /// `4 I^3 - J^2 == 27 disc`, checked exactly.
    pub fn identity_holds(&self) -> bool {
        BigInt::from(4) * &self.i * &self.i * &self.i - &self.j * &self.j == BigInt::from(27) * &self.disc
    }
}

impl SeminvariantPair {
    /// `H^3 - 48 I a0^2 H + 64 J' a0^3 = -27 R^2` with `J' = -J`.
    ///
    /// The syzygy is usually printed for the opposite sign convention of `J`;
    /// with the `J` used here it needs the sign flip.
    pub fn syzygy_holds(&self, inv: &InvariantTriple, a0: &BigInt) -> bool {
        let j_syz = -&inv.j;
        let a0_sq = a0 * a0;
        let lhs = &self.h * &self.h * &self.h - BigInt::from(48) * &inv.i * &a0_sq * &self.h
            + BigInt::from(64) * j_syz * &a0_sq * a0;
        lhs == BigInt::from(-27) * &self.r * &self.r
    }
}

/// Product of two binary forms given by coefficient lists indexed by the power of `y`.
fn mul_binary(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, pi) in p.iter().enumerate() {
        if pi.is_zero() {
            continue;
        }
        for (j, qj) in q.iter().enumerate() {
            out[i + j] += pi * qj;
        }
    }
    out
}

impl QuarticForm {
    pub fn new(coeffs: [BigInt; 5]) -> Self {
        Self { coeffs }
    }

    pub fn from_i64(c: [i64; 5]) -> Self {
        Self { coeffs: c.map(BigInt::from) }
    }

    pub fn coeffs(&self) -> &[BigInt; 5] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True for `a x^4 + e y^4`.
    pub fn is_diagonal(&self) -> bool {
        self.coeffs[1..4].iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        // Homogeneous Horner: ((a0 x + a1 y) x + a2 y^2) x + ...
        let mut acc = self.coeffs[0].clone();
        let mut ypow = BigInt::one();
        for c in &self.coeffs[1..] {
            ypow *= y;
            acc = acc * x + c * &ypow;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64, y: i64) -> BigInt {
        self.eval(&BigInt::from(x), &BigInt::from(y))
    }

    pub fn invariants(&self) -> InvariantTriple {
        let [a0, a1, a2, a3, a4] = &self.coeffs;
        let i = a2 * a2 - BigInt::from(3) * a1 * a3 + BigInt::from(12) * a0 * a4;
        let j = BigInt::from(2) * a2 * a2 * a2 - BigInt::from(9) * a1 * a2 * a3
            + BigInt::from(27) * a1 * a1 * a4
            - BigInt::from(72) * a0 * a2 * a4
            + BigInt::from(27) * a0 * a3 * a3;
        let num = BigInt::from(4) * &i * &i * &i - &j * &j;
        let (disc, rem) = num.div_rem(&BigInt::from(27));
        assert!(rem.is_zero(), "4I^3 - J^2 not divisible by 27 for {self}");
        InvariantTriple { i, j, disc }
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.invariants().j.is_zero()
    }

    pub fn seminvariants(&self) -> SeminvariantPair {
        let [a0, a1, a2, a3, _] = &self.coeffs;
        let h = BigInt::from(8) * a0 * a2 - BigInt::from(3) * a1 * a1;
        let r = a1 * a1 * a1 + BigInt::from(8) * a0 * a0 * a3 - BigInt::from(4) * a0 * a1 * a2;
        SeminvariantPair { h, r }
    }

    /// `F_xx F_yy - F_xy^2`.
    pub fn hessian(&self) -> QuarticForm {
        let [a0, a1, a2, a3, a4] = &self.coeffs;
        let fxx = [BigInt::from(12) * a0, BigInt::from(6) * a1, BigInt::from(2) * a2];
        let fyy = [BigInt::from(2) * a2, BigInt::from(6) * a3, BigInt::from(12) * a4];
        let fxy = [BigInt::from(3) * a1, BigInt::from(4) * a2, BigInt::from(3) * a3];
        let p = mul_binary(&fxx, &fyy);
        let q = mul_binary(&fxy, &fxy);
        let mut out: [BigInt; 5] = Default::default();
        for k in 0..5 {
            out[k] = &p[k] - &q[k];
        }
        QuarticForm::new(out)
    }

    /// `F(a x + b y, c x + d y)` for any integer matrix.
    pub fn substitute(&self, m: &Matrix2) -> QuarticForm {
        let l1 = [m.a.clone(), m.b.clone()];
        let l2 = [m.c.clone(), m.d.clone()];
        let mut pow1: Vec<Vec<BigInt>> = alloc::vec![alloc::vec![BigInt::one()]];
        let mut pow2: Vec<Vec<BigInt>> = alloc::vec![alloc::vec![BigInt::one()]];
        for k in 0..4 {
            pow1.push(mul_binary(&pow1[k], &l1));
            pow2.push(mul_binary(&pow2[k], &l2));
        }
        let mut out: [BigInt; 5] = Default::default();
        for (i, ai) in self.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let term = mul_binary(&pow1[4 - i], &pow2[i]);
            for k in 0..5 {
                out[k] += ai * &term[k];
            }
        }
        QuarticForm::new(out)
    }

    /// Unimodular change of variables.
    pub fn act(&self, m: &Matrix2) -> Result<QuarticForm> {
        if !m.is_unimodular() {
            return Err(Error::NotUnimodular(m.det().to_string()));
        }
        Ok(self.substitute(m))
    }

    pub fn negate(&self) -> QuarticForm {
        QuarticForm::new(self.coeffs.clone().map(|c| -c))
    }

    /// `F(y, x)`.
    pub fn transpose(&self) -> QuarticForm {
        let mut c = self.coeffs.clone();
        c.reverse();
        QuarticForm::new(c)
    }

    /// `F(z, 1)` as a univariate polynomial in `z`.
    pub fn dehomogenize(&self) -> IntPoly {
        let mut c: Vec<BigInt> = self.coeffs.to_vec();
        c.reverse();
        IntPoly::new(c)
    }

    /// `F(x, y)` for fixed `y`, as a polynomial in `x`.
    pub fn at_y(&self, y: &BigInt) -> IntPoly {
        // x^k carries a_{4-k} y^{4-k}
        let mut c = Vec::with_capacity(5);
        let mut ypow = BigInt::one();
        let mut ypows = [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for k in 1..5 {
            ypow *= y;
            ypows[k] = ypow.clone();
        }
        for k in 0..5 {
            c.push(&self.coeffs[4 - k] * &ypows[4 - k]);
        }
        IntPoly::new(c)
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for QuarticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3, a4] = &self.coeffs;
        write!(f, "[{a0},{a1},{a2},{a3},{a4}]")
    }
}

/// Parses `"1,0,0,0,-2"` or `"[1,0,0,0,-2]"`.
impl FromStr for QuarticForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut coeffs: [BigInt; 5] = Default::default();
        let mut n = 0;
        for part in body.split(',') {
            if n == 5 {
                return Err(Error::Domain("a quartic form has exactly five coefficients"));
            }
            coeffs[n] = part
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Domain("coefficients must be integers"))?;
            n += 1;
        }
        if n != 5 {
            return Err(Error::Domain("a quartic form has exactly five coefficients"));
        }
        Ok(QuarticForm::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(c: [i64; 5]) -> (i64, i64, i64) {
        let t = QuarticForm::from_i64(c).invariants();
        (t.i.try_into().unwrap(), t.j.try_into().unwrap(), t.disc.try_into().unwrap())
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(inv([1, 0, 0, 0, -2]), (-24, 0, -2048));
        assert_eq!(inv([0, 0, 0, 0, 1]), (0, 0, 0));
        assert_eq!(inv([1, 2, 3, 4, 5]), (45, -270, 10800));
    }

    #[test]
    fn seminvariant_examples() {
        let check = |c: [i64; 5], h: i64, r: i64| {
            let f = QuarticForm::from_i64(c);
            let s = f.seminvariants();
            assert_eq!((s.h.clone(), s.r.clone()), (BigInt::from(h), BigInt::from(r)));
            assert!(s.syzygy_holds(&f.invariants(), f.coeff(0)));
        };
        check([1, 0, 0, 0, -1], 0, 0);
        check([1, 2, 3, 4, 5], 12, 16);
        check([1, 0, 1, 0, 0], 8, 0);
    }

    #[test]
    fn hessian_examples() {
        assert_eq!(QuarticForm::from_i64([1, 0, 0, 0, -2]).hessian(), QuarticForm::from_i64([0, 0, -288, 0, 0]));
        assert_eq!(QuarticForm::from_i64([0, 0, 0, 0, 1]).hessian(), QuarticForm::from_i64([0; 5]));
        // 12x^2 * 12y^2
        assert_eq!(QuarticForm::from_i64([1, 0, 0, 0, 1]).hessian(), QuarticForm::from_i64([0, 0, 144, 0, 0]));
    }

    #[test]
    fn action_examples() {
        let f = QuarticForm::from_i64([1, 0, 0, 0, 1]);
        assert_eq!(f.act(&Matrix2::identity()).unwrap(), f);
        let g = f.act(&Matrix2::new(1, 1, 0, 1)).unwrap();
        assert_eq!(g, QuarticForm::from_i64([1, 4, 6, 4, 2]));
        assert_eq!(g.invariants().i, BigInt::from(12));
        let h = QuarticForm::from_i64([1, 0, 0, 0, -2]).act(&Matrix2::new(0, 1, 1, 0)).unwrap();
        assert_eq!(h, QuarticForm::from_i64([-2, 0, 0, 0, 1]));
        assert_eq!(h.invariants().i, BigInt::from(-24));
    }

    #[test]
    fn non_unimodular_rejected() {
        let f = QuarticForm::from_i64([1, 0, 0, 0, 1]);
        assert!(matches!(f.act(&Matrix2::new(2, 0, 0, 1)), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn parse_and_display() {
        let f: QuarticForm = "1,0,0,0,-2".parse().unwrap();
        assert_eq!(f, QuarticForm::from_i64([1, 0, 0, 0, -2]));
        assert_eq!(f.to_string(), "[1,0,0,0,-2]");
        assert_eq!("[1,0,0,0,-2]".parse::<QuarticForm>().unwrap(), f);
        assert!("1,2,3".parse::<QuarticForm>().is_err());
        assert!("1,2,3,4,x".parse::<QuarticForm>().is_err());
    }

    #[test]
    fn restriction_to_fixed_y() {
        let f = QuarticForm::from_i64([1, 2, 3, 4, 5]);
        let p = f.at_y(&BigInt::from(3));
        for x in -5..5 {
            assert_eq!(p.eval(&BigInt::from(x)), f.eval_i64(x, 3));
        }
    }
}
