//! Fundamental units of `Z[sqrt(d)]` from the continued fraction of `sqrt(d)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use super::arith::squarefree;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellUnit {
    pub d: u64,
    pub x: BigInt,
    pub y: BigInt,
    /// `x^2 - d y^2`, either `1` or `-1`.
    pub norm: i8,
}

impl PellUnit {
    /// `ln(x + y sqrt(d))`.
    pub fn ln(&self) -> f64 {
        // x + y sqrt(d) = x + sqrt(x^2 - norm)
        let lx = super::ln_big(&self.x);
        let r = f64::from(self.norm) * libm::exp(-2.0 * lx);
        lx + libm::log(1.0 + libm::sqrt(1.0 - r))
    }
}

fn check(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::Domain("d must exceed 1"));
    }
    if !squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    Ok(())
}

/// One period `a_1, ..., a_r` of the continued fraction of `sqrt(d)`.
pub fn sqrt_cf_period(d: u64) -> Result<Vec<u64>> {
    check(d)?;
    let a0 = d.sqrt();
    let (mut m, mut q, mut a) = (0u64, 1u64, a0);
    let mut out = Vec::new();
    loop {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        out.push(a);
        if a == 2 * a0 {
            return Ok(out);
        }
    }
}

/// The smallest unit `x + y sqrt(d) > 1` of `Z[sqrt(d)]`.
pub fn pell_fundamental(d: u64) -> Result<PellUnit> {
    check(d)?;
    let a0 = d.sqrt();
    let dd = BigInt::from(d);
    let (mut m, mut q, mut a) = (0u64, 1u64, a0);
    let (mut p0, mut p1) = (BigInt::one(), BigInt::from(a0));
    let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
    loop {
        let n = &p1 * &p1 - &dd * &q1 * &q1;
        if n == BigInt::one() || n == -BigInt::one() {
            let norm = if n == BigInt::one() { 1 } else { -1 };
            return Ok(PellUnit { d, x: p1, y: q1, norm });
        }
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        let p2 = BigInt::from(a) * &p1 + &p0;
        let q2 = BigInt::from(a) * &q1 + &q0;
        (p0, p1, q0, q1) = (p1, p2, q1, q2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: u64) -> (i64, i64, i8) {
        let u = pell_fundamental(d).unwrap();
        (i64::try_from(&u.x).unwrap(), i64::try_from(&u.y).unwrap(), u.norm)
    }

    #[test]
    fn small_units() {
        assert_eq!(unit(2), (1, 1, -1));
        assert_eq!(unit(5), (2, 1, -1));
        assert_eq!(unit(6), (5, 2, 1));
        assert_eq!(unit(13), (18, 5, -1));
        let u = pell_fundamental(61).unwrap();
        assert_eq!(u.x, BigInt::from(29718));
        assert_eq!(u.y, BigInt::from(3805));
        assert_eq!(u.norm, -1);
    }

    #[test]
    fn rejects() {
        assert_eq!(pell_fundamental(12), Err(Error::NotSquarefree(12)));
        assert!(pell_fundamental(1).is_err());
    }

    #[test]
    fn periods() {
        assert_eq!(sqrt_cf_period(2).unwrap(), [2]);
        assert_eq!(sqrt_cf_period(7).unwrap(), [1, 1, 1, 4]);
    }

    #[test]
    fn log_of_unit() {
        let u = pell_fundamental(2).unwrap();
        assert!(libm::fabs(u.ln() - libm::log(1.0 + libm::sqrt(2.0))) < 1e-14);
        let u = pell_fundamental(6).unwrap();
        assert!(libm::fabs(u.ln() - libm::log(5.0 + 2.0 * libm::sqrt(6.0))) < 1e-14);
    }
}
