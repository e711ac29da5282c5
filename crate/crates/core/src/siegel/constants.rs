//! Gap exponents `a1`, `a2` and the constants `E_i`, `Theta_i`, `C_i = 2^Theta_i`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use super::loglinear::LogLinearValue;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapExponents {
    pub k: u32,
    pub a1: BigRational,
    pub a2: BigRational,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `a1(k) = (3^k - 1)/2 + 3^(k-1)` and `a2(k) = (3^k - 1)/2 + 3^(k-1)/4`.
pub fn gap_exponents(k: u32) -> Result<GapExponents> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1"));
    }
    let p: BigInt = Pow::pow(BigInt::from(3), k);
    let base = BigRational::new(&p - 1, BigInt::from(2));
    let prev = BigRational::from_integer(p / 3);
    Ok(GapExponents { k, a1: &base + &prev, a2: base + prev / BigInt::from(4) })
}

/// Coefficients `(xi, eta, theta)` with `E = (xi + eta a1) / (theta + eta a2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETriple {
    pub xi: BigRational,
    pub eta: BigRational,
    pub theta: BigRational,
}

/// Coefficients with `Theta = (xi + eta a1) / (theta - eta a2)`; `xi` may involve `log2(3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CTriple {
    pub xi: LogLinearValue,
    pub eta: BigRational,
    pub theta: BigRational,
}

fn check(i: u8, n: u32, k: u32, g: u8) -> Result<()> {
    if i > 3 {
        return Err(Error::Domain("constant index must be 0..=3"));
    }
    if k < 3 {
        return Err(Error::Domain("k must be at least 3"));
    }
    if i == 2 && n < 2 {
        return Err(Error::Domain("n must be at least 2"));
    }
    if (i == 1 || i == 2) && g > 1 {
        return Err(Error::Domain("g must be 0 or 1"));
    }
    Ok(())
}

pub fn e_triple(i: u8, n: u32, g: u8) -> ETriple {
    let (n, g) = (i64::from(n), i64::from(g));
    let (xi, eta, theta) = match i {
        0 => (0, 4, 1),
        1 => (-2 * g, 4 + g, 4),
        2 => (-8 * n - 14 + 2 * g, 8 * n - 5 + g, 6 * n + 4),
        _ => (-2, 4, 2),
    };
    ETriple { xi: int(xi), eta: int(eta), theta: int(theta) }
}

pub fn c_triple(i: u8, n: u32, g: u8) -> CTriple {
    let (n, g) = (i64::from(n), i64::from(g));
    let (alpha, beta, eta, theta) = match i {
        0 => (-1, 0, -4, 1),
        1 => (-24 - 8 * g, 0, -(4 + g), 4),
        2 => (-54 * n - 66 - 8 * g, 3, -(8 * n - 5 + g), 6 * n + 4),
        _ => (-13, 0, -4, 2),
    };
    CTriple { xi: LogLinearValue::from_ints(alpha, beta), eta: int(eta), theta: int(theta) }
}

/// `E_i(n, k, g)`. `n` only matters for `i = 2`, `g` for `i` in `{1, 2}`.
pub fn exponent_e(i: u8, n: u32, k: u32, g: u8) -> Result<BigRational> {
    check(i, n, k, g)?;
    let a = gap_exponents(k - 1)?;
    let t = e_triple(i, n, g);
    Ok((&t.xi + &t.eta * &a.a1) / (&t.theta + &t.eta * &a.a2))
}

/// `Theta_i(n, k, g)`, exact in `log2(3)`.
pub fn theta(i: u8, n: u32, k: u32, g: u8) -> Result<LogLinearValue> {
    check(i, n, k, g)?;
    let a = gap_exponents(k - 1)?;
    let t = c_triple(i, n, g);
    let num = &t.xi + &LogLinearValue::rational(&t.eta * &a.a1);
    let den = &t.theta - &t.eta * &a.a2;
    Ok(num.scale(&(BigRational::one() / den)))
}

/// Enclosure of `C_i = 2^Theta_i`.
pub fn c_constant(i: u8, n: u32, k: u32, g: u8) -> Result<(f64, f64)> {
    let (lo, hi) = theta(i, n, k, g)?.numeric();
    let up = 1.0 + 4.0 * f64::EPSILON;
    Ok((libm::exp2(lo) / up, libm::exp2(hi) * up))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exponents() {
        let g = |k| gap_exponents(k).unwrap();
        assert_eq!((g(1).a1, g(1).a2), (q(2, 1), q(5, 4)));
        assert_eq!((g(2).a1, g(2).a2), (q(7, 1), q(19, 4)));
        assert_eq!((g(3).a1, g(3).a2), (q(22, 1), q(61, 4)));
        assert!(gap_exponents(0).is_err());
    }

    #[test]
    fn e_values() {
        assert_eq!(exponent_e(2, 2, 3, 0).unwrap(), q(188, 273));
        assert_eq!(exponent_e(2, 2, 4, 0).unwrap(), q(7632, 6615));
        assert_eq!(exponent_e(0, 0, 3, 0).unwrap(), q(7, 5));
    }

    #[test]
    fn e2_closed_form() {
        for k in 3..=40u32 {
            let p: BigInt = Pow::pow(BigInt::from(3), k);
            let closed = BigRational::new(&p * 110 - 1278, &p * 77 + 378);
            assert_eq!(exponent_e(2, 2, k, 0).unwrap(), closed, "k={k}");
        }
    }

    #[test]
    fn theta_values() {
        let t = theta(2, 2, 4, 0).unwrap();
        assert_eq!(t, LogLinearValue::new(q(-14976, 6615), q(108, 6615)));
        assert!(libm::fabs(t.to_f64() + 2.23807) < 1e-5);
        assert_eq!(theta(0, 0, 3, 0).unwrap(), LogLinearValue::rational(q(-29, 20)));
        assert_eq!(theta(3, 0, 3, 0).unwrap(), LogLinearValue::rational(q(-41, 21)));
        assert_eq!(theta(3, 0, 4, 0).unwrap(), LogLinearValue::rational(q(-101, 63)));
    }

    #[test]
    fn theta2_closed_form() {
        for k in 3..=40u32 {
            let p: BigInt = Pow::pow(BigInt::from(3), k);
            let den: BigInt = &p * 77 + 378;
            let closed = LogLinearValue::new(
                BigRational::new(-(&p * BigInt::from(110)) - 6066, den.clone()),
                BigRational::new(108.into(), den),
            );
            assert_eq!(theta(2, 2, k, 0).unwrap(), closed, "k={k}");
        }
    }

    #[test]
    fn domain() {
        assert!(exponent_e(2, 1, 3, 0).is_err());
        assert!(exponent_e(1, 0, 3, 2).is_err());
        assert!(exponent_e(0, 0, 2, 0).is_err());
        assert!(theta(4, 2, 3, 0).is_err());
        // n and g are ignored where they do not appear
        assert_eq!(exponent_e(0, 0, 5, 7).unwrap(), exponent_e(0, 9, 5, 0).unwrap());
    }

    #[test]
    fn c_enclosure() {
        let (lo, hi) = c_constant(2, 2, 4, 0).unwrap();
        let x = libm::exp2(-2.23807);
        assert!(lo < hi && libm::fabs(lo / x - 1.0) < 1e-5);
    }
}
