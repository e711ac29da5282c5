//! Integral points on `Y^2 = X^3 + N X` and the bound on their number.

use alloc::vec::Vec;

use num_integer::Roots;

use super::arith::{divisors, omega, squarefree};
use super::pell::pell_fundamental;
use crate::error::{Error, Result};

/// `2^(15/2) sqrt(N) sum_{d | N} 2^omega(N/d) eps_d^(3/2) / d`, with `eps_1 = 1`.
pub fn curve_bound(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("N must be positive"));
    }
    if !squarefree(n) {
        return Err(Error::NotSquarefree(n));
    }
    let mut sum = 0.0;
    for d in divisors(n) {
        let ln_eps = if d == 1 { 0.0 } else { pell_fundamental(d)?.ln() };
        let term = libm::exp(f64::from(omega(n / d)) * core::f64::consts::LN_2 + 1.5 * ln_eps - libm::log(d as f64));
        sum += term;
    }
    Ok(libm::exp2(7.5) * libm::sqrt(n as f64) * sum)
}

/// All `(X, Y)` with `0 <= X <= x_max`, `Y >= 0` and `Y^2 = X^3 + N X`.
pub fn curve_points(n: u64, x_max: u64) -> Result<Vec<(u64, u64)>> {
    if n == 0 {
        return Err(Error::Domain("N must be positive"));
    }
    let mut out = Vec::new();
    for x in 0..=x_max {
        let x = u128::from(x);
        let rhs = x
            .checked_mul(x)
            .and_then(|v| v.checked_add(u128::from(n)))
            .and_then(|v| v.checked_mul(x))
            .ok_or(Error::Domain("x_max too large"))?;
        let y = rhs.sqrt();
        if y * y == rhs {
            out.push((x as u64, y as u64));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        let b1 = curve_bound(1).unwrap();
        assert!(libm::fabs(b1 - libm::exp2(7.5)) < 1e-9 * b1);
        let b2 = curve_bound(2).unwrap();
        let e = 1.0 + libm::sqrt(2.0);
        let want = 256.0 * (2.0 + libm::pow(e, 1.5) / 2.0);
        assert!(libm::fabs(b2 / want - 1.0) < 1e-12);
        assert!(libm::fabs(b2 - 992.146) < 1e-3, "{b2}");
        assert_eq!(curve_bound(12), Err(Error::NotSquarefree(12)));
    }

    #[test]
    fn points() {
        assert_eq!(curve_points(1, 100).unwrap(), [(0, 0)]);
        assert_eq!(curve_points(2, 100).unwrap(), [(0, 0)]);
        assert_eq!(curve_points(3, 100).unwrap(), [(0, 0), (1, 2), (3, 6), (12, 42)]);
    }
}
