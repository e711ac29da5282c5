//! The differences `Phi` between `E2(2,k,0)`, `Theta2(2,k,0)` and the other constants.
//!
//! Each `Phi` is computed twice: from the coefficient triples and from an
//! expanded closed form in `K = 3^k`. The two must agree exactly.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::constants::{c_triple, e_triple, gap_exponents};
use super::loglinear::LogLinearValue;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhiKind {
    E0,
    E1,
    E2,
    E3,
    C0,
    C1,
    C2,
    C3,
}

impl PhiKind {
    pub const ALL: [PhiKind; 8] =
        [PhiKind::E0, PhiKind::E1, PhiKind::E2, PhiKind::E3, PhiKind::C0, PhiKind::C1, PhiKind::C2, PhiKind::C3];

    pub fn index(self) -> u8 {
        self as u8 % 4
    }

    pub fn is_exponent(self) -> bool {
        (self as u8) < 4
    }

    pub fn uses_n(self) -> bool {
        self.index() == 2
    }

    pub fn uses_g(self) -> bool {
        matches!(self.index(), 1 | 2)
    }

    pub fn name(self) -> &'static str {
        ["E0", "E1", "E2", "E3", "C0", "C1", "C2", "C3"][self as usize]
    }
}

impl fmt::Display for PhiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PhiKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PhiKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or(Error::Domain("expected one of E0..E3, C0..C3"))
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ll(a: i64, b: i64) -> LogLinearValue {
    LogLinearValue::from_ints(a, b)
}

fn check(which: PhiKind, n: u32, k: u32, g: u8) -> Result<()> {
    if k < 3 {
        return Err(Error::Domain("k must be at least 3"));
    }
    if which.uses_n() && n < 2 {
        return Err(Error::Domain("n must be at least 2"));
    }
    if which.uses_g() && g > 1 {
        return Err(Error::Domain("g must be 0 or 1"));
    }
    Ok(())
}

/// `Phi` from the coefficient triples, comparing against `E2(2,k,0)` or `Theta2(2,k,0)`.
pub fn phi_from_triples(which: PhiKind, n: u32, k: u32, g: u8) -> Result<LogLinearValue> {
    check(which, n, k, g)?;
    let a = gap_exponents(k - 1)?;
    let i = which.index();
    if which.is_exponent() {
        let t1 = e_triple(2, 2, 0);
        let t2 = e_triple(i, n, g);
        let v = (&t2.xi * &t1.theta - &t1.xi * &t2.theta)
            + (&t2.eta * &t1.theta - &t1.eta * &t2.theta) * &a.a1
            + (&t2.xi * &t1.eta - &t1.xi * &t2.eta) * &a.a2;
        Ok(LogLinearValue::rational(v))
    } else {
        let t1 = c_triple(2, 2, 0);
        let t2 = c_triple(i, n, g);
        let r = |x: BigRational| LogLinearValue::rational(x);
        let first = &t2.xi.scale(&t1.theta) - &t1.xi.scale(&t2.theta);
        let second = r((&t2.eta * &t1.theta - &t1.eta * &t2.theta) * &a.a1);
        let third = (&t1.xi.scale(&t2.eta) - &t2.xi.scale(&t1.eta)).scale(&a.a2);
        Ok(&(&first + &second) + &third)
    }
}

/// `Phi` from its expanded closed form in `K = 3^k`, `n`, `g` and `log2(3)`.
pub fn phi_closed_form(which: PhiKind, n: u32, k: u32, g: u8) -> Result<LogLinearValue> {
    check(which, n, k, g)?;
    let kk: BigInt = Pow::pow(BigInt::from(3), k);
    let kk = BigRational::from_integer(kk);
    let (n, g) = (i64::from(n), i64::from(g));
    // value = (c0 + c1 K) / den
    let (c0, c1, den) = match which {
        PhiKind::E0 => (ll(-1017, 0), ll(685, 0), int(18)),
        PhiKind::E1 => (ll(225 - 198 * g, 0), ll(130 + 27 * g, 0), BigRational::new(9.into(), 2.into())),
        PhiKind::E2 => (ll(9 * (110 - 55 * n - 2 * g), 0), ll(-842 + 421 * n + 131 * g, 0), int(9)),
        PhiKind::E3 => (ll(-108, 0), ll(79, 0), BigRational::new(18.into(), 7.into())),
        PhiKind::C0 => (ll(-5688, 108), ll(4265, -84), int(36)),
        PhiKind::C1 => (
            ll(3816 - 5868 * g, -216 + 54 * g),
            ll(2824 + 442 * g, -84 - 21 * g),
            int(36),
        ),
        PhiKind::C2 => (
            ll(13536 - 6768 * n - 5868 * g, 432 - 216 * n + 54 * g),
            ll(-9932 + 4966 * n + 442 * g, 336 - 168 * n - 21 * g),
            int(36),
        ),
        PhiKind::C3 => (ll(-594, 0), ll(493, -12), BigRational::new(36.into(), 7.into())),
    };
    let v = &c0 + &c1.scale(&kk);
    Ok(v.scale(&(int(1) / den)))
}

/// `Phi`, with the triple rule and the closed form required to agree.
pub fn phi(which: PhiKind, n: u32, k: u32, g: u8) -> Result<LogLinearValue> {
    let a = phi_from_triples(which, n, k, g)?;
    let b = phi_closed_form(which, n, k, g)?;
    if a != b {
        return Err(Error::PhiMismatch(which.name()));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhiPoint {
    pub which: PhiKind,
    pub n: u32,
    pub k: u32,
    pub g: u8,
    pub value: LogLinearValue,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhiScanReport {
    pub points: usize,
    /// Points whose certified sign is negative.
    pub negative: Vec<PhiPoint>,
    /// Points where the two computations disagree.
    pub mismatches: Vec<(PhiKind, u32, u32, u8)>,
    /// Smallest value, ignoring the comparison of the base constant with itself.
    pub minimum: Option<PhiPoint>,
}

impl PhiScanReport {
    pub fn passed(&self) -> bool {
        self.negative.is_empty() && self.mismatches.is_empty()
    }
}

/// Evaluates every `Phi` over `k` in `k_range`, `n` in `n_range` and `g` in `{0, 1}`.
///
/// Parameters a constant does not depend on are not repeated.
pub fn phi_scan(k_range: (u32, u32), n_range: (u32, u32)) -> Result<PhiScanReport> {
    let (k_lo, k_hi) = k_range;
    let (n_lo, n_hi) = n_range;
    if k_lo < 3 || n_lo < 2 || k_lo > k_hi || n_lo > n_hi {
        return Err(Error::Domain("need 3 <= k_lo <= k_hi and 2 <= n_lo <= n_hi"));
    }
    let mut report = PhiScanReport { points: 0, negative: Vec::new(), mismatches: Vec::new(), minimum: None };
    let mut min_f = f64::INFINITY;
    for which in PhiKind::ALL {
        let ns: Vec<u32> = if which.uses_n() { (n_lo..=n_hi).collect() } else { alloc::vec![n_lo] };
        let gs: &[u8] = if which.uses_g() { &[0, 1] } else { &[0] };
        for k in k_lo..=k_hi {
            for &n in &ns {
                for &g in gs {
                    report.points += 1;
                    let value = match phi(which, n, k, g) {
                        Ok(v) => v,
                        Err(Error::PhiMismatch(_)) => {
                            report.mismatches.push((which, n, k, g));
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    let point = PhiPoint { which, n, k, g, value };
                    if point.value.signum() == Ordering::Less {
                        report.negative.push(point.clone());
                    }
                    let is_self = which.uses_n() && n == 2 && g == 0;
                    let f = point.value.to_f64();
                    if !is_self && f < min_f {
                        min_f = f;
                        report.minimum = Some(point);
                    }
                }
            }
        }
    }
    Ok(report)
}

impl PhiPoint {
    pub fn is_zero(&self) -> bool {
        self.value.alpha.is_zero() && self.value.beta.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn anchors() {
        let v = phi(PhiKind::E0, 0, 3, 0).unwrap();
        assert_eq!(v.scale(&int(18)), ll(17478, 0));
        assert_eq!(v, ll(971, 0));
        let v = phi(PhiKind::E1, 0, 3, 1).unwrap();
        assert_eq!(v.scale(&q(9, 2)), ll(4266, 0));
        assert!(phi(PhiKind::E2, 2, 3, 0).unwrap().is_zero());
        assert!(phi(PhiKind::C2, 2, 3, 0).unwrap().is_zero());
        let v = phi(PhiKind::C3, 0, 3, 0).unwrap().scale(&q(36, 7));
        assert_eq!(v, ll(-594 + 493 * 27, -12 * 27));
        assert!(libm::fabs(v.to_f64() - 12203.47) < 0.01);
    }

    #[test]
    fn triples_match_closed_forms() {
        for which in PhiKind::ALL {
            for k in 3..=12 {
                for n in 2..=6 {
                    for g in 0..=1 {
                        phi(which, n, k, g).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn small_scan_is_nonnegative() {
        let r = phi_scan((3, 8), (2, 8)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.minimum.unwrap().value.signum() == Ordering::Greater);
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("c2".parse::<PhiKind>().unwrap(), PhiKind::C2);
        assert!("E4".parse::<PhiKind>().is_err());
        assert!(phi(PhiKind::E2, 1, 3, 0).is_err());
    }
}
