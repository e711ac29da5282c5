//! All integral quartic forms with `J = 0` and a prescribed negative `I`.
//!
//! The leading coefficient `a`, the next coefficient `b` and the seminvariant
//! `H = 8ac - 3b^2` run over bounded windows; at `J = 0` the syzygy gives
//! `27 R^2 = -(H^3 - 48 I a^2 H)`, and `R` fixes `d`, after which `I` fixes `e`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::form::QuarticForm;

/// Range of the second coefficient `b` for a given `a`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BConvention {
    /// `-2|a| < b <= 2|a|`.
    #[default]
    Standard,
    /// `-2|a| < b <= 2`.
    Narrow,
}

/// Largest `|I|` accepted; keeps every intermediate within `i128`.
pub const MAX_ABS_I: i64 = 1_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationTask {
    i_target: i64,
    pub include_negated_leading: bool,
    pub b_convention: BConvention,
}

impl EnumerationTask {
    pub fn new(i_target: i64) -> Result<Self> {
        if i_target >= 0 {
            return Err(Error::Domain("I must be negative"));
        }
        if i_target < -MAX_ABS_I {
            return Err(Error::Domain("|I| exceeds the supported range"));
        }
        Ok(Self { i_target, include_negated_leading: true, b_convention: BConvention::Standard })
    }

    pub fn with_convention(mut self, b: BConvention) -> Self {
        self.b_convention = b;
        self
    }

    pub fn i_target(&self) -> i64 {
        self.i_target
    }
}

/// Forms with `J = 0`, `I = I_target` and `a0 != 0`, in lexicographic order.
pub fn enumerate_forms(task: &EnumerationTask) -> Vec<QuarticForm> {
    let i = task.i_target as i128;
    let mut out: Vec<[i128; 5]> = Vec::new();
    if i % 3 != 0 {
        return Vec::new();
    }
    let neg4i = -4 * i;
    let a_max = (neg4i / 27).sqrt();
    for a_abs in 1..=a_max {
        let signs: &[i128] = if task.include_negated_leading { &[1, -1] } else { &[1] };
        // H >= -B_a with B_a = (2/3) sqrt(-4I) sqrt(-4I - 27a^2)
        let ba_sq_9 = 4 * neg4i * (neg4i - 27 * a_abs * a_abs);
        let b_hi = match task.b_convention {
            BConvention::Standard => 2 * a_abs,
            BConvention::Narrow => 2,
        };
        for &sign in signs {
            let a = sign * a_abs;
            let step = 8 * a_abs;
            for b in (-2 * a_abs + 1)..=b_hi {
                // H = 8ac - 3b^2 with 4I/3 <= H <= 0 and 9H^2 <= 4(-4I)(-4I-27a^2)
                let h_lo = Integer::div_ceil(&(4 * i), &3);
                let residue = (-3 * b * b).rem_euclid(step);
                let mut h = h_lo + (residue - h_lo).rem_euclid(step);
                while h <= 0 {
                    if 9 * h * h <= ba_sq_9 {
                        try_h(i, a, b, h, &mut out);
                    }
                    h += step;
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out.into_iter().map(|c| QuarticForm::new(c.map(BigInt::from))).collect()
}

fn try_h(i: i128, a: i128, b: i128, h: i128, out: &mut Vec<[i128; 5]>) {
    let c = (h + 3 * b * b) / (8 * a);
    let num = -(h * h * h - 48 * i * a * a * h);
    if num < 0 || num % 27 != 0 {
        return;
    }
    let r2 = num / 27;
    let r = r2.sqrt();
    if r * r != r2 {
        return;
    }
    let rs: &[i128] = if r == 0 { &[0] } else { &[r, -r] };
    for &r in rs {
        let dn = r - b * b * b + 4 * a * b * c;
        if dn % (8 * a * a) != 0 {
            continue;
        }
        let d = dn / (8 * a * a);
        let en = i + 3 * b * d - c * c;
        if en % (12 * a) != 0 {
            continue;
        }
        let e = en / (12 * a);
        let form = [a, b, c, d, e];
        if verify(&form, i) {
            out.push(form);
        }
    }
}

fn verify(f: &[i128; 5], i_target: i128) -> bool {
    let [a0, a1, a2, a3, a4] = *f;
    let i = a2 * a2 - 3 * a1 * a3 + 12 * a0 * a4;
    let j = 2 * a2 * a2 * a2 - 9 * a1 * a2 * a3 + 27 * a1 * a1 * a4 - 72 * a0 * a2 * a4 + 27 * a0 * a3 * a3;
    i == i_target && j == 0
}

/// [`enumerate_forms`] for every `I = 0 (mod 3)` in `[i_min, i_max]`, by descending `I`.
pub fn enumerate_range(i_min: i64, i_max: i64, b: BConvention) -> Result<Vec<(i64, QuarticForm)>> {
    if !(i_min <= i_max && i_max < 0) {
        return Err(Error::Domain("need i_min <= i_max < 0"));
    }
    let mut out = Vec::new();
    let mut i = i_max - i_max.rem_euclid(3);
    while i >= i_min {
        let task = EnumerationTask::new(i)?.with_convention(b);
        out.extend(enumerate_forms(&task).into_iter().map(|f| (i, f)));
        i -= 3;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(i: i64) -> Vec<QuarticForm> {
        enumerate_forms(&EnumerationTask::new(i).unwrap())
    }

    #[test]
    fn small_targets() {
        assert!(forms(-3).is_empty());
        assert!(forms(-5).is_empty());
        let f12 = forms(-12);
        assert!(f12.contains(&QuarticForm::from_i64([1, 0, 0, 0, -1])));
        assert!(f12.contains(&QuarticForm::from_i64([-1, 0, 0, 0, 1])));
        assert!(forms(-24).contains(&QuarticForm::from_i64([1, 0, 0, 0, -2])));
    }

    #[test]
    fn emitted_forms_are_exact() {
        for i in (-300..=-3).step_by(3) {
            for f in forms(i) {
                let inv = f.invariants();
                assert_eq!(inv.i, BigInt::from(i));
                assert_eq!(inv.j, BigInt::from(0));
                assert!(f.coeff(0) != &BigInt::from(0));
            }
        }
    }

    #[test]
    fn range_is_union() {
        let r = enumerate_range(-12, -3, BConvention::Standard).unwrap();
        let mut expect = Vec::new();
        for i in [-3, -6, -9, -12] {
            expect.extend(forms(i).into_iter().map(|f| (i, f)));
        }
        assert_eq!(r, expect);
        assert!(enumerate_range(-3, -12, BConvention::Standard).is_err());
    }

    #[test]
    fn rejects_nonnegative_target() {
        assert!(EnumerationTask::new(0).is_err());
        assert!(EnumerationTask::new(3).is_err());
    }
}
