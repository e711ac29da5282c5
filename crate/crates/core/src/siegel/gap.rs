//! Empirical check of the `zeta` bound and the two `Z` gap inequalities on a solution set.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::diag::{diagonalize, solution_diagnostics};
use crate::error::Result;
use crate::form::QuarticForm;
use crate::thue::SolutionSet;

const SLACK: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GapCheck {
    /// `zeta < 1` away from the largest-`zeta` solution.
    ZetaBelowOne,
    /// `Z >= |j| / (2 h^(1/4))`.
    ZLowerBound,
    /// `Z_i >= (|j| / 2h) Z_(i-1)^3`.
    ZGrowth,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapViolation {
    pub check: GapCheck,
    pub x: BigInt,
    pub y: BigInt,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GapStatus {
    /// `h < j^2 / 4` fails; nothing is asserted.
    HypothesesFail,
    /// Hypotheses hold but no class is large enough to test.
    Vacuous,
    Verified,
    Violated,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapReport {
    pub j_abs: f64,
    pub hypotheses_hold: bool,
    /// Sizes of the classes related to `+1` and `-1`.
    pub class_sizes: [usize; 2],
    /// Number of inequalities evaluated.
    pub checked: usize,
    pub violations: Vec<GapViolation>,
}

impl GapReport {
    pub fn status(&self) -> GapStatus {
        if !self.hypotheses_hold {
            GapStatus::HypothesesFail
        } else if !self.violations.is_empty() {
            GapStatus::Violated
        } else if self.checked == 0 {
            GapStatus::Vacuous
        } else {
            GapStatus::Verified
        }
    }
}

struct Entry {
    x: BigInt,
    y: BigInt,
    z: f64,
    zeta: f64,
    root: i8,
}

fn by_zeta_desc(a: &Entry, b: &Entry) -> core::cmp::Ordering {
    b.zeta.total_cmp(&a.zeta).then_with(|| a.z.total_cmp(&b.z))
}

/// Checks the gap inequalities on `solutions` of `0 < |F| <= h`.
pub fn gap_verify(form: &QuarticForm, h: u64, solutions: &SolutionSet) -> Result<GapReport> {
    let res = diagonalize(form)?;
    let disc = form.invariants().disc.abs().to_f64().unwrap_or(f64::INFINITY);
    let j = libm::pow(disc / 256.0, 1.0 / 12.0);
    let hf = h as f64;
    let hypotheses_hold = hf < j * j / 4.0;
    let mut entries = Vec::new();
    for s in solutions.iter() {
        let d = solution_diagnostics(form, &res, &s.x, &s.y)?;
        entries.push(Entry { x: s.x.clone(), y: s.y.clone(), z: d.z, zeta: d.zeta, root: d.related_root });
    }
    let class_sizes = [
        entries.iter().filter(|e| e.root == 1).count(),
        entries.iter().filter(|e| e.root == -1).count(),
    ];
    let mut report = GapReport { j_abs: j, hypotheses_hold, class_sizes, checked: 0, violations: Vec::new() };
    if !hypotheses_hold {
        return Ok(report);
    }
    entries.sort_by(by_zeta_desc);
    let push = |report: &mut GapReport, check, e: &Entry, lhs: f64, rhs: f64, fail: bool| {
        report.checked += 1;
        if fail {
            report.violations.push(GapViolation { check, x: e.x.clone(), y: e.y.clone(), lhs, rhs });
        }
    };
    for e in entries.iter().skip(1) {
        push(&mut report, GapCheck::ZetaBelowOne, e, e.zeta, 1.0, e.zeta >= 1.0 + SLACK);
    }
    let z_min = j / (2.0 * libm::pow(hf, 0.25));
    let growth = j / (2.0 * hf);
    for root in [1i8, -1] {
        // S' drops the largest-zeta member of the class
        let class: Vec<&Entry> = entries.iter().filter(|e| e.root == root).skip(1).collect();
        if class.len() < 2 {
            continue;
        }
        for e in &class[1..] {
            push(&mut report, GapCheck::ZLowerBound, e, e.z, z_min, e.z < z_min * (1.0 - SLACK));
        }
        for w in class.windows(2) {
            let rhs = growth * w[0].z * w[0].z * w[0].z;
            push(&mut report, GapCheck::ZGrowth, w[1], w[1].z, rhs, w[1].z < rhs * (1.0 - SLACK));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thue::{solve, SolverConfig};

    fn run(c: [i64; 5], h: u64) -> GapReport {
        let f = QuarticForm::from_i64(c);
        let s = solve(&f, &SolverConfig::new(h)).unwrap();
        gap_verify(&f, h, &s).unwrap()
    }

    #[test]
    fn small_j_is_vacuous() {
        let r = run([1, 0, 0, 0, -2], 1);
        assert_eq!(r.status(), GapStatus::HypothesesFail);
        assert!(libm::fabs(r.j_abs - libm::pow(2.0, 0.25)) < 1e-12);
    }

    #[test]
    fn single_solution() {
        let r = run([1, 0, 0, 0, -250], 1);
        assert!(r.hypotheses_hold);
        assert!(libm::fabs(r.j_abs - libm::pow(250.0, 0.25)) < 1e-9);
        assert_eq!(r.class_sizes, [1, 0]);
        assert_eq!(r.status(), GapStatus::Vacuous);
    }

    #[test]
    fn larger_h_with_several_solutions() {
        for c in [[1, 0, 0, 0, -250], [3, 0, 0, 0, -500], [1, 2, 0, 0, -300]] {
            let f = QuarticForm::from_i64(c);
            if !f.invariants().j.eq(&BigInt::from(0)) {
                continue;
            }
            let r = run(c, 3);
            assert_ne!(r.status(), GapStatus::Violated, "{c:?} {r:?}");
        }
    }
}
