use std::cmp::Ordering;

use num_traits::ToPrimitive;
use quartic_thue::siegel::{
    exponent_e, phi_scan, solution_count_bound, theta, threshold, Binding, LogLinearValue,
};

// Solves h = C2 j^E2 for j by bisection on [1, 2^64].
fn bisect_j(k: u32, h: u64) -> f64 {
    let e2 = exponent_e(2, 2, k, 0).unwrap().to_f64().unwrap();
    let t2 = theta(2, 2, k, 0).unwrap().to_f64();
    let g = |j: f64| t2 + e2 * j.log2() - (h as f64).log2();
    let (mut lo, mut hi) = (1.0f64, 2f64.powi(64));
    while (hi - lo) / hi > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn threshold_matches_bisection() {
    for k in 3..=12 {
        for h in [1u64, 2, 5, 30] {
            let r = threshold(k, h).unwrap();
            let j = bisect_j(k, h).max(2.0 * (h as f64).sqrt());
            assert!((r.j_min / j - 1.0).abs() < 1e-9, "k={k} h={h} {r:?} {j}");
            assert!((r.i_max / (-12.0 * j.powi(4)) - 1.0).abs() < 1e-9);
            assert!(r.open_boundary);
        }
    }
}

#[test]
fn binding_constraint_holds_with_equality() {
    let r = threshold(4, 1).unwrap();
    assert_eq!(r.binding, Binding::Siegel);
    let e2 = exponent_e(2, 2, 4, 0).unwrap().to_f64().unwrap();
    let c2 = theta(2, 2, 4, 0).unwrap().to_f64().exp2();
    assert!((c2 * r.j_min.powf(e2) - 1.0).abs() < 1e-9);
    assert!(1.0 < r.j_min * r.j_min / 4.0);
}

#[test]
fn count_bound_monotone_in_i() {
    let mut prev = None;
    for i in [-12i64, -2000, -2700, -10_000, -1_000_000, -30_000_000, -300_000_000] {
        let b = solution_count_bound(&i.into(), 1, 20).unwrap();
        if let (Some(p), Some(c)) = (prev, b) {
            assert!(c <= p);
        }
        if b.is_some() {
            prev = b;
        }
    }
    assert_eq!(prev, Some(6));
}

#[test]
fn base_constants_are_minimal() {
    for k in 3..=20 {
        let e2 = exponent_e(2, 2, k, 0).unwrap();
        let t2 = theta(2, 2, k, 0).unwrap();
        for i in 0..4u8 {
            for n in 2..=10 {
                for g in 0..=1 {
                    let e = exponent_e(i, n, k, g).unwrap();
                    assert!(e2 <= e, "E{i} n={n} k={k} g={g}");
                    let diff: LogLinearValue = &theta(i, n, k, g).unwrap() - &t2;
                    assert_ne!(diff.signum(), Ordering::Less, "Theta{i} n={n} k={k} g={g}");
                }
            }
        }
    }
}

#[test]
fn full_phi_grid() {
    let r = phi_scan((3, 25), (2, 25)).unwrap();
    assert!(r.passed(), "{:?}", r.negative);
    assert!(r.points > 1000);
}
