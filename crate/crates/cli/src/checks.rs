//! Individual verification checks shared by `verify` and the acceptance suite.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use quartic_thue::elliptic::arith::squarefree;
use quartic_thue::elliptic::{curve_bound, curve_points, pell_fundamental, tzanakis_form};
use quartic_thue::roots::real_roots;
use quartic_thue::siegel::{
    exponent_e, gap_verify, phi_scan, theta, threshold, GapStatus, LogLinearValue,
};
use quartic_thue::thue::{brute_solve, solve, SolverConfig};
use quartic_thue::{Error, QuarticForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::table::{TableReport, REFERENCE_TOTAL};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Nothing was tested.
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// `false` for reported-only comparisons that do not decide the outcome.
    pub asserted: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Self { name: name.into(), status, asserted: true, detail: detail.into() }
    }

    pub fn reported(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn vacuous(mut self) -> Self {
        self.status = Status::Vacuous;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let note = if self.asserted { "" } else { " (reported, not asserted)" };
        write!(f, "{} {}{}: {}", self.status, self.name, note, self.detail)
    }
}

fn random_form(rng: &mut ChaCha8Rng, r: i64) -> [i64; 5] {
    core::array::from_fn(|_| rng.gen_range(-r..=r))
}

/// Discriminant of `a x^4 + b x^3 + c x^2 + d x + e` from its expanded polynomial.
pub fn classical_discriminant(f: [i64; 5]) -> i128 {
    let [a, b, c, d, e] = f.map(i128::from);
    256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e
        + 144 * a * a * c * d * d * e
        - 27 * a * a * d * d * d * d
        + 144 * a * b * b * c * e * e
        - 6 * a * b * b * d * d * e
        - 80 * a * b * c * c * d * e
        + 18 * a * b * c * d * d * d
        + 16 * a * c * c * c * c * e
        - 4 * a * c * c * c * d * d
        - 27 * b * b * b * b * e * e
        + 18 * b * b * b * c * d * e
        - 4 * b * b * b * d * d * d
        - 4 * b * b * c * c * c * e
        + b * b * c * c * d * d
}

/// `27 disc = 4 I^3 - J^2`, with `disc` from the expanded discriminant.
pub fn invariant_identity(count: usize, range: i64, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..count {
        let c = random_form(&mut rng, range);
        let inv = QuarticForm::from_i64(c).invariants();
        let disc = BigInt::from(classical_discriminant(c));
        let ok = inv.identity_holds()
            && inv.disc == disc
            && BigInt::from(27) * &disc == BigInt::from(4) * &inv.i * &inv.i * &inv.i - &inv.j * &inv.j;
        if !ok {
            bad = Some(c);
            break;
        }
    }
    let detail = match bad {
        None => format!("{count} forms, coefficients in [-{range}, {range}]"),
        Some(c) => format!("fails for {c:?}"),
    };
    Check::new("invariant identity", bad.is_none(), detail)
}

/// `H^3 - 48 I a^2 H + 64 J' a^3 = -27 R^2` with `J' = -J`, on forms with `a0 != 0`.
pub fn syzygy(count: usize, range: i64, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    let mut n = 0;
    while n < count {
        let c = random_form(&mut rng, range);
        if c[0] == 0 {
            continue;
        }
        n += 1;
        let f = QuarticForm::from_i64(c);
        let inv = f.invariants();
        let sem = f.seminvariants();
        // recomputed from coefficients in i128
        let [a, b, cc, d, _] = c.map(i128::from);
        let h = 8 * a * cc - 3 * b * b;
        let r = b * b * b + 8 * a * a * d - 4 * a * b * cc;
        let (i, j) = (inv.i.to_i128().unwrap(), inv.j.to_i128().unwrap());
        let direct = h * h * h - 48 * i * a * a * h - 64 * j * a * a * a == -27 * r * r;
        if !(direct && sem.syzygy_holds(&inv, f.coeff(0))) {
            bad = Some(c);
            break;
        }
    }
    let detail = match bad {
        None => format!("{count} forms with a0 != 0"),
        Some(c) => format!("fails for {c:?}"),
    };
    Check::new("syzygy", bad.is_none(), detail)
}

fn q(n: BigInt, d: BigInt) -> num_rational::BigRational {
    num_rational::BigRational::new(n, d)
}

/// `E2(2,k,0)` and `Theta2(2,k,0)` against their closed forms.
pub fn closed_forms(k_lo: u32, k_hi: u32) -> Check {
    let mut bad = Vec::new();
    for k in k_lo..=k_hi {
        let p = BigInt::from(3).pow(k);
        let den: BigInt = BigInt::from(77) * &p + 378;
        let e = q(BigInt::from(110) * &p - 1278, den.clone());
        let t = LogLinearValue::new(q(BigInt::from(-6066) - BigInt::from(110) * &p, den.clone()), q(108.into(), den));
        let ok = exponent_e(2, 2, k, 0).map(|v| v == e).unwrap_or(false)
            && theta(2, 2, k, 0).map(|v| v == t).unwrap_or(false);
        if !ok {
            bad.push(k);
        }
    }
    Check::new("closed forms", bad.is_empty(), format!("k in [{k_lo}, {k_hi}], failing k: {bad:?}"))
}

pub fn phi_grid(k: (u32, u32), n: (u32, u32)) -> Check {
    match phi_scan(k, n) {
        Ok(r) => {
            let min = r.minimum.as_ref().map(|m| format!("{} at n={} k={} g={}", m.which, m.n, m.k, m.g));
            let detail = format!(
                "{} values, {} negative, {} mismatches, minimum {}",
                r.points,
                r.negative.len(),
                r.mismatches.len(),
                min.unwrap_or_default()
            );
            Check::new("phi grid", r.passed(), detail)
        }
        Err(e) => Check::new("phi grid", false, e.to_string()),
    }
}

/// `threshold(4, 1).I_max` inside `[lo, hi]`.
pub fn threshold_window(lo: f64, hi: f64) -> Check {
    match threshold(4, 1) {
        Ok(r) => Check::new(
            "threshold k=4",
            lo <= r.i_max && r.i_max <= hi,
            format!("I_max = {:.2} in [{lo}, {hi}], j_min = {:.6}", r.i_max, r.j_min),
        ),
        Err(e) => Check::new("threshold k=4", false, e.to_string()),
    }
}

pub fn threshold_k3() -> Check {
    match threshold(3, 1) {
        Ok(r) => Check::new("threshold k=3", true, format!("I_max = {:.4e}", r.i_max)).reported(),
        Err(e) => Check::new("threshold k=3", false, e.to_string()),
    }
}

/// Convention-independent table properties.
pub fn table_properties(t: &TableReport) -> Check {
    let p = t.properties();
    let detail = format!(
        "{} forms, {} solver failures, max per sign {}, max total {}, {} forms with 3 solutions to one sign ({} not diagonal), symmetric {}",
        t.outcomes.len(),
        p.failures,
        p.max_per_sign,
        p.max_total,
        p.three_solution_forms,
        p.non_diagonal_three.len(),
        p.symmetric
    );
    Check::new("table properties", p.hold(), detail)
}

pub fn table_reference(t: &TableReport) -> Check {
    let rows: Vec<String> =
        t.rows().iter().map(|r| format!("({},{}):{}", r.plus_count, r.minus_count, r.num_forms)).collect();
    let detail = format!(
        "{:?} convention, {}: {} forms (reference {REFERENCE_TOTAL}), histogram {}",
        t.convention,
        if t.primitive_only { "primitive forms" } else { "all forms" },
        t.outcomes.len(),
        rows.join(" ")
    );
    Check::new("table reference", t.matches_reference(), detail).reported()
}

/// Gap-principle inequalities on every solved form of a table.
pub fn gap_corpus(t: &TableReport) -> Check {
    let (mut fail_hyp, mut vacuous, mut verified, mut violated, mut errors) = (0, 0, 0, 0, 0);
    let mut first = None;
    for o in &t.outcomes {
        let Ok(s) = &o.result else { continue };
        match gap_verify(&o.form, t.h, s) {
            Ok(r) => match r.status() {
                GapStatus::HypothesesFail => fail_hyp += 1,
                GapStatus::Vacuous => vacuous += 1,
                GapStatus::Verified => verified += 1,
                GapStatus::Violated => {
                    violated += 1;
                    first.get_or_insert_with(|| format!("{} {:?}", o.form, r.violations[0]));
                }
            },
            Err(e) => {
                errors += 1;
                first.get_or_insert_with(|| format!("{}: {e}", o.form));
            }
        }
    }
    let detail = format!(
        "{verified} verified (non-vacuous), {vacuous} vacuous, {fail_hyp} outside hypotheses, {violated} violated, {errors} errors{}",
        first.map(|f| format!("; first: {f}")).unwrap_or_default()
    );
    let c = Check::new("gap principle", violated == 0 && errors == 0, detail);
    if verified == 0 && violated == 0 && errors == 0 {
        c.vacuous()
    } else {
        c
    }
}

/// `solve` restricted to a box against `brute_solve` over the same box.
pub fn solver_oracle(count: usize, range: i64, hs: &[u64], bound: u64, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h_max = BigInt::from(*hs.iter().max().unwrap_or(&1));
    let b = BigInt::from(bound);
    let (mut compared, mut degenerate, mut bad) = (0, 0, None);
    for _ in 0..count {
        let c = random_form(&mut rng, range);
        let f = QuarticForm::from_i64(c);
        let brute = brute_solve(&f, &h_max, bound);
        for &h in hs {
            let h = BigInt::from(h);
            match solve(&f, &SolverConfig::new(h.clone())) {
                Ok(s) => {
                    compared += 1;
                    if s.restricted(&b).pairs() != brute.with_h(&h).pairs() {
                        bad.get_or_insert(format!("{f} h={h}"));
                    }
                }
                Err(Error::DegenerateForm(_)) => degenerate += 1,
                Err(e) => {
                    bad.get_or_insert(format!("{f} h={h}: {e}"));
                }
            }
        }
    }
    let detail = match &bad {
        None => format!("{compared} (form, h) pairs agree in box {bound}, {degenerate} degenerate skipped"),
        Some(b) => format!("disagreement for {b}"),
    };
    Check::new("solver oracle", bad.is_none(), detail)
}

fn is_square(v: u128) -> bool {
    let r = (v as f64).sqrt() as u128;
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == v)
}

/// Fundamental units against a brute-force search over `1 <= y <= y_max`.
pub fn pell_brute(d_max: u64, y_max: u64) -> Check {
    let mut bad = Vec::new();
    let mut beyond = Vec::new();
    let mut tested = 0;
    for d in (2..=d_max).filter(|&d| squarefree(d)) {
        tested += 1;
        let Ok(u) = pell_fundamental(d) else {
            bad.push(d);
            continue;
        };
        let exact = &u.x * &u.x - BigInt::from(d) * &u.y * &u.y == BigInt::from(u.norm) && u.x.is_positive();
        let limit = u.y.to_u64().map_or(y_max, |y| y.min(y_max));
        let first = (1..=limit).find(|&y| {
            let t = d as u128 * y as u128 * y as u128;
            is_square(t - 1) || is_square(t + 1)
        });
        let minimal = match first {
            Some(y) => BigInt::from(y) == u.y,
            None => {
                beyond.push(d);
                u.y > BigInt::from(y_max)
            }
        };
        if !(exact && minimal) {
            bad.push(d);
        }
    }
    let detail = format!(
        "{tested} squarefree d <= {d_max}; fundamental y beyond {y_max} for {beyond:?}; failing d: {bad:?}"
    );
    Check::new("pell", bad.is_empty(), detail)
}

pub fn curve_counts(ns: &[u64], x_max: u64) -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for &n in ns {
        match (curve_points(n, x_max), curve_bound(n)) {
            (Ok(p), Ok(b)) => {
                ok &= (p.len() as f64) <= b;
                parts.push(format!("N={n}: {} <= {b:.2}", p.len()));
            }
            (Err(e), _) | (_, Err(e)) => {
                ok = false;
                parts.push(format!("N={n}: {e}"));
            }
        }
    }
    Check::new("curve point counts", ok, format!("x <= {x_max}; {}", parts.join(", ")))
}

pub fn curve_bound_value(n: u64, expected: f64, tol: f64) -> Check {
    match curve_bound(n) {
        Ok(b) => Check::new(
            format!("curve bound N={n}"),
            (b - expected).abs() <= tol,
            format!("{b:.4} vs {expected} +- {tol}"),
        ),
        Err(e) => Check::new(format!("curve bound N={n}"), false, e.to_string()),
    }
}

pub fn curve_points_exact(n: u64, x_max: u64, expected: &[(u64, u64)]) -> Check {
    match curve_points(n, x_max) {
        Ok(p) => Check::new(format!("curve points N={n}"), p == expected, format!("{p:?}")),
        Err(e) => Check::new(format!("curve points N={n}"), false, e.to_string()),
    }
}

/// `J = 0`, `I < 0` and two real roots, recomputed from the returned form.
pub fn tzanakis_instances(instances: &[(i64, i64, i64, i64)]) -> Check {
    let mut bad = Vec::new();
    for &(d, k, s, t) in instances {
        match tzanakis_form(d, k, s, t) {
            Ok(inst) => {
                let inv = inst.form.invariants();
                let r = &inst.reduced;
                let formula = BigInt::from(48 * k * t * t * t * d) * &r.t2 * &r.r2 * &r.z1 * &r.z1;
                let roots = real_roots(&inst.form.dehomogenize(), 64).len();
                if !(inv.j.is_zero() && inv.i == formula && inv.i.is_negative() && roots == 2) {
                    bad.push(format!("{:?}", (d, k, s, t)));
                }
            }
            Err(e) => bad.push(format!("{:?}: {e}", (d, k, s, t))),
        }
    }
    let detail = if bad.is_empty() {
        format!("{} instances, all four properties hold", instances.len())
    } else {
        format!("{} instances; failing: {}", instances.len(), bad.join(", "))
    };
    Check::new("tzanakis", bad.is_empty(), detail)
}
