//! JSON records for every subcommand. Integers are emitted exactly.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use quartic_thue::elliptic::{PellUnit, TzanakisInstance};
use quartic_thue::siegel::{PhiPoint, PhiScanReport, ThresholdReport};
use quartic_thue::thue::{SearchMethod, SolutionSet};
use quartic_thue::QuarticForm;
use serde_json::{json, Value};

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("decimal integer is a JSON number"))
}

pub fn form(f: &QuarticForm) -> Value {
    Value::Array(f.coeffs().iter().map(int).collect())
}

pub fn pairs(s: &[quartic_thue::PrimitiveSolution]) -> Value {
    s.iter().map(|p| Value::Array(vec![int(&p.x), int(&p.y)])).collect()
}

pub fn method_name(m: SearchMethod) -> &'static str {
    match m {
        SearchMethod::LinearFactor => "linear-factor",
        SearchMethod::NoRealRoots => "no-real-roots",
        SearchMethod::ScaledSquare => "scaled-square",
        SearchMethod::Convergents => "convergents",
        SearchMethod::BruteForce => "brute-force",
    }
}

pub fn invariants(f: &QuarticForm) -> Value {
    let inv = f.invariants();
    let sem = f.seminvariants();
    json!({
        "form": form(f),
        "I": int(&inv.i),
        "J": int(&inv.j),
        "disc": int(&inv.disc),
        "H": int(&sem.h),
        "R": int(&sem.r),
        "hessian": form(&f.hessian()),
        "diagonalizable": f.is_diagonalizable(),
    })
}

pub fn enumerated(i: i64, f: &QuarticForm) -> Value {
    json!({ "I": i, "form": form(f) })
}

pub fn solve(f: &QuarticForm, h: &BigInt, s: &SolutionSet) -> Value {
    let c = &s.certificate;
    let roots: Vec<Value> = c
        .roots
        .iter()
        .map(|r| json!({ "lo": r.lo.to_string(), "hi": r.hi.to_string(), "approx": r.to_f64() }))
        .collect();
    json!({
        "form": form(f),
        "h": int(h),
        "plus": pairs(&s.plus),
        "minus": pairs(&s.minus),
        "certificate": {
            "method": method_name(c.method),
            "y_exhaustive": int(&c.y_exhaustive),
            "q_max": c.q_max.as_ref().map(int),
            "roots": roots,
        },
    })
}

pub fn threshold(r: &ThresholdReport) -> Value {
    json!({
        "k": r.k,
        "h": r.h,
        "j_min": r.j_min,
        "I_max": r.i_max,
        "bound": r.bound,
        "binding": format!("{:?}", r.binding).to_lowercase(),
        "open_boundary": r.open_boundary,
    })
}

fn phi_point(p: &PhiPoint) -> Value {
    json!({
        "which": p.which.name(),
        "n": p.n,
        "k": p.k,
        "g": p.g,
        "value": p.value.to_string(),
        "approx": p.value.to_f64(),
    })
}

pub fn phi_scan(k: (u32, u32), n: (u32, u32), r: &PhiScanReport) -> Value {
    json!({
        "k": [k.0, k.1],
        "n": [n.0, n.1],
        "points": r.points,
        "negative": r.negative.iter().map(phi_point).collect::<Vec<_>>(),
        "mismatches": r.mismatches.iter().map(|(w, n, k, g)| json!([w.name(), n, k, g])).collect::<Vec<_>>(),
        "minimum": r.minimum.as_ref().map(phi_point),
        "passed": r.passed(),
    })
}

pub fn bound(i: &BigInt, h: u64, k_max: u32, bound: Option<u32>, bs: u64) -> Value {
    json!({ "I": int(i), "h": h, "k_max": k_max, "bound": bound, "bombieri_schmidt": bs })
}

pub fn pell(u: &PellUnit, period: &[u64]) -> Value {
    json!({
        "d": u.d,
        "x": int(&u.x),
        "y": int(&u.y),
        "norm": u.norm,
        "period": period,
        "ln_unit": u.ln(),
    })
}

pub fn curve_bound(n: u64, b: f64) -> Value {
    json!({ "N": n, "bound": b })
}

pub fn curve_points(n: u64, x_max: u64, pts: &[(u64, u64)], b: f64) -> Value {
    json!({
        "N": n,
        "x_max": x_max,
        "count": pts.len(),
        "points": pts.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
        "bound": b,
    })
}

pub fn tzanakis(t: &TzanakisInstance) -> Value {
    let r = &t.reduced;
    json!({
        "d": t.d,
        "k": t.k,
        "s": t.s,
        "t": t.t,
        "conic_point": r.base_point,
        "R2": int(&r.r2),
        "T2": int(&r.t2),
        "z1": int(&r.z1),
        "form": form(&t.form),
        "I": int(&t.invariants.i),
        "J": int(&t.invariants.j),
        "disc": int(&t.invariants.disc),
        "I_approx": t.invariants.i.to_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_exact() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&n).to_string(), "123456789012345678901234567890");
        assert_eq!(int(&BigInt::from(-7)).as_i64(), Some(-7));
    }

    #[test]
    fn field_order_is_stable() {
        let v = invariants(&QuarticForm::from_i64([1, 0, 0, 0, -1]));
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["form", "I", "J", "disc", "H", "R", "hessian", "diagonalizable"]);
        assert_eq!(v["I"].as_i64(), Some(-12));
    }
}
