//! Numeric diagonalization `F = u^4 - v^4` of forms with `J = 0`, `I < 0`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::form::{Matrix2, QuarticForm};
use crate::roots::real_roots;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// Real linear forms `u = alpha x + beta y`, `v = gamma x + delta y` with `u^4 - v^4 ~ F`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResolventPair {
    pub u_alpha: f64,
    pub u_beta: f64,
    pub v_gamma: f64,
    pub v_delta: f64,
    /// `|alpha delta - beta gamma|`.
    pub j_abs: f64,
    /// Largest absolute coefficient error of `u^4 - v^4` against `F`.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolutionDiagnostics {
    pub z: f64,
    pub zeta: f64,
    /// `+1` or `-1`: the real fourth root of unity closest to `v / u`.
    pub related_root: i8,
}

impl ResolventPair {
    pub fn u(&self, x: f64, y: f64) -> f64 {
        self.u_alpha * x + self.u_beta * y
    }

    pub fn v(&self, x: f64, y: f64) -> f64 {
        self.v_gamma * x + self.v_delta * y
    }

    /// Coefficients of `u^4 - v^4`.
    pub fn expand(&self) -> [f64; 5] {
        expand([self.u_alpha, self.u_beta, self.v_gamma, self.v_delta])
    }
}

fn pw(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * x)
}

fn expand(p: [f64; 4]) -> [f64; 5] {
    let [a, b, c, d] = p;
    [
        pw(a, 4) - pw(c, 4),
        4.0 * (pw(a, 3) * b - pw(c, 3) * d),
        6.0 * (a * a * b * b - c * c * d * d),
        4.0 * (a * pw(b, 3) - c * pw(d, 3)),
        pw(b, 4) - pw(d, 4),
    ]
}

fn residual(p: [f64; 4], target: &[f64; 5]) -> f64 {
    let e = expand(p);
    (0..5).map(|k| libm::fabs(e[k] - target[k])).fold(0.0, f64::max)
}

/// One Gauss-Newton step on the five coefficient equations.
fn newton_step(p: [f64; 4], target: &[f64; 5]) -> [f64; 4] {
    let [a, b, c, d] = p;
    let e = expand(p);
    let r: [f64; 5] = core::array::from_fn(|k| e[k] - target[k]);
    let jac: [[f64; 5]; 4] = [
        [4.0 * pw(a, 3), 12.0 * a * a * b, 12.0 * a * b * b, 4.0 * pw(b, 3), 0.0],
        [0.0, 4.0 * pw(a, 3), 12.0 * a * a * b, 12.0 * a * b * b, 4.0 * pw(b, 3)],
        [-4.0 * pw(c, 3), -12.0 * c * c * d, -12.0 * c * d * d, -4.0 * pw(d, 3), 0.0],
        [0.0, -4.0 * pw(c, 3), -12.0 * c * c * d, -12.0 * c * d * d, -4.0 * pw(d, 3)],
    ];
    let mut m = [[0.0f64; 5]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = (0..5).map(|k| jac[i][k] * jac[j][k]).sum();
        }
        m[i][4] = -(0..5).map(|k| jac[i][k] * r[k]).sum::<f64>();
    }
    match solve4(m) {
        Some(dx) => core::array::from_fn(|i| p[i] + dx[i]),
        None => p,
    }
}

/// Gaussian elimination with partial pivoting on an augmented 4x5 system.
fn solve4(mut m: [[f64; 5]; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let piv = (col..4).max_by(|&i, &j| libm::fabs(m[i][col]).total_cmp(&libm::fabs(m[j][col])))?;
        if m[piv][col] == 0.0 || !m[piv][col].is_finite() {
            return None;
        }
        m.swap(col, piv);
        for row in col + 1..4 {
            let f = m[row][col] / m[col][col];
            for k in col..5 {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    let mut x = [0.0; 4];
    for i in (0..4).rev() {
        let s: f64 = (i + 1..4).map(|k| m[i][k] * x[k]).sum();
        x[i] = (m[i][4] - s) / m[i][i];
    }
    Some(x)
}

/// Initial resolvents for a form with `a0 != 0` from its two real roots.
fn initial_guess(form: &QuarticForm, target: &[f64; 5]) -> Option<[f64; 4]> {
    let roots = real_roots(&form.dehomogenize(), 120);
    if roots.len() != 2 {
        return None;
    }
    let (r1, r2) = (roots[0].to_f64(), roots[1].to_f64());
    let a0 = target[0];
    let b: [f64; 5] = core::array::from_fn(|k| target[k] / a0);
    // z^4 + b1 z^3 + ... = (z^2 - S z + P)(z^2 + p z + q), so p = b1 + S
    let sum = r1 + r2;
    let p = b[1] + sum;
    let s = (-p / 2.0 - r2) / (r1 - r2);
    let t = 1.0 - s;
    if !(s > 0.0 && t > 0.0) {
        return None;
    }
    let l3 = libm::sqrt(libm::fabs(a0) / (2.0 * libm::sqrt(s * t)));
    let mut l1 = libm::sqrt(2.0 * l3 * s);
    let l2 = libm::sqrt(2.0 * l3 * t);
    if (a0 < 0.0) != (l1 * l2 * l3 < 0.0) {
        l1 = -l1;
    }
    Some([(l1 + l2) / 2.0, -(l1 * r1 + l2 * r2) / 2.0, (l2 - l1) / 2.0, (l1 * r1 - l2 * r2) / 2.0])
}

fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// [`diagonalize_with_tolerance`] with [`DEFAULT_TOLERANCE`].
pub fn diagonalize(form: &QuarticForm) -> Result<ResolventPair> {
    diagonalize_with_tolerance(form, DEFAULT_TOLERANCE)
}

/// Real `u`, `v` with `u^4 - v^4 = F`; `tolerance` is relative to the largest coefficient.
pub fn diagonalize_with_tolerance(form: &QuarticForm, tolerance: f64) -> Result<ResolventPair> {
    let inv = form.invariants();
    if !inv.j.is_zero() {
        return Err(Error::NotDiagonalizable("J is nonzero"));
    }
    if inv.disc.is_zero() {
        return Err(Error::DegenerateForm("discriminant is zero"));
    }
    if inv.i.is_positive() {
        return Err(Error::NotDiagonalizable("I > 0 has no real resolvents"));
    }
    // Move a0 away from zero with y -> y + k x, then pull the resolvents back.
    let mut k = 0i64;
    let mut work = form.clone();
    while work.coeff(0).is_zero() {
        k += 1;
        work = form.substitute(&Matrix2::new(1, 0, k, 1));
    }
    let target: [f64; 5] = core::array::from_fn(|i| to_f64(work.coeff(i)));
    let scale = target.iter().map(|c| libm::fabs(*c)).fold(0.0, f64::max);
    let mut p = initial_guess(&work, &target).ok_or(Error::NumericalFailure { residual: f64::INFINITY })?;
    let mut best = residual(p, &target);
    for _ in 0..8 {
        let next = newton_step(p, &target);
        let r = residual(next, &target);
        if !(r < best) {
            break;
        }
        p = next;
        best = r;
    }
    let [mut a, mut b, mut c, mut d] = p;
    let kf = k as f64;
    a -= kf * b;
    c -= kf * d;
    if a < 0.0 || (a == 0.0 && b < 0.0) {
        (a, b) = (-a, -b);
    }
    if c < 0.0 || (c == 0.0 && d < 0.0) {
        (c, d) = (-c, -d);
    }
    let orig: [f64; 5] = core::array::from_fn(|i| to_f64(form.coeff(i)));
    let res = residual([a, b, c, d], &orig);
    if !(res <= tolerance * scale.max(1.0)) {
        return Err(Error::NumericalFailure { residual: res });
    }
    Ok(ResolventPair {
        u_alpha: a,
        u_beta: b,
        v_gamma: c,
        v_delta: d,
        j_abs: libm::fabs(a * d - b * c),
        residual: res,
    })
}

/// `Z = max(|u|, |v|)`, `zeta = |F| / Z^4` and the root of unity the pair is related to.
pub fn solution_diagnostics(
    form: &QuarticForm,
    res: &ResolventPair,
    x: &BigInt,
    y: &BigInt,
) -> Result<SolutionDiagnostics> {
    let value = form.eval(x, y);
    if value.is_zero() {
        return Err(Error::ZeroValue);
    }
    let (xf, yf) = (to_f64(x), to_f64(y));
    let (u, v) = (res.u(xf, yf), res.v(xf, yf));
    let z = libm::fabs(u).max(libm::fabs(v));
    let zeta = libm::fabs(to_f64(&value)) / pw(z, 4);
    // v/u is real, so only +1 and -1 compete; a tie goes to +1
    let related_root = if u != 0.0 && v != 0.0 && (u < 0.0) != (v < 0.0) { -1 } else { 1 };
    Ok(SolutionDiagnostics { z, zeta, related_root })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j_from_disc(f: &QuarticForm) -> f64 {
        let d = to_f64(&f.invariants().disc.abs());
        libm::pow(d / 256.0, 1.0 / 12.0)
    }

    #[test]
    fn diagonal_forms() {
        let f = QuarticForm::from_i64([1, 0, 0, 0, -2]);
        let r = diagonalize(&f).unwrap();
        let q = libm::pow(2.0, 0.25);
        assert!(libm::fabs(r.u_alpha - 1.0) < 1e-12 && libm::fabs(r.u_beta) < 1e-12);
        assert!(libm::fabs(r.v_gamma) < 1e-12 && libm::fabs(r.v_delta - q) < 1e-12);
        assert!(libm::fabs(r.j_abs - 1.189207115002721) < 1e-12);
        let r = diagonalize(&QuarticForm::from_i64([1, 0, 0, 0, -1])).unwrap();
        assert!(libm::fabs(r.j_abs - 1.0) < 1e-12);
    }

    #[test]
    fn outside_the_regime() {
        let f = QuarticForm::from_i64([1, 0, 0, 0, 1]);
        assert!(matches!(diagonalize(&f), Err(Error::NotDiagonalizable(_))));
        let f = QuarticForm::from_i64([1, 2, 3, 4, 5]);
        assert!(matches!(diagonalize(&f), Err(Error::NotDiagonalizable(_))));
        let f = QuarticForm::from_i64([0, 0, 0, 0, 1]);
        assert!(matches!(diagonalize(&f), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn transformed_and_leading_zero_forms() {
        let base = QuarticForm::from_i64([3, 0, 0, 0, -7]);
        for m in [Matrix2::new(1, 1, 0, 1), Matrix2::new(2, 1, 1, 1), Matrix2::new(0, 1, 1, 3), Matrix2::new(1, 0, -3, 1)] {
            let f = base.act(&m).unwrap();
            let r = diagonalize(&f).unwrap();
            assert!(libm::fabs(r.j_abs / j_from_disc(&f) - 1.0) < 1e-9, "{f}");
            let scale = f.height().to_f64().unwrap();
            assert!(r.residual <= 1e-9 * scale, "{f} {}", r.residual);
        }
    }

    #[test]
    fn diagnostics() {
        let f = QuarticForm::from_i64([1, 0, 0, 0, -2]);
        let r = diagonalize(&f).unwrap();
        let d = solution_diagnostics(&f, &r, &BigInt::from(1), &BigInt::from(0)).unwrap();
        assert!(libm::fabs(d.z - 1.0) < 1e-12 && libm::fabs(d.zeta - 1.0) < 1e-12);
        assert_eq!(d.related_root, 1);
        let d = solution_diagnostics(&f, &r, &BigInt::from(1), &BigInt::from(1)).unwrap();
        assert!(libm::fabs(d.z - libm::pow(2.0, 0.25)) < 1e-12);
        assert!(libm::fabs(d.zeta - 0.5) < 1e-12);
        // u = 1, v = 2^(1/4): v/u is positive
        assert_eq!(d.related_root, 1);
        let d = solution_diagnostics(&f, &r, &BigInt::from(1), &BigInt::from(-1)).unwrap();
        assert_eq!(d.related_root, -1);
        let g = QuarticForm::from_i64([1, 0, 0, 0, -1]);
        let r = diagonalize(&g).unwrap();
        assert_eq!(solution_diagnostics(&g, &r, &BigInt::from(1), &BigInt::from(1)), Err(Error::ZeroValue));
    }
}
