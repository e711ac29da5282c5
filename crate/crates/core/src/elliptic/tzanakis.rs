//! The quartic form attached to `s^2 - d t^2 = k` through the conic `-X^2 + k Y^2 + t Z^2 = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::arith::squarefree;
use super::conic::{conic_point, parametrize_conic, reduce_content, relations, ConicParametrization};
use crate::error::{Error, Result};
use crate::form::{InvariantTriple, QuarticForm};
use crate::roots::isolate;

/// Holzer's bound: a soluble conic has a point with every coordinate at most this.
fn holzer_bound(k: i64, t: i64) -> u64 {
    let m = (k.unsigned_abs() * t.unsigned_abs()).max(k.unsigned_abs()).max(t.unsigned_abs());
    num_integer::Roots::sqrt(&m) + 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TzanakisInstance {
    pub d: i64,
    pub k: i64,
    pub s: i64,
    pub t: i64,
    /// The parametrization returned by the conic construction.
    pub conic: ConicParametrization,
    /// The equivalent parametrization with `S2 = 0` used to build the form.
    pub reduced: ConicParametrization,
    pub form: QuarticForm,
    pub invariants: InvariantTriple,
}

type Quad = [BigInt; 3];

/// Coefficients of `R x^2 - 2 S x y + T y^2` after `x -> m00 x + m01 y`, `y -> m10 x + m11 y`.
fn sub_quad(q: &Quad, m: [[i64; 2]; 2]) -> Quad {
    let [r, s, t] = q;
    let [[p, qq], [u, v]] = m.map(|row| row.map(BigInt::from));
    // R (p x + q y)^2 - 2S (p x + q y)(u x + v y) + T (u x + v y)^2
    let two = BigInt::from(2);
    let xx = r * &p * &p - &two * s * &p * &u + t * &u * &u;
    let xy = &two * r * &p * &qq - &two * s * (&p * &v + &qq * &u) + &two * t * &u * &v;
    let yy = r * &qq * &qq - &two * s * &qq * &v + t * &v * &v;
    [xx, -(xy / &two), yy]
}

fn transform(p: &ConicParametrization, m: [[i64; 2]; 2]) -> ConicParametrization {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let [r1, s1, t1] = sub_quad(&[p.r1.clone(), p.s1.clone(), p.t1.clone()], m);
    let [r2, s2, t2] = sub_quad(&[p.r2.clone(), p.s2.clone(), p.t2.clone()], m);
    ConicParametrization { r1, s1, t1, r2, s2, t2, z1: &p.z1 * BigInt::from(det).abs(), ..p.clone() }
}

/// Makes `S2 = 0` by `x -> x + S2 y`, `y -> R2 y` after moving a nonzero coefficient to `R2`.
fn reduce(p: &ConicParametrization) -> Result<ConicParametrization> {
    let mut q = p.clone();
    if q.r2.is_zero() {
        q = if !q.t2.is_zero() { transform(&q, [[0, 1], [1, 0]]) } else { transform(&q, [[1, 1], [1, -1]]) };
    }
    if q.r2.is_zero() {
        return Err(Error::NormalizationFailure);
    }
    if !q.s2.is_zero() {
        let (s2, r2) = (i64::try_from(&q.s2), i64::try_from(&q.r2));
        let (Ok(s2), Ok(r2)) = (s2, r2) else {
            return Err(Error::NormalizationFailure);
        };
        q = transform(&q, [[1, s2], [0, r2]]);
    }
    reduce_content(&mut q);
    let rel = relations(&q);
    if !(rel[0] && rel[1] && rel[2]) || !q.s2.is_zero() || q.z1.is_zero() {
        return Err(Error::NormalizationFailure);
    }
    Ok(q)
}

fn build_form(q: &ConicParametrization, d: i64, s: i64, t: i64) -> QuarticForm {
    let (s, t, d) = (BigInt::from(s), BigInt::from(t), BigInt::from(d));
    // quadratics as [x^2, xy, y^2] coefficients
    let a1 = [&q.r1 - &s * &q.r2, -(BigInt::from(2)) * (&q.s1 - &s * &q.s2), &q.t1 - &s * &q.t2];
    let a2 = [&t * &q.r2, -(BigInt::from(2)) * &t * &q.s2, &t * &q.t2];
    let sq = |a: &[BigInt; 3]| -> [BigInt; 5] {
        [
            &a[0] * &a[0],
            BigInt::from(2) * &a[0] * &a[1],
            &a[1] * &a[1] + BigInt::from(2) * &a[0] * &a[2],
            BigInt::from(2) * &a[1] * &a[2],
            &a[2] * &a[2],
        ]
    };
    let (p1, p2) = (sq(&a1), sq(&a2));
    QuarticForm::new(core::array::from_fn(|i| &p1[i] - &d * &p2[i]))
}

/// Builds `F = A1^2 - d A2^2` and checks `J = 0`, `I < 0`, the closed form of `I` and two simple real roots.
pub fn tzanakis_form(d: i64, k: i64, s: i64, t: i64) -> Result<TzanakisInstance> {
    if d < 2 || !squarefree(d as u64) {
        return Err(Error::Domain("d must be a squarefree integer > 1"));
    }
    if k <= 0 || !squarefree(k as u64) {
        return Err(Error::Domain("k must be a positive squarefree integer"));
    }
    if s <= 0 || t <= 0 || k.gcd(&d) != 1 {
        return Err(Error::Domain("need s, t > 0 and gcd(k, d) = 1"));
    }
    if i128::from(s) * i128::from(s) - i128::from(d) * i128::from(t) * i128::from(t) != i128::from(k) {
        return Err(Error::Domain("s^2 - d t^2 must equal k"));
    }
    let bound = holzer_bound(k, t);
    let point = conic_point(-1, k, t, bound).ok_or(Error::NoConicPoint(bound))?;
    let conic = parametrize_conic(-1, k, t, point)?;
    let reduced = reduce(&conic)?;
    let form = build_form(&reduced, d, s, t);
    let invariants = form.invariants();
    if !invariants.j.is_zero() {
        return Err(Error::PropositionViolation("J is nonzero"));
    }
    let expected = BigInt::from(48 * k) * BigInt::from(t).pow(3) * &reduced.t2 * &reduced.r2
        * &reduced.z1 * &reduced.z1 * BigInt::from(d);
    if invariants.i != expected {
        return Err(Error::PropositionViolation("I differs from 48 k t^3 T2 R2 z1^2 d"));
    }
    if !invariants.i.is_negative() {
        return Err(Error::PropositionViolation("I is not negative"));
    }
    let p = form.dehomogenize();
    if !p.is_squarefree() || isolate(&p).len() + usize::from(form.coeff(0).is_zero()) != 2 {
        return Err(Error::PropositionViolation("F(x, 1) does not have exactly two simple real roots"));
    }
    Ok(TzanakisInstance { d, k, s, t, conic, reduced, form, invariants })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances() {
        let inst = tzanakis_form(2, 1, 3, 2).unwrap();
        // 48 k t^3 T2 R2 z1^2 d with (R2, T2, z1) = (-1, 8, 2)
        assert_eq!(inst.invariants.i, BigInt::from(-24576));
        assert_eq!(inst.form, QuarticForm::from_i64([28, -192, 384, 0, -512]));
        assert!(inst.invariants.j.is_zero());
        assert!(inst.invariants.disc.is_negative());
        assert_eq!(relations(&inst.conic), [true; 4]);
        for (d, k, s, t) in [(3, 1, 2, 1), (2, 7, 3, 1), (7, 2, 3, 1), (3, 1, 7, 4), (5, 11, 4, 1), (11, 5, 4, 1)] {
            let inst = tzanakis_form(d, k, s, t).unwrap();
            assert!(inst.invariants.i.is_negative(), "{d} {k} {s} {t}");
        }
    }

    #[test]
    fn rejects() {
        assert!(tzanakis_form(2, 1, 3, 1).is_err());
        assert!(tzanakis_form(4, 1, 3, 1).is_err());
        assert!(tzanakis_form(2, 1, 3, -2).is_err());
        assert!(tzanakis_form(2, -1, 1, 1).is_err());
    }
}
