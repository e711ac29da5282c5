//! Points on `a X^2 + b Y^2 + c Z^2 = 0` and their quadratic parametrization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// `X = R1 x^2 - 2 S1 x y + T1 y^2`, `Y = R2 x^2 - 2 S2 x y + T2 y^2`, `Z = z1 (a x^2 + b y^2)` up to scaling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicParametrization {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub base_point: [i64; 3],
    pub r1: BigInt,
    pub s1: BigInt,
    pub t1: BigInt,
    pub r2: BigInt,
    pub s2: BigInt,
    pub t2: BigInt,
    pub z1: BigInt,
}

/// Which of the four relations hold, in the order
/// `R1T2 + R2T1 = 2S1S2`, `S2^2 - R2T2 = -ac z1^2`, `S1^2 - R1T1 = -bc z1^2`, `R1T2 = R2T1`.
pub fn relations(p: &ConicParametrization) -> [bool; 4] {
    let (a, b, c) = (BigInt::from(p.a), BigInt::from(p.b), BigInt::from(p.c));
    let z2 = &p.z1 * &p.z1;
    [
        &p.r1 * &p.t2 + &p.r2 * &p.t1 == BigInt::from(2) * &p.s1 * &p.s2,
        &p.s2 * &p.s2 - &p.r2 * &p.t2 == -(&a * &c * &z2),
        &p.s1 * &p.s1 - &p.r1 * &p.t1 == -(&b * &c * &z2),
        &p.r1 * &p.t2 == &p.r2 * &p.t1,
    ]
}

impl ConicParametrization {
    pub fn relations_hold(&self) -> bool {
        relations(self).iter().all(|&r| r)
    }

    /// The conic point at parameters `(x, y)`, not reduced.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> [BigInt; 3] {
        let q = |r: &BigInt, s: &BigInt, t: &BigInt| r * x * x - BigInt::from(2) * s * x * y + t * y * y;
        let z = &self.z1 * (BigInt::from(self.a) * x * x + BigInt::from(self.b) * y * y);
        [q(&self.r1, &self.s1, &self.t1), q(&self.r2, &self.s2, &self.t2), z]
    }
}

fn on_conic(a: i64, b: i64, c: i64, p: [i64; 3]) -> bool {
    let [x, y, z] = p.map(i128::from);
    i128::from(a) * x * x + i128::from(b) * y * y + i128::from(c) * z * z == 0
}

fn gcd3(p: [i64; 3]) -> i64 {
    p[0].gcd(&p[1]).gcd(&p[2])
}

/// A primitive nonzero point with coordinates in `[0, bound]`, by exhaustive search.
///
/// Points with no zero coordinate are preferred; within each preference the
/// search runs by increasing largest coordinate.
pub fn conic_point(a: i64, b: i64, c: i64, bound: u64) -> Option<[i64; 3]> {
    if a == 0 || b == 0 || c == 0 {
        return None;
    }
    let bound = i64::try_from(bound).ok()?;
    for min in [1, 0] {
        for m in 1..=bound {
            for x in min..=m {
                for y in min..=m {
                    for z in min..=m {
                        if x.max(y).max(z) != m {
                            continue;
                        }
                        let p = [x, y, z];
                        if gcd3(p) == 1 && on_conic(a, b, c, p) {
                            return Some(p);
                        }
                    }
                }
            }
        }
    }
    None
}

fn primitive(p: [i64; 3]) -> [i64; 3] {
    let g = gcd3(p);
    p.map(|v| v / g)
}

/// The parametrization by lines through `point`, divided by its content.
pub fn parametrize_conic(a: i64, b: i64, c: i64, point: [i64; 3]) -> Result<ConicParametrization> {
    if a == 0 || b == 0 || c == 0 || point == [0; 3] || gcd3(point) != 1 || !on_conic(a, b, c, point) {
        return Err(Error::PointNotOnConic);
    }
    let [x0, y0, z0] = point;
    // z1 = Z0 would vanish, so move to a second point on the conic
    let base = if z0 != 0 {
        point
    } else if b + c != 0 {
        primitive([(b + c) * x0, (b + c) * y0 - 2 * b * y0, -2 * b * y0])
    } else {
        primitive([(a + c) * x0 - 2 * a * x0, (a + c) * y0, -2 * a * x0])
    };
    let [x0, y0, z0] = base.map(BigInt::from);
    let (ab, bb) = (BigInt::from(a), BigInt::from(b));
    let mut p = ConicParametrization {
        a,
        b,
        c,
        base_point: base,
        r1: -(&ab * &x0),
        s1: &bb * &y0,
        t1: &bb * &x0,
        r2: &ab * &y0,
        s2: &ab * &x0,
        t2: -(&bb * &y0),
        z1: z0,
    };
    reduce_content(&mut p);
    if !p.relations_hold() || p.z1.is_zero() {
        return Err(Error::NormalizationFailure);
    }
    Ok(p)
}

pub(crate) fn reduce_content(p: &mut ConicParametrization) {
    let g = [&p.r1, &p.s1, &p.t1, &p.r2, &p.s2, &p.t2, &p.z1].into_iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() {
        for v in [&mut p.r1, &mut p.s1, &mut p.t1, &mut p.r2, &mut p.s2, &mut p.t2, &mut p.z1] {
            *v = &*v / &g;
        }
    }
    if p.z1.is_negative() {
        p.z1 = -&p.z1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_param(a: i64, b: i64, c: i64, point: [i64; 3]) -> ConicParametrization {
        let p = parametrize_conic(a, b, c, point).unwrap();
        assert_eq!(relations(&p), [true; 4], "{p:?}");
        for x in -4..=4i64 {
            for y in -4..=4i64 {
                let [xx, yy, zz] = p.eval(&x.into(), &y.into());
                let v = BigInt::from(a) * &xx * &xx + BigInt::from(b) * &yy * &yy + BigInt::from(c) * &zz * &zz;
                assert!(v.is_zero());
            }
        }
        p
    }

    #[test]
    fn points() {
        assert_eq!(conic_point(-1, 2, -1, 10), Some([1, 1, 1]));
        assert_eq!(conic_point(-1, 3, 1, 10), Some([2, 1, 1]));
        assert_eq!(conic_point(1, 1, 1, 50), None);
        assert_eq!(conic_point(-1, 1, 0, 5), None);
    }

    #[test]
    fn parametrizations() {
        let p = check_param(-1, 2, -1, [1, 1, 1]);
        assert_eq!(&p.s1 * &p.s1 - &p.r1 * &p.t1, BigInt::from(2) * &p.z1 * &p.z1);
        let p = check_param(-1, 1, 2, [1, 1, 0]);
        assert_eq!(&p.s2 * &p.s2 - &p.r2 * &p.t2, BigInt::from(2) * &p.z1 * &p.z1);
        check_param(-1, 3, 1, [2, 1, 1]);
        check_param(-1, 7, 2, [3, 1, 1]);
        check_param(2, -1, -1, [1, 1, 1]);
        check_param(1, -1, 1, [1, 1, 0]);
    }

    #[test]
    fn off_conic() {
        assert_eq!(parametrize_conic(-1, 2, -1, [1, 2, 1]), Err(Error::PointNotOnConic));
        assert_eq!(parametrize_conic(-1, 2, -1, [2, 2, 2]), Err(Error::PointNotOnConic));
    }
}
