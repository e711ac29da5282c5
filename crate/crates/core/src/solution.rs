//! Primitive solutions and their canonical representatives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::form::QuarticForm;

/// A coprime pair `(x, y)` with `x > 0`, or `(0, 1)`, together with `F(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveSolution {
    pub x: BigInt,
    pub y: BigInt,
    pub value: BigInt,
}

/// Outcome of [`normalize_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Pair(BigInt, BigInt),
    /// Strict mode only: the input had this common divisor.
    NotCoprime(BigInt),
}

/// Picks the representative of `{(x, y), (-x, -y)}` with `x > 0`, or `(0, 1)`.
///
/// In strict mode a non-coprime pair is flagged; otherwise it is divided by its gcd.
pub fn normalize_solution(x: &BigInt, y: &BigInt, strict: bool) -> Result<Normalized> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroPair);
    }
    let g = x.gcd(y);
    if !g.is_one() && strict {
        return Ok(Normalized::NotCoprime(g));
    }
    let (x, y) = (x / &g, y / &g);
    let (x, y) = canonical_sign(x, y);
    Ok(Normalized::Pair(x, y))
}

pub(crate) fn canonical_sign(x: BigInt, y: BigInt) -> (BigInt, BigInt) {
    if x.is_negative() || (x.is_zero() && y.is_negative()) {
        (-x, -y)
    } else {
        (x, y)
    }
}

impl PrimitiveSolution {
    /// Canonicalizes a coprime pair and evaluates the form at it.
    pub fn new(form: &QuarticForm, x: &BigInt, y: &BigInt) -> Result<Self> {
        match normalize_solution(x, y, true)? {
            Normalized::Pair(x, y) => {
                let value = form.eval(&x, &y);
                Ok(Self { x, y, value })
            }
            Normalized::NotCoprime(_) => Err(Error::Domain("solution pair must be coprime")),
        }
    }

    pub fn pair(&self) -> (&BigInt, &BigInt) {
        (&self.x, &self.y)
    }

    /// Sort key `(|y|, y, x)`.
    pub(crate) fn sort_key(&self) -> (BigInt, BigInt, BigInt) {
        (self.y.abs(), self.y.clone(), self.x.clone())
    }
}
