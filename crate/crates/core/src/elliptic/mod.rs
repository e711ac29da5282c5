//! From `Y^2 = X^3 + N X` to quartic Thue equations.
//!
//! Each squarefree divisor `d` of `N` contributes Pell units of `Z[sqrt(d)]`;
//! the resulting conics are parametrized and turned into quartic forms with
//! `J = 0` and `I < 0`.

pub mod arith;
mod conic;
mod curve;
mod pell;
mod tzanakis;

use num_bigint::BigInt;

pub use conic::{conic_point, parametrize_conic, relations, ConicParametrization};
pub use curve::{curve_bound, curve_points};
pub use pell::{pell_fundamental, sqrt_cf_period, PellUnit};
pub use tzanakis::{tzanakis_form, TzanakisInstance};

/// Natural log of a positive integer of any size.
pub(crate) fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top: BigInt = x >> shift;
    let top = num_traits::ToPrimitive::to_f64(&top).unwrap_or(f64::NAN);
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}
