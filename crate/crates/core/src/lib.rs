//! Binary quartic forms and the Thue inequality `0 < |F(x, y)| <= h`.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`form`]: exact invariants, seminvariants, Hessian and the `GL2(Z)` action;
//! * [`diag`]: numeric diagonalization `F = u^4 - v^4` and the `Z`/`zeta` diagnostics;
//! * [`enumerate`]: all integral forms with `J = 0` and a given negative `I`;
//! * [`thue`]: a certified Thue-inequality solver and a brute-force oracle;
//! * [`siegel`]: gap exponents, the `E_i`/`Theta_i` constants, the `Phi` comparisons
//!   and the solution-count thresholds built on them;
//! * [`elliptic`]: Pell units, conic parametrization and integral points on
//!   `Y^2 = X^3 + N X`.
#![no_std]

extern crate alloc;

pub mod cf;
pub mod diag;
pub mod elliptic;
pub mod enumerate;
mod error;
pub mod form;
pub mod poly;
pub mod roots;
pub mod siegel;
pub mod solution;
pub mod thue;

pub use error::{Error, Result};
pub use form::{InvariantTriple, Matrix2, QuarticForm, SeminvariantPair};
pub use solution::PrimitiveSolution;
