//! Thue-Siegel constant machinery.
//!
//! Values involving `log2(3)` are kept exact as [`LogLinearValue`]s; signs are
//! only decided once a certified enclosure of `log2(3)` separates them from 0.

mod constants;
mod gap;
mod loglinear;
mod phi;
mod threshold;

pub use constants::{c_constant, c_triple, e_triple, exponent_e, gap_exponents, theta, CTriple, ETriple, GapExponents};
pub use gap::{gap_verify, GapCheck, GapReport, GapStatus, GapViolation};
pub use loglinear::{default_log2_3, log2_3_enclosure, LogLinearValue, LOG2_3};
pub use phi::{phi, phi_closed_form, phi_from_triples, phi_scan, PhiKind, PhiPoint, PhiScanReport};
pub use threshold::{bombieri_schmidt_count, solution_count_bound, threshold, Binding, ThresholdReport};
