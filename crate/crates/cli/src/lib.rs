//! Batch driver for `quartic-thue`: JSON-lines records, the solution-count
//! table pipeline and the verification suites behind `quartic-thue verify`.

pub mod checks;
pub mod output;
pub mod record;
pub mod table;
pub mod verify;

use quartic_thue::enumerate::BConvention;

/// Command line spelling of [`BConvention`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Convention {
    #[default]
    Standard,
    /// `b <= 2`; also accepted as `narrow`.
    #[value(name = "paper", alias = "narrow")]
    Narrow,
}

impl From<Convention> for BConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Standard => BConvention::Standard,
            Convention::Narrow => BConvention::Narrow,
        }
    }
}
