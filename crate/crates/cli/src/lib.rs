//! File formats and command implementations behind the `hsvd` binary.

pub mod commands;
pub mod error;
pub mod factors_file;
pub mod mm;

pub use error::CliError;
pub use factors_file::FactorsFile;
pub use mm::{read_matrix_market, write_matrix_market, MmMatrix};
