//! Exact genus-zero open and closed Gromov-Witten potentials of `K_P1 + O_P1` and
//! `[C^3/Z_2]`, their gluings, and the crepant resolution changes of variables.

pub mod algebra;
pub mod crc;
pub mod error;
pub mod hodge;
pub mod potentials;
pub mod report;
pub mod suites;
pub mod vertex;

pub use algebra::*;
pub use error::{Error, Result};
