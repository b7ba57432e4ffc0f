//! Crepant resolution changes of variables and their verification.

pub mod closed;
pub mod continuation;
pub mod open;

pub use closed::*;
pub use continuation::*;
pub use open::*;
