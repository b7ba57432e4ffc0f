//! Open and closed potentials of the resolution and the orbifold.

pub mod orbifold;
pub mod profile;
pub mod resolution;
pub mod trees;

pub use orbifold::*;
pub use profile::*;
pub use resolution::*;
pub use trees::*;
