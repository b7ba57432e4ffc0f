//! Exact coefficient rings and truncated series.

pub mod gauss;
pub mod monomial;
pub mod poly;
pub mod rat;
pub mod series;
pub mod special;

pub use gauss::GaussRat;
pub use monomial::{DegreeVar, Monomial, Side, VarId};
pub use poly::{Poly, RationalQ};
pub use rat::Rat;
pub use series::{Caps, ConstantPolicy, TruncSeries};
pub use special::{special_series, Special};
