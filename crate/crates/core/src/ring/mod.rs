//! Exact coefficient arithmetic.

pub mod exponent;
pub mod factored;
pub mod poly;
pub mod rational;
pub mod scalar;

pub use exponent::Exponent;
pub use factored::{FactoredPoly, FactoredPolyJson, FactoredRational};
pub use poly::Poly;
pub use rational::{format_rational, parse_rational, rat, ratio};
pub use scalar::DeltaScalar;
