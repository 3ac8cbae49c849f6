//! Exact closed forms for Mellin transforms of `1/artanh x` and
//! `1/(sqrt(1-x^2) artanh x)`, the hyperbolic log integrals they are built
//! from, and independent high-precision checks of all of it.

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod lfunc;
pub mod quad;
pub mod reference;
pub mod series;
pub mod verify;

pub use error::{MellinError, Result};
pub use exact::{Integer, Rational};
