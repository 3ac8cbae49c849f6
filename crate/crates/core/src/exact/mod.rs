//! Exact integers, rationals and the classical number tables.

mod rational;
mod tables;

pub use rational::Rational;
pub use rug::Integer;
pub use tables::{
    bernoulli, binomial, euler_number, eulerian, factorial, harmonic, pow2, EulerianKind,
    NumberTables,
};
