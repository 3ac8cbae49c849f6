//! Double-exponential quadrature used as an independent numeric oracle for
//! the closed forms.

mod de;
mod integrals;

pub use de::{integrate, QuadResult, DEFAULT_DIGITS, MAX_QUAD_DIGITS};
pub use integrals::{quad_c_constant, quad_integral, quad_log_family, quad_phi, quad_phi_minus_pole, quad_sinh_over_z};
