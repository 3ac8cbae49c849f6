//! Exact symbolic closed forms of the hyperbolic log integrals, the
//! sinh-over-z integrals and the odd-argument Mellin values.

mod builders;
mod form;
mod integral;

pub use builders::{
    beta_coeffs, eta_coeffs, log_even_coeffs, log_integral, log_integral_even_cosh,
    log_integral_odd_cosh, log_odd_coeffs, mellin_even_partial, phi_odd_closed_form,
    phi_odd_via_sinh_over_z, s_coeff, sinh_over_z_integral, LogEvenCoeffs, LogOddCoeffs,
};
pub use form::{BasisSymbol, ClosedForm};
pub use integral::IntegralSpec;
