//! Exact formal power series and the Taylor-coefficient families built on
//! them.

mod families;
mod power_series;

pub use families::{
    arctanh_sq_coeff, c_coeff, c_coeffs, cosh_pow_y, d_coeff, d_coeffs, gh_table, omega,
    reciprocal_coeffs, GHTable, ReciprocalCoeffs,
};
pub use power_series::PowerSeries;
