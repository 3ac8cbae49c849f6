//! High-precision values of the basis constants: ζ′ at positive even
//! integers, β′ at positive odd integers, η′ and β′ at negative integers,
//! and evaluation of closed forms.

mod bigreal;
mod cache;
mod dirichlet;
mod eval;

pub use bigreal::{bits_for, tolerance, work_bits, BigReal, GUARD_DIGITS, MAX_DIGITS};
pub use cache::{CacheKey, ConstantCache};
pub use dirichlet::{
    beta, beta_neg_exact, beta_prime, beta_prime_neg, beta_prime_odd, eta, eta_neg_exact, eta_prime,
    eta_prime_neg, eta_prime_neg_alt, euler_gamma, ln2, ln_pi, pi, zeta_prime_euler_maclaurin,
    zeta_prime_even,
};
pub(crate) use dirichlet::pi_bits;
pub use eval::{eval_closed_form, mellin_bound_gamma_ratio, phi1_bounds, rational_value, symbol_value};
