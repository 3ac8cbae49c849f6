//! Identity suites, numeric consistency checks and their reports.

mod family;
mod identities;
mod numeric;
mod report;
mod worked;

pub use family::IdentityFamily;
pub use identities::*;
pub use numeric::{
    check_asymptotic_constants, check_bounds, check_coupled, check_cross_representation, coupled_residual,
    quad_sweep, specs_with_exponent, CoupledResidual, BOUNDS_GRID, COUPLED_GRID, COUPLED_TRUNCATION,
};
pub use report::{Cell, CellRange, VerifyReport};
pub use worked::reproduce_worked_examples;

use std::time::Instant;

use crate::error::{MellinError, Result};

/// Runs one suite. `range` defaults to the family's own; numeric suites use
/// `prec` digits and ignore it otherwise.
pub fn run_identity(family: IdentityFamily, range: Option<CellRange>, prec: u32) -> Result<VerifyReport> {
    use IdentityFamily::*;
    let start = Instant::now();
    let range = match (range, family.default_range()) {
        (Some(r), Some(_)) => r,
        (None, Some(r)) => r,
        (Some(_), None) => {
            return Err(MellinError::Domain(format!("suite `{family}` runs on a fixed grid and takes no range")))
        }
        (None, None) => CellRange::new(0, 0),
    };
    let mut report = match family {
        AltBinomOdd => alt_binom_odd(range),
        AltBinomEven => alt_binom_even(range),
        COddPower => c_odd_power(range),
        EulerianASum => eulerian_a(range),
        EulerianBSum => eulerian_b(range),
        BinomCoshSum => binom_cosh(range),
        PropVanishing => prop_vanishing(range),
        PropEtaCoeff => prop_eta_coeff(range),
        PropZeta2Coeff => prop_zeta2_coeff(range),
        PropDIdentity => prop_d_identity(range),
        LemmaEulerBernoulli => lemma_euler_bernoulli(range),
        RemarkLnPi => remark_lnpi(range),
        QuadSweep => quad_sweep(range, prec),
        CrossRep => check_cross_representation(range, prec),
        Bounds => check_bounds(&BOUNDS_GRID, prec),
        CoupledSeries => check_coupled(&COUPLED_GRID, COUPLED_TRUNCATION, prec),
        Asymptotic => check_asymptotic_constants(prec),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}
