use rug::ops::Pow;
use rug::Float;

use super::bigreal::{work_bits, BigReal, MAX_DIGITS};
use super::dirichlet::{
    beta_prime_neg, beta_prime_odd, eta_prime_neg, ln2, ln_pi, pi, zeta_prime_even,
};
use crate::closed_form::{BasisSymbol, ClosedForm};
use crate::error::{domain, MellinError, Result};
use crate::exact::Rational;

/// Numeric value of one basis symbol.
pub fn symbol_value(sym: BasisSymbol, digits: u32) -> Result<BigReal> {
    let bits = work_bits(digits);
    let v = match sym {
        BasisSymbol::One => Float::with_val(bits, 1),
        BasisSymbol::Ln2 => ln2(digits)?.into_value(),
        BasisSymbol::LnPi => ln_pi(digits)?.into_value(),
        BasisSymbol::ZetaPrimeRatio(p) => {
            let z = zeta_prime_even(p, digits)?.into_value();
            let pi_pow = Float::with_val(bits, pi(digits)?.value().pow(2 * p + 2));
            z / pi_pow
        }
        BasisSymbol::BetaPrimeRatio(p) => {
            let b = beta_prime_odd(p, digits)?.into_value();
            let pi_pow = Float::with_val(bits, pi(digits)?.value().pow(2 * p + 1));
            b / pi_pow
        }
        BasisSymbol::EtaPrimeNeg(i) => eta_prime_neg(i, digits)?.into_value(),
        BasisSymbol::BetaPrimeNeg(i) => beta_prime_neg(i, digits)?.into_value(),
    };
    Ok(BigReal::new(v, digits))
}

/// Extra digits so that cancellation among coefficients of size up to `c`
/// does not eat into the requested precision.
fn coefficient_guard(cf: &ClosedForm) -> u32 {
    let total: f64 = cf.terms().map(|(_, c)| c.to_f64().abs()).sum();
    if total <= 1.0 {
        0
    } else {
        total.log10().ceil() as u32
    }
}

/// Numeric value of a closed form to `digits` digits.
pub fn eval_closed_form(cf: &ClosedForm, digits: u32) -> Result<BigReal> {
    if digits > MAX_DIGITS {
        return Err(MellinError::PrecisionUnreachable {
            digits,
            reason: format!("the evaluators stop at {MAX_DIGITS} digits"),
        });
    }
    let inner = digits + coefficient_guard(cf);
    let bits = work_bits(inner);
    let mut acc = Float::new(bits);
    for (sym, c) in cf.terms() {
        let v = symbol_value(*sym, inner)?;
        acc += Float::with_val(bits, c.as_rug()) * v.value();
    }
    Ok(BigReal::new(acc, digits))
}

fn check_s(s: f64) -> Result<()> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain(format!("the bounds need s > 1 (s = {s})")));
    }
    Ok(())
}

/// Lower and upper bounds of Φ₂(s):
/// `√π/(2s) Γ((s−1)/2)/Γ(s/2)` and `√π/2 Γ((s−1)/2)/Γ(s/2)`.
pub fn mellin_bound_gamma_ratio(s: f64, digits: u32) -> Result<(BigReal, BigReal)> {
    check_s(s)?;
    let bits = work_bits(digits);
    let sf = Float::with_val(bits, s);
    let a = Float::with_val(bits, Float::with_val(bits, &sf - 1u32) / 2u32);
    let b = Float::with_val(bits, &sf / 2u32);
    // Γ(a)/Γ(b) through log-gamma; both arguments are positive.
    let ratio = (a.ln_gamma() - b.ln_gamma()).exp();
    let half_sqrt_pi = Float::with_val(bits, pi(digits)?.value().sqrt_ref()) / 2u32;
    let upper = Float::with_val(bits, &half_sqrt_pi * &ratio);
    let lower = Float::with_val(bits, &upper / &sf);
    Ok((BigReal::new(lower, digits), BigReal::new(upper, digits)))
}

/// Lower and upper bounds of Φ₁(s): `2/(s²−1)` and `1/(s−1)`.
pub fn phi1_bounds(s: f64, digits: u32) -> Result<(BigReal, BigReal)> {
    check_s(s)?;
    let bits = work_bits(digits);
    let sf = Float::with_val(bits, s);
    let sm1 = Float::with_val(bits, &sf - 1u32);
    let lower = Float::with_val(bits, 2) / (Float::with_val(bits, sf.square_ref()) - 1u32);
    let upper = sm1.recip();
    Ok((BigReal::new(lower, digits), BigReal::new(upper, digits)))
}

/// Exact rational as a BigReal; convenience for callers mixing the two.
pub fn rational_value(r: &Rational, digits: u32) -> BigReal {
    BigReal::from_rational(r, digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{c1_closed_form, c2_closed_form, C1_DECIMAL, C2_DECIMAL};

    #[test]
    fn trivial_forms() {
        let cf = ClosedForm::from_terms([(BasisSymbol::One, Rational::new(3, 4))]);
        assert_eq!(eval_closed_form(&cf, 30).unwrap().to_f64(), 0.75);
        assert_eq!(eval_closed_form(&ClosedForm::new(), 30).unwrap().to_f64(), 0.0);
    }

    #[test]
    fn constants_match_printed_decimals() {
        let c1 = eval_closed_form(&c1_closed_form(), 40).unwrap();
        let c2 = eval_closed_form(&c2_closed_form(), 40).unwrap();
        assert!(c1.matches_printed(C1_DECIMAL), "{c1}");
        assert!(c2.matches_printed(C2_DECIMAL), "{c2}");
    }

    #[test]
    fn gamma_ratio_bounds() {
        let (_, up) = mellin_bound_gamma_ratio(3.0, 30).unwrap();
        assert!((up.to_f64() - 1.0).abs() < 1e-15);
        let (_, up) = mellin_bound_gamma_ratio(2.0, 30).unwrap();
        assert!((up.to_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let (lo, up) = phi1_bounds(2.0, 30).unwrap();
        assert!((lo.to_f64() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(up.to_f64(), 1.0);
        assert!(phi1_bounds(1.0, 30).is_err());
    }
}
