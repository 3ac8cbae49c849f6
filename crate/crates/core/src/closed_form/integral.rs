use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, MellinError, Result};

use super::builders::{log_integral_even_cosh, log_integral_odd_cosh, phi_odd_via_sinh_over_z, sinh_over_z_integral};
use super::form::ClosedForm;

/// Which integral a request targets, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum IntegralSpec {
    /// `∫_0^∞ sinh^{2q+1}(z) ln z / cosh^{2n+1}(z) dz`
    LogOddCosh { q: usize, n: usize },
    /// `∫_0^∞ sinh^{2q+1}(z) ln z / cosh^{2n}(z) dz`
    LogEvenCosh { q: usize, n: usize },
    /// `∫_0^∞ sinh^{2q}(z) / (z cosh^{N}(z)) dz`
    SinhOverZ { q: usize, big_n: usize },
    /// `∫_0^1 x^{s-1} / artanh x dx`
    Phi1 { s: u32 },
    /// `∫_0^1 x^{s-1} / (sqrt(1-x^2) artanh x) dx`
    Phi2 { s: u32 },
}

impl IntegralSpec {
    /// Checks the convergence constraint of the family.
    pub fn validate(&self) -> Result<()> {
        match *self {
            IntegralSpec::LogOddCosh { q, n } if n == 0 || q >= n => Err(domain(format!(
                "need 2q+1 < 2n+1 and n >= 1 for the odd log family (q = {q}, n = {n})"
            ))),
            IntegralSpec::LogEvenCosh { q, n } if n == 0 || q >= n => Err(domain(format!(
                "need 2q+1 < 2n and n >= 1 for the even log family (q = {q}, n = {n})"
            ))),
            IntegralSpec::SinhOverZ { q, big_n } if q == 0 || 2 * q >= big_n => Err(domain(format!(
                "need 0 < 2q < N for the sinh-over-z family (q = {q}, N = {big_n})"
            ))),
            IntegralSpec::Phi1 { s } | IntegralSpec::Phi2 { s } if s <= 1 => {
                Err(domain(format!("Phi(s) needs s > 1 (s = {s})")))
            }
            _ => Ok(()),
        }
    }

    /// Exponent of cosh in the denominator, or `s` for the Mellin families.
    pub fn denominator_exponent(&self) -> usize {
        match *self {
            IntegralSpec::LogOddCosh { n, .. } => 2 * n + 1,
            IntegralSpec::LogEvenCosh { n, .. } => 2 * n,
            IntegralSpec::SinhOverZ { big_n, .. } => big_n,
            IntegralSpec::Phi1 { s } | IntegralSpec::Phi2 { s } => s as usize,
        }
    }

    /// Closed form over the positive-argument basis. Φ at even arguments has
    /// no finite closed form and is reported as a domain error.
    pub fn closed_form(&self) -> Result<ClosedForm> {
        self.validate()?;
        match *self {
            IntegralSpec::LogOddCosh { q, n } => log_integral_odd_cosh(q, n),
            IntegralSpec::LogEvenCosh { q, n } => log_integral_even_cosh(q, n),
            IntegralSpec::SinhOverZ { q, big_n } => sinh_over_z_integral(q, big_n),
            IntegralSpec::Phi1 { s } | IntegralSpec::Phi2 { s } => {
                if s % 2 == 0 {
                    return Err(domain(format!("no finite closed form for Phi at even s = {s}")));
                }
                let which = if matches!(self, IntegralSpec::Phi1 { .. }) { 1 } else { 2 };
                phi_odd_via_sinh_over_z(which, (s as usize - 1) / 2)
            }
        }
    }
}

impl fmt::Display for IntegralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IntegralSpec::LogOddCosh { q, n } => write!(f, "log-odd(q={q},n={n})"),
            IntegralSpec::LogEvenCosh { q, n } => write!(f, "log-even(q={q},n={n})"),
            IntegralSpec::SinhOverZ { q, big_n } => write!(f, "sinh-over-z(q={q},N={big_n})"),
            IntegralSpec::Phi1 { s } => write!(f, "phi1(s={s})"),
            IntegralSpec::Phi2 { s } => write!(f, "phi2(s={s})"),
        }
    }
}

impl FromStr for IntegralSpec {
    type Err = MellinError;

    /// Parses the `Display` form, e.g. `log-odd(q=0,n=1)` or `phi2(s=3)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || MellinError::Parse(format!("invalid integral spec `{s}`"));
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let body = rest.strip_suffix(')').ok_or_else(bad)?;
        let mut q = None;
        let mut n = None;
        let mut sv = None;
        for kv in body.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            match k.trim() {
                "q" => q = Some(v),
                "n" | "N" => n = Some(v),
                "s" => sv = Some(v as u32),
                _ => return Err(bad()),
            }
        }
        let spec = match name.trim() {
            "log-odd" => IntegralSpec::LogOddCosh { q: q.ok_or_else(bad)?, n: n.ok_or_else(bad)? },
            "log-even" => IntegralSpec::LogEvenCosh { q: q.ok_or_else(bad)?, n: n.ok_or_else(bad)? },
            "sinh-over-z" => IntegralSpec::SinhOverZ { q: q.ok_or_else(bad)?, big_n: n.ok_or_else(bad)? },
            "phi1" => IntegralSpec::Phi1 { s: sv.ok_or_else(bad)? },
            "phi2" => IntegralSpec::Phi2 { s: sv.ok_or_else(bad)? },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(IntegralSpec::LogOddCosh { q: 0, n: 1 }.validate().is_ok());
        assert!(IntegralSpec::LogOddCosh { q: 3, n: 2 }.validate().is_err());
        assert!(IntegralSpec::LogEvenCosh { q: 1, n: 1 }.validate().is_err());
        assert!(IntegralSpec::SinhOverZ { q: 2, big_n: 4 }.validate().is_err());
        assert!(IntegralSpec::Phi1 { s: 1 }.validate().is_err());
    }

    #[test]
    fn display_round_trip() {
        for spec in [
            IntegralSpec::LogOddCosh { q: 0, n: 1 },
            IntegralSpec::LogEvenCosh { q: 1, n: 2 },
            IntegralSpec::SinhOverZ { q: 3, big_n: 7 },
            IntegralSpec::Phi1 { s: 5 },
            IntegralSpec::Phi2 { s: 3 },
        ] {
            assert_eq!(spec.to_string().parse::<IntegralSpec>().unwrap(), spec);
        }
        assert!("phi3(s=2)".parse::<IntegralSpec>().is_err());
    }

    #[test]
    fn phi_closed_forms_route_to_sinh_over_z() {
        assert_eq!(
            IntegralSpec::Phi1 { s: 3 }.closed_form().unwrap(),
            sinh_over_z_integral(1, 4).unwrap()
        );
        assert_eq!(
            IntegralSpec::Phi2 { s: 7 }.closed_form().unwrap(),
            sinh_over_z_integral(3, 7).unwrap()
        );
        assert!(IntegralSpec::Phi2 { s: 4 }.closed_form().is_err());
    }
}
