use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MellinError, Result};
use crate::exact::Rational;

/// Transcendental basis term of a closed form.
///
/// The derived ordering is the canonical one: the ζ′ and β′ ratios by
/// ascending index, the negative-argument derivatives, then the constant,
/// `ln π` and `ln 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisSymbol {
    /// ζ′(2p+2)/π^{2p+2}
    ZetaPrimeRatio(u32),
    /// β′(2p+1)/π^{2p+1}
    BetaPrimeRatio(u32),
    /// η′(−2i−1)
    EtaPrimeNeg(u32),
    /// β′(−2i)
    BetaPrimeNeg(u32),
    One,
    LnPi,
    Ln2,
}

impl BasisSymbol {
    pub fn name(&self) -> &'static str {
        match self {
            BasisSymbol::ZetaPrimeRatio(_) => "zeta_prime_ratio",
            BasisSymbol::BetaPrimeRatio(_) => "beta_prime_ratio",
            BasisSymbol::EtaPrimeNeg(_) => "eta_prime_neg",
            BasisSymbol::BetaPrimeNeg(_) => "beta_prime_neg",
            BasisSymbol::One => "one",
            BasisSymbol::LnPi => "ln_pi",
            BasisSymbol::Ln2 => "ln2",
        }
    }

    fn latex(&self) -> Option<String> {
        Some(match *self {
            BasisSymbol::ZetaPrimeRatio(p) => {
                format!("\\frac{{\\zeta'({0})}}{{\\pi^{{{0}}}}}", 2 * p + 2)
            }
            BasisSymbol::BetaPrimeRatio(p) => {
                if p == 0 {
                    "\\frac{\\beta'(1)}{\\pi}".to_string()
                } else {
                    format!("\\frac{{\\beta'({0})}}{{\\pi^{{{0}}}}}", 2 * p + 1)
                }
            }
            BasisSymbol::EtaPrimeNeg(i) => format!("\\eta'(-{})", 2 * i + 1),
            BasisSymbol::BetaPrimeNeg(i) => {
                if i == 0 {
                    "\\beta'(0)".to_string()
                } else {
                    format!("\\beta'(-{})", 2 * i)
                }
            }
            BasisSymbol::One => return None,
            BasisSymbol::LnPi => "\\ln \\pi".to_string(),
            BasisSymbol::Ln2 => "\\ln 2".to_string(),
        })
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::ZetaPrimeRatio(p) => write!(f, "zeta'({})/pi^{}", 2 * p + 2, 2 * p + 2),
            BasisSymbol::BetaPrimeRatio(p) => write!(f, "beta'({})/pi^{}", 2 * p + 1, 2 * p + 1),
            BasisSymbol::EtaPrimeNeg(i) => write!(f, "eta'(-{})", 2 * i + 1),
            BasisSymbol::BetaPrimeNeg(i) => write!(f, "beta'(-{})", 2 * i),
            BasisSymbol::One => write!(f, "1"),
            BasisSymbol::LnPi => write!(f, "ln(pi)"),
            BasisSymbol::Ln2 => write!(f, "ln(2)"),
        }
    }
}

/// Finite rational linear combination of basis symbols. Zero coefficients
/// are never stored, so structural equality is exact equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    terms: BTreeMap<BasisSymbol, Rational>,
}

impl ClosedForm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisSymbol, Rational)>) -> Self {
        let mut cf = ClosedForm::new();
        for (s, c) in terms {
            cf.add_term(s, &c);
        }
        cf
    }

    /// Adds `c * sym` to the combination.
    pub fn add_term(&mut self, sym: BasisSymbol, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn coeff(&self, sym: BasisSymbol) -> Rational {
        self.terms.get(&sym).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> ClosedForm {
        ClosedForm::from_terms(self.terms.iter().map(|(s, v)| (*s, v * c)))
    }

    /// `a * x + b * y`.
    pub fn linear_combination(a: &Rational, x: &ClosedForm, b: &Rational, y: &ClosedForm) -> ClosedForm {
        let mut out = x.scale(a);
        for (s, v) in &y.terms {
            out.add_term(*s, &(v * b));
        }
        out
    }

    pub fn add(&self, other: &ClosedForm) -> ClosedForm {
        Self::linear_combination(&Rational::one(), self, &Rational::one(), other)
    }

    pub fn sub(&self, other: &ClosedForm) -> ClosedForm {
        Self::linear_combination(&Rational::one(), self, &Rational::from(-1), other)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ClosedFormJson::from(self)).expect("closed form serializes")
    }

    /// Canonical JSON: symbols in canonical order, coefficients as
    /// `num/den` strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ClosedFormJson::from(self)).expect("closed form serializes")
    }

    pub fn from_json(text: &str) -> Result<ClosedForm> {
        let raw: ClosedFormJson =
            serde_json::from_str(text).map_err(|e| MellinError::Parse(e.to_string()))?;
        raw.try_into()
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<ClosedForm> {
        let raw: ClosedFormJson =
            serde_json::from_value(v.clone()).map_err(|e| MellinError::Parse(e.to_string()))?;
        raw.try_into()
    }

    /// LaTeX in display style, e.g. `-3\,\frac{\zeta'(2)}{\pi^{2}} - \frac{1}{2} + ...`.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (sym, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let num = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            match sym.latex() {
                None => out.push_str(&num),
                Some(body) => {
                    if a != Rational::one() {
                        out.push_str(&num);
                        if matches!(sym, BasisSymbol::LnPi | BasisSymbol::Ln2) {
                            out.push_str(" ");
                        } else {
                            out.push_str("\\,");
                        }
                    }
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (sym, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *sym == BasisSymbol::One {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{sym}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    symbol: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ClosedFormJson {
    terms: Vec<TermJson>,
}

impl From<&ClosedForm> for ClosedFormJson {
    fn from(cf: &ClosedForm) -> Self {
        let terms = cf
            .terms
            .iter()
            .map(|(s, c)| {
                let (p, i) = match *s {
                    BasisSymbol::ZetaPrimeRatio(p) | BasisSymbol::BetaPrimeRatio(p) => (Some(p), None),
                    BasisSymbol::EtaPrimeNeg(i) | BasisSymbol::BetaPrimeNeg(i) => (None, Some(i)),
                    _ => (None, None),
                };
                TermJson { symbol: s.name().to_string(), p, i, coeff: c.to_canonical_string() }
            })
            .collect();
        ClosedFormJson { terms }
    }
}

impl TryFrom<ClosedFormJson> for ClosedForm {
    type Error = MellinError;

    fn try_from(raw: ClosedFormJson) -> Result<ClosedForm> {
        let mut cf = ClosedForm::new();
        for t in raw.terms {
            let need = |v: Option<u32>, key: &str| {
                v.ok_or_else(|| MellinError::Parse(format!("symbol `{}` needs key `{key}`", t.symbol)))
            };
            let sym = match t.symbol.as_str() {
                "zeta_prime_ratio" => BasisSymbol::ZetaPrimeRatio(need(t.p, "p")?),
                "beta_prime_ratio" => BasisSymbol::BetaPrimeRatio(need(t.p, "p")?),
                "eta_prime_neg" => BasisSymbol::EtaPrimeNeg(need(t.i, "i")?),
                "beta_prime_neg" => BasisSymbol::BetaPrimeNeg(need(t.i, "i")?),
                "one" => BasisSymbol::One,
                "ln_pi" => BasisSymbol::LnPi,
                "ln2" => BasisSymbol::Ln2,
                other => return Err(MellinError::Parse(format!("unknown basis symbol `{other}`"))),
            };
            let c: Rational = t.coeff.parse()?;
            cf.add_term(sym, &c);
        }
        Ok(cf)
    }
}
