use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::report::CellRange;
use crate::error::MellinError;

/// Every suite `verify` knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityFamily {
    AltBinomOdd,
    AltBinomEven,
    COddPower,
    EulerianASum,
    EulerianBSum,
    BinomCoshSum,
    PropVanishing,
    PropEtaCoeff,
    PropZeta2Coeff,
    PropDIdentity,
    LemmaEulerBernoulli,
    CoupledSeries,
    Bounds,
    CrossRep,
    /// ln π never survives in a sinh-over-z closed form.
    RemarkLnPi,
    /// Closed form against quadrature for every integral up to a given
    /// denominator exponent.
    QuadSweep,
    /// Behaviour of Φ at its pole and the constants C₁, C₂.
    Asymptotic,
}

use IdentityFamily::*;

impl IdentityFamily {
    pub const ALL: [IdentityFamily; 17] = [
        AltBinomOdd,
        AltBinomEven,
        COddPower,
        EulerianASum,
        EulerianBSum,
        BinomCoshSum,
        PropVanishing,
        PropEtaCoeff,
        PropZeta2Coeff,
        PropDIdentity,
        LemmaEulerBernoulli,
        CoupledSeries,
        Bounds,
        CrossRep,
        RemarkLnPi,
        QuadSweep,
        Asymptotic,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            AltBinomOdd => "alt-binom-odd",
            AltBinomEven => "alt-binom-even",
            COddPower => "c-odd-power",
            EulerianASum => "eulerian-a-sum",
            EulerianBSum => "eulerian-b-sum",
            BinomCoshSum => "binom-cosh-sum",
            PropVanishing => "prop-vanishing",
            PropEtaCoeff => "prop-eta-coeff",
            PropZeta2Coeff => "prop-zeta2-coeff",
            PropDIdentity => "prop-d-identity",
            LemmaEulerBernoulli => "lemma-euler-bernoulli",
            CoupledSeries => "coupled-series",
            Bounds => "bounds",
            CrossRep => "cross-rep",
            RemarkLnPi => "remark-lnpi",
            QuadSweep => "quad-sweep",
            Asymptotic => "asymptotic",
        }
    }

    /// Pure exact arithmetic, no floating point.
    pub fn is_exact(self) -> bool {
        !matches!(self, CoupledSeries | Bounds | CrossRep | QuadSweep | Asymptotic)
    }

    /// Range of the leading parameter used when none is given. `None` for
    /// suites on a fixed grid.
    ///
    /// - `n` for the identity families
    /// - `N` for `remark-lnpi` and `quad-sweep`
    /// - the largest `n` of Φ(2n+1) for `cross-rep`
    pub fn default_range(self) -> Option<CellRange> {
        let r = CellRange::new;
        match self {
            AltBinomOdd | COddPower | BinomCoshSum => Some(r(0, 25)),
            AltBinomEven | EulerianASum | EulerianBSum => Some(r(1, 25)),
            PropVanishing => Some(r(1, 20)),
            PropEtaCoeff => Some(r(0, 50)),
            PropZeta2Coeff => Some(r(2, 25)),
            PropDIdentity => Some(r(0, 15)),
            LemmaEulerBernoulli => Some(r(1, 15)),
            RemarkLnPi => Some(r(3, 16)),
            QuadSweep => Some(r(2, 12)),
            CrossRep => Some(r(1, 6)),
            CoupledSeries | Bounds | Asymptotic => None,
        }
    }
}

impl fmt::Display for IdentityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the command-line name or the upper-case identifier
/// (`alt-binom-odd`, `ALT_BINOM_ODD`).
impl FromStr for IdentityFamily {
    type Err = MellinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        IdentityFamily::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| MellinError::UnknownFamily(s.to_string()))
    }
}
