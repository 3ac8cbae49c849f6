//! Worked closed forms and decimals used as ground truth by `reproduce`, the
//! acceptance suite and the tests.

use crate::closed_form::{BasisSymbol, ClosedForm, IntegralSpec};
use crate::exact::Rational;

use BasisSymbol::{BetaPrimeNeg as BN, BetaPrimeRatio as B, EtaPrimeNeg as EN, Ln2, LnPi, One, ZetaPrimeRatio as Z};

/// A worked closed form: the integral and its expected coefficients.
pub struct WorkedExample {
    pub spec: IntegralSpec,
    pub terms: &'static [(BasisSymbol, i64, i64)],
}

impl WorkedExample {
    pub fn expected(&self) -> ClosedForm {
        ClosedForm::from_terms(self.terms.iter().map(|&(s, n, d)| (s, Rational::new(n, d))))
    }
}

const fn lo(q: usize, n: usize, terms: &'static [(BasisSymbol, i64, i64)]) -> WorkedExample {
    WorkedExample { spec: IntegralSpec::LogOddCosh { q, n }, terms }
}

const fn le(q: usize, n: usize, terms: &'static [(BasisSymbol, i64, i64)]) -> WorkedExample {
    WorkedExample { spec: IntegralSpec::LogEvenCosh { q, n }, terms }
}

const fn sz(q: usize, big_n: usize, terms: &'static [(BasisSymbol, i64, i64)]) -> WorkedExample {
    WorkedExample { spec: IntegralSpec::SinhOverZ { q, big_n }, terms }
}

/// The twelve worked log integrals.
pub static LOG_EXAMPLES: &[WorkedExample] = &[
    lo(0, 1, &[(Z(0), -3, 1), (One, -1, 2), (LnPi, 1, 2), (Ln2, -2, 3)]),
    lo(0, 2, &[(Z(0), -1, 1), (Z(1), -15, 2), (One, -23, 72), (LnPi, 1, 4), (Ln2, -14, 45)]),
    lo(1, 2, &[(Z(0), -2, 1), (Z(1), 15, 2), (One, -13, 72), (LnPi, 1, 4), (Ln2, -16, 45)]),
    lo(0, 3, &[(Z(0), -8, 15), (Z(1), -5, 1), (Z(2), -21, 1), (One, -163, 675), (LnPi, 1, 6), (Ln2, -568, 2835)]),
    lo(1, 3, &[(Z(0), -7, 15), (Z(1), -5, 2), (Z(2), 21, 1), (One, -421, 5400), (LnPi, 1, 12), (Ln2, -314, 2835)]),
    lo(2, 3, &[(Z(0), -23, 15), (Z(1), 10, 1), (Z(2), -21, 1), (One, -277, 2700), (LnPi, 1, 6), (Ln2, -694, 2835)]),
    le(0, 1, &[(B(0), -4, 1), (LnPi, 1, 1), (Ln2, -1, 1)]),
    le(0, 2, &[(B(0), -2, 3), (B(1), -16, 3), (One, -1, 4), (LnPi, 1, 3), (Ln2, -1, 3)]),
    le(1, 2, &[(B(0), -10, 3), (B(1), 16, 3), (One, 1, 4), (LnPi, 2, 3), (Ln2, -2, 3)]),
    le(0, 3, &[(B(0), -3, 10), (B(1), -8, 3), (B(2), -64, 5), (One, -61, 288), (LnPi, 1, 5), (Ln2, -1, 5)]),
    le(1, 3, &[(B(0), -11, 30), (B(1), -8, 3), (B(2), 64, 5), (One, -11, 288), (LnPi, 2, 15), (Ln2, -2, 15)]),
    le(2, 3, &[(B(0), -89, 30), (B(1), 8, 1), (B(2), -64, 5), (One, 83, 288), (LnPi, 8, 15), (Ln2, -8, 15)]),
];

/// The thirteen worked sinh-over-z integrals.
pub static SINH_OVER_Z_EXAMPLES: &[WorkedExample] = &[
    sz(1, 4, &[(Z(0), -2, 1), (Z(1), 30, 1), (One, 5, 18), (Ln2, -4, 45)]),
    sz(1, 6, &[(Z(0), -4, 5), (Z(2), 126, 1), (One, 77, 450), (Ln2, -8, 189)]),
    sz(2, 6, &[(Z(0), -6, 5), (Z(1), 30, 1), (Z(2), -126, 1), (One, 8, 75), (Ln2, -44, 945)]),
    sz(1, 8, &[(Z(0), -16, 35), (Z(1), -2, 1), (Z(2), 42, 1), (Z(3), 510, 1), (One, 16469, 132300), (Ln2, -368, 14175)]),
    sz(2, 8, &[(Z(0), -12, 35), (Z(1), 2, 1), (Z(2), 84, 1), (Z(3), -510, 1), (One, 6169, 132300), (Ln2, -232, 14175)]),
    sz(3, 8, &[(Z(0), -6, 7), (Z(1), 28, 1), (Z(2), -210, 1), (Z(3), 510, 1), (One, 7943, 132300), (Ln2, -428, 14175)]),
    sz(1, 3, &[(B(0), -2, 1), (B(1), 16, 1), (One, 3, 4)]),
    sz(1, 5, &[(B(0), -1, 2), (B(1), -8, 3), (B(2), 64, 1), (One, 89, 288)]),
    sz(2, 5, &[(B(0), -3, 2), (B(1), 56, 3), (B(2), -64, 1), (One, 127, 288)]),
    sz(1, 7, &[(B(0), -1, 4), (B(1), -82, 45), (B(2), 32, 3), (B(3), 256, 1), (One, 4201, 21600)]),
    sz(2, 7, &[(B(0), -1, 4), (B(1), -38, 45), (B(2), 160, 3), (B(3), -256, 1), (One, 1237, 10800)]),
    sz(3, 7, &[(B(0), -5, 4), (B(1), 878, 45), (B(2), -352, 3), (B(3), 256, 1), (One, 7051, 21600)]),
    sz(1, 9, &[(B(0), -5, 32), (B(1), -397, 315), (B(2), 8, 15), (B(3), 128, 1), (B(4), 1024, 1), (One, 4798639, 33868800)]),
];

/// An odd-argument Mellin value over the negative-argument basis.
pub struct PhiOddExample {
    pub which: u8,
    pub n: usize,
    pub terms: &'static [(BasisSymbol, i64, i64)],
}

impl PhiOddExample {
    pub fn expected(&self) -> ClosedForm {
        ClosedForm::from_terms(self.terms.iter().map(|&(s, n, d)| (s, Rational::new(n, d))))
    }
}

/// Φ₁(2n+1) and Φ₂(2n+1) for n = 1..4.
pub static PHI_ODD_EXAMPLES: &[PhiOddExample] = &[
    PhiOddExample { which: 1, n: 1, terms: &[(EN(0), 4, 3), (EN(1), 8, 3)] },
    PhiOddExample { which: 2, n: 1, terms: &[(BN(0), 1, 1), (BN(1), 1, 1)] },
    PhiOddExample { which: 1, n: 2, terms: &[(EN(0), 4, 5), (EN(1), 8, 3), (EN(2), 8, 15)] },
    PhiOddExample { which: 2, n: 2, terms: &[(BN(0), 3, 4), (BN(1), 7, 6), (BN(2), 1, 12)] },
    PhiOddExample { which: 1, n: 3, terms: &[(EN(0), 4, 7), (EN(1), 112, 45), (EN(2), 8, 9), (EN(3), 16, 315)] },
    PhiOddExample { which: 2, n: 3, terms: &[(BN(0), 5, 8), (BN(1), 439, 360), (BN(2), 11, 72), (BN(3), 1, 360)] },
    PhiOddExample {
        which: 1,
        n: 4,
        terms: &[(EN(0), 4, 9), (EN(1), 6544, 2835), (EN(2), 152, 135), (EN(3), 16, 135), (EN(4), 8, 2835)],
    },
    PhiOddExample {
        which: 2,
        n: 4,
        terms: &[(BN(0), 35, 64), (BN(1), 1247, 1008), (BN(2), 301, 1440), (BN(3), 1, 144), (BN(4), 1, 20160)],
    },
];

/// Printed decimals of lim_{s→1+} (Φ₁(s) − 1/(s−1)).
pub const C1_DECIMAL: &str = "-0.2095053618026607653";
/// Printed decimals of lim_{s→1+} (Φ₂(s) − 1/(s−1)).
pub const C2_DECIMAL: &str = "0.2059731205121406923";

/// C₁ = −6ζ′(2)/π² − 1 + ln π − (4/3) ln 2.
pub fn c1_closed_form() -> ClosedForm {
    ClosedForm::from_terms([
        (Z(0), Rational::from(-6)),
        (One, Rational::from(-1)),
        (LnPi, Rational::one()),
        (Ln2, Rational::new(-4, 3)),
    ])
}

/// C₂ = −4β′(1)/π + ln π − ln 2.
pub fn c2_closed_form() -> ClosedForm {
    ClosedForm::from_terms([(B(0), Rational::from(-4)), (LnPi, Rational::one()), (Ln2, Rational::from(-1))])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        assert_eq!(LOG_EXAMPLES.len(), 12);
        assert_eq!(SINH_OVER_Z_EXAMPLES.len(), 13);
        assert_eq!(PHI_ODD_EXAMPLES.len(), 8);
    }

    #[test]
    fn worked_examples_reproduce_exactly() {
        for ex in LOG_EXAMPLES.iter().chain(SINH_OVER_Z_EXAMPLES) {
            assert_eq!(ex.spec.closed_form().unwrap(), ex.expected(), "{}", ex.spec);
        }
    }

    #[test]
    fn phi_tables_reproduce_exactly() {
        for ex in PHI_ODD_EXAMPLES {
            let got = crate::closed_form::phi_odd_closed_form(ex.which, ex.n).unwrap();
            assert_eq!(got, ex.expected(), "Phi{}({})", ex.which, 2 * ex.n + 1);
        }
    }
}
