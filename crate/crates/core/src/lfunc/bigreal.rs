use std::cmp::Ordering;
use std::fmt;

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::exact::Rational;

/// Internal guard digits added on top of every requested precision.
pub const GUARD_DIGITS: u32 = 15;

/// Largest precision, in decimal digits, any evaluator accepts.
pub const MAX_DIGITS: u32 = 1000;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Binary precision carrying `digits` decimal digits.
pub fn bits_for(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + 8
}

/// Working precision in bits for a request of `digits` plus the guard.
pub fn work_bits(digits: u32) -> u32 {
    bits_for(digits + GUARD_DIGITS)
}

/// Arbitrary-precision real tagged with the number of decimal digits it is
/// meant to be correct to.
#[derive(Clone, Debug, PartialEq)]
pub struct BigReal {
    value: Float,
    digits: u32,
}

impl BigReal {
    pub fn new(value: Float, digits: u32) -> Self {
        BigReal { value, digits }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        BigReal::new(Float::with_val(work_bits(digits), r.as_rug()), digits)
    }

    pub fn from_f64(x: f64, digits: u32) -> Self {
        BigReal::new(Float::with_val(work_bits(digits), x), digits)
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn into_value(self) -> Float {
        self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// `|self - other|` at the larger working precision.
    pub fn abs_diff(&self, other: &BigReal) -> Float {
        let p = self.value.prec().max(other.value.prec());
        Float::with_val(p, &self.value - &other.value).abs()
    }

    /// True when `|self - other| < 10^{-digits}`.
    pub fn agrees_with(&self, other: &BigReal, digits: u32) -> bool {
        self.abs_diff(other) < tolerance(digits, self.value.prec())
    }

    /// Decimal string with `frac` digits after the point, truncated toward
    /// zero.
    pub fn to_fixed_truncated(&self, frac: u32) -> String {
        fixed(&self.value, frac, Round::Zero)
    }

    /// Decimal string with `frac` digits after the point, rounded to nearest.
    pub fn to_fixed_rounded(&self, frac: u32) -> String {
        fixed(&self.value, frac, Round::Nearest)
    }

    /// Whether the decimal string `printed` is this value cut or rounded at
    /// its last printed digit.
    pub fn matches_printed(&self, printed: &str) -> bool {
        let frac = printed.split_once('.').map(|(_, f)| f.len() as u32).unwrap_or(0);
        let norm = |s: String| s.trim_start_matches('+').to_string();
        norm(self.to_fixed_truncated(frac)) == printed || norm(self.to_fixed_rounded(frac)) == printed
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_fixed_rounded(self.digits))
    }
}

/// `10^{-digits}` as a float of precision `bits`.
pub fn tolerance(digits: u32, bits: u32) -> Float {
    let ten = Float::with_val(bits, 10);
    ten.pow(-(digits as i32))
}

fn fixed(x: &Float, frac: u32, round: Round) -> String {
    let bits = x.prec() + 64;
    let scale = Float::with_val(bits, Integer::from(10).pow(frac));
    let scaled = Float::with_val(bits, x * &scale);
    let (int, _) = match round {
        Round::Zero => scaled.trunc().to_integer_round(Round::Zero).expect("finite value"),
        _ => scaled.to_integer_round(Round::Nearest).expect("finite value"),
    };
    let neg = int.cmp0() == Ordering::Less || (int.cmp0() == Ordering::Equal && x.is_sign_negative());
    let digits = int.abs().to_string();
    let digits = if digits.len() <= frac as usize {
        format!("{}{}", "0".repeat(frac as usize + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - frac as usize;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..split]);
    if frac > 0 {
        out.push('.');
        out.push_str(&digits[split..]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_formatting() {
        let x = BigReal::from_rational(&Rational::new(-2, 3), 30);
        assert_eq!(x.to_fixed_truncated(5), "-0.66666");
        assert_eq!(x.to_fixed_rounded(5), "-0.66667");
        let y = BigReal::from_rational(&Rational::new(3, 4), 30);
        assert_eq!(y.to_fixed_rounded(3), "0.750");
        assert_eq!(y.to_fixed_rounded(0), "1");
        assert!(x.matches_printed("-0.6666"));
        assert!(x.matches_printed("-0.6667"));
        assert!(!x.matches_printed("-0.6668"));
    }

    #[test]
    fn agreement_threshold() {
        let a = BigReal::from_rational(&Rational::new(1, 3), 40);
        let b = BigReal::from_rational(&(Rational::new(1, 3) + Rational::new(1, 10i64.pow(18))), 40);
        assert!(a.agrees_with(&b, 17));
        assert!(!a.agrees_with(&b, 19));
    }
}
