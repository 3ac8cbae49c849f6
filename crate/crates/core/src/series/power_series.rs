use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rational;

/// Truncated formal power series with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`; the series is known modulo
/// `x^order` where `order = coeffs.len()`. Binary operations truncate to the
/// smaller order of their operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries { coeffs: (0..order).map(f).collect() }
    }

    /// The constant series 1 known to `order` terms.
    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |k| if k == 0 { Rational::one() } else { Rational::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`. Panics when `k` lies beyond the known order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(k < self.order(), "coefficient x^{k} beyond series order {}", self.order());
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a series by truncation");
        PowerSeries { coeffs: self.coeffs[..order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse. Panics when the constant term is zero.
    pub fn reciprocal(&self) -> Self {
        let n = self.order();
        assert!(n > 0 && !self.coeffs[0].is_zero(), "reciprocal needs a nonzero constant term");
        let inv0 = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-(acc * &inv0));
        }
        PowerSeries { coeffs: out }
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = PowerSeries::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `x -> x^2`. A series known mod `x^n` becomes one known mod
    /// `x^{2n-1}`.
    pub fn compose_x2(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return PowerSeries { coeffs: Vec::new() };
        }
        let mut out = vec![Rational::zero(); 2 * n - 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[2 * k] = c.clone();
        }
        PowerSeries { coeffs: out }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn reciprocal_of_geometric() {
        // 1/(1-x) = 1 + x + x^2 + ...
        let s = PowerSeries::new(vec![r(1, 1), r(-1, 1), r(0, 1), r(0, 1), r(0, 1)]);
        let inv = s.reciprocal();
        assert!(inv.coeffs().iter().all(|c| *c == Rational::one()));
        assert_eq!(&s * &inv, PowerSeries::one(5));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let s = PowerSeries::new(vec![r(1, 1), r(1, 2), r(-1, 3), r(2, 5), r(1, 7), r(0, 1)]);
        let mut acc = PowerSeries::one(6);
        for e in 0..7u32 {
            assert_eq!(s.pow(e), acc, "power {e}");
            acc = &acc * &s;
        }
    }

    #[test]
    fn compose_x2_spreads_coefficients() {
        let s = PowerSeries::new(vec![r(1, 1), r(2, 1), r(3, 1)]);
        let t = s.compose_x2();
        assert_eq!(t.order(), 5);
        assert_eq!(t.coeffs(), &[r(1, 1), r(0, 1), r(2, 1), r(0, 1), r(3, 1)]);
    }

    #[test]
    #[should_panic]
    fn reciprocal_requires_unit() {
        PowerSeries::new(vec![r(0, 1), r(1, 1)]).reciprocal();
    }
}
