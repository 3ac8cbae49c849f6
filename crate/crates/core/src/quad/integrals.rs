use rug::ops::Pow;
use rug::Float;

use super::de::{integrate, QuadResult};
use crate::closed_form::IntegralSpec;
use crate::error::{domain, Result};
use crate::exact::{bernoulli, factorial, pow2, Rational};
use crate::lfunc::{work_bits, BigReal, GUARD_DIGITS};

/// `(tanh x, sech x)` without overflow for large `x`.
fn tanh_sech(x: &Float) -> (Float, Float) {
    let p = x.prec();
    if *x < 1 {
        let th = Float::with_val(p, x.tanh_ref());
        let sh = Float::with_val(p, x.cosh_ref()).recip();
        (th, sh)
    } else {
        let e = Float::with_val(p, -x).exp();
        let e2 = Float::with_val(p, e.square_ref());
        let den = Float::with_val(p, &e2 + 1u32);
        let th = Float::with_val(p, 1u32 - e2) / &den;
        let sh = Float::with_val(p, e * 2u32) / den;
        (th, sh)
    }
}

fn int_pow(x: &Float, e: usize) -> Float {
    let p = x.prec();
    let mut out = Float::with_val(p, 1);
    for _ in 0..e {
        out *= x;
    }
    out
}

/// Odd power series `sum_k a_k u^{2k-1}` for `1/u - coth u` (`which = 1`)
/// or `1/u - csch u` (`which = 2`), used below `SERIES_CUT` where direct
/// subtraction cancels.
struct PoleSeries {
    coeffs: Vec<Float>,
}

const SERIES_CUT: f64 = 0.1;

impl PoleSeries {
    fn new(which: u8, digits: u32, bits: u32) -> Self {
        // Successive terms shrink by about (u/π)² ≤ 10^{-3}.
        let terms = (digits + GUARD_DIGITS) as usize / 3 + 3;
        let coeffs = (1..=terms)
            .map(|k| {
                let b = bernoulli(2 * k);
                let f = Rational::from(factorial(2 * k));
                let c = if which == 1 {
                    -(Rational::from(pow2(2 * k)) * b / f)
                } else {
                    let two = Rational::from(2);
                    -(two * (Rational::from(1) - Rational::from(pow2(2 * k - 1))) * b / f)
                };
                Float::with_val(bits, c.as_rug())
            })
            .collect();
        PoleSeries { coeffs }
    }

    fn eval(&self, u: &Float) -> Float {
        let p = u.prec();
        let u2 = Float::with_val(p, u.square_ref());
        let mut acc = Float::new(p);
        for c in self.coeffs.iter().rev() {
            acc *= &u2;
            acc += c;
        }
        acc * u
    }
}

fn check_phi(which: u8) -> Result<()> {
    if which == 1 || which == 2 {
        Ok(())
    } else {
        Err(domain(format!("Φ index must be 1 or 2 (got {which})")))
    }
}

/// `Φ_which(s) - 1/(s-1)` by quadrature for real `s >= 1`. At `s = 1` this
/// is the constant `C_which`.
///
/// Substituting `x = tanh u`, the integrand is
/// `tanh^{s-1}u (1/u - coth u) sech²u` for Φ₁ and
/// `tanh^{s-1}u (1/u - csch u) sech u` for Φ₂; both are regular at `u = 0`.
pub fn quad_phi_minus_pole(which: u8, s: f64, digits: u32) -> Result<QuadResult> {
    check_phi(which)?;
    if !(s >= 1.0) || !s.is_finite() {
        return Err(domain(format!("the regularised integral needs s >= 1 (s = {s})")));
    }
    let bits = work_bits(digits);
    let series = PoleSeries::new(which, digits, bits);
    let sm1 = Float::with_val(bits, s - 1.0);
    let f = move |u: &Float| -> Float {
        let p = u.prec();
        let (th, sh) = tanh_sech(u);
        let pole = if *u < SERIES_CUT {
            series.eval(u)
        } else if which == 1 {
            Float::with_val(p, u.recip_ref()) - Float::with_val(p, th.recip_ref())
        } else {
            Float::with_val(p, u.recip_ref()) - Float::with_val(p, u.sinh_ref()).recip()
        };
        let power = if sm1.is_zero() { Float::with_val(p, 1) } else { Float::with_val(p, (&th).pow(&sm1)) };
        let weight = if which == 1 { Float::with_val(p, sh.square_ref()) } else { sh };
        power * pole * weight
    };
    integrate(digits, &f)
}

/// `Φ_which(s)` by quadrature for real `s > 1`.
///
/// For `s >= 3/2` the integrand `tanh^{s-1}u sech^{3-which}u / u` is used
/// directly. Closer to the pole the regularised integral plus `1/(s-1)` is
/// used instead.
pub fn quad_phi(which: u8, s: f64, digits: u32) -> Result<QuadResult> {
    check_phi(which)?;
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain(format!("Φ(s) converges only for s > 1 (s = {s})")));
    }
    if s < 1.5 {
        let mut r = quad_phi_minus_pole(which, s, digits)?;
        let bits = r.value.value().prec();
        let pole = Float::with_val(bits, Float::with_val(bits, s) - 1u32).recip();
        r.value = BigReal::new(Float::with_val(bits, r.value.value() + &pole), digits);
        for h in &mut r.history {
            *h += &pole;
        }
        return Ok(r);
    }
    let bits = work_bits(digits);
    let sm1 = Float::with_val(bits, s - 1.0);
    let f = move |u: &Float| -> Float {
        let p = u.prec();
        let (th, sh) = tanh_sech(u);
        let weight = if which == 1 { Float::with_val(p, sh.square_ref()) } else { sh };
        Float::with_val(p, (&th).pow(&sm1)) * weight / u
    };
    integrate(digits, &f)
}

/// `∫_0^∞ sinh^{2q+1}(z) ln z / cosh^{N}(z) dz`.
pub fn quad_log_family(q: usize, big_n: usize, digits: u32) -> Result<QuadResult> {
    if big_n < 2 || 2 * q + 1 >= big_n {
        return Err(domain(format!("need 2q+1 < N for the log family (q = {q}, N = {big_n})")));
    }
    let f = move |z: &Float| -> Float {
        let p = z.prec();
        let (th, sh) = tanh_sech(z);
        int_pow(&th, 2 * q + 1) * int_pow(&sh, big_n - 2 * q - 1) * Float::with_val(p, z.ln_ref())
    };
    integrate(digits, &f)
}

/// `∫_0^∞ sinh^{2q}(z) / (z cosh^{N}(z)) dz`.
pub fn quad_sinh_over_z(q: usize, big_n: usize, digits: u32) -> Result<QuadResult> {
    IntegralSpec::SinhOverZ { q, big_n }.validate()?;
    let f = move |z: &Float| -> Float {
        let (th, sh) = tanh_sech(z);
        int_pow(&th, 2 * q) * int_pow(&sh, big_n - 2 * q) / z
    };
    integrate(digits, &f)
}

/// `C₁` (`which = 1`) or `C₂`, the constant terms of Φ at its pole.
pub fn quad_c_constant(which: u8, digits: u32) -> Result<QuadResult> {
    quad_phi_minus_pole(which, 1.0, digits)
}

/// Quadrature of any integral the closed-form builders cover.
pub fn quad_integral(spec: &IntegralSpec, digits: u32) -> Result<QuadResult> {
    spec.validate()?;
    match *spec {
        IntegralSpec::LogOddCosh { q, n } => quad_log_family(q, 2 * n + 1, digits),
        IntegralSpec::LogEvenCosh { q, n } => quad_log_family(q, 2 * n, digits),
        IntegralSpec::SinhOverZ { q, big_n } => quad_sinh_over_z(q, big_n, digits),
        IntegralSpec::Phi1 { s } => quad_phi(1, s as f64, digits),
        IntegralSpec::Phi2 { s } => quad_phi(2, s as f64, digits),
    }
}
