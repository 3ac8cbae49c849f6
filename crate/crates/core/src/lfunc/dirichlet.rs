use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use super::bigreal::{work_bits, BigReal, GUARD_DIGITS, MAX_DIGITS};
use super::cache::{CacheKey, ConstantCache};
use crate::error::{domain, MellinError, Result};
use crate::exact::{bernoulli, euler_number, factorial, harmonic, Rational};

fn check_digits(digits: u32) -> Result<()> {
    if digits > MAX_DIGITS {
        return Err(MellinError::PrecisionUnreachable {
            digits,
            reason: format!("the evaluators stop at {MAX_DIGITS} digits"),
        });
    }
    Ok(())
}

fn from_rat(bits: u32, r: &Rational) -> Float {
    Float::with_val(bits, r.as_rug())
}

fn cached(key: CacheKey, digits: u32, compute: impl FnOnce(u32) -> Result<Float>) -> Result<BigReal> {
    check_digits(digits)?;
    let v = ConstantCache::global().get_or_try_insert(key, digits, || compute(work_bits(digits)))?;
    Ok(BigReal::new(v, digits))
}

pub(crate) fn pi_bits(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

pub(crate) fn ln2_bits(bits: u32) -> Float {
    Float::with_val(bits, Constant::Log2)
}

pub(crate) fn gamma_const_bits(bits: u32) -> Float {
    Float::with_val(bits, Constant::Euler)
}

pub fn pi(digits: u32) -> Result<BigReal> {
    cached(CacheKey::Pi, digits, |b| Ok(pi_bits(b)))
}

pub fn ln2(digits: u32) -> Result<BigReal> {
    cached(CacheKey::Ln2, digits, |b| Ok(ln2_bits(b)))
}

pub fn ln_pi(digits: u32) -> Result<BigReal> {
    cached(CacheKey::LnPi, digits, |b| Ok(pi_bits(b).ln()))
}

/// Euler–Mascheroni constant γ.
pub fn euler_gamma(digits: u32) -> Result<BigReal> {
    cached(CacheKey::EulerGamma, digits, |b| Ok(gamma_const_bits(b)))
}

/// Number of CVZ terms for `digits` correct digits, and the hard cap.
fn cvz_terms(digits: u32) -> Result<usize> {
    let total = digits + GUARD_DIGITS;
    let n = (1.31 * total as f64).ceil() as usize + 8;
    let cap = 4 * total as usize;
    if n > cap {
        return Err(MellinError::PrecisionUnreachable {
            digits,
            reason: format!("needs {n} accelerated terms, cap is {cap}"),
        });
    }
    Ok(n)
}

/// `sum_{k>=0} (-1)^k a_k` by Cohen–Rodriguez-Villegas–Zagier acceleration
/// with `n` terms.
fn cvz(bits: u32, n: usize, a: impl Fn(u64) -> Float) -> Float {
    let three_plus = Float::with_val(bits, 8u32).sqrt() + 3u32;
    let mut d = three_plus.pow(n as u32);
    d = (Float::with_val(bits, d.recip_ref()) + &d) / 2u32;
    let mut b = Float::with_val(bits, -1);
    let mut c = Float::with_val(bits, -&d);
    let mut s = Float::new(bits);
    let nn = n as i64;
    for k in 0..n {
        c = Float::with_val(bits, &b - &c);
        s += Float::with_val(bits, &c * a(k as u64));
        let kk = k as i64;
        // b *= (k+n)(k-n) / ((k+1/2)(k+1)) = 2(k+n)(k-n) / ((2k+1)(k+1))
        b *= 2 * (kk + nn) * (kk - nn);
        b /= (2 * kk + 1) * (kk + 1);
    }
    s / d
}

fn check_s(s: f64, min: f64, what: &str) -> Result<()> {
    if !(s >= min) || !s.is_finite() {
        return Err(domain(format!("{what} needs s >= {min} (s = {s})")));
    }
    Ok(())
}

pub(crate) fn eta_bits(s: &Float, bits: u32, digits: u32) -> Result<Float> {
    let n = cvz_terms(digits)?;
    Ok(cvz(bits, n, |k| {
        let base = Float::with_val(bits, k + 1);
        Float::with_val(bits, base.pow(-s.clone()))
    }))
}

pub(crate) fn eta_prime_bits(s: &Float, bits: u32, digits: u32) -> Result<Float> {
    let n = cvz_terms(digits)?;
    Ok(cvz(bits, n, |k| {
        let base = Float::with_val(bits, k + 1);
        let ln = Float::with_val(bits, base.ln_ref());
        -(ln * Float::with_val(bits, base.pow(-s.clone())))
    }))
}

pub(crate) fn beta_bits(s: &Float, bits: u32, digits: u32) -> Result<Float> {
    let n = cvz_terms(digits)?;
    Ok(cvz(bits, n, |k| {
        let base = Float::with_val(bits, 2 * k + 1);
        Float::with_val(bits, base.pow(-s.clone()))
    }))
}

pub(crate) fn beta_prime_bits(s: &Float, bits: u32, digits: u32) -> Result<Float> {
    let n = cvz_terms(digits)?;
    Ok(cvz(bits, n, |k| {
        let base = Float::with_val(bits, 2 * k + 1);
        let ln = Float::with_val(bits, base.ln_ref());
        -(ln * Float::with_val(bits, base.pow(-s.clone())))
    }))
}

/// Dirichlet η(s) for real `s > 0`.
pub fn eta(s: f64, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    check_s(s, f64::MIN_POSITIVE, "eta")?;
    let bits = work_bits(digits);
    Ok(BigReal::new(eta_bits(&Float::with_val(bits, s), bits, digits)?, digits))
}

/// η′(s) for real `s >= 1`.
pub fn eta_prime(s: f64, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    check_s(s, 1.0, "eta'")?;
    let bits = work_bits(digits);
    Ok(BigReal::new(eta_prime_bits(&Float::with_val(bits, s), bits, digits)?, digits))
}

/// Dirichlet β(s) for real `s > 0`.
pub fn beta(s: f64, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    check_s(s, f64::MIN_POSITIVE, "beta")?;
    let bits = work_bits(digits);
    Ok(BigReal::new(beta_bits(&Float::with_val(bits, s), bits, digits)?, digits))
}

/// β′(s) for real `s >= 1`.
pub fn beta_prime(s: f64, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    check_s(s, 1.0, "beta'")?;
    let bits = work_bits(digits);
    Ok(BigReal::new(beta_prime_bits(&Float::with_val(bits, s), bits, digits)?, digits))
}

/// ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!), for k >= 1.
pub(crate) fn zeta_even_bits(k: u32, bits: u32) -> Float {
    let k = k as usize;
    let mut r = bernoulli(2 * k) / Rational::from(factorial(2 * k) * 2u32);
    if k % 2 == 0 {
        r = -r;
    }
    let two_pi = pi_bits(bits) * 2u32;
    from_rat(bits, &r) * two_pi.pow(2 * k as u32)
}

fn zeta_prime_even_bits(p: u32, bits: u32, digits: u32) -> Result<Float> {
    let s = 2 * p + 2;
    let sf = Float::with_val(bits, s);
    let etap = eta_prime_bits(&sf, bits, digits)?;
    let z = zeta_even_bits(p + 1, bits);
    let two_pow = Float::with_val(bits, Float::with_val(bits, 2).pow(1 - s as i32));
    let num = etap - Float::with_val(bits, &two_pow * ln2_bits(bits)) * &z;
    Ok(num / (Float::with_val(bits, 1) - two_pow))
}

/// ζ′(2p+2), through η′ and the exact ζ(2p+2).
pub fn zeta_prime_even(p: u32, digits: u32) -> Result<BigReal> {
    cached(CacheKey::ZetaPrimeEven(p), digits, |b| zeta_prime_even_bits(p, b, digits + GUARD_DIGITS))
}

/// ζ′(s) for real `s > 1` by Euler–Maclaurin summation. Independent of the
/// alternating-series route; used as a cross-check.
pub fn zeta_prime_euler_maclaurin(s: f64, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    if !(s > 1.0) {
        return Err(domain(format!("Euler-Maclaurin zeta' needs s > 1 (s = {s})")));
    }
    let bits = work_bits(digits);
    let sf = Float::with_val(bits, s);
    let big_n = (digits + GUARD_DIGITS) as u64 + 10;
    let nf = Float::with_val(bits, big_n);
    let ln_n = Float::with_val(bits, nf.ln_ref());
    // f(x) = ln(x) x^{-s};  zeta'(s) = -sum_{n>=1} f(n).
    let mut head = Float::new(bits);
    for n in 2..big_n {
        let x = Float::with_val(bits, n);
        let ln = Float::with_val(bits, x.ln_ref());
        head += ln * Float::with_val(bits, x.pow(-sf.clone()));
    }
    let n_pow = Float::with_val(bits, nf.clone().pow(-sf.clone()));
    let sm1 = Float::with_val(bits, &sf - 1u32);
    // int_N^inf f = N^{1-s} (ln N/(s-1) + 1/(s-1)^2)
    let integral = Float::with_val(bits, &n_pow * &nf)
        * (Float::with_val(bits, &ln_n / &sm1) + Float::with_val(bits, sm1.clone().square().recip()));
    let half = Float::with_val(bits, &ln_n * &n_pow) / 2u32;
    // f^{(m)}(x) = x^{-s-m} (A_m ln x + C_m)
    let mut a = Float::with_val(bits, 1);
    let mut c = Float::new(bits);
    let mut x_pow = n_pow.clone();
    let mut corr = Float::new(bits);
    let eps = super::bigreal::tolerance(digits + GUARD_DIGITS + 5, bits);
    let mut m: u32 = 0;
    for k in 1..=(4 * big_n as usize) {
        // advance to derivative order 2k-1
        while m < 2 * k as u32 - 1 {
            let sm = Float::with_val(bits, &sf + m);
            let new_c = Float::with_val(bits, -(Float::with_val(bits, &sm * &c))) + &a;
            a = -(Float::with_val(bits, &sm * &a));
            c = new_c;
            x_pow /= &nf;
            m += 1;
        }
        let deriv = Float::with_val(bits, &a * &ln_n) + &c;
        let deriv = deriv * &x_pow;
        let bk = from_rat(bits, &(bernoulli(2 * k) / Rational::from(factorial(2 * k))));
        let term = bk * deriv;
        let small = Float::with_val(bits, term.abs_ref()) < eps;
        corr += term;
        if small {
            break;
        }
    }
    // sum_{n>=N} f(n) = int + f(N)/2 - sum B_{2k}/(2k)! f^{(2k-1)}(N)
    let tail = integral + half - corr;
    let total = head + tail;
    Ok(BigReal::new(-total, digits))
}

/// β′(2p+1) by the accelerated alternating series.
pub fn beta_prime_odd(p: u32, digits: u32) -> Result<BigReal> {
    cached(CacheKey::BetaPrimeOdd(p), digits, |b| {
        beta_prime_bits(&Float::with_val(b, 2 * p + 1), b, digits + GUARD_DIGITS)
    })
}

/// Exact η(−2i−1) = (1 − 2^{2i+2}) ζ(−2i−1), with ζ(−2i−1) = −B_{2i+2}/(2i+2).
pub fn eta_neg_exact(i: u32) -> Rational {
    let k = 2 * i as usize + 2;
    let zeta = -(bernoulli(k) / Rational::from(k));
    Rational::from(Integer::from(1) - (Integer::from(1) << k as u32)) * zeta
}

/// Exact β(−2i) = E_{2i}/2.
pub fn beta_neg_exact(i: u32) -> Rational {
    Rational::new(euler_number(2 * i as usize), 2)
}

/// η′(−2i−1) from the differentiated ζ functional equation.
fn eta_prime_neg_a(i: u32, bits: u32, digits: u32) -> Result<Float> {
    let k = i + 1;
    let zeta_neg = from_rat(bits, &(-(bernoulli(2 * k as usize) / Rational::from(2 * k))));
    let zp = zeta_prime_even_bits(i, bits, digits)?;
    let z = zeta_even_bits(k, bits);
    let two_pi = pi_bits(bits) * 2u32;
    let bracket = -two_pi.ln() + from_rat(bits, &harmonic(2 * k as usize - 1)) - gamma_const_bits(bits)
        + zp / z;
    let zeta_prime_neg = -(Float::with_val(bits, &zeta_neg * &bracket));
    let four_k = Float::with_val(bits, Integer::from(1) << (2 * k));
    let first = Float::with_val(bits, &four_k * ln2_bits(bits)) * &zeta_neg;
    let second = (Float::with_val(bits, 1) - four_k) * zeta_prime_neg;
    Ok(first + second)
}

/// η′(−2i−1) from the differentiated η functional equation.
fn eta_prime_neg_b(i: u32, bits: u32, digits: u32) -> Result<Float> {
    let s = 2 * i + 1;
    let sf = Float::with_val(bits, s + 1);
    let e = eta_bits(&sf, bits, digits)?;
    let ep = eta_prime_bits(&sf, bits, digits)?;
    let two = Float::with_val(bits, 2);
    let a = Float::with_val(bits, two.clone().pow(-(s as i32) - 1)); // 2^{-s-1}
    let b = Float::with_val(bits, two.pow(-(s as i32))); // 2^{-s}
    let one = Float::with_val(bits, 1);
    let pi = pi_bits(bits);
    let mut g = Float::with_val(bits, &one - &a) / Float::with_val(bits, &one - &b) * 2u32;
    g *= Float::with_val(bits, pi.clone().pow(-(s as i32) - 1));
    g *= s;
    g *= Float::with_val(bits, factorial(s as usize - 1));
    g *= &e;
    if i % 2 == 1 {
        g = -g;
    }
    let l = -pi.ln() + Float::with_val(bits, s).recip() + from_rat(bits, &harmonic(s as usize - 1))
        - gamma_const_bits(bits)
        + Float::with_val(bits, &ep / &e)
        + ln2_bits(bits)
            * (Float::with_val(bits, &a / Float::with_val(bits, &one - &a))
                - Float::with_val(bits, &b / Float::with_val(bits, &one - &b)));
    Ok(-(g * l))
}

/// η′(−2i−1).
pub fn eta_prime_neg(i: u32, digits: u32) -> Result<BigReal> {
    cached(CacheKey::EtaPrimeNeg(i), digits, |b| eta_prime_neg_a(i, b, digits + GUARD_DIGITS))
}

/// η′(−2i−1) through the second arrangement; uncached.
pub fn eta_prime_neg_alt(i: u32, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    let bits = work_bits(digits);
    Ok(BigReal::new(eta_prime_neg_b(i, bits, digits + GUARD_DIGITS)?, digits))
}

/// β(2i+1) = (−1)^i E_{2i} π^{2i+1} / (4^{i+1} (2i)!).
pub(crate) fn beta_odd_bits(i: u32, bits: u32) -> Float {
    let i = i as usize;
    let mut r = Rational::new(euler_number(2 * i), factorial(2 * i) * (Integer::from(1) << (2 * i as u32 + 2)));
    if i % 2 == 1 {
        r = -r;
    }
    from_rat(bits, &r) * pi_bits(bits).pow(2 * i as u32 + 1)
}

/// β′(−2i) from the differentiated β functional equation.
pub fn beta_prime_neg(i: u32, digits: u32) -> Result<BigReal> {
    cached(CacheKey::BetaPrimeNeg(i), digits, |bits| {
        let s = Float::with_val(bits, 2 * i + 1);
        let bp = beta_prime_bits(&s, bits, digits + GUARD_DIGITS)?;
        let bv = beta_odd_bits(i, bits);
        let half_pi = pi_bits(bits) / 2u32;
        let bracket = from_rat(bits, &harmonic(2 * i as usize)) - gamma_const_bits(bits) - half_pi.ln() + bp / bv;
        let e = from_rat(bits, &Rational::new(euler_number(2 * i as usize), 2));
        Ok(-(e * bracket))
    })
}
