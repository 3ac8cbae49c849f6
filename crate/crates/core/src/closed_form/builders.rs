use crate::error::{domain, MellinError, Result};
use crate::exact::{bernoulli, binomial, euler_number, factorial, harmonic, pow2, Integer, Rational};
use crate::series::{c_coeff, d_coeff, gh_table, omega, reciprocal_coeffs};

use super::form::{BasisSymbol, ClosedForm};

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        Rational::from(-1)
    }
}

fn inv_fact(n: usize) -> Rational {
    Rational::new(1, factorial(n))
}

fn rat(i: Integer) -> Rational {
    Rational::from(i)
}

fn check_odd(q: usize, n: usize) -> Result<()> {
    if n == 0 || q >= n {
        return Err(domain(format!(
            "log integral sinh^{}(z) ln z / cosh^{}(z) diverges: need 2q+1 < 2n+1 with n >= 1 (q = {q}, n = {n})",
            2 * q + 1,
            2 * n + 1
        )));
    }
    Ok(())
}

fn check_even(q: usize, n: usize) -> Result<()> {
    if n == 0 || q >= n {
        return Err(domain(format!(
            "log integral sinh^{}(z) ln z / cosh^{}(z) diverges: need 2q+1 < 2n with n >= 1 (q = {q}, n = {n})",
            2 * q + 1,
            2 * n
        )));
    }
    Ok(())
}

/// `S_{p,q,n} = sum_{m=p+1}^{n} c_{2n-2m,n}/(2m)! C(2m,2p+2) Omega_{q,m-p-1}`.
pub fn s_coeff(p: usize, q: usize, n: usize) -> Result<Rational> {
    if p >= n {
        return Err(domain(format!("S_(p,q,n) needs p <= n-1 (p = {p}, n = {n})")));
    }
    Ok(s_raw(p, q, n))
}

fn s_raw(p: usize, q: usize, n: usize) -> Rational {
    (p + 1..=n)
        .map(|m| {
            c_coeff((2 * n - 2 * m) as i64, n)
                * inv_fact(2 * m)
                * rat(binomial(2 * m as i64, 2 * p as i64 + 2))
                * omega(q, m - p - 1)
        })
        .sum()
}

/// Coefficients of the log integral with an odd power of cosh.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogOddCoeffs {
    /// `H_{p,q,n}` for `p = 0..n-1`.
    pub h: Vec<Rational>,
    pub i: Rational,
    pub j: Rational,
    pub k: Rational,
}

pub fn log_odd_coeffs(q: usize, n: usize) -> Result<LogOddCoeffs> {
    check_odd(q, n)?;
    let s: Vec<Rational> = (0..n).map(|p| s_raw(p, q, n)).collect();
    let mut h = Vec::with_capacity(n);
    let mut j = Rational::zero();
    let mut k = Rational::zero();
    let mut i = Rational::zero();
    for (p, sp) in s.iter().enumerate() {
        let two_pow = rat(pow2(2 * p + 2) - 1u32);
        h.push(sign(q + n + p) * rat(factorial(2 * p + 1) * 2u32) * &two_pow * sp);
        let b = bernoulli(2 * p + 2) * Rational::new(pow2(2 * p + 1), Integer::from(p + 1)) * sp;
        j += &b * &two_pow;
        i += &b * &two_pow * harmonic(2 * p + 1);
        k += b;
    }
    Ok(LogOddCoeffs {
        h,
        i: sign(q + n) * i,
        j: sign(q + n + 1) * j,
        k: sign(q + n) * k,
    })
}

/// `∫_0^∞ sinh^{2q+1}(z) ln z / cosh^{2n+1}(z) dz`.
pub fn log_integral_odd_cosh(q: usize, n: usize) -> Result<ClosedForm> {
    let c = log_odd_coeffs(q, n)?;
    let mut cf = ClosedForm::new();
    for (p, h) in c.h.iter().enumerate() {
        cf.add_term(BasisSymbol::ZetaPrimeRatio(p as u32), h);
    }
    cf.add_term(BasisSymbol::One, &c.i);
    cf.add_term(BasisSymbol::LnPi, &c.j);
    cf.add_term(BasisSymbol::Ln2, &(&c.k - &c.j));
    Ok(cf)
}

/// Coefficients of the log integral with an even power of cosh.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEvenCoeffs {
    /// `L_{p,q,n}` for `p = 0..n-1`.
    pub l: Vec<Rational>,
    pub m: Rational,
    pub n: Rational,
}

pub fn log_even_coeffs(q: usize, n: usize) -> Result<LogEvenCoeffs> {
    check_even(q, n)?;
    let kernel = |m: usize| d_coeff((2 * n - 2 * m - 2) as i64, n) * inv_fact(2 * m + 1);
    let l = (0..n)
        .map(|p| {
            let inner: Rational = (p..n)
                .map(|m| {
                    kernel(m)
                        * rat(binomial(2 * m as i64 + 1, (2 * m - 2 * p) as i64))
                        * omega(q, m - p)
                })
                .sum();
            sign(q + n + p) * rat(pow2(2 * p + 2) * factorial(2 * p)) * inner
        })
        .collect();
    let mut nn = Rational::zero();
    let mut mm = Rational::zero();
    for m in 0..n {
        let km = kernel(m);
        for p in 0..=m {
            let t = &km
                * rat(binomial(2 * m as i64 + 1, (2 * m - 2 * p) as i64) * euler_number(2 * p))
                * omega(q, m - p);
            mm += &t * harmonic(2 * p);
            nn += t;
        }
    }
    Ok(LogEvenCoeffs { l, m: sign(q + n) * mm, n: sign(q + n + 1) * nn })
}

/// `∫_0^∞ sinh^{2q+1}(z) ln z / cosh^{2n}(z) dz`.
pub fn log_integral_even_cosh(q: usize, n: usize) -> Result<ClosedForm> {
    let c = log_even_coeffs(q, n)?;
    let mut cf = ClosedForm::new();
    for (p, l) in c.l.iter().enumerate() {
        cf.add_term(BasisSymbol::BetaPrimeRatio(p as u32), l);
    }
    cf.add_term(BasisSymbol::One, &c.m);
    cf.add_term(BasisSymbol::LnPi, &c.n);
    cf.add_term(BasisSymbol::Ln2, &(-&c.n));
    Ok(cf)
}

/// `∫_0^∞ sinh^{2q+1}(z) ln z / cosh^{N}(z) dz` for either parity of `N`.
pub fn log_integral(q: usize, big_n: usize) -> Result<ClosedForm> {
    if 2 * q + 1 >= big_n {
        return Err(domain(format!(
            "log integral sinh^{}(z) ln z / cosh^{big_n}(z) diverges: need 2q+1 < N",
            2 * q + 1
        )));
    }
    if big_n % 2 == 1 {
        log_integral_odd_cosh(q, (big_n - 1) / 2)
    } else {
        log_integral_even_cosh(q, big_n / 2)
    }
}

/// `∫_0^∞ sinh^{2q}(z) / (z cosh^{N}(z)) dz`, assembled by integrating by
/// parts into two log integrals.
pub fn sinh_over_z_integral(q: usize, big_n: usize) -> Result<ClosedForm> {
    if q == 0 || 2 * q >= big_n {
        return Err(domain(format!(
            "integral sinh^{}(z) / (z cosh^{big_n}(z)) diverges: need 0 < 2q < N (q = {q}, N = {big_n})",
            2 * q
        )));
    }
    let a = log_integral(q - 1, big_n - 1)?;
    let b = log_integral(q, big_n + 1)?;
    let cf = ClosedForm::linear_combination(
        &Rational::from(-2 * q as i64),
        &a,
        &Rational::from(big_n as u64),
        &b,
    );
    let lnpi = cf.coeff(BasisSymbol::LnPi);
    if !lnpi.is_zero() {
        return Err(MellinError::Invariant(format!(
            "ln(pi) coefficient {lnpi} survives in sinh^{}/(z cosh^{big_n})",
            2 * q
        )));
    }
    Ok(cf)
}

/// `EtaCoeff_{i,n} = sum_{k=i}^{n} C(n,k) 2^{2k+2}/(2k+1)! g_{i,k}`.
pub fn eta_coeffs(n: usize) -> Vec<Rational> {
    let t = gh_table(n);
    (0..=n)
        .map(|i| {
            (i..=n)
                .map(|k| {
                    rat(binomial(n as i64, k as i64) * pow2(2 * k + 2) * t.g(i as i64, k))
                        * inv_fact(2 * k + 1)
                })
                .sum()
        })
        .collect()
}

/// `BetaCoeff_{i,n} = sum_{k=i}^{n} C(n,k) 2/(2k)! h_{i,k}`.
pub fn beta_coeffs(n: usize) -> Vec<Rational> {
    let t = gh_table(n);
    (0..=n)
        .map(|i| {
            (i..=n)
                .map(|k| rat(binomial(n as i64, k as i64) * 2u32 * t.h(i as i64, k)) * inv_fact(2 * k))
                .sum()
        })
        .collect()
}

/// Φ₁(2n+1) (`which = 1`) as a combination of η′(−1), η′(−3), ..., or
/// Φ₂(2n+1) (`which = 2`) through β′(0), β′(−2), ....
pub fn phi_odd_closed_form(which: u8, n: usize) -> Result<ClosedForm> {
    if n == 0 {
        return Err(domain("Phi(1) diverges: the Mellin transform has a pole at s = 1 (need n >= 1)"));
    }
    let cf = match which {
        1 => ClosedForm::from_terms(
            eta_coeffs(n).into_iter().enumerate().map(|(i, c)| (BasisSymbol::EtaPrimeNeg(i as u32), c)),
        ),
        2 => ClosedForm::from_terms(
            beta_coeffs(n).into_iter().enumerate().map(|(i, c)| (BasisSymbol::BetaPrimeNeg(i as u32), c)),
        ),
        _ => return Err(domain(format!("Phi index must be 1 or 2, got {which}"))),
    };
    Ok(cf)
}

/// Φ₁(2n+1) or Φ₂(2n+1) through the positive-argument basis, i.e. the
/// matching sinh-over-z integral.
pub fn phi_odd_via_sinh_over_z(which: u8, n: usize) -> Result<ClosedForm> {
    match which {
        1 => sinh_over_z_integral(n, 2 * n + 2),
        2 => sinh_over_z_integral(n, 2 * n + 1),
        _ => Err(domain(format!("Phi index must be 1 or 2, got {which}"))),
    }
}

/// First `terms` summands of the even-argument series for Φ₁(2m) or Φ₂(2m).
/// The full value is `π 2^{1-2m}` times the sum.
pub fn mellin_even_partial(which: u8, m: usize, terms: usize) -> Result<Vec<Rational>> {
    if m == 0 {
        return Err(domain("even-argument series needs m >= 1"));
    }
    if terms == 0 {
        return Err(domain("even-argument series needs at least one term"));
    }
    let rc = reciprocal_coeffs(terms - 1);
    (0..terms)
        .map(|n| {
            let k = m + n - 1;
            let base = rat(binomial(2 * k as i64, k as i64)) / rat(pow2(2 * n));
            match which {
                2 => Ok(&rc.p[n] * base),
                1 => Ok(&rc.q[n] * base / Rational::from(2 * (m + n))),
                _ => Err(domain(format!("Phi index must be 1 or 2, got {which}"))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn s_coeff_examples() {
        // H_{0,0,1} = -3 = (-1)^1 * 2 * 1! * 3 * S  =>  S = 1/2.
        assert_eq!(s_coeff(0, 0, 1).unwrap(), r(1, 2));
        assert!(s_coeff(1, 0, 1).is_err());
        // H_{0,1,2} = -2 = (-1)^3 * 2 * 3 * S  =>  S = 1/3.
        assert_eq!(s_coeff(0, 1, 2).unwrap(), r(1, 3));
        // direct sum from the series tables
        let direct = c_coeff(2, 2) / Rational::from(2) * omega(1, 0)
            + c_coeff(0, 2) / Rational::from(24) * Rational::from(6) * omega(1, 1);
        assert_eq!(s_coeff(0, 1, 2).unwrap(), direct);
    }

    #[test]
    fn first_odd_example() {
        let cf = log_integral_odd_cosh(0, 1).unwrap();
        assert_eq!(cf.coeff(BasisSymbol::ZetaPrimeRatio(0)), r(-3, 1));
        assert_eq!(cf.coeff(BasisSymbol::One), r(-1, 2));
        assert_eq!(cf.coeff(BasisSymbol::LnPi), r(1, 2));
        assert_eq!(cf.coeff(BasisSymbol::Ln2), r(-2, 3));
        assert_eq!(cf.len(), 4);
    }

    #[test]
    fn first_even_example() {
        let cf = log_integral_even_cosh(0, 1).unwrap();
        assert_eq!(cf.coeff(BasisSymbol::BetaPrimeRatio(0)), r(-4, 1));
        assert_eq!(cf.coeff(BasisSymbol::LnPi), r(1, 1));
        assert_eq!(cf.coeff(BasisSymbol::Ln2), r(-1, 1));
        assert_eq!(cf.len(), 3);
    }

    #[test]
    fn convergence_violations_are_domain_errors() {
        assert!(matches!(log_integral_odd_cosh(3, 2), Err(MellinError::Domain(_))));
        assert!(matches!(log_integral_odd_cosh(0, 0), Err(MellinError::Domain(_))));
        assert!(matches!(log_integral_even_cosh(1, 1), Err(MellinError::Domain(_))));
        assert!(matches!(sinh_over_z_integral(0, 4), Err(MellinError::Domain(_))));
        assert!(matches!(sinh_over_z_integral(2, 4), Err(MellinError::Domain(_))));
        assert!(matches!(phi_odd_closed_form(1, 0), Err(MellinError::Domain(_))));
        assert!(matches!(phi_odd_closed_form(3, 1), Err(MellinError::Domain(_))));
    }

    #[test]
    fn phi_odd_first_rows() {
        let cf = phi_odd_closed_form(1, 1).unwrap();
        assert_eq!(cf.coeff(BasisSymbol::EtaPrimeNeg(0)), r(4, 3));
        assert_eq!(cf.coeff(BasisSymbol::EtaPrimeNeg(1)), r(8, 3));
        let cf = phi_odd_closed_form(2, 1).unwrap();
        assert_eq!(cf.coeff(BasisSymbol::BetaPrimeNeg(0)), r(1, 1));
        assert_eq!(cf.coeff(BasisSymbol::BetaPrimeNeg(1)), r(1, 1));
    }

    #[test]
    fn even_partial_leading_terms() {
        assert_eq!(mellin_even_partial(2, 1, 2).unwrap(), vec![r(1, 1), r(-1, 6)]);
        assert_eq!(mellin_even_partial(1, 1, 1).unwrap(), vec![r(1, 2)]);
        assert!(mellin_even_partial(1, 0, 3).is_err());
    }
}
