use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::ops::Pow;
use rug::Integer;

use super::power_series::PowerSeries;
use crate::exact::{binomial, factorial, Rational};

/// Coefficients of `sinh(x)/x` in the variable `y = x^2`, `order` terms.
fn sinh_over_x_in_y(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |j| Rational::new(1, factorial(2 * j + 1)))
}

fn cosh_in_y(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |j| Rational::new(1, factorial(2 * j)))
}

type YCache = Mutex<HashMap<u32, PowerSeries>>;

fn y_cache() -> &'static YCache {
    static CACHE: OnceLock<YCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `(x/sinh x)^e` in `y = x^2`, at least `order` terms.
fn x_over_sinh_pow_y(e: u32, order: usize) -> PowerSeries {
    {
        let cache = y_cache().lock().unwrap();
        if let Some(s) = cache.get(&e) {
            if s.order() >= order {
                return s.truncate(order);
            }
        }
    }
    let s = sinh_over_x_in_y(order).reciprocal().pow(e);
    let mut cache = y_cache().lock().unwrap();
    let keep = match cache.get(&e) {
        Some(old) => old.order() < s.order(),
        None => true,
    };
    if keep {
        cache.insert(e, s.clone());
    }
    s
}

fn x_over_sinh_pow(e: u32, k_max: usize) -> Vec<Rational> {
    let y = x_over_sinh_pow_y(e, k_max / 2 + 1);
    let mut out = y.compose_x2().into_coeffs();
    out.resize(k_max + 1, Rational::zero());
    out
}

/// `c_{0,n} .. c_{K,n}`: Taylor coefficients of `(x/sinh x)^{2n+1}`.
pub fn c_coeffs(n: usize, k_max: usize) -> Vec<Rational> {
    x_over_sinh_pow(2 * n as u32 + 1, k_max)
}

/// `d_{0,n} .. d_{K,n}`: Taylor coefficients of `(x/sinh x)^{2n}`.
pub fn d_coeffs(n: usize, k_max: usize) -> Vec<Rational> {
    x_over_sinh_pow(2 * n as u32, k_max)
}

/// Single coefficient `c_{k,n}`; zero for negative `k`.
pub fn c_coeff(k: i64, n: usize) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = k as usize;
    if k % 2 == 1 {
        return Rational::zero();
    }
    x_over_sinh_pow_y(2 * n as u32 + 1, k / 2 + 1).coeff(k / 2).clone()
}

/// Single coefficient `d_{k,n}`; zero for negative `k`.
pub fn d_coeff(k: i64, n: usize) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = k as usize;
    if k % 2 == 1 {
        return Rational::zero();
    }
    x_over_sinh_pow_y(2 * n as u32, k / 2 + 1).coeff(k / 2).clone()
}

/// Integer coefficient tables of `x prod (x^2 - i^2) = sum g_{k,n} x^{2k+1}`
/// and `prod ((2x+1)^2 - (2i-1)^2) = sum h_{k,n} (2x+1)^{2k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GHTable {
    g: Vec<Vec<Integer>>,
    h: Vec<Vec<Integer>>,
}

impl GHTable {
    pub fn n_max(&self) -> usize {
        self.g.len() - 1
    }

    /// `g_{k,n}`, zero outside `0 <= k <= n`.
    pub fn g(&self, k: i64, n: usize) -> Integer {
        lookup(&self.g, k, n)
    }

    /// `h_{k,n}`, zero outside `0 <= k <= n`.
    pub fn h(&self, k: i64, n: usize) -> Integer {
        lookup(&self.h, k, n)
    }
}

fn lookup(t: &[Vec<Integer>], k: i64, n: usize) -> Integer {
    assert!(n < t.len(), "row {n} beyond table size {}", t.len());
    if k < 0 {
        return Integer::new();
    }
    t[n].get(k as usize).cloned().unwrap_or_default()
}

pub fn gh_table(n_max: usize) -> GHTable {
    let build = |shift: &dyn Fn(usize) -> Integer| {
        let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::from(1)]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let get = |k: i64| -> Integer {
                if k < 0 {
                    Integer::new()
                } else {
                    prev.get(k as usize).cloned().unwrap_or_default()
                }
            };
            let s = shift(n);
            let row = (0..=n as i64).map(|k| get(k - 1) - Integer::from(&s * get(k))).collect();
            rows.push(row);
        }
        rows
    };
    GHTable {
        g: build(&|n| Integer::from(n * n)),
        h: build(&|n| Integer::from((2 * n - 1) * (2 * n - 1))),
    }
}

/// `4^{-q} sum_{k=0}^{q} C(2q+1,k) (2q+1-2k)^{2p}`.
pub fn omega(q: usize, p: usize) -> Rational {
    let mut acc = Integer::new();
    for k in 0..=q {
        let base = Integer::from(2 * q + 1 - 2 * k);
        acc += binomial(2 * q as i64 + 1, k as i64) * base.pow(2 * p as u32);
    }
    Rational::new(acc, Integer::from(1) << (2 * q as u32))
}

/// Coefficients of `1/artanh x = sum p_n x^{2n-1}` and
/// `1/(sqrt(1-x^2) artanh x) = sum q_n x^{2n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalCoeffs {
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
}

pub fn reciprocal_coeffs(n: usize) -> ReciprocalCoeffs {
    let order = n + 1;
    let artanh_over_x = PowerSeries::from_fn(order, |j| Rational::new(1, 2 * j as u64 + 1));
    let p = artanh_over_x.reciprocal();
    let inv_sqrt = PowerSeries::from_fn(order, |j| {
        Rational::new(binomial(2 * j as i64, j as i64), Integer::from(1) << (2 * j as u32))
    });
    let q = &p * &inv_sqrt;
    ReciprocalCoeffs { p: p.into_coeffs(), q: q.into_coeffs() }
}

/// `[x^{2n}] artanh(x)^2`.
pub fn arctanh_sq_coeff(n: usize) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let s: Rational = (1..=n as u64).map(|k| Rational::new(1, 2 * k - 1)).sum();
    s / Rational::from(n)
}

/// Taylor coefficients of `cosh(x)^e` in `y = x^2`.
pub fn cosh_pow_y(e: u32, order: usize) -> PowerSeries {
    cosh_in_y(order).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{euler_number, pow2};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn c_and_d_examples() {
        let c0 = c_coeffs(0, 4);
        assert_eq!(c0[0], r(1, 1));
        assert_eq!(c0[2], r(-1, 6));
        assert_eq!(c0[4], r(7, 360));
        assert_eq!(c_coeffs(1, 3)[1], r(0, 1));
        let d1 = d_coeffs(1, 2);
        assert_eq!(d1[0], r(1, 1));
        assert_eq!(d1[2], r(-1, 3));
        assert_eq!(d_coeffs(2, 2)[1], r(0, 1));
        assert_eq!(c_coeff(4, 0), r(7, 360));
        assert_eq!(d_coeff(-2, 3), r(0, 1));
    }

    #[test]
    fn x_over_sinh_by_long_division() {
        // Solve (sinh x / x) * f = 1 coefficient by coefficient in x.
        let k_max = 12;
        let s: Vec<Rational> = (0..=k_max)
            .map(|k| if k % 2 == 0 { Rational::new(1, factorial(k + 1)) } else { Rational::zero() })
            .collect();
        let mut f = vec![Rational::zero(); k_max + 1];
        f[0] = Rational::one();
        for k in 1..=k_max {
            let acc: Rational = (1..=k).map(|j| &s[j] * &f[k - j]).sum();
            f[k] = -acc;
        }
        assert_eq!(c_coeffs(0, k_max), f);
    }

    #[test]
    fn gh_examples_and_base_row() {
        let t = gh_table(10);
        assert_eq!(t.g(0, 3), -36);
        assert_eq!(t.g(0, 2), 4);
        assert_eq!(t.g(1, 2), -5);
        assert_eq!(t.g(2, 2), 1);
        assert_eq!(t.g(0, 1), -1);
        assert_eq!(t.g(1, 1), 1);
        assert_eq!(t.h(0, 1), -1);
        assert_eq!(t.h(1, 1), 1);
        assert_eq!(t.g(0, 0), 1);
        assert_eq!(t.h(0, 0), 1);
        assert_eq!(t.g(5, 3), 0);
        assert_eq!(t.h(-1, 3), 0);
        for k in 0..=10 {
            let f = factorial(k);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(t.g(0, k), Integer::from(&f * &f) * sign);
        }
    }

    fn poly_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
        let mut out = vec![Integer::new(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += Integer::from(x * y);
            }
        }
        out
    }

    #[test]
    fn gh_match_product_expansion() {
        let t = gh_table(10);
        for n in 0..=10usize {
            // prod (x - j) for j = -n..n, in x.
            let mut p = vec![Integer::from(1)];
            for j in -(n as i64)..=(n as i64) {
                p = poly_mul(&p, &[Integer::from(-j), Integer::from(1)]);
            }
            for (e, c) in p.iter().enumerate() {
                let want = if e % 2 == 1 { t.g((e as i64 - 1) / 2, n) } else { Integer::new() };
                assert_eq!(*c, want, "P_{n} x^{e}");
            }
            // 4^n prod_{i=1}^{2n} (x - n + i) evaluated at integer points.
            for x in -4i64..=6 {
                let direct: Integer =
                    (1..=2 * n as i64).map(|i| Integer::from(x - n as i64 + i)).product();
                let u = Integer::from(2 * x + 1);
                let via_h: Integer = (0..=n)
                    .map(|k| t.h(k as i64, n) * Integer::from((&u).pow(2 * k as u32)))
                    .sum();
                assert_eq!(direct * pow2(2 * n), via_h, "Q_{n}({x})");
            }
        }
    }

    #[test]
    fn gh_recurrences_hold() {
        let t = gh_table(12);
        for n in 1..=12usize {
            for k in -1..=(n as i64 + 1) {
                let n2 = Integer::from(n * n);
                assert_eq!(t.g(k, n), t.g(k - 1, n - 1) - n2 * t.g(k, n - 1));
                let m2 = Integer::from((2 * n - 1) * (2 * n - 1));
                assert_eq!(t.h(k, n), t.h(k - 1, n - 1) - m2 * t.h(k, n - 1));
            }
        }
    }

    #[test]
    fn omega_examples_and_derivative_form() {
        assert_eq!(omega(1, 1), r(3, 1));
        for q in 0..=8 {
            assert_eq!(omega(q, 0), r(1, 1));
            assert_eq!(omega(0, q), r(1, 1));
        }
        // Omega_{q,p} = (2p)! [t^{2p}] cosh(t)^{2q+1}.
        for q in 0..=6usize {
            let s = cosh_pow_y(2 * q as u32 + 1, 7);
            for p in 0..=6usize {
                let want = s.coeff(p) * Rational::from(factorial(2 * p));
                assert_eq!(omega(q, p), want, "Omega({q},{p})");
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        let rc = reciprocal_coeffs(6);
        assert_eq!(rc.p[0], r(1, 1));
        assert_eq!(rc.q[0], r(1, 1));
        assert_eq!(rc.p[1], r(-1, 3));
        assert_eq!(rc.q[1], r(1, 6));
        let artanh_over_x = PowerSeries::from_fn(7, |j| Rational::new(1, 2 * j as u64 + 1));
        let prod = &PowerSeries::new(rc.p.clone()) * &artanh_over_x;
        assert_eq!(prod, PowerSeries::one(7));
    }

    #[test]
    fn arctanh_sq_matches_cauchy_square() {
        let a: Vec<Rational> =
            (0..=40).map(|k| if k % 2 == 1 { Rational::new(1, k as u64) } else { Rational::zero() }).collect();
        for n in 0..=20usize {
            let sq: Rational = (0..=2 * n).map(|i| &a[i] * &a[2 * n - i]).sum();
            assert_eq!(arctanh_sq_coeff(n), sq, "n = {n}");
        }
        assert_eq!(arctanh_sq_coeff(2), r(2, 3));
        assert_eq!(arctanh_sq_coeff(1), r(1, 1));
    }

    #[test]
    fn euler_numbers_from_sech_series() {
        let sech = cosh_in_y(31).reciprocal().compose_x2();
        for n in 0..=60usize {
            let want = sech.coeff(n) * Rational::from(factorial(n));
            assert_eq!(Rational::from(euler_number(n)), want, "E_{n}");
        }
    }
}
