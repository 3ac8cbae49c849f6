//! Exact identity families. Every cell is computed in rational arithmetic
//! and compared for equality.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Integer;
use serde_json::json;

use super::report::{Cell, CellRange, VerifyReport};
use crate::closed_form::{eta_coeffs, log_integral, sinh_over_z_integral, BasisSymbol};
use crate::exact::{bernoulli, binomial, euler_number, eulerian, factorial, EulerianKind, Rational};
use crate::series::{c_coeff, d_coeff, omega};

fn rat(i: Integer) -> Rational {
    Rational::from(i)
}

fn ipow(base: i64, e: usize) -> Integer {
    Integer::from(base).pow(e as u32)
}

fn inv_fact(n: usize) -> Rational {
    rat(factorial(n)).recip()
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn c(k: usize, n: usize) -> Rational {
    c_coeff(k as i64, n)
}

fn d(k: usize, n: usize) -> Rational {
    d_coeff(k as i64, n)
}

fn cell(params: &[(&str, usize)], expected: &Rational, actual: &Rational) -> Cell {
    let p: Vec<(&str, serde_json::Value)> = params.iter().map(|&(k, v)| (k, json!(v))).collect();
    Cell::new(&p, expected, actual, expected == actual)
}

/// Runs `per_n` over the range in parallel and concatenates in range order.
fn over_range(family: &str, range: CellRange, per_n: impl Fn(usize) -> Vec<Cell> + Sync + Send) -> VerifyReport {
    let chunks: Vec<Vec<Cell>> = range.iter().collect::<Vec<_>>().into_par_iter().map(&per_n).collect();
    let mut report = VerifyReport::from_cells(family, chunks.into_iter().flatten().collect());
    report.range = Some(range);
    report
}

/// `sum_{k=0}^{n} (-1)^k C(2n+1,k) (2n+1-2k)^{2j+1}`.
pub fn alt_binom_odd_sum(n: usize, j: usize) -> Integer {
    (0..=n)
        .map(|k| {
            binomial(2 * n as i64 + 1, k as i64) * ipow((2 * n + 1 - 2 * k) as i64, 2 * j + 1) * sign(k)
        })
        .sum()
}

/// `0` for `j < n`, `4^n (2n+1)!` at `j = n`.
pub fn alt_binom_odd_expected(n: usize, j: usize) -> Integer {
    if j < n {
        Integer::new()
    } else {
        ipow(4, n) * factorial(2 * n + 1)
    }
}

/// `sum_{k=0}^{n-1} (-1)^k C(2n,k) (2n-2k)^{2j}`.
pub fn alt_binom_even_sum(n: usize, j: usize) -> Integer {
    (0..n)
        .map(|k| binomial(2 * n as i64, k as i64) * ipow((2 * n - 2 * k) as i64, 2 * j) * sign(k))
        .sum()
}

/// Value of [`alt_binom_even_sum`]: `(-1)^{n+1} C(2n,n)/2` at `j = 0`, `0`
/// for `1 <= j <= n-1`, `4^n (2n)!/2` at `j = n`.
pub fn alt_binom_even_expected(n: usize, j: usize) -> Rational {
    if j == 0 {
        Rational::new(binomial(2 * n as i64, n as i64) * sign(n + 1), 2)
    } else if j < n {
        Rational::zero()
    } else {
        Rational::new(ipow(4, n) * factorial(2 * n), 2)
    }
}

/// The `j = 0` value without the factor 1/2. Kept so the tests can show it
/// is not the exact sum.
pub fn alt_binom_even_printed_j0(n: usize) -> Integer {
    binomial(2 * n as i64, n as i64) * sign(n + 1)
}

/// `sum_{m=0}^{n} c_{2m,n}/(2n-2m)! (2k+1)^{2n-2m}`.
pub fn c_odd_power_sum(n: usize, k: usize) -> Rational {
    (0..=n)
        .map(|m| c(2 * m, n) * inv_fact(2 * n - 2 * m) * rat(ipow(2 * k as i64 + 1, 2 * n - 2 * m)))
        .sum()
}

/// `sum_{r=0}^{n-p} c_{2n-2p-2r,n}/(2r)! sum_{k=0}^{n-1} A(2n,n-1-k) (2k+1)^{2r}`.
pub fn eulerian_a_sum(n: usize, p: usize) -> Rational {
    (0..=n - p)
        .map(|r| {
            let inner: Integer = (0..n)
                .map(|k| eulerian(EulerianKind::A, 2 * n, n - 1 - k) * ipow(2 * k as i64 + 1, 2 * r))
                .sum();
            c(2 * n - 2 * p - 2 * r, n) * inv_fact(2 * r) * rat(inner)
        })
        .sum()
}

pub fn eulerian_a_expected(n: usize, p: usize) -> Rational {
    if p < n {
        Rational::zero()
    } else {
        Rational::new(factorial(2 * n), 2)
    }
}

/// `sum_{m=0}^{n-p} d_{2n-2m-2p,n}/(2m)! sum_{k=0}^{n-1} B(2n-1,k) (2n-1-2k)^{2m}`.
pub fn eulerian_b_sum(n: usize, p: usize) -> Rational {
    (0..=n - p)
        .map(|m| {
            let inner: Integer = (0..n)
                .map(|k| eulerian(EulerianKind::B, 2 * n - 1, k) * ipow((2 * n - 1 - 2 * k) as i64, 2 * m))
                .sum();
            d(2 * n - 2 * m - 2 * p, n) * inv_fact(2 * m) * rat(inner)
        })
        .sum()
}

/// `2^{2n-2}(2^{2n-1}-1) B_{2n}/n` at `p = 0`, zero in between,
/// `2^{2n-2}(2n-1)!` at `p = n`.
pub fn eulerian_b_expected(n: usize, p: usize) -> Rational {
    let lead = rat(ipow(2, 2 * n - 2));
    if p == 0 {
        lead * rat(ipow(2, 2 * n - 1) - 1u32) * bernoulli(2 * n) / Rational::from(n)
    } else if p < n {
        Rational::zero()
    } else {
        lead * rat(factorial(2 * n - 1))
    }
}

/// `sum_{m=0}^{n} c_{2n-2m,n}/(2m)! sum_{k=0}^{q} C(2q+1,k) (2q+1-2k)^{2m}`.
pub fn binom_cosh_sum(n: usize, q: usize) -> Rational {
    (0..=n)
        .map(|m| {
            let inner: Integer = (0..=q)
                .map(|k| binomial(2 * q as i64 + 1, k as i64) * ipow((2 * q + 1 - 2 * k) as i64, 2 * m))
                .sum();
            c(2 * n - 2 * m, n) * inv_fact(2 * m) * rat(inner)
        })
        .sum()
}

/// `0` below the diagonal, `4^n` on it.
fn zero_then_four_pow(n: usize, i: usize) -> Rational {
    if i < n {
        Rational::zero()
    } else {
        rat(ipow(4, n))
    }
}

/// `R_{q,n} = sum_{m=0}^{n} c_{2n-2m,n}/(2m)! Ω_{q,m}`.
pub fn r_coeff(q: usize, n: usize) -> Rational {
    (0..=n).map(|m| c(2 * n - 2 * m, n) * inv_fact(2 * m) * omega(q, m)).sum()
}

/// First line of the Euler–Bernoulli lemma, left-hand side.
pub fn lemma_line1_lhs(q: usize, n: usize) -> Rational {
    (0..=n)
        .map(|m| {
            let inner: Rational = (1..=m)
                .map(|p| {
                    let b = bernoulli(2 * p);
                    rat(binomial(2 * m as i64, (2 * m - 2 * p) as i64))
                        * omega(q, m - p)
                        * rat(ipow(2, 2 * p - 1) * (ipow(2, 2 * p) - 1u32))
                        * b
                        / Rational::from(p)
                })
                .sum();
            c(2 * n - 2 * m, n) * inv_fact(2 * m) * inner
        })
        .sum()
}

/// `(-1)^{q+n+1} q! (n-q-1)! / (2 n!)`.
pub fn lemma_line1_rhs(q: usize, n: usize) -> Rational {
    Rational::new(factorial(q) * factorial(n - q - 1) * sign(q + n + 1), factorial(n) * 2u32)
}

/// Second line of the Euler–Bernoulli lemma, left-hand side.
pub fn lemma_line2_lhs(q: usize, n: usize) -> Rational {
    (0..n)
        .map(|m| {
            let inner: Rational = (0..=m)
                .map(|p| {
                    rat(binomial(2 * m as i64 + 1, (2 * m - 2 * p) as i64) * euler_number(2 * p)) * omega(q, m - p)
                })
                .sum();
            d(2 * n - 2 * m - 2, n) * inv_fact(2 * m + 1) * inner
        })
        .sum()
}

/// `(-1)^{q+n+1} 2^{2q+1} q! n! (2n-2q-2)! / ((n-q-1)! (2n)!)`.
pub fn lemma_line2_rhs(q: usize, n: usize) -> Rational {
    Rational::new(
        ipow(2, 2 * q + 1) * factorial(q) * factorial(n) * factorial(2 * n - 2 * q - 2) * sign(q + n + 1),
        factorial(n - q - 1) * factorial(2 * n),
    )
}

/// Independent value of `∫_0^∞ sinh^{2q+1} z / cosh^{2n+1} z dz`, i.e.
/// `B(q+1, n-q)/2`, from the Beta integral `∫_0^1 t^q (1-t)^{n-q-1} dt`
/// expanded term by term.
pub fn beta_oracle_odd_cosh(q: usize, n: usize) -> Rational {
    let half = Rational::new(1, 2);
    let e = n - q - 1;
    let s: Rational = (0..=e)
        .map(|j| Rational::new(binomial(e as i64, j as i64) * sign(j), (q + j + 1) as u64))
        .sum();
    half * s
}

/// Independent value of `∫_0^∞ sinh^{2q+1} z / cosh^{2n} z dz
/// = B(q+1, n-q-1/2)/2 = q!/2 / prod_{j=n-q-1}^{n-1} (j + 1/2)`.
pub fn beta_oracle_even_cosh(q: usize, n: usize) -> Rational {
    let prod: Rational = (n - q - 1..n).map(|j| Rational::new(2 * j as u64 + 1, 2)).product();
    rat(factorial(q)) / (Rational::from(2) * prod)
}

/// `sum_{m=0}^{n} d_{2m,n+1}/(2n-2m)! sum_{k=0}^{n} C(4n+2, 2n-2k) (2k+1)^{2n-2m}`.
pub fn prop_d_sum(n: usize) -> Rational {
    (0..=n)
        .map(|m| {
            let inner: Integer = (0..=n)
                .map(|k| {
                    binomial(4 * n as i64 + 2, (2 * n - 2 * k) as i64) * ipow(2 * k as i64 + 1, 2 * n - 2 * m)
                })
                .sum();
            d(2 * m, n + 1) * inv_fact(2 * n - 2 * m) * rat(inner)
        })
        .sum()
}

/// Coefficient of ln π in the sinh-over-z closed form, assembled directly
/// from the two log integrals rather than through the builder (which
/// rejects a non-zero value).
pub fn sinh_over_z_lnpi(q: usize, big_n: usize) -> crate::Result<Rational> {
    let a = log_integral(q - 1, big_n - 1)?.coeff(BasisSymbol::LnPi);
    let b = log_integral(q, big_n + 1)?.coeff(BasisSymbol::LnPi);
    Ok(Rational::from(-2 * q as i64) * a + Rational::from(big_n as u64) * b)
}

pub fn alt_binom_odd(range: CellRange) -> VerifyReport {
    over_range("alt-binom-odd", range, |n| {
        (0..=n)
            .map(|j| cell(&[("n", n), ("j", j)], &rat(alt_binom_odd_expected(n, j)), &rat(alt_binom_odd_sum(n, j))))
            .collect()
    })
}

pub fn alt_binom_even(range: CellRange) -> VerifyReport {
    over_range("alt-binom-even", range, |n| {
        if n == 0 {
            return Vec::new();
        }
        (0..=n)
            .map(|j| cell(&[("n", n), ("j", j)], &alt_binom_even_expected(n, j), &rat(alt_binom_even_sum(n, j))))
            .collect()
    })
}

pub fn c_odd_power(range: CellRange) -> VerifyReport {
    over_range("c-odd-power", range, |n| {
        (0..=n).map(|k| cell(&[("n", n), ("k", k)], &zero_then_four_pow(n, k), &c_odd_power_sum(n, k))).collect()
    })
}

pub fn eulerian_a(range: CellRange) -> VerifyReport {
    over_range("eulerian-a-sum", range, |n| {
        if n == 0 {
            return Vec::new();
        }
        (0..=n).map(|p| cell(&[("n", n), ("p", p)], &eulerian_a_expected(n, p), &eulerian_a_sum(n, p))).collect()
    })
}

pub fn eulerian_b(range: CellRange) -> VerifyReport {
    over_range("eulerian-b-sum", range, |n| {
        if n == 0 {
            return Vec::new();
        }
        (0..=n).map(|p| cell(&[("n", n), ("p", p)], &eulerian_b_expected(n, p), &eulerian_b_sum(n, p))).collect()
    })
}

pub fn binom_cosh(range: CellRange) -> VerifyReport {
    over_range("binom-cosh-sum", range, |n| {
        (0..=n).map(|q| cell(&[("n", n), ("q", q)], &zero_then_four_pow(n, q), &binom_cosh_sum(n, q))).collect()
    })
}

pub fn prop_vanishing(range: CellRange) -> VerifyReport {
    over_range("prop-vanishing", range, |n| {
        (0..n).map(|q| cell(&[("n", n), ("q", q)], &Rational::zero(), &r_coeff(q, n))).collect()
    })
}

pub fn prop_eta_coeff(range: CellRange) -> VerifyReport {
    over_range("prop-eta-coeff", range, |n| {
        let want = Rational::new(4, 2 * n as u64 + 1);
        vec![cell(&[("n", n)], &want, &eta_coeffs(n)[0])]
    })
}

pub fn prop_zeta2_coeff(range: CellRange) -> VerifyReport {
    over_range("prop-zeta2-coeff", range, |n| {
        if n < 2 {
            return Vec::new();
        }
        let want = Rational::new(-6, 2 * n as i64 - 1);
        match sinh_over_z_integral(n - 1, 2 * n) {
            Ok(cf) => vec![cell(&[("n", n)], &want, &cf.coeff(BasisSymbol::ZetaPrimeRatio(0)))],
            Err(e) => vec![Cell::new(&[("n", json!(n))], &want, e, false)],
        }
    })
}

pub fn prop_d_identity(range: CellRange) -> VerifyReport {
    over_range("prop-d-identity", range, |n| {
        let want = Rational::new(ipow(4, n), 2 * n as u64 + 1);
        vec![cell(&[("n", n)], &want, &prop_d_sum(n))]
    })
}

/// Both lines for `0 <= q < n`. The right-hand sides are also compared with
/// the Beta-integral values they stand for; a cell passes only if all three
/// agree (up to the sign `(-1)^{q+n+1}`).
pub fn lemma_euler_bernoulli(range: CellRange) -> VerifyReport {
    over_range("lemma-euler-bernoulli", range, |n| {
        let mut out = Vec::new();
        for q in 0..n {
            let s = Rational::from(sign(q + n + 1));
            for line in [1usize, 2] {
                let (lhs, rhs, oracle) = if line == 1 {
                    (lemma_line1_lhs(q, n), lemma_line1_rhs(q, n), &s * &beta_oracle_odd_cosh(q, n))
                } else {
                    (lemma_line2_lhs(q, n), lemma_line2_rhs(q, n), &s * &beta_oracle_even_cosh(q, n))
                };
                let mut c = cell(&[("line", line), ("n", n), ("q", q)], &rhs, &lhs);
                if rhs != oracle {
                    c.pass = false;
                    c = c.with_detail(format!("stated value {rhs} differs from Beta integral {oracle}"));
                }
                out.push(c);
            }
        }
        out
    })
}

/// Ranges over `N`; every `q` with `0 < 2q < N`.
pub fn remark_lnpi(range: CellRange) -> VerifyReport {
    over_range("remark-lnpi", range, |big_n| {
        (1..)
            .take_while(|q| 2 * q < big_n)
            .map(|q| match sinh_over_z_lnpi(q, big_n) {
                Ok(v) => cell(&[("N", big_n), ("q", q)], &Rational::zero(), &v),
                Err(e) => Cell::new(&[("N", json!(big_n)), ("q", json!(q))], 0, e, false),
            })
            .collect()
    })
}
