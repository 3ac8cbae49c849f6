//! Suites that compare floating-point values: quadrature against closed
//! forms, the bounds on Φ, the coupled series and the pole constants.

use rayon::prelude::*;
use rug::Float;
use serde_json::json;

use super::report::{Cell, CellRange, VerifyReport};
use crate::closed_form::{phi_odd_closed_form, phi_odd_via_sinh_over_z, IntegralSpec};
use crate::error::Result;
use crate::exact::{binomial, Rational};
use crate::lfunc::{eval_closed_form, mellin_bound_gamma_ratio, phi1_bounds, tolerance, work_bits, BigReal};
use crate::quad::{quad_c_constant, quad_integral, quad_phi};
use crate::reference::{c1_closed_form, c2_closed_form, C1_DECIMAL, C2_DECIMAL};

/// Guard digits required on a strict inequality.
const STRICT_GUARD: u32 = 10;
/// Equality checks in float mode allow `10^{-(prec - EQ_SLACK)}`.
const EQ_SLACK: u32 = 5;

pub const BOUNDS_GRID: [f64; 8] = [1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 25.0];
pub const COUPLED_GRID: [f64; 3] = [2.0, 4.0, 6.0];
pub const COUPLED_TRUNCATION: usize = 30;

fn eq_tol(prec: u32) -> u32 {
    prec.saturating_sub(EQ_SLACK)
}

fn sci(digits: u32) -> String {
    format!("1e-{digits}")
}

fn err_cell(params: &[(&str, serde_json::Value)], e: impl std::fmt::Display) -> Cell {
    Cell::new(params, "a value", format!("error: {e}"), false)
}

/// Every integral the builders cover whose denominator exponent is `big_n`.
pub fn specs_with_exponent(big_n: usize) -> Vec<IntegralSpec> {
    let mut out = Vec::new();
    if big_n % 2 == 1 {
        let n = (big_n - 1) / 2;
        out.extend((0..n).map(|q| IntegralSpec::LogOddCosh { q, n }));
    } else {
        let n = big_n / 2;
        out.extend((0..n).map(|q| IntegralSpec::LogEvenCosh { q, n }));
    }
    out.extend((1..).take_while(|q| 2 * q < big_n).map(|q| IntegralSpec::SinhOverZ { q, big_n }));
    out
}

/// `|closed form − quadrature| < 10^{-(prec-5)}` for every integral with
/// denominator exponent in `range`.
pub fn quad_sweep(range: CellRange, prec: u32) -> VerifyReport {
    let specs: Vec<IntegralSpec> = range.iter().flat_map(specs_with_exponent).collect();
    let tol = eq_tol(prec);
    let cells: Vec<Cell> = specs
        .par_iter()
        .map(|spec| {
            let params = [("integral", json!(spec.to_string()))];
            let run = || -> Result<Cell> {
                let cf = eval_closed_form(&spec.closed_form()?, prec)?;
                let q = quad_integral(spec, prec)?;
                let diff = cf.abs_diff(&q.value);
                let pass = diff < tolerance(tol, work_bits(prec));
                Ok(Cell::new(&params, &cf, &q.value, pass)
                    .with_detail(format!("|diff| = {:.3e}, quad error estimate {:.3e}", diff.to_f64(), q.error_estimate.to_f64())))
            };
            run().unwrap_or_else(|e| err_cell(&params, e))
        })
        .collect();
    let mut r = VerifyReport::from_cells("quad-sweep", cells).numeric(prec, sci(tol));
    r.range = Some(range);
    r
}

/// Strict `lo < Φ(s) < hi` for Φ₁ and Φ₂ at each `s`, with both margins
/// above `10^{-(prec-10)}`.
pub fn check_bounds(s_grid: &[f64], prec: u32) -> VerifyReport {
    let margin_digits = prec.saturating_sub(STRICT_GUARD);
    let work: Vec<(f64, u8)> = s_grid.iter().flat_map(|&s| [(s, 1u8), (s, 2u8)]).collect();
    let cells: Vec<Cell> = work
        .par_iter()
        .map(|&(s, which)| {
            let params = [("s", json!(s)), ("which", json!(which))];
            let run = || -> Result<Cell> {
                let (lo, hi) = if which == 1 { phi1_bounds(s, prec)? } else { mellin_bound_gamma_ratio(s, prec)? };
                let v = quad_phi(which, s, prec)?.value;
                let bits = work_bits(prec);
                let below = Float::with_val(bits, v.value() - lo.value());
                let above = Float::with_val(bits, hi.value() - v.value());
                let need = tolerance(margin_digits, bits);
                let pass = below > need && above > need;
                Ok(Cell::new(&params, format!("({lo}, {hi})"), &v, pass).with_detail(format!(
                    "margins {:.3e} below, {:.3e} above",
                    below.to_f64(),
                    above.to_f64()
                )))
            };
            run().unwrap_or_else(|e| err_cell(&params, e))
        })
        .collect();
    VerifyReport::from_cells("bounds", cells).numeric(prec, sci(margin_digits))
}

/// `C(2n,n)/4^n` for `n = 0..count`.
fn central_ratios(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|n| Rational::new(binomial(2 * n as i64, n as i64), rug::Integer::from(1) << (2 * n as u32)))
        .collect()
}

/// Upper bound on `sum_{n>=t} C(2n,n)/4^n U(s+2n) w_n` where `U` is the upper
/// bound on Φ₁ (`which = 1`) or Φ₂ and `w_n = 1` or `1/(2n-1)`.
///
/// The first `EXPLICIT` terms use the exact ratio and the bound as stated;
/// beyond that `C(2n,n)/4^n <= 1/sqrt(πn)` and, for Φ₂, Kershaw's
/// `Γ(y+1/2)/Γ(y) > sqrt(y-1/4)` give a closed tail.
fn coupled_tail_bound(which: u8, s: f64, t: usize) -> f64 {
    const EXPLICIT: usize = 4000;
    let mut ratio = 1.0f64;
    for n in 1..t {
        ratio *= (2 * n - 1) as f64 / (2 * n) as f64;
    }
    let mut sum = 0.0f64;
    let mut n = t;
    while n < t + EXPLICIT {
        if n > 0 {
            ratio *= if n == t { 1.0 } else { (2 * n - 1) as f64 / (2 * n) as f64 };
        }
        let sp = s + 2.0 * n as f64;
        let term = if which == 1 {
            ratio * (1.0 / (sp - 1.0))
        } else {
            let up = mellin_bound_gamma_ratio(sp, 16).map(|(_, u)| u.to_f64()).unwrap_or(f64::INFINITY);
            ratio * up / (2 * n - 1) as f64
        };
        sum += term;
        n += 1;
    }
    // Remainder from n = t + EXPLICIT on.
    let m = (t + EXPLICIT) as f64;
    let pi = std::f64::consts::PI;
    let rest = if which == 1 {
        // sum n^{-3/2} / (2 sqrt π) <= (1/sqrt π) / sqrt(m-1)
        1.0 / (pi.sqrt() * (m - 1.0).sqrt())
    } else {
        // 1/sqrt(πn) * sqrt(π)/sqrt(2s+4n-3) / (2n-1) <= 1/(2n(2n-1)) <= 1/(2n^2)
        1.0 / (2.0 * (m - 1.0))
    };
    // Relative slack for the f64 accumulation.
    (sum + rest) * (1.0 + 1e-9)
}

/// One coupled-series cell: the residual after `t` terms against the tail
/// bound.
pub struct CoupledResidual {
    pub residual: f64,
    pub bound: f64,
}

/// Residual of the first (`which = 2`: Φ₂ from Φ₁) or second (`which = 1`:
/// Φ₁ from Φ₂) coupled relation after `t` terms.
pub fn coupled_residual(which: u8, s: f64, t: usize, prec: u32) -> Result<CoupledResidual> {
    let bits = work_bits(prec);
    let ratios = central_ratios(t);
    let other = if which == 2 { 1 } else { 2 };
    let values: Vec<Result<BigReal>> =
        (0..t).into_par_iter().map(|n| quad_phi(other, s + 2.0 * n as f64, prec).map(|r| r.value)).collect();
    let mut partial = Float::new(bits);
    for (n, v) in values.into_iter().enumerate() {
        let mut w = ratios[n].clone();
        if which == 1 {
            w = -(w / Rational::from(2 * n as i64 - 1));
        }
        partial += Float::with_val(bits, w.as_rug()) * v?.value();
    }
    let lhs = quad_phi(which, s, prec)?.value;
    let residual = Float::with_val(bits, lhs.value() - &partial).to_f64();
    Ok(CoupledResidual { residual, bound: coupled_tail_bound(other, s, t) })
}

/// Both coupled relations at each `s`. The first relation has a positive
/// tail, the second a negative one; the residual must have that sign and be
/// smaller than the bound.
pub fn check_coupled(s_grid: &[f64], truncation: usize, prec: u32) -> VerifyReport {
    let mut cells = Vec::new();
    for &s in s_grid {
        for which in [2u8, 1] {
            let params = [("relation", json!(if which == 2 { 1 } else { 2 })), ("s", json!(s)), ("T", json!(truncation))];
            let cell = match coupled_residual(which, s, truncation, prec) {
                Ok(r) => {
                    let signed_ok = if which == 2 { r.residual > 0.0 } else { r.residual < 0.0 };
                    let pass = signed_ok && r.residual.abs() < r.bound;
                    Cell::new(&params, format!("|residual| < {:.6e}", r.bound), format!("{:.6e}", r.residual), pass)
                }
                Err(e) => err_cell(&params, e),
            };
            cells.push(cell);
        }
    }
    VerifyReport::from_cells("coupled-series", cells).numeric(prec, "tail bound")
}

/// C₁ and C₂ from quadrature and from their closed forms against each other
/// and the printed decimals, plus the approach `Φ(s) − 1/(s−1) → C` along
/// `s = 1 + 10^{-k}`, `k = 1..6`.
pub fn check_asymptotic_constants(prec: u32) -> VerifyReport {
    let tol = eq_tol(prec);
    let bits = work_bits(prec);
    let mut cells = Vec::new();
    for (which, cf, printed) in [(1u8, c1_closed_form(), C1_DECIMAL), (2, c2_closed_form(), C2_DECIMAL)] {
        let quad = quad_c_constant(which, prec);
        let closed = eval_closed_form(&cf, prec);
        let (quad, closed) = match (quad, closed) {
            (Ok(q), Ok(c)) => (q.value, c),
            (Err(e), _) | (_, Err(e)) => {
                cells.push(err_cell(&[("which", json!(which))], e));
                continue;
            }
        };
        let agree = quad.agrees_with(&closed, tol);
        cells.push(Cell::new(&[("check", json!("quad-vs-closed")), ("which", json!(which))], &closed, &quad, agree));
        for (name, v) in [("quad-vs-printed", &quad), ("closed-vs-printed", &closed)] {
            cells.push(Cell::new(
                &[("check", json!(name)), ("which", json!(which))],
                printed,
                v.to_fixed_truncated(19),
                v.matches_printed(printed),
            ));
        }
        // Φ(s) − 1/(s−1) − C shrinks with s − 1.
        let mut last: Option<f64> = None;
        for k in 1..=6 {
            let s = 1.0 + 10f64.powi(-k);
            let params = [("check", json!("limit")), ("k", json!(k)), ("which", json!(which))];
            match quad_phi(which, s, prec) {
                Ok(r) => {
                    let pole = Float::with_val(bits, Float::with_val(bits, s) - 1u32).recip();
                    let gap = Float::with_val(bits, r.value.value() - &pole) - closed.value();
                    let g = gap.to_f64().abs();
                    let shrinking = last.map_or(true, |l| g < l);
                    let within = k < 3 || g < 1e-2;
                    cells.push(Cell::new(&params, "shrinking gap", format!("{g:.6e}"), shrinking && within));
                    last = Some(g);
                }
                Err(e) => cells.push(err_cell(&params, e)),
            }
        }
    }
    VerifyReport::from_cells("asymptotic", cells).numeric(prec, sci(tol))
}

/// For each `n` in `range` and both Φ: the negative-argument form, the
/// positive-argument form and quadrature of Φ(2n+1) agree pairwise.
pub fn check_cross_representation(range: CellRange, prec: u32) -> VerifyReport {
    let tol = eq_tol(prec);
    let work: Vec<(usize, u8)> = range.iter().flat_map(|n| [(n, 1u8), (n, 2u8)]).collect();
    let cells: Vec<Cell> = work
        .par_iter()
        .map(|&(n, which)| {
            let params = [("n", json!(n)), ("which", json!(which))];
            let run = || -> Result<Cell> {
                let neg = eval_closed_form(&phi_odd_closed_form(which, n)?, prec)?;
                let pos = eval_closed_form(&phi_odd_via_sinh_over_z(which, n)?, prec)?;
                let quad = quad_phi(which, (2 * n + 1) as f64, prec)?.value;
                let pass = neg.agrees_with(&pos, tol) && neg.agrees_with(&quad, tol) && pos.agrees_with(&quad, tol);
                Ok(Cell::new(&params, &neg, &pos, pass).with_detail(format!(
                    "quadrature {quad}; |neg-pos| = {:.3e}, |neg-quad| = {:.3e}",
                    neg.abs_diff(&pos).to_f64(),
                    neg.abs_diff(&quad).to_f64()
                )))
            };
            run().unwrap_or_else(|e| err_cell(&params, e))
        })
        .collect();
    let mut r = VerifyReport::from_cells("cross-rep", cells).numeric(prec, sci(tol));
    r.range = Some(range);
    r
}
