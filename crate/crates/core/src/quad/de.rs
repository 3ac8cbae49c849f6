use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::Float;

use crate::error::{MellinError, Result};
use crate::lfunc::{pi_bits, tolerance, work_bits, BigReal, GUARD_DIGITS};

/// Default quadrature precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 30;
/// Largest precision the quadrature accepts.
pub const MAX_QUAD_DIGITS: u32 = 100;

const T_NEG: f64 = 12.0;
const T_POS: f64 = 4.5;
const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 12;

/// Outcome of a quadrature.
#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: BigReal,
    /// `|T_L - T_{L-1}|` plus a bound on the truncated tails.
    pub error_estimate: BigReal,
    pub nodes_used: usize,
    pub levels: u32,
    /// Estimated value at each level, coarsest first.
    pub history: Vec<Float>,
}

#[derive(Clone)]
pub(crate) struct Node {
    t: f64,
    /// Abscissa `exp(π/2 sinh t)`.
    pub x: Float,
    /// Weight `x π/2 cosh t`, without the step size.
    pub w: Float,
}

type NodeTable = Arc<Vec<Node>>;

fn node_cache() -> &'static RwLock<HashMap<(u32, u32), NodeTable>> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), NodeTable>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Nodes added at `level`: every multiple of `h = 2^{-level}` at level 0,
/// only the odd multiples afterwards. Ordered by `t`.
fn nodes(level: u32, bits: u32) -> NodeTable {
    if let Some(t) = node_cache().read().unwrap().get(&(level, bits)) {
        return t.clone();
    }
    let h = (0.5f64).powi(level as i32);
    let k_lo = (-T_NEG / h).floor() as i64;
    let k_hi = (T_POS / h).ceil() as i64;
    let half_pi = pi_bits(bits) / 2u32;
    let mut out = Vec::new();
    for k in k_lo..=k_hi {
        if level > 0 && k % 2 == 0 {
            continue;
        }
        let t = Float::with_val(bits, k) / Float::with_val(bits, 1u64 << level);
        let sh = Float::with_val(bits, t.sinh_ref());
        let ch = Float::with_val(bits, t.cosh_ref());
        let x = Float::with_val(bits, &half_pi * &sh).exp();
        let w = Float::with_val(bits, &x * &half_pi) * ch;
        out.push(Node { t: k as f64 * h, x, w });
    }
    let table = Arc::new(out);
    node_cache().write().unwrap().entry((level, bits)).or_insert(table).clone()
}

/// Sums `w f(x)` over the nodes of one level inside `[lo, hi]`.
fn level_sum(table: &[Node], lo: f64, hi: f64, bits: u32, f: &dyn Fn(&Float) -> Float) -> (Float, usize) {
    let mut s = Float::new(bits);
    let mut n = 0;
    for node in table.iter().filter(|n| n.t >= lo && n.t <= hi) {
        s += Float::with_val(bits, &node.w * f(&node.x));
        n += 1;
    }
    (s, n)
}

/// Walks outward from `t = 0` at level 0 and returns the `t` range outside
/// of which terms stay below `eps` times the peak, plus a tail bound.
fn truncation(table: &[Node], eps: &Float, bits: u32, f: &dyn Fn(&Float) -> Float) -> (f64, f64, Float) {
    let zero = table.iter().position(|n| n.t == 0.0).expect("t = 0 is a node");
    let terms: Vec<Float> = table
        .iter()
        .map(|n| Float::with_val(bits, &n.w * f(&n.x)).abs())
        .collect();
    let peak = terms.iter().fold(Float::new(bits), |m, v| if *v > m { v.clone() } else { m });
    let cut = Float::with_val(bits, &peak * eps);
    let walk = |idx: &mut dyn Iterator<Item = usize>| -> usize {
        let mut last = zero;
        let mut quiet = 0;
        for i in idx {
            if terms[i] < cut {
                quiet += 1;
                if quiet >= 2 {
                    break;
                }
            } else {
                quiet = 0;
                last = i;
            }
        }
        last
    };
    let hi_i = walk(&mut (zero..table.len()));
    let lo_i = walk(&mut (0..=zero).rev());
    // One unit of t beyond the last significant level-0 node on each side.
    let lo = (table[lo_i].t - 1.0).max(-T_NEG);
    let hi = (table[hi_i].t + 1.0).min(T_POS);
    // Dropped terms decay at least geometrically from below `cut`.
    let tail = cut * 4u32;
    (lo, hi, tail)
}

/// Integrates `f` over `(0, ∞)` with the exp-sinh transform to `digits`
/// digits, refining until successive levels agree.
pub fn integrate(digits: u32, f: &dyn Fn(&Float) -> Float) -> Result<QuadResult> {
    if digits > MAX_QUAD_DIGITS {
        return Err(MellinError::PrecisionUnreachable {
            digits,
            reason: format!("quadrature stops at {MAX_QUAD_DIGITS} digits"),
        });
    }
    let bits = work_bits(digits);
    let eps = tolerance(digits + GUARD_DIGITS, bits);
    let target = tolerance(digits, bits);
    let base = nodes(0, bits);
    let (lo, hi, tail) = truncation(&base, &eps, bits, f);

    let (mut sum, mut used) = level_sum(&base, lo, hi, bits, f);
    let mut history = vec![sum.clone()];
    let mut prev = sum.clone();
    let mut diff = Float::with_val(bits, f64::INFINITY);
    let mut level = 0;
    while level < MAX_LEVEL {
        level += 1;
        let (s, n) = level_sum(&nodes(level, bits), lo, hi, bits, f);
        sum += s;
        used += n;
        let h = Float::with_val(bits, 1) >> level;
        let estimate = Float::with_val(bits, &sum * &h);
        diff = Float::with_val(bits, &estimate - &prev).abs();
        history.push(estimate.clone());
        prev = estimate;
        let scale = Float::with_val(bits, prev.abs_ref()).max(&Float::with_val(bits, 1));
        if level >= MIN_LEVEL && diff < Float::with_val(bits, &target * &scale) {
            break;
        }
    }
    let scale = Float::with_val(bits, prev.abs_ref()).max(&Float::with_val(bits, 1));
    if diff >= Float::with_val(bits, &target * &scale) {
        return Err(MellinError::PrecisionUnreachable {
            digits,
            reason: format!("levels still differ by {} after level {MAX_LEVEL}", diff.to_f64()),
        });
    }
    let err = diff + tail;
    Ok(QuadResult {
        value: BigReal::new(prev, digits),
        error_estimate: BigReal::new(err, digits),
        nodes_used: used,
        levels: level,
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_integral_is_one() {
        let r = integrate(40, &|x: &Float| Float::with_val(x.prec(), -x).exp()).unwrap();
        let one = BigReal::from_f64(1.0, 40);
        assert!(r.value.agrees_with(&one, 40), "{}", r.value);
        assert!(r.error_estimate.to_f64() < 1e-40);
    }

    #[test]
    fn log_singularity_at_zero() {
        // int_0^inf ln(x) e^{-x} dx = -gamma
        let r = integrate(50, &|x: &Float| {
            let p = x.prec();
            Float::with_val(p, x.ln_ref()) * Float::with_val(p, -x).exp()
        })
        .unwrap();
        let g = crate::lfunc::euler_gamma(50).unwrap();
        let neg = BigReal::new(-g.into_value(), 50);
        assert!(r.value.agrees_with(&neg, 50), "{}", r.value);
    }

    #[test]
    fn algebraic_singularity_at_zero() {
        // int_0^inf x^{-1/2} e^{-x} dx = sqrt(pi)
        let r = integrate(40, &|x: &Float| {
            let p = x.prec();
            Float::with_val(p, x.sqrt_ref()).recip() * Float::with_val(p, -x).exp()
        })
        .unwrap();
        let want = BigReal::new(crate::lfunc::pi(40).unwrap().into_value().sqrt(), 40);
        assert!(r.value.agrees_with(&want, 40), "{}", r.value);
    }

    #[test]
    fn too_many_digits_is_refused() {
        assert!(integrate(200, &|x: &Float| x.clone()).is_err());
    }
}
