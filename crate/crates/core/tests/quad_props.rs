use mellin_core::closed_form::IntegralSpec;
use mellin_core::lfunc::{eval_closed_form, BigReal};
use mellin_core::quad::{quad_integral, quad_phi, QuadResult};
use rug::Float;

fn step(r: &QuadResult) -> Float {
    let h = &r.history;
    let n = h.len();
    Float::with_val(h[n - 1].prec(), &h[n - 1] - &h[n - 2]).abs()
}

/// The last level step is inside the reported estimate, and a run at 20
/// more digits lands within that estimate of the first value.
fn level_doubling(name: &str, run: impl Fn(u32) -> QuadResult) {
    let a = run(30);
    let b = run(50);
    let err = a.error_estimate.value();
    assert!(step(&a) <= *err, "{name}: last step exceeds estimate");
    assert!(a.value.abs_diff(&b.value) <= *err, "{name}: moved by more than the estimate");
    assert!(a.levels >= 3 && a.history.len() == a.levels as usize + 1);
    // Each refinement roughly squares the error: later steps are smaller.
    let h = &a.history;
    let steps: Vec<f64> = h.windows(2).map(|w| Float::with_val(w[0].prec(), &w[1] - &w[0]).abs().to_f64()).collect();
    let tail = &steps[steps.len().saturating_sub(3)..];
    assert!(tail.windows(2).all(|w| w[1] <= w[0]), "{name}: steps {steps:?}");
}

#[test]
fn level_doubling_converges() {
    for spec in [
        IntegralSpec::LogOddCosh { q: 0, n: 1 },
        IntegralSpec::LogEvenCosh { q: 2, n: 4 },
        IntegralSpec::SinhOverZ { q: 3, big_n: 9 },
    ] {
        level_doubling(&spec.to_string(), |d| quad_integral(&spec, d).unwrap());
    }
    for s in [1.05, 2.5, 7.0] {
        level_doubling(&format!("phi1({s})"), |d| quad_phi(1, s, d).unwrap());
        level_doubling(&format!("phi2({s})"), |d| quad_phi(2, s, d).unwrap());
    }
}

#[test]
fn phi_decreases_in_s() {
    let grid: Vec<f64> = (0..24).map(|k| 1.05 + 0.6 * k as f64).collect();
    for which in [1u8, 2] {
        let vals: Vec<BigReal> = grid.iter().map(|&s| quad_phi(which, s, 30).unwrap().value).collect();
        for (w, s) in vals.windows(2).zip(&grid) {
            assert!(w[1].value() < w[0].value(), "phi{which} not decreasing after s={s}");
        }
    }
}

#[test]
fn worked_quadrature_values() {
    // Φ₂(3) against its β′ form and the two sinh-over-z examples that equal Φ values.
    let q = quad_phi(2, 3.0, 40).unwrap();
    let cf = IntegralSpec::SinhOverZ { q: 1, big_n: 3 }.closed_form().unwrap();
    assert!(q.value.agrees_with(&eval_closed_form(&cf, 40).unwrap(), 38));
    let q5 = quad_integral(&IntegralSpec::SinhOverZ { q: 2, big_n: 6 }, 40).unwrap();
    let cf5 = IntegralSpec::Phi1 { s: 5 }.closed_form().unwrap();
    assert!(q5.value.agrees_with(&eval_closed_form(&cf5, 40).unwrap(), 38));
}
