use mellin_core::exact::factorial;
use mellin_core::series::{c_coeffs, d_coeffs, PowerSeries};
use mellin_core::Rational;
use proptest::prelude::*;

/// Coefficients of `(x / sinh x)^e` up to `x^k_max`, computed directly in
/// `x` by long division and `e` plain multiplications.
fn direct(e: u32, k_max: usize) -> Vec<Rational> {
    let order = k_max + 1;
    let sinh_over_x = PowerSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::from(factorial(k + 1)).recip()
        } else {
            Rational::zero()
        }
    });
    let mut inv = vec![Rational::zero(); order];
    inv[0] = Rational::one();
    for k in 1..order {
        let s: Rational = (1..=k).map(|j| sinh_over_x.coeff(j) * &inv[k - j]).sum();
        inv[k] = -s;
    }
    let base = PowerSeries::new(inv);
    let mut acc = PowerSeries::one(order);
    for _ in 0..e {
        acc = &acc * &base;
    }
    acc.into_coeffs()
}

#[test]
fn c_and_d_dual_path() {
    for n in 0..=12 {
        assert_eq!(c_coeffs(n, 24), direct(2 * n as u32 + 1, 24), "c, n={n}");
        assert_eq!(d_coeffs(n, 24), direct(2 * n as u32, 24), "d, n={n}");
    }
}

fn series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-20i64..=20, 1i64..=9), order)
        .prop_map(|v| PowerSeries::new(v.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
}

fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    (series(order), 1i64..=5).prop_map(|(s, c0)| {
        let mut v = s.into_coeffs();
        v[0] = Rational::from(c0);
        PowerSeries::new(v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reciprocal_inverts(f in unit_series(10)) {
        prop_assert_eq!(&f * &f.reciprocal(), PowerSeries::one(10));
    }

    #[test]
    fn power_is_repeated_product(f in series(8), e in 0u32..6) {
        let mut acc = PowerSeries::one(8);
        for _ in 0..e {
            acc = &acc * &f;
        }
        prop_assert_eq!(f.pow(e), acc);
    }

    #[test]
    fn exponents_add(f in series(8), a in 0u32..4, b in 0u32..4) {
        prop_assert_eq!(&f.pow(a) * &f.pow(b), f.pow(a + b));
    }

    #[test]
    fn substitution_is_multiplicative(f in series(6), g in series(6)) {
        let lhs = (&f * &g).compose_x2();
        let rhs = &f.compose_x2() * &g.compose_x2();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_laws(f in series(7), g in series(7), h in series(7)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &g) + &g, f);
    }
}
