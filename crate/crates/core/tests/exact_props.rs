use mellin_core::exact::{bernoulli, binomial, eulerian, factorial, EulerianKind};
use mellin_core::{Integer, Rational};
use proptest::prelude::*;

/// Reference fraction on i128 with its own Euclid reduction.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Frac(i128, i128);

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    fn new(n: i128, d: i128) -> Frac {
        let g = gcd(n, d);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 - o.0 * self.1, self.1 * o.1)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1, self.1 * o.0)
    }
}

fn same(r: &Rational, f: Frac) -> bool {
    *r.numer() == Integer::from(f.0) && *r.denom() == Integer::from(f.1)
}

fn frac() -> impl Strategy<Value = (i64, i64)> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| (n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_ops_match_reference((a, b) in frac(), (c, d) in frac(), flip in any::<bool>()) {
        let d = if flip { -d } else { d };
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        let fx = Frac::new(a as i128, b as i128);
        let fy = Frac::new(c as i128, d as i128);
        prop_assert!(same(&x, fx));
        prop_assert!(same(&(&x + &y), fx.add(fy)));
        prop_assert!(same(&(&x - &y), fx.sub(fy)));
        prop_assert!(same(&(&x * &y), fx.mul(fy)));
        if c != 0 {
            prop_assert!(same(&(&x / &y), fx.div(fy)));
        }
        prop_assert!(*x.denom() > 0);
    }

    #[test]
    fn rational_text_round_trip((a, b) in frac()) {
        let x = Rational::new(a, b);
        prop_assert_eq!(x.to_canonical_string().parse::<Rational>().unwrap(), x.clone());
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }
}

proptest! {
    #[test]
    fn eulerian_rows(n in 1usize..30) {
        let a: Integer = (0..n).map(|k| eulerian(EulerianKind::A, n, k)).sum();
        prop_assert_eq!(a, factorial(n));
        let b: Integer = (0..=n).map(|k| eulerian(EulerianKind::B, n, k)).sum();
        prop_assert_eq!(b, factorial(n) << n as u32);
        for k in 0..n {
            prop_assert_eq!(eulerian(EulerianKind::A, n, k), eulerian(EulerianKind::A, n, n - 1 - k));
        }
        for k in 0..=n {
            prop_assert_eq!(eulerian(EulerianKind::B, n, k), eulerian(EulerianKind::B, n, n - k));
        }
    }

    #[test]
    fn bernoulli_recurrence(n in 1usize..120) {
        let s: Rational = (0..=n).map(|k| Rational::from(binomial(n as i64 + 1, k as i64)) * bernoulli(k)).sum();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn odd_bernoulli_vanish(k in 1usize..100) {
        prop_assert!(bernoulli(2 * k + 1).is_zero());
    }
}
