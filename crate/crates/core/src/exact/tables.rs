use std::sync::{OnceLock, RwLock};

use rug::Integer;

use super::rational::Rational;

/// Which family of Eulerian numbers to look up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerianKind {
    /// Permutations of `{1..n}` counted by descents.
    A,
    /// Signed permutations counted by type-B descents.
    B,
}

const PREFILL: usize = 64;

/// Growable, thread-safe caches of the classical number sequences.
///
/// Every table is append-only: once a value is published it never changes, so
/// readers only contend with a writer while a table is being extended.
pub struct NumberTables {
    bernoulli: RwLock<Vec<Rational>>,
    euler: RwLock<Vec<Integer>>,
    harmonic: RwLock<Vec<Rational>>,
    eulerian_a: RwLock<Vec<Vec<Integer>>>,
    eulerian_b: RwLock<Vec<Vec<Integer>>>,
}

impl NumberTables {
    fn new() -> Self {
        let t = NumberTables {
            bernoulli: RwLock::new(Vec::new()),
            euler: RwLock::new(Vec::new()),
            harmonic: RwLock::new(Vec::new()),
            eulerian_a: RwLock::new(Vec::new()),
            eulerian_b: RwLock::new(Vec::new()),
        };
        t.ensure_bernoulli(PREFILL);
        t.ensure_euler(PREFILL);
        t.ensure_harmonic(PREFILL);
        t
    }

    /// Process-wide tables, prefilled to index 64.
    pub fn global() -> &'static NumberTables {
        static TABLES: OnceLock<NumberTables> = OnceLock::new();
        TABLES.get_or_init(NumberTables::new)
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        if let Some(v) = self.bernoulli.read().unwrap().get(n) {
            return v.clone();
        }
        self.ensure_bernoulli(n);
        self.bernoulli.read().unwrap()[n].clone()
    }

    pub fn euler_number(&self, n: usize) -> Integer {
        if let Some(v) = self.euler.read().unwrap().get(n) {
            return v.clone();
        }
        self.ensure_euler(n);
        self.euler.read().unwrap()[n].clone()
    }

    pub fn harmonic(&self, n: usize) -> Rational {
        if let Some(v) = self.harmonic.read().unwrap().get(n) {
            return v.clone();
        }
        self.ensure_harmonic(n);
        self.harmonic.read().unwrap()[n].clone()
    }

    pub fn eulerian(&self, kind: EulerianKind, n: usize, k: usize) -> Integer {
        let lock = match kind {
            EulerianKind::A => &self.eulerian_a,
            EulerianKind::B => &self.eulerian_b,
        };
        {
            let rows = lock.read().unwrap();
            if let Some(row) = rows.get(n) {
                return row.get(k).cloned().unwrap_or_default();
            }
        }
        let mut rows = lock.write().unwrap();
        while rows.len() <= n {
            let m = rows.len();
            let row = match kind {
                EulerianKind::A => eulerian_a_row(m, rows.last()),
                EulerianKind::B => eulerian_b_row(m, rows.last()),
            };
            rows.push(row);
        }
        rows[n].get(k).cloned().unwrap_or_default()
    }

    fn ensure_bernoulli(&self, n: usize) {
        let mut tab = self.bernoulli.write().unwrap();
        if tab.len() > n {
            return;
        }
        // Tangent numbers are not computed incrementally, so rebuild to a
        // doubled capacity.
        let cap = (n + 1).max(2 * tab.len()).max(2);
        *tab = bernoulli_table(cap);
    }

    fn ensure_euler(&self, n: usize) {
        let mut tab = self.euler.write().unwrap();
        if tab.is_empty() {
            tab.push(Integer::from(1));
        }
        // sech x * cosh x = 1 read off coefficientwise in the exponential
        // basis: sum_k C(m,k) E_k [m-k even] = 0 for m > 0.
        while tab.len() <= n {
            let m = tab.len();
            if m % 2 == 1 {
                tab.push(Integer::new());
                continue;
            }
            let mut acc = Integer::new();
            for k in (0..m).step_by(2) {
                acc += binomial(m as i64, k as i64) * &tab[k];
            }
            tab.push(-acc);
        }
    }

    fn ensure_harmonic(&self, n: usize) {
        let mut tab = self.harmonic.write().unwrap();
        if tab.is_empty() {
            tab.push(Rational::zero());
        }
        while tab.len() <= n {
            let k = tab.len();
            let next = tab[k - 1].clone() + Rational::new(1, k as u64);
            tab.push(next);
        }
    }
}

/// B_0..B_{cap-1} from the integer tangent numbers.
fn bernoulli_table(cap: usize) -> Vec<Rational> {
    let half = cap / 2 + 1;
    // Tangent numbers T_1..T_half: tan x = sum T_k x^{2k-1}/(2k-1)!.
    let mut t = vec![Integer::new(); half + 1];
    t[1] = Integer::from(1);
    for k in 2..=half {
        t[k] = Integer::from(k - 1) * &t[k - 1];
    }
    for k in 2..=half {
        for j in k..=half {
            let a = Integer::from(j - k) * &t[j - 1];
            let b = Integer::from(j - k + 2) * &t[j];
            t[j] = a + b;
        }
    }
    let mut out = Vec::with_capacity(cap);
    for n in 0..cap {
        let v = match n {
            0 => Rational::one(),
            1 => Rational::new(-1, 2),
            _ if n % 2 == 1 => Rational::zero(),
            _ => {
                let k = n / 2;
                let four_k = Integer::from(1) << (2 * k as u32);
                let den = four_k.clone() * (four_k - 1u32);
                let mut num = Integer::from(2 * k) * &t[k];
                if k % 2 == 0 {
                    num = -num;
                }
                Rational::new(num, den)
            }
        };
        out.push(v);
    }
    out
}

fn eulerian_a_row(m: usize, prev: Option<&Vec<Integer>>) -> Vec<Integer> {
    if m == 0 {
        return vec![Integer::from(1)];
    }
    let prev = prev.expect("rows built in order");
    let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
    (0..m)
        .map(|k| {
            let mut v = Integer::from(k + 1) * get(k);
            if k > 0 {
                v += Integer::from(m - k) * get(k - 1);
            }
            v
        })
        .collect()
}

fn eulerian_b_row(m: usize, prev: Option<&Vec<Integer>>) -> Vec<Integer> {
    if m == 0 {
        return vec![Integer::from(1)];
    }
    let prev = prev.expect("rows built in order");
    let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
    (0..=m)
        .map(|k| {
            let mut v = Integer::from(2 * k + 1) * get(k);
            if k > 0 {
                v += Integer::from(2 * m - 2 * k + 1) * get(k - 1);
            }
            v
        })
        .collect()
}

/// Bernoulli number with B_1 = -1/2.
pub fn bernoulli(n: usize) -> Rational {
    NumberTables::global().bernoulli(n)
}

/// Euler number in the secant convention, sech x = sum E_n x^n / n!.
pub fn euler_number(n: usize) -> Integer {
    NumberTables::global().euler_number(n)
}

/// Harmonic number, H_0 = 0.
pub fn harmonic(n: usize) -> Rational {
    NumberTables::global().harmonic(n)
}

pub fn eulerian(kind: EulerianKind, n: usize, k: usize) -> Integer {
    NumberTables::global().eulerian(kind, n, k)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::new();
    }
    Integer::from(n as u32).binomial(k as u32)
}

pub fn factorial(n: usize) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

/// `2^e` as an exact integer.
pub fn pow2(e: usize) -> Integer {
    Integer::from(1) << (e as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), Rational::new(-1, 2));
        assert_eq!(bernoulli(2), Rational::new(1, 6));
        assert_eq!(bernoulli(12), Rational::new(-691, 2730));
        assert_eq!(bernoulli(7), Rational::zero());
    }

    #[test]
    fn bernoulli_recurrence_oracle() {
        // sum_{k=0}^{n} C(n+1,k) B_k = 0, solved for B_n.
        let mut b = vec![Rational::one()];
        for n in 1..=150usize {
            let s: Rational = (0..n)
                .map(|k| Rational::from(binomial(n as i64 + 1, k as i64)) * &b[k])
                .sum();
            b.push(-s / Rational::from(n as u64 + 1));
        }
        for (n, v) in b.iter().enumerate() {
            assert_eq!(&bernoulli(n), v, "B_{n}");
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), 1);
        assert_eq!(euler_number(2), -1);
        assert_eq!(euler_number(4), 5);
        assert_eq!(euler_number(10), -50521);
        assert_eq!(euler_number(9), 0);
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(1), Rational::one());
        assert_eq!(harmonic(4), Rational::new(25, 12));
        let direct: Rational = (1..=100u64).map(|k| Rational::new(1, k)).sum();
        assert_eq!(harmonic(100), direct);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(7, 9), 0);
        assert_eq!(binomial(7, -1), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    fn permutations(n: usize) -> Vec<Vec<i64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n as i64);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn eulerian_a_matches_descent_count() {
        for n in 1..=7 {
            let mut counts = vec![0u64; n];
            for p in permutations(n) {
                let d = p.windows(2).filter(|w| w[0] > w[1]).count();
                counts[d] += 1;
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(eulerian(EulerianKind::A, n, k), *c, "A({n},{k})");
            }
        }
        assert_eq!(eulerian(EulerianKind::A, 3, 1), 4);
        assert_eq!(eulerian(EulerianKind::A, 9, 0), 1);
        assert_eq!(eulerian(EulerianKind::A, 3, 5), 0);
    }

    #[test]
    fn eulerian_b_matches_signed_descent_count() {
        // Type-B descents: positions i in 0..n with w(i) > w(i+1), w(0) = 0.
        for n in 1..=6usize {
            let mut counts = vec![0u64; n + 1];
            for p in permutations(n) {
                for mask in 0..(1u32 << n) {
                    let mut w = vec![0i64];
                    for (i, &x) in p.iter().enumerate() {
                        w.push(if mask >> i & 1 == 1 { -x } else { x });
                    }
                    let d = w.windows(2).filter(|x| x[0] > x[1]).count();
                    counts[d] += 1;
                }
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(eulerian(EulerianKind::B, n, k), *c, "B({n},{k})");
            }
        }
        assert_eq!(eulerian(EulerianKind::B, 2, 1), 6);
    }

    #[test]
    fn eulerian_row_sums() {
        for n in 0..=15 {
            let s: Integer = (0..=n).map(|k| eulerian(EulerianKind::A, n, k)).sum();
            assert_eq!(s, factorial(n), "A row {n}");
        }
        for n in 0..=12 {
            let s: Integer = (0..=n).map(|k| eulerian(EulerianKind::B, n, k)).sum();
            assert_eq!(s, pow2(n) * factorial(n), "B row {n}");
        }
    }

    #[test]
    fn concurrent_reads_agree() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || (0..200).map(|n| bernoulli(n + t)).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, r) in results.iter().enumerate() {
            for (n, v) in r.iter().enumerate() {
                assert_eq!(*v, bernoulli(n + t));
            }
        }
    }
}
