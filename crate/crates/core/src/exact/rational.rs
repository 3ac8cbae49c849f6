use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use rug::Integer;

use crate::error::MellinError;

/// Exact signed rational number, always held in lowest terms with a positive
/// denominator.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(rug::Rational);

impl Rational {
    pub fn zero() -> Self {
        Rational(rug::Rational::new())
    }

    pub fn one() -> Self {
        Rational::from(1)
    }

    /// Builds `num/den`, reducing to lowest terms.
    ///
    /// Panics when `den` is zero.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Self {
        let den = den.into();
        assert!(den != 0, "rational with zero denominator");
        Rational(rug::Rational::from((num.into(), den)))
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp0() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.clone().abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.clone().recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        use rug::ops::Pow;
        if exp < 0 {
            return self.recip().pow(-exp);
        }
        Rational(rug::Rational::from((&self.0).pow(exp as u32)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Canonical `num/den` text, denominator always present (`-3/1`).
    pub fn to_canonical_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    pub fn as_rug(&self) -> &rug::Rational {
        &self.0
    }

    pub fn into_rug(self) -> rug::Rational {
        self.0
    }
}

impl From<rug::Rational> for Rational {
    fn from(r: rug::Rational) -> Self {
        Rational(r)
    }
}

impl From<Integer> for Rational {
    fn from(i: Integer) -> Self {
        Rational(rug::Rational::from(i))
    }
}

impl From<&Integer> for Rational {
    fn from(i: &Integer) -> Self {
        Rational(rug::Rational::from(i))
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational(rug::Rational::from(v))
            }
        }
    )*};
}
from_prim!(i32, i64, u32, u64, usize);

impl FromStr for Rational {
    type Err = MellinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || MellinError::Parse(format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: Integer = n.trim().parse().map_err(|_| bad())?;
                let d: Integer = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(MellinError::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rational::new(n, d))
            }
            None => {
                let n: Integer = s.parse().map_err(|_| bad())?;
                Ok(Rational::from(n))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(rug::Rational::from(-&self.0))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(rug::Rational::from(self.0.$method(rhs.0)))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(rug::Rational::from(self.0.$method(&rhs.0)))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(rug::Rational::from((&self.0).$method(rhs.0)))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(rug::Rational::from((&self.0).$method(&rhs.0)))
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign(&mut self, rhs: Rational) {
                self.0.$assign(rhs.0);
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                self.0.$assign(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}
impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / &rhs.0)
    }
}
impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(rug::Rational::from(&self.0 / rhs.0))
    }
}
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(rug::Rational::from(&self.0 / &rhs.0))
    }
}
impl DivAssign<&Rational> for Rational {
    fn div_assign(&mut self, rhs: &Rational) {
        assert!(!rhs.is_zero(), "division by zero");
        self.0 /= &rhs.0;
    }
}
impl DivAssign<Rational> for Rational {
    fn div_assign(&mut self, rhs: Rational) {
        *self /= &rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}
