//! Exact arbitrary-precision rational arithmetic.
//!
//! Every symbolic coefficient in the crate lives here; nothing in the
//! derivation path ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// Exact fraction, always stored in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `num/den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_parts(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    /// Parses decimal notation such as `-0.915965594`, `1.3173820678770678e-6`
    /// or a plain integer. Exact: the result is value * 10^-k for the shown k.
    pub fn from_decimal_str(s: &str) -> Option<Self> {
        let s = s.trim();
        let (mantissa, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().ok()?),
            None => (s, 0),
        };
        let (mantissa, neg) = match mantissa.strip_prefix('-') {
            Some(rest) => (rest, true),
            None => (mantissa.strip_prefix('+').unwrap_or(mantissa), false),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let digits: String = [int_part, frac_part].concat();
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut num: BigInt = digits.parse().ok()?;
        if neg {
            num = -num;
        }
        let shift = exp - frac_part.len() as i32;
        let ten = BigInt::from(10);
        let r = if shift >= 0 {
            BigRational::from_integer(num * num_traits::pow(ten, shift as usize))
        } else {
            BigRational::new(num, num_traits::pow(ten, (-shift) as usize))
        };
        Some(Rational(r))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let e = exp.unsigned_abs();
        let num = num_traits::pow(self.0.numer().clone(), e as usize);
        let den = num_traits::pow(self.0.denom().clone(), e as usize);
        if exp > 0 {
            Rational(BigRational::new(num, den))
        } else {
            assert!(!self.is_zero(), "negative power of zero");
            Rational(BigRational::new(den, num))
        }
    }

    /// floor(self * 10^scale) as an integer.
    pub fn floor_scaled(&self, scale: u32) -> BigInt {
        (self.0.numer() * pow10(scale)).div_floor(self.0.denom())
    }

    /// ceil(self * 10^scale) as an integer.
    pub fn ceil_scaled(&self, scale: u32) -> BigInt {
        (self.0.numer() * pow10(scale)).div_ceil(self.0.denom())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Always `num/den`, even for integers; the canonical coefficient encoding.
    pub fn frac_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    pub fn cmp_abs(&self, other: &Rational) -> Ordering {
        self.abs().cmp(&other.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
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

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

/// 10^n as a big integer.
pub(crate) fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), n as usize)
}

/// n! as a big integer.
pub(crate) fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// 2^n as a big integer.
pub(crate) fn pow2(n: u32) -> BigInt {
    BigInt::one() << n
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.frac_string(), "-3/2");
        assert_eq!(Rational::from_int(5).frac_string(), "5/1");
    }

    #[test]
    fn pow_and_recip() {
        let r = Rational::new(1, 4);
        assert_eq!(r.pow(3), Rational::new(1, 64));
        assert_eq!(r.pow(-2), Rational::from_int(16));
        assert_eq!(r.pow(0), Rational::one());
        assert_eq!(Rational::new(-2, 3).recip(), Rational::new(-3, 2));
    }

    #[test]
    fn floor_and_ceil_scaled() {
        let r = Rational::new(1, 3);
        assert_eq!(r.floor_scaled(3), BigInt::from(333));
        assert_eq!(r.ceil_scaled(3), BigInt::from(334));
        let neg = Rational::new(-1, 3);
        assert_eq!(neg.floor_scaled(3), BigInt::from(-334));
        assert_eq!(neg.ceil_scaled(3), BigInt::from(-333));
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(
            Rational::from_decimal_str("0.004592864"),
            Some(Rational::new(4592864, 1_000_000_000))
        );
        assert_eq!(
            Rational::from_decimal_str("1.25e-2"),
            Some(Rational::new(1, 80))
        );
        assert_eq!(Rational::from_decimal_str("-3"), Some(Rational::from_int(-3)));
        assert_eq!(Rational::from_decimal_str("x"), None);
    }

    proptest! {
        #[test]
        fn add_sub_round_trips(p in -200i64..200, q in 1i64..60, r in -200i64..200, s in 1i64..60) {
            let a = Rational::new(p, q);
            let b = Rational::new(r, s);
            let back = &(&a + &b) - &b;
            prop_assert_eq!(back, a);
        }

        #[test]
        fn mul_div_round_trips(p in -200i64..200, q in 1i64..60, r in 1i64..200, s in 1i64..60) {
            let a = Rational::new(p, q);
            let b = Rational::new(r, s);
            let back = &(&a * &b) / &b;
            prop_assert_eq!(back, a);
        }
    }
}
