//! Exact elements of the quadratic field ℚ(√5).
//!
//! A [`Scalar`] is stored as `a + b·√5` with `a`, `b` reduced big rationals.
//! Crystallographic root systems only ever produce `b = 0`; the golden-ratio
//! coordinates of the non-crystallographic types need the second component.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            a: BigRational::from_integer(BigInt::from(n)),
            b: BigRational::zero(),
        }
    }

    /// `num / den`, panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
        }
    }

    pub fn from_parts(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn sqrt5() -> Self {
        Self {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// The golden ratio (1 + √5) / 2.
    pub fn golden() -> Self {
        Self {
            a: BigRational::new(1.into(), 2.into()),
            b: BigRational::new(1.into(), 2.into()),
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field conjugate `a - b·√5`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(5.into()) * &self.b * &self.b
    }

    /// Exact sign as a real number: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        if sa == 0 {
            return sb;
        }
        // Opposite signs: compare a² with 5b². They never tie since √5 is irrational.
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(5.into()) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordering as real numbers.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| Scalar {
    a: &x.a + &y.a,
    b: &x.b + &y.b,
});
forward_binop!(Sub, sub, |x, y| Scalar {
    a: &x.a - &y.a,
    b: &x.b - &y.b,
});
forward_binop!(Mul, mul, |x, y| {
    let five = BigRational::from_integer(5.into());
    Scalar {
        a: &x.a * &y.a + five * &x.b * &y.b,
        b: &x.a * &y.b + &x.b * &y.a,
    }
});
forward_binop!(Div, div, |x, y| {
    let inv = y.inverse().expect("division of a scalar by zero");
    x * &inv
});

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Text form `p/q` or `p/q+r/s*sqrt5` (the sign of the √5 part replaces `+`
/// when negative).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.a)?;
        if !self.b.is_zero() {
            if self.b.is_positive() {
                f.write_str("+")?;
            }
            write_ratio(f, &self.b)?;
            f.write_str("*sqrt5")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_ratio(s: &str, whole: &str) -> Result<BigRational, Error> {
    let bad = || Error::ScalarSyntax(whole.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(Error::ScalarSyntax(s.to_string()));
        }
        let Some(body) = s.strip_suffix("*sqrt5") else {
            return Ok(Scalar::from(parse_ratio(s, s)?));
        };
        // Split at the sign that starts the √5 coefficient (never at index 0).
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a, b) = match split {
            Some(i) => {
                let rest = &body[i..];
                (&body[..i], rest.strip_prefix('+').unwrap_or(rest))
            }
            None => ("0", body),
        };
        Ok(Scalar {
            a: parse_ratio(a, s)?,
            b: parse_ratio(b, s)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(p, q, r, s)| {
            Scalar::from_parts(
                BigRational::new(p.into(), q.into()),
                BigRational::new(r.into(), s.into()),
            )
        })
    }

    #[test]
    fn text_forms() {
        assert_eq!(Scalar::ratio(-2, 4).to_string(), "-1/2");
        assert_eq!(Scalar::golden().to_string(), "1/2+1/2*sqrt5");
        assert_eq!(Scalar::golden().conjugate().to_string(), "1/2-1/2*sqrt5");
        assert_eq!(Scalar::sqrt5().to_string(), "0/1+1/1*sqrt5");
        assert_eq!("3".parse::<Scalar>().unwrap(), Scalar::from_int(3));
        assert_eq!("-1/1*sqrt5".parse::<Scalar>().unwrap(), -Scalar::sqrt5());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1 /2".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = Scalar::golden();
        assert_eq!(&phi * &phi, &phi + &Scalar::one());
        assert_eq!(phi.inverse().unwrap(), &phi - &Scalar::one());
    }

    #[test]
    fn signs() {
        // 2 - √5 < 0, 3 - √5 > 0
        assert_eq!((Scalar::from_int(2) - Scalar::sqrt5()).signum(), -1);
        assert_eq!((Scalar::from_int(3) - Scalar::sqrt5()).signum(), 1);
        assert_eq!(Scalar::zero().signum(), 0);
        assert!(Scalar::golden() > Scalar::ratio(16, 10));
        assert!(Scalar::golden() < Scalar::ratio(162, 100));
    }

    proptest! {
        #[test]
        fn text_round_trip(x in arb_scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }

        #[test]
        fn ring_round_trips(x in arb_scalar(), y in arb_scalar()) {
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x);
            }
        }

        #[test]
        fn order_matches_floats(x in arb_scalar(), y in arb_scalar()) {
            let f = |s: &Scalar| {
                let a = s.rational_part();
                let b = s.sqrt5_part();
                let af = a.numer().to_string().parse::<f64>().unwrap() / a.denom().to_string().parse::<f64>().unwrap();
                let bf = b.numer().to_string().parse::<f64>().unwrap() / b.denom().to_string().parse::<f64>().unwrap();
                af + bf * 5f64.sqrt()
            };
            let (fx, fy) = (f(&x), f(&y));
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap());
            }
        }
    }
}
