//! Exact scalar fields: the rationals and the Gaussian rationals.
//!
//! Everything downstream is generic over [`Scalar`], an exact field built on
//! the `num-traits` arithmetic traits. Two instantiations are provided:
//! [`Rational`] (arbitrary-precision `p/q`, always gcd-reduced with a positive
//! denominator) and [`GaussRational`] (`a + b*i` with rational parts).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

/// An exact field element. Arithmetic is exact: `(a + b) - b == a` always,
/// and equality is structural equality of the canonical form.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Tag used in JSON files ("Q" or "Qi").
    fn field_name() -> &'static str;

    fn from_int(n: i64) -> Self;

    /// `num / den`; panics if `den == 0`.
    fn from_fraction(num: i64, den: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Parse the text encoding. Rationals are `p/q` or `p`; Gaussian
    /// rationals are `p/q+r/s*i` with either part omissible.
    fn parse(text: &str) -> Result<Self, Error>;
}

fn parse_big_rational(text: &str) -> Result<BigRational, Error> {
    let s = text.trim();
    let bad = |msg: &str| Error::InvalidScalar {
        text: text.to_owned(),
        message: msg.to_owned(),
    };
    if s.is_empty() {
        return Err(bad("empty string"));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

impl Scalar for BigRational {
    fn field_name() -> &'static str {
        "Q"
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse(text: &str) -> Result<Self, Error> {
        parse_big_rational(text)
    }
}

/// Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn i() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn conjugate(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the squared modulus; zero iff the number is zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<BigRational> for GaussRational {
    fn from(re: BigRational) -> Self {
        GaussRational::new(re, BigRational::zero())
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussRational::new(re, im)
    }
}

impl Div for GaussRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let norm = rhs.norm();
        if norm.is_zero() {
            panic!("division by zero Gaussian rational");
        }
        let conj = rhs.conjugate();
        let prod = self * conj;
        GaussRational::new(prod.re / norm.clone(), prod.im / norm)
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::new(BigRational::one(), BigRational::zero())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Scalar for GaussRational {
    fn field_name() -> &'static str {
        "Qi"
    }

    fn from_int(n: i64) -> Self {
        GaussRational::from(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        GaussRational::from(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn inverse(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        Some(GaussRational::new(conj.re / norm.clone(), conj.im / norm))
    }

    fn parse(text: &str) -> Result<Self, Error> {
        let s = text.trim();
        let bad = |msg: &str| Error::InvalidScalar {
            text: text.to_owned(),
            message: msg.to_owned(),
        };
        if s.is_empty() {
            return Err(bad("empty string"));
        }
        // Split off an imaginary part at the first '+'/'-' past position 0.
        // Rational parts carry a sign only on the leading numerator, so any
        // later sign character separates the two parts.
        let split = s
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(idx, _)| idx);
        let (re_str, im_str) = match split {
            Some(idx) => (&s[..idx], &s[idx..]),
            None => {
                if s.ends_with('i') {
                    ("", s)
                } else {
                    (s, "")
                }
            }
        };
        let re = if re_str.is_empty() {
            BigRational::zero()
        } else {
            parse_big_rational(re_str)?
        };
        let im = if im_str.is_empty() {
            BigRational::zero()
        } else {
            let body = im_str
                .strip_suffix('i')
                .ok_or_else(|| bad("imaginary part must end in 'i'"))?;
            let body = body.strip_suffix('*').unwrap_or(body);
            match body {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                _ => parse_big_rational(body)?,
            }
        };
        Ok(GaussRational::new(re, im))
    }
}
