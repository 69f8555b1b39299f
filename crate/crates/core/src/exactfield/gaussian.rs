use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

pub type C = GaussianRational;

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from(n))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::real(Rational::frac(num, den))
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn to_real(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.clone())
    }

    /// Nonnegative machine integer value, if this is one.
    pub fn to_usize(&self) -> Option<usize> {
        if !self.is_real() {
            return None;
        }
        self.re.to_i64().and_then(|v| usize::try_from(v).ok())
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_real() {
            return Ok(Self::real(self.re.inv()?));
        }
        let n = self.norm_sqr();
        Ok(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if rhs.is_real() {
            return Ok(GaussianRational {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            });
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// i^n.
    pub fn i_pow(n: usize) -> Self {
        match n % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
}

fn mul_impl(a: &C, b: &C) -> C {
    if a.im.is_zero() && b.im.is_zero() {
        return C::real(&a.re * &b.re);
    }
    if a.im.is_zero() {
        return b.scale(&a.re);
    }
    if b.im.is_zero() {
        return a.scale(&b.re);
    }
    C {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

fn add_impl(a: &C, b: &C) -> C {
    C { re: &a.re + &b.re, im: &a.im + &b.im }
}

fn sub_impl(a: &C, b: &C) -> C {
    C { re: &a.re - &b.re, im: &a.im - &b.im }
}

fn div_impl(a: &C, b: &C) -> C {
    a.checked_div(b).expect("gaussian division by zero")
}

macro_rules! gaussian_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&C> for &C {
            type Output = C;
            fn $method(self, rhs: &C) -> C {
                $f(self, rhs)
            }
        }
        impl $trait<C> for C {
            type Output = C;
            fn $method(self, rhs: C) -> C {
                $f(&self, &rhs)
            }
        }
        impl $trait<&C> for C {
            type Output = C;
            fn $method(self, rhs: &C) -> C {
                $f(&self, rhs)
            }
        }
        impl $trait<C> for &C {
            type Output = C;
            fn $method(self, rhs: C) -> C {
                $f(self, &rhs)
            }
        }
    };
}

gaussian_binop!(Add, add, add_impl);
gaussian_binop!(Sub, sub, sub_impl);
gaussian_binop!(Mul, mul, mul_impl);
gaussian_binop!(Div, div, div_impl);

impl Neg for C {
    type Output = C;
    fn neg(self) -> C {
        C { re: -self.re, im: -self.im }
    }
}

impl Neg for &C {
    type Output = C;
    fn neg(self) -> C {
        C { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&C> for C {
    fn add_assign(&mut self, rhs: &C) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&C> for C {
    fn sub_assign(&mut self, rhs: &C) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&C> for C {
    fn mul_assign(&mut self, rhs: &C) {
        *self = mul_impl(self, rhs);
    }
}

impl Sum for C {
    fn sum<I: Iterator<Item = C>>(iter: I) -> Self {
        iter.fold(C::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for C {
    fn product<I: Iterator<Item = C>>(iter: I) -> Self {
        iter.fold(C::one(), |acc, x| acc * x)
    }
}

impl Zero for C {
    fn zero() -> Self {
        C::zero()
    }
    fn is_zero(&self) -> bool {
        C::is_zero(self)
    }
}

impl One for C {
    fn one() -> Self {
        C::one()
    }
}

impl From<Rational> for C {
    fn from(r: Rational) -> Self {
        C::real(r)
    }
}

impl From<&Rational> for C {
    fn from(r: &Rational) -> Self {
        C::real(r.clone())
    }
}

impl From<i64> for C {
    fn from(n: i64) -> Self {
        C::from_int(n)
    }
}

impl fmt::Display for C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im.is_one() {
            String::new()
        } else if (-&self.im).is_one() {
            "-".to_string()
        } else {
            self.im.to_string()
        };
        if self.re.is_zero() {
            write!(f, "{im}i")
        } else if self.im.is_negative() {
            write!(f, "{}{im}i", self.re)
        } else {
            write!(f, "{}+{im}i", self.re)
        }
    }
}

impl fmt::Debug for C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for C {
    type Err = Error;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi` with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(C::real(s.parse()?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => t.trim_start_matches('+').parse()?,
        };
        Ok(C::new(re.parse()?, im))
    }
}

impl Serialize for C {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &self.re)?;
        st.serialize_field("im", &self.im)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for C {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            re: Rational,
            im: Rational,
        }
        let raw = Raw::deserialize(de)?;
        Ok(C::new(raw.re, raw.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let cases = ["3", "1/2+3/4i", "1/2-i", "-2i", "i", "-5/3-7/2i"];
        for s in cases {
            let z: C = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
    }

    #[test]
    fn serde_object_form() {
        let z = C::new(Rational::frac(1, 2), Rational::frac(-3, 4));
        let js = serde_json::to_string(&z).unwrap();
        assert_eq!(js, r#"{"re":"1/2","im":"-3/4"}"#);
        let back: C = serde_json::from_str(&js).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(C::one().checked_div(&C::zero()), Err(Error::DivisionByZero));
        assert!(C::zero().inv().is_err());
    }

    #[test]
    fn i_squared() {
        assert_eq!(&C::i() * &C::i(), C::from_int(-1));
        assert_eq!(C::i_pow(7), -C::i());
    }
}
