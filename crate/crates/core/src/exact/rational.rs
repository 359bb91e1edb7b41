//! Exact rational scalars and Gaussian (complex) rationals.
//!
//! `ExactRational` is kept in canonical form at all times: positive
//! denominator, gcd(|num|, den) = 1. The heavy lifting is delegated to
//! `num-rational`, which reduces after every operation.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Rational `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        ExactRational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Rational from big integer parts. Panics if `den == 0`.
    pub fn from_parts(num: BigInt, den: BigInt) -> Self {
        ExactRational(BigRational::new(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactRational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(ExactRational(self.0.recip()))
        }
    }

    /// Integer power (negative exponents invert; panics on 0^-k).
    pub fn pow(&self, exp: i32) -> Self {
        ExactRational(self.0.pow(exp))
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl fmt::Display for ExactRational {
    /// Always renders as `num/den`, e.g. `-1/3`, `1/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error parsing a rational from its `num/den` string form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected rational of the form `num` or `num/den` with den != 0"
        )
    }
}

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    /// Accepts `num/den` or a bare integer `num`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num_s.trim()).map_err(|_| ParseRationalError)?;
        let den = BigInt::from_str(den_s.trim()).map_err(|_| ParseRationalError)?;
        if den.is_zero() {
            return Err(ParseRationalError);
        }
        Ok(ExactRational(BigRational::new(num, den)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

/// Complex number with exact rational real and imaginary parts.
///
/// Field arithmetic, conjugation and `|z|²` are all exact, which makes
/// polynomial evaluation at such points exact as well.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: ExactRational,
    im: ExactRational,
}

impl GaussianRational {
    pub fn new(re: ExactRational, im: ExactRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: ExactRational) -> Self {
        GaussianRational {
            re,
            im: ExactRational::zero(),
        }
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_rational(ExactRational::one())
    }

    pub fn i() -> Self {
        GaussianRational::new(ExactRational::zero(), ExactRational::one())
    }

    pub fn re(&self) -> &ExactRational {
        &self.re
    }

    pub fn im(&self) -> &ExactRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`, an exact rational.
    pub fn norm_sqr(&self) -> ExactRational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let inv = n.recip()?;
        Some(GaussianRational::new(&self.re * &inv, -&(&self.im * &inv)))
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(
                f,
                "{}{}{}i",
                self.re,
                if self.im.is_negative() { "" } else { "+" },
                self.im
            )
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        GaussianRational::new(re, im)
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics when dividing by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.recip().expect("division by zero GaussianRational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Mul<&ExactRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &ExactRational) -> GaussianRational {
        GaussianRational::new(&self.re * rhs, &self.im * rhs)
    }
}

/// Parses `re` or `re,im` where each part is a rational (`p/q` or integer).
impl FromStr for GaussianRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(',') {
            Some((r, i)) => Ok(GaussianRational::new(r.parse()?, i.parse()?)),
            None => Ok(GaussianRational::from_rational(s.parse()?)),
        }
    }
}
