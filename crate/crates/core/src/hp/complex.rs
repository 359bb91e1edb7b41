//! Complex numbers over [`HpFloat`].

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::exact::GaussianRational;

use super::float::HpFloat;

/// Complex floating value; both parts carry the same working precision.
#[derive(Clone, PartialEq)]
pub struct HpComplex {
    pub re: HpFloat,
    pub im: HpFloat,
}

impl HpComplex {
    pub fn new(re: HpFloat, im: HpFloat) -> Self {
        HpComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        HpComplex {
            re: HpFloat::zero(prec),
            im: HpFloat::zero(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        HpComplex {
            re: HpFloat::one(prec),
            im: HpFloat::zero(prec),
        }
    }

    pub fn from_real(re: HpFloat) -> Self {
        let prec = re.precision();
        HpComplex {
            re,
            im: HpFloat::zero(prec),
        }
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        HpComplex::from_real(HpFloat::from_u64(v, prec))
    }

    /// Conversion from a Gaussian rational is exact up to the final rounding
    /// of each part to `prec` digits.
    pub fn from_gaussian(z: &GaussianRational, prec: u32) -> Self {
        HpComplex {
            re: HpFloat::from_rational(z.re(), prec),
            im: HpFloat::from_rational(z.im(), prec),
        }
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        HpComplex {
            re: self.re.clone(),
            im: self.im.negate(),
        }
    }

    pub fn norm_sqr(&self) -> HpFloat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Modulus |z|.
    pub fn abs(&self) -> HpFloat {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, f: &HpFloat) -> Self {
        HpComplex {
            re: &self.re * f,
            im: &self.im * f,
        }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        HpComplex {
            re: self.re.mul_i64(k),
            im: self.im.mul_i64(k),
        }
    }

    pub fn div_real(&self, f: &HpFloat) -> Self {
        HpComplex {
            re: &self.re / f,
            im: &self.im / f,
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "HpComplex division by zero");
        let inv = n.recip();
        HpComplex {
            re: &self.re * &inv,
            im: &self.im.negate() * &inv,
        }
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let prec = self.precision();
        let mut base = self.clone();
        let mut acc = HpComplex::one(prec);
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

    /// Larger of the two parts' decimal orders (zero → `i64::MIN`).
    pub fn ord10(&self) -> i64 {
        self.re.ord10().max(self.im.ord10())
    }
}

impl Add for &HpComplex {
    type Output = HpComplex;
    fn add(self, rhs: &HpComplex) -> HpComplex {
        HpComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &HpComplex {
    type Output = HpComplex;
    fn sub(self, rhs: &HpComplex) -> HpComplex {
        HpComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &HpComplex {
    type Output = HpComplex;
    fn mul(self, rhs: &HpComplex) -> HpComplex {
        if self.is_real() && rhs.is_real() {
            return HpComplex::from_real(&self.re * &rhs.re);
        }
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        HpComplex { re, im }
    }
}

impl Div for &HpComplex {
    type Output = HpComplex;
    fn div(self, rhs: &HpComplex) -> HpComplex {
        if rhs.is_real() {
            return HpComplex {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        self * &rhs.recip()
    }
}

impl Neg for &HpComplex {
    type Output = HpComplex;
    fn neg(self) -> HpComplex {
        HpComplex {
            re: self.re.negate(),
            im: self.im.negate(),
        }
    }
}

impl fmt::Debug for HpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}i)", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn field_ops() {
        let p = 40;
        let z = HpComplex::from_gaussian(&g("1,3/2"), p);
        let w = HpComplex::from_gaussian(&g("2,-1"), p);
        let prod = &z * &w;
        assert_eq!(prod.re.to_sci(10).to_string(), "0.35e1");
        assert_eq!(prod.im.to_sci(10).to_string(), "0.2e1");
        let back = &prod / &w;
        assert_eq!(back.re.to_sci(30), z.re.to_sci(30));
        assert_eq!(back.im.to_sci(30), z.im.to_sci(30));
    }

    #[test]
    fn abs_and_norm() {
        let p = 40;
        let z = HpComplex::from_gaussian(&g("3,4"), p);
        assert_eq!(z.abs().to_sci(10).to_string(), "0.5e1");
        assert_eq!(z.norm_sqr().to_sci(10).to_string(), "0.25e2");
    }

    #[test]
    fn powers() {
        let p = 40;
        let i = HpComplex::from_gaussian(&g("0,1"), p);
        let i4 = i.pow_u64(4);
        assert_eq!(i4.re.to_sci(10).to_string(), "0.1e1");
        assert!(i4.im.is_zero());
    }
}
