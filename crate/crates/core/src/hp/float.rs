//! Decimal floating-point numbers with configurable significant digits.
//!
//! A value is `±mag · 10^exp` with the magnitude held as a big integer.
//! After every operation the magnitude is rounded (half away from zero) to
//! the working digit count and trailing zeros are stripped, so exactly
//! representable values stay compact. Decimal base keeps the precision
//! accounting and string rendering trivial at the cost of some speed, which
//! is irrelevant next to the big-integer arithmetic itself.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exact::ExactRational;
use crate::sci::SciDigits;
use crate::util::{dec_len, pow10, round_mag_half_away};

/// Floating value with explicit decimal working precision.
#[derive(Clone)]
pub struct HpFloat {
    neg: bool,
    mag: BigUint,
    exp: i64,
    prec: u32,
}

impl HpFloat {
    pub fn zero(prec: u32) -> Self {
        HpFloat {
            neg: false,
            mag: BigUint::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn one(prec: u32) -> Self {
        HpFloat::from_u64(1, prec)
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        HpFloat::from_raw(false, BigUint::from(v), 0, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        HpFloat::from_raw(v < 0, BigUint::from(v.unsigned_abs()), 0, prec)
    }

    pub fn from_biguint(v: BigUint, prec: u32) -> Self {
        HpFloat::from_raw(false, v, 0, prec)
    }

    /// Converts an exact rational, rounding once to `prec` digits.
    pub fn from_rational(r: &ExactRational, prec: u32) -> Self {
        if r.is_zero() {
            return HpFloat::zero(prec);
        }
        let a = r.numer().magnitude();
        let b = r.denom().magnitude();
        let la = dec_len(a);
        let lb = dec_len(b);
        let k = prec as u64 + 2 + lb.saturating_sub(la) + 1;
        let q = (a * pow10(k)).div_rem(b);
        // round the floor quotient by the remainder before normalizing
        let mag = if &q.1 * 2u32 >= *b { q.0 + 1u32 } else { q.0 };
        HpFloat::from_raw(r.is_negative(), mag, -(k as i64), prec)
    }

    pub(crate) fn from_raw(neg: bool, mag: BigUint, exp: i64, prec: u32) -> Self {
        let mut x = HpFloat {
            neg: neg && !mag.is_zero(),
            mag,
            exp,
            prec,
        };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.mag.is_zero() {
            self.neg = false;
            self.exp = 0;
            return;
        }
        let len = dec_len(&self.mag);
        let prec = self.prec as u64;
        if len > prec {
            let cut = len - prec;
            self.mag = round_mag_half_away(&self.mag, cut);
            self.exp += cut as i64;
            // rounding can carry (…999 → 1000…), leaving one digit too many
            if dec_len(&self.mag) > prec {
                self.mag = round_mag_half_away(&self.mag, 1);
                self.exp += 1;
            }
        }
        // strip trailing zeros so exact values stay small
        while !self.mag.is_zero() {
            let (q, r) = self.mag.div_rem(&BigUint::from(10u32));
            if !r.is_zero() {
                break;
            }
            self.mag = q;
            self.exp += 1;
        }
        if self.mag.is_zero() {
            self.neg = false;
            self.exp = 0;
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Same value re-rounded to a different working precision.
    pub fn with_precision(&self, prec: u32) -> Self {
        HpFloat::from_raw(self.neg, self.mag.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.neg
    }

    pub fn is_positive(&self) -> bool {
        !self.neg && !self.is_zero()
    }

    /// Decimal order of magnitude: the value lies in `[10^(ord-1), 10^ord)`.
    /// Zero reports `i64::MIN`.
    pub fn ord10(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + dec_len(&self.mag) as i64
        }
    }

    pub fn abs(&self) -> Self {
        let mut x = self.clone();
        x.neg = false;
        x
    }

    pub fn negate(&self) -> Self {
        let mut x = self.clone();
        if !x.is_zero() {
            x.neg = !x.neg;
        }
        x
    }

    /// Exact halving (multiply by 5, drop an exponent).
    pub fn half(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        HpFloat::from_raw(self.neg, &self.mag * 5u32, self.exp - 1, self.prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return HpFloat::zero(self.prec);
        }
        HpFloat::from_raw(
            self.neg ^ (k < 0),
            &self.mag * k.unsigned_abs(),
            self.exp,
            self.prec,
        )
    }

    /// Comparison is exact on representations (no rounding involved).
    pub fn cmp_value(&self, other: &HpFloat) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => {
                return if other.neg {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (false, true) => {
                return if self.neg {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            _ => {}
        }
        if self.neg != other.neg {
            return if self.neg {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        let mag_ord = self.cmp_abs(other);
        if self.neg {
            mag_ord.reverse()
        } else {
            mag_ord
        }
    }

    /// Compares |self| against |other| exactly.
    pub fn cmp_abs(&self, other: &HpFloat) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let ord_a = self.ord10();
        let ord_b = other.ord10();
        if ord_a != ord_b {
            return ord_a.cmp(&ord_b);
        }
        // equal order: align to the smaller exponent and compare magnitudes
        match self.exp.cmp(&other.exp) {
            Ordering::Equal => self.mag.cmp(&other.mag),
            Ordering::Greater => {
                let shifted = &self.mag * pow10((self.exp - other.exp) as u64);
                shifted.cmp(&other.mag)
            }
            Ordering::Less => {
                let shifted = &other.mag * pow10((other.exp - self.exp) as u64);
                self.mag.cmp(&shifted)
            }
        }
    }

    fn add_signed(&self, other: &HpFloat, flip_other: bool) -> HpFloat {
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            let mut r = other.with_precision(prec);
            if flip_other {
                r = r.negate();
            }
            return r;
        }
        if other.is_zero() {
            return self.with_precision(prec);
        }
        let other_neg = other.neg ^ flip_other;
        let ((hi_neg, hi), (lo_neg, lo)) = if self.ord10() >= other.ord10() {
            ((self.neg, self), (other_neg, other))
        } else {
            ((other_neg, other), (self.neg, self))
        };
        // absorb an operand that lies entirely below the rounding point
        if hi.ord10() - lo.ord10() > prec as i64 + 4 {
            let mut r = hi.with_precision(prec);
            r.neg = hi_neg && !r.is_zero();
            return r;
        }
        let emin = hi.exp.min(lo.exp);
        let mh = &hi.mag * pow10((hi.exp - emin) as u64);
        let ml = &lo.mag * pow10((lo.exp - emin) as u64);
        let (neg, mag) = if hi_neg == lo_neg {
            (hi_neg, mh + ml)
        } else if mh >= ml {
            (hi_neg, mh - ml)
        } else {
            (lo_neg, ml - mh)
        };
        HpFloat::from_raw(neg, mag, emin, prec)
    }

    pub fn mul(&self, other: &HpFloat) -> HpFloat {
        let prec = self.prec.max(other.prec);
        if self.is_zero() || other.is_zero() {
            return HpFloat::zero(prec);
        }
        HpFloat::from_raw(
            self.neg ^ other.neg,
            &self.mag * &other.mag,
            self.exp + other.exp,
            prec,
        )
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &HpFloat) -> HpFloat {
        assert!(!other.is_zero(), "HpFloat division by zero");
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return HpFloat::zero(prec);
        }
        let la = dec_len(&self.mag);
        let lb = dec_len(&other.mag);
        let k = prec as u64 + 3 + lb.saturating_sub(la);
        let (q, r) = (&self.mag * pow10(k)).div_rem(&other.mag);
        let mag = if &r * 2u32 >= other.mag { q + 1u32 } else { q };
        HpFloat::from_raw(
            self.neg ^ other.neg,
            mag,
            self.exp - other.exp - k as i64,
            prec,
        )
    }

    pub fn recip(&self) -> HpFloat {
        HpFloat::one(self.prec).div(self)
    }

    /// Square root (half-away rounding at working precision).
    /// Panics on negative input.
    pub fn sqrt(&self) -> HpFloat {
        assert!(!self.neg, "HpFloat sqrt of negative value");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        let len = dec_len(&self.mag);
        // scale to at least 2(prec+2) digits with an even exponent shift
        let mut s = (2 * (prec as u64 + 2)).saturating_sub(len);
        if (self.exp - s as i64) % 2 != 0 {
            s += 1;
        }
        let scaled = &self.mag * pow10(s);
        let root = scaled.sqrt();
        HpFloat::from_raw(false, root, (self.exp - s as i64) / 2, prec)
    }

    pub fn pow_u64(&self, mut e: u64) -> HpFloat {
        let mut base = self.clone();
        let mut acc = HpFloat::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rendered to `sig` significant digits (half-away rounding).
    pub fn to_sci(&self, sig: u32) -> SciDigits {
        SciDigits::from_magnitude(self.neg, &self.mag, self.exp, sig)
    }

    /// Reconstructs the exactly-represented value of a rendered string.
    pub fn from_sci_digits(s: &SciDigits, prec: u32) -> Self {
        if s.is_zero() {
            return HpFloat::zero(prec);
        }
        let mag = BigUint::parse_bytes(s.digits.as_bytes(), 10).expect("digits are ascii");
        HpFloat::from_raw(s.neg, mag, s.exp10 - s.digits.len() as i64, prec)
    }

    /// Approximate conversion for diagnostics; saturates on overflow.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (m, e) = self.f64_parts();
        let v = m * libm::pow(10.0, e as f64);
        if self.neg {
            -v
        } else {
            v
        }
    }

    /// Natural log of |self| in f64, usable far outside the f64 range.
    pub fn ln_abs_f64(&self) -> f64 {
        assert!(!self.is_zero(), "log of zero");
        let (m, e) = self.f64_parts();
        libm::log(m) + e as f64 * core::f64::consts::LN_10
    }

    /// (mantissa in [0.1, 1), decimal exponent) for f64-level diagnostics.
    fn f64_parts(&self) -> (f64, i64) {
        let len = dec_len(&self.mag);
        let keep = 17u64.min(len);
        let top = &self.mag / pow10(len - keep);
        let m = top.to_f64().unwrap_or(0.0) / libm::pow(10.0, keep as f64);
        (m, self.exp + len as i64)
    }
}

impl PartialEq for HpFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl fmt::Debug for HpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(self.prec))
    }
}

impl fmt::Display for HpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(self.prec))
    }
}

impl Add for &HpFloat {
    type Output = HpFloat;
    fn add(self, rhs: &HpFloat) -> HpFloat {
        self.add_signed(rhs, false)
    }
}

impl Sub for &HpFloat {
    type Output = HpFloat;
    fn sub(self, rhs: &HpFloat) -> HpFloat {
        self.add_signed(rhs, true)
    }
}

impl Mul for &HpFloat {
    type Output = HpFloat;
    fn mul(self, rhs: &HpFloat) -> HpFloat {
        HpFloat::mul(self, rhs)
    }
}

impl Div for &HpFloat {
    type Output = HpFloat;
    fn div(self, rhs: &HpFloat) -> HpFloat {
        HpFloat::div(self, rhs)
    }
}

impl Neg for &HpFloat {
    type Output = HpFloat;
    fn neg(self) -> HpFloat {
        self.negate()
    }
}
