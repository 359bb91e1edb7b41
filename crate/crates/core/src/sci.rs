//! Scientific-notation decimal rendering shared by the exact and floating
//! layers, plus digit-string comparison with unit-in-last-place tolerance.
//!
//! Values are rendered as `±0.digits e exp10`, i.e. a mantissa in [0.1, 1)
//! times a power of ten, which keeps comparisons against published reference
//! digits purely textual.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::exact::ExactRational;
use crate::util::{dec_len, pow10, round_mag_half_away};

/// A value as `±0.digits × 10^exp10`; `digits` holds the significant digits
/// with no leading zero. The zero value has empty digits and exp10 = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SciDigits {
    pub neg: bool,
    pub digits: String,
    pub exp10: i64,
}

impl SciDigits {
    pub fn zero() -> Self {
        SciDigits {
            neg: false,
            digits: String::new(),
            exp10: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn sig_digits(&self) -> usize {
        self.digits.len()
    }

    /// Builds from an unsigned mantissa and exponent: value = mag·10^exp,
    /// correctly rounded (half away from zero) to `sig` significant digits.
    pub fn from_magnitude(neg: bool, mag: &BigUint, exp: i64, sig: u32) -> Self {
        if mag.is_zero() {
            return SciDigits::zero();
        }
        let len = dec_len(mag);
        let sig = sig.max(1) as u64;
        let (mut m, mut e) = if len > sig {
            let cut = len - sig;
            (round_mag_half_away(mag, cut), exp + cut as i64)
        } else {
            (mag.clone(), exp)
        };
        // rounding may carry into one extra digit (…999 → 1000…)
        if dec_len(&m) > sig {
            m = round_mag_half_away(&m, 1);
            e += 1;
        }
        let digits = m.to_str_radix(10);
        let exp10 = e + digits.len() as i64;
        SciDigits { neg, digits, exp10 }
    }

    /// Exact, correctly-rounded rendering of a rational to `sig` digits.
    pub fn from_rational(r: &ExactRational, sig: u32) -> Self {
        if r.is_zero() {
            return SciDigits::zero();
        }
        let sig = sig.max(1) as u64;
        let a = r.numer().magnitude();
        let b = r.denom().magnitude();
        let la = dec_len(a);
        let lb = dec_len(b);
        // Scale so the integer quotient carries at least sig+2 digits.
        let k = sig + 2 + lb.saturating_sub(la) + 1;
        let scaled = a * pow10(k);
        let q = &scaled / b;
        let lq = dec_len(&q);
        debug_assert!(lq >= sig + 2);
        let cut = lq - sig;
        let p = pow10(cut);
        let half = &p >> 1; // p = 10^cut with cut ≥ 1 is even
        let low = &q % &p;
        let mut m = &q / &p;
        // The discarded fraction is low + (division remainder)/b with the
        // second part in [0, 1), so low ≥ p/2 decides round-up exactly
        // (half away from zero).
        if low >= half {
            m += 1u32;
        }
        let mut e = cut as i64 - k as i64;
        if dec_len(&m) > sig {
            m = round_mag_half_away(&m, 1);
            e += 1;
        }
        let digits = m.to_str_radix(10);
        let exp10 = e + digits.len() as i64;
        SciDigits {
            neg: r.is_negative(),
            digits,
            exp10,
        }
    }

    /// Absolute difference measured in units of `other`'s last digit;
    /// `None` when the signs differ on non-negligible values.
    pub fn ulp_distance(&self, other: &SciDigits) -> Option<BigUint> {
        // value_i = ±digits_i · 10^(exp_i - len_i)
        let unit_self = self.exp10 - self.digits.len() as i64;
        let unit_other = other.exp10 - other.digits.len() as i64;
        let base = unit_self.min(unit_other);
        let scale = |s: &SciDigits, unit: i64| -> BigUint {
            if s.is_zero() {
                BigUint::zero()
            } else {
                BigUint::from_str(&s.digits).unwrap() * pow10((unit - base) as u64)
            }
        };
        let a = scale(self, unit_self);
        let b = scale(other, unit_other);
        let diff = if self.neg == other.neg || a.is_zero() || b.is_zero() {
            if self.neg == other.neg {
                if a >= b {
                    &a - &b
                } else {
                    &b - &a
                }
            } else {
                a + b
            }
        } else {
            return None;
        };
        // express in units of other's last printed digit
        let unit = pow10((unit_other - base) as u64);
        Some(
            &diff / &unit
                + if (&diff % &unit).is_zero() {
                    0u32
                } else {
                    1u32
                },
        )
    }

    /// Number of leading significant digits on which the two agree
    /// (0 when exponents or signs differ).
    pub fn matched_digits(&self, other: &SciDigits) -> usize {
        if self.neg != other.neg || self.exp10 != other.exp10 {
            return 0;
        }
        self.digits
            .bytes()
            .zip(other.digits.bytes())
            .take_while(|(a, b)| a == b)
            .count()
    }
}

impl fmt::Display for SciDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(
            f,
            "{}0.{}e{}",
            if self.neg { "-" } else { "" },
            self.digits,
            self.exp10
        )
    }
}

/// Error parsing a `±0.digits e exp` string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSciError;

impl fmt::Display for ParseSciError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected scientific decimal of the form -0.digits e exp")
    }
}

impl FromStr for SciDigits {
    type Err = ParseSciError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(SciDigits::zero());
        }
        let (neg, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mant, exp_s) = rest.split_once(['e', 'E']).ok_or(ParseSciError)?;
        let exp_in: i64 = exp_s.parse().map_err(|_| ParseSciError)?;
        let mant = mant.strip_prefix("0.").ok_or(ParseSciError)?;
        if mant.is_empty() || !mant.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseSciError);
        }
        // normalize away leading zeros of the fractional mantissa
        let lead_zeros = mant.bytes().take_while(|&b| b == b'0').count();
        if lead_zeros == mant.len() {
            return Ok(SciDigits::zero());
        }
        let digits: String = mant[lead_zeros..].into();
        Ok(SciDigits {
            neg,
            digits,
            exp10: exp_in - lead_zeros as i64,
        })
    }
}
