//! High-precision constants, cached per precision level.

use alloc::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use spin::Mutex;

use crate::util::pow10;

use super::float::HpFloat;

static PI_CACHE: Mutex<BTreeMap<u32, (BigUint, i64)>> = Mutex::new(BTreeMap::new());

/// π at `prec` significant decimal digits.
///
/// Machin's formula π = 16·atan(1/5) - 4·atan(1/239), evaluated in scaled
/// integer arithmetic. Results are cached per precision level; the caches
/// are written once and only read afterwards.
pub fn pi(prec: u32) -> HpFloat {
    {
        let cache = PI_CACHE.lock();
        if let Some((mag, exp)) = cache.get(&prec) {
            return HpFloat::from_raw(false, mag.clone(), *exp, prec);
        }
    }
    let (mag, exp) = compute_pi(prec);
    PI_CACHE.lock().insert(prec, (mag.clone(), exp));
    HpFloat::from_raw(false, mag, exp, prec)
}

/// √(2π) at `prec` digits.
pub fn sqrt_2pi(prec: u32) -> HpFloat {
    let two_pi = pi(prec).mul_i64(2);
    two_pi.sqrt()
}

/// Returns (magnitude, exponent) with value = magnitude·10^exponent ≈ π.
fn compute_pi(prec: u32) -> (BigUint, i64) {
    let work = prec as u64 + 12;
    let scale = pow10(work);
    let a = atan_inv_scaled(5, &scale);
    let b = atan_inv_scaled(239, &scale);
    let sixteen_a = a * 16u32;
    let four_b = b * 4u32;
    debug_assert!(sixteen_a > four_b);
    let m = sixteen_a - four_b;
    (m, -(work as i64))
}

/// floor(atan(1/x)·scale) up to a few units: alternating series
/// Σ (-1)^j / ((2j+1)·x^(2j+1)).
fn atan_inv_scaled(x: u64, scale: &BigUint) -> BigUint {
    let x2 = BigUint::from(x) * x;
    let mut power = scale / x; // scale / x^(2j+1)
    let mut sum = BigUint::zero();
    let mut j = 0u64;
    let mut positive = true;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if positive {
            sum += &term;
        } else {
            sum -= &term;
        }
        power /= &x2;
        positive = !positive;
        j += 1;
    }
    sum
}
