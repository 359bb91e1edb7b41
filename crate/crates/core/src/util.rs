//! Small integer helpers shared across the crate: cached powers of ten,
//! exact decimal lengths, and magnitude rounding.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use spin::Mutex;

/// Powers of ten are requested constantly while rounding mantissas; cache
/// them up to a cap and fall back to direct exponentiation beyond it.
static POW10_CACHE: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

const POW10_CACHE_MAX: u64 = 4096;

/// `10^k`.
pub(crate) fn pow10(k: u64) -> BigUint {
    if k > POW10_CACHE_MAX {
        return BigUint::from(10u32).pow(k as u32);
    }
    let mut cache = POW10_CACHE.lock();
    if cache.is_empty() {
        cache.push(BigUint::from(1u32));
    }
    while (cache.len() as u64) <= k {
        let next = cache.last().unwrap() * 10u32;
        cache.push(next);
    }
    cache[k as usize].clone()
}

/// Number of decimal digits of `n`; 0 for zero.
pub(crate) fn dec_len(n: &BigUint) -> u64 {
    if n.is_zero() {
        return 0;
    }
    let bits = n.bits();
    // floor((bits-1)·log10(2)) with a slight underestimate of log10(2);
    // the loop below fixes up the at-most-one-off result.
    let mut d = (bits - 1) * 301_029_995 / 1_000_000_000 + 1;
    while *n >= pow10(d) {
        d += 1;
    }
    d
}

/// Drops the lowest `cut` decimal digits of `mag`, rounding half away
/// from zero.
pub(crate) fn round_mag_half_away(mag: &BigUint, cut: u64) -> BigUint {
    if cut == 0 {
        return mag.clone();
    }
    let p = pow10(cut);
    let q = mag / &p;
    let r = mag - &q * &p;
    if &r * 2u32 >= p {
        q + 1u32
    } else {
        q
    }
}

/// Floor of the integer square root.
pub(crate) fn isqrt_u128(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    let mut x = 1u128 << (v.ilog2() / 2 + 1);
    loop {
        let y = (x + v / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}
