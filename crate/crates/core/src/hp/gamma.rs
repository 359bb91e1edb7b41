//! Gamma at integer and half-integer arguments, plus factorials.
//!
//! Every gamma factor appearing in the inverse-factorial series and in the
//! reference incomplete gamma has an integer or half-integer argument, so
//! the exact formulas Γ(m) = (m-1)! and Γ(m+1/2) = √π·(2m)!/(4^m·m!) cover
//! all needs; no general-argument gamma is implemented.

use num_bigint::BigUint;
use num_traits::One;

use super::consts::pi;
use super::float::HpFloat;
use super::PrecisionPolicy;

/// n! as an exact big integer (product tree).
pub fn factorial_exact(n: u64) -> BigUint {
    if n < 2 {
        return BigUint::one();
    }
    range_product(2, n)
}

fn range_product(lo: u64, hi: u64) -> BigUint {
    if hi - lo < 8 {
        let mut acc = BigUint::from(lo);
        for v in lo + 1..=hi {
            acc *= v;
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

/// n! rounded to `prec` significant digits.
///
/// Exact as long as the full product fits within twice the working digits;
/// for larger n the product tree rounds oversized intermediates, keeping the
/// total relative error below n·10^(-2·prec), far inside the guard digits.
pub fn factorial_hp(n: u64, prec: u32) -> HpFloat {
    let mut acc = HpFloat::one(prec * 2 + 8);
    let mut lo = 2u64;
    const CHUNK: u64 = 512;
    while lo <= n {
        let hi = n.min(lo + CHUNK - 1);
        let block = range_product(lo, hi);
        acc = &acc * &HpFloat::from_biguint(block, prec * 2 + 8);
        lo = hi + 1;
    }
    acc.with_precision(prec)
}

/// Γ(twice_arg/2) for a positive integer `twice_arg`.
///
/// Even inputs give Γ(m) = (m-1)!, odd inputs Γ(m+1/2) = √π·(2m)!/(4^m·m!);
/// the integer parts are exact and rounding happens once at the end.
pub fn gamma_half_int(twice_arg: u64, policy: &PrecisionPolicy) -> HpFloat {
    assert!(twice_arg >= 1, "gamma argument must be positive");
    let work = policy.working_digits();
    if twice_arg.is_multiple_of(2) {
        let m = twice_arg / 2;
        return HpFloat::from_biguint(factorial_exact(m - 1), work);
    }
    let m = (twice_arg - 1) / 2;
    // (2m)!/m! is an integer; dividing by 4^m = 2^(2m) is one rounded step
    let numer = factorial_exact(2 * m) / factorial_exact(m);
    let denom = BigUint::one() << (2 * m as usize);
    let ratio = HpFloat::from_biguint(numer, work).div(&HpFloat::from_biguint(denom, work));
    &pi(work).sqrt() * &ratio
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial_exact(0), BigUint::from(1u32));
        assert_eq!(factorial_exact(1), BigUint::from(1u32));
        assert_eq!(factorial_exact(5), BigUint::from(120u32));
        assert_eq!(factorial_exact(12), BigUint::from(479_001_600u64));
        // 20! = 2432902008176640000
        assert_eq!(
            factorial_exact(20),
            BigUint::from(2_432_902_008_176_640_000u64)
        );
    }

    #[test]
    fn factorial_hp_matches_exact() {
        let prec = 50;
        for n in [1u64, 7, 30, 150, 600] {
            let exact = HpFloat::from_biguint(factorial_exact(n), prec);
            let rounded = factorial_hp(n, prec);
            assert_eq!(exact.to_sci(45), rounded.to_sci(45), "n = {}", n);
        }
    }

    #[test]
    fn gamma_integers() {
        let pol = PrecisionPolicy::new(40);
        assert_eq!(gamma_half_int(2, &pol).to_sci(10).to_string(), "0.1e1"); // Γ(1)
        assert_eq!(gamma_half_int(10, &pol).to_sci(10).to_string(), "0.24e2"); // Γ(5) = 24
    }

    #[test]
    fn gamma_half_integers() {
        let pol = PrecisionPolicy::new(40);
        let w = pol.working_digits();
        // Γ(1/2) = √π
        let g_half = gamma_half_int(1, &pol);
        let err = &g_half - &pi(w).sqrt();
        assert!(err.is_zero());
        // Γ(5/2) = (3/4)√π
        let g52 = gamma_half_int(5, &pol);
        let expected = &pi(w).sqrt() * &HpFloat::from_rational(&"3/4".parse().unwrap(), w);
        let err = &g52 - &expected;
        assert!(err.is_zero() || err.ord10() < g52.ord10() - (w as i64 - 6));
        // recursion Γ(x+1) = x·Γ(x) at x = 3/2
        let g32 = gamma_half_int(3, &pol);
        let rec = &g32 * &HpFloat::from_rational(&"3/2".parse().unwrap(), w);
        let err = &rec - &g52;
        assert!(err.is_zero() || err.ord10() < g52.ord10() - (w as i64 - 6));
    }
}
