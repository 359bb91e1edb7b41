//! Elementary transcendental functions on [`HpFloat`] / [`HpComplex`].
//!
//! All arguments in this crate are moderate (|x| up to ~10⁷ for the real
//! exponential inside the reference incomplete gamma, |x| small for the
//! trigonometric parts), so simple strategies suffice: halve the argument
//! into the fast-convergence region, run the Maclaurin series at working
//! precision, and undo the reduction by squaring or double-angle steps.

use super::complex::HpComplex;
use super::float::HpFloat;

/// e^x for real x.
pub fn exp_hp(x: &HpFloat) -> HpFloat {
    let prec = x.precision();
    if x.is_zero() {
        return HpFloat::one(prec);
    }
    if x.is_negative() {
        return exp_hp(&x.negate()).recip();
    }
    // reduce to y ≤ 1/4, exponentiate, square back
    let quarter = HpFloat::from_rational(&crate::exact::ExactRational::new(1, 4), prec);
    let mut y = x.clone();
    let mut halvings = 0u32;
    while y.cmp_abs(&quarter) == core::cmp::Ordering::Greater {
        y = y.half();
        halvings += 1;
    }
    let mut result = exp_series(&y);
    for _ in 0..halvings {
        result = &result * &result;
    }
    result
}

/// Maclaurin series of e^y for |y| ≤ 1/4.
fn exp_series(y: &HpFloat) -> HpFloat {
    let prec = y.precision();
    let cutoff = -(prec as i64) - 4;
    let mut sum = HpFloat::one(prec);
    let mut term = HpFloat::one(prec);
    let mut n = 1u64;
    loop {
        term = &term * y;
        term = &term / &HpFloat::from_u64(n, prec);
        if term.is_zero() || term.ord10() < cutoff {
            break;
        }
        sum = &sum + &term;
        n += 1;
    }
    sum
}

/// (sin x, cos x) for real x, via double-angle reduction.
pub fn sin_cos_hp(x: &HpFloat) -> (HpFloat, HpFloat) {
    let prec = x.precision();
    if x.is_zero() {
        return (HpFloat::zero(prec), HpFloat::one(prec));
    }
    let quarter = HpFloat::from_rational(&crate::exact::ExactRational::new(1, 4), prec);
    let mut y = x.clone();
    let mut halvings = 0u32;
    while y.cmp_abs(&quarter) == core::cmp::Ordering::Greater {
        y = y.half();
        halvings += 1;
    }
    let (mut s, mut c) = sin_cos_series(&y);
    for _ in 0..halvings {
        // sin 2y = 2·sin y·cos y, cos 2y = 1 - 2·sin²y
        let s2 = (&s * &c).mul_i64(2);
        let c2 = &HpFloat::one(prec) - &(&s * &s).mul_i64(2);
        s = s2;
        c = c2;
    }
    (s, c)
}

pub fn sin_hp(x: &HpFloat) -> HpFloat {
    sin_cos_hp(x).0
}

pub fn cos_hp(x: &HpFloat) -> HpFloat {
    sin_cos_hp(x).1
}

/// Maclaurin series of sin and cos for |y| ≤ 1/4.
fn sin_cos_series(y: &HpFloat) -> (HpFloat, HpFloat) {
    let prec = y.precision();
    let cutoff = -(prec as i64) - 4;
    let neg_y2 = (y * y).negate();
    let y2 = &neg_y2;
    // sin: y·Σ (-y²)^k / (2k+1)!, cos: Σ (-y²)^k / (2k)!
    let mut sin_sum = HpFloat::one(prec);
    let mut cos_sum = HpFloat::one(prec);
    let mut term_s = HpFloat::one(prec);
    let mut term_c = HpFloat::one(prec);
    let mut k = 1u64;
    loop {
        term_c = &(&term_c * y2) / &HpFloat::from_u64((2 * k - 1) * (2 * k), prec);
        term_s = &(&term_s * y2) / &HpFloat::from_u64((2 * k) * (2 * k + 1), prec);
        let live_c = !term_c.is_zero() && term_c.ord10() >= cutoff;
        let live_s = !term_s.is_zero() && term_s.ord10() >= cutoff;
        if live_c {
            cos_sum = &cos_sum + &term_c;
        }
        if live_s {
            sin_sum = &sin_sum + &term_s;
        }
        if !live_c && !live_s {
            break;
        }
        k += 1;
    }
    (y * &sin_sum, cos_sum)
}

/// e^z for complex z: e^re·(cos im + i·sin im).
pub fn exp_complex(z: &HpComplex) -> HpComplex {
    let radial = exp_hp(&z.re);
    if z.im.is_zero() {
        return HpComplex::from_real(radial);
    }
    let (s, c) = sin_cos_hp(&z.im);
    HpComplex::new(&radial * &c, &radial * &s)
}
