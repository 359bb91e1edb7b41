//! Independent reference evaluation of Q(a, z) = Γ(a, z)/Γ(a) for positive
//! integer a and complex z with Re z > 0.
//!
//! Two convergent routes, switched on |z| vs a:
//!
//! * |z| ≤ a — the everywhere-convergent series
//!   P(a,z) = z^a e^{-z} Σ_{n≥0} z^n/Γ(a+n+1), with Q = 1 - P;
//! * |z| > a — the Legendre continued fraction for Γ(a, z), evaluated by the
//!   modified Lentz algorithm (Thompson & Barnett).
//!
//! Near |z| ≈ a both routes converge, slowly, in O(√(a·digits)) steps; the
//! iteration cap scales accordingly.

use num_traits::One;

use num_bigint::BigUint;

use crate::util::isqrt_u128;

use super::complex::HpComplex;
use super::float::HpFloat;
use super::funcs::exp_complex;
use super::gamma::factorial_hp;
use super::{HpError, PrecisionPolicy};

/// Q(a, z) for integer a ≥ 1, Re z > 0.
pub fn incomplete_gamma_q(
    a: u64,
    z: &HpComplex,
    policy: &PrecisionPolicy,
) -> Result<HpComplex, HpError> {
    if a < 1 {
        return Err(HpError::Domain("a must be a positive integer"));
    }
    if !z.re.is_positive() {
        return Err(HpError::Domain("Re z must be positive"));
    }
    let work = policy.working_digits();
    let z = HpComplex::new(z.re.with_precision(work), z.im.with_precision(work));
    let cap = iteration_cap(a, policy);

    let a_hp = HpFloat::from_u64(a, work);
    let series_branch = z.abs().cmp_value(&a_hp) != core::cmp::Ordering::Greater;
    if series_branch {
        let p = lower_series(a, &z, work, cap)?;
        Ok(&HpComplex::one(work) - &p)
    } else {
        upper_continued_fraction(a, &z, work, cap)
    }
}

/// Iterations needed near the |z| ≈ a boundary grow like √(a·digits); the
/// cap covers that regime with generous margin.
fn iteration_cap(a: u64, policy: &PrecisionPolicy) -> usize {
    let base = 50 * policy.target_digits() as usize;
    let boundary = 12 * isqrt_u128(a as u128 * policy.working_digits() as u128) as usize;
    base + boundary + 200
}

/// P(a, z) by the ascending series.
fn lower_series(a: u64, z: &HpComplex, work: u32, cap: usize) -> Result<HpComplex, HpError> {
    // t_0 = z^a e^{-z} / a!
    let mut term = z.pow_u64(a);
    term = &term * &exp_complex(&(-z));
    term = term.div_real(&factorial_hp(a, work));
    let mut sum = term.clone();
    for n in 1..=cap {
        term = &term * z;
        term = term.div_real(&HpFloat::from_u64(a + n as u64, work));
        sum = &sum + &term;
        if term.ord10() < sum.ord10() - work as i64 - 4 {
            return Ok(sum);
        }
    }
    Err(HpError::NonConvergence { iterations: cap })
}

/// Q(a, z) by the Legendre continued fraction
/// Γ(a,z) = e^{-z} z^a / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(…))).
fn upper_continued_fraction(
    a: u64,
    z: &HpComplex,
    work: u32,
    cap: usize,
) -> Result<HpComplex, HpError> {
    let tiny = HpComplex::from_real(HpFloat::from_raw(
        false,
        BigUint::one(),
        -(3 * work as i64),
        work,
    ));
    let one = HpComplex::one(work);

    // modified Lentz with b_i = z + 1 - a + 2i, a_i = -i(i-a)
    let mut b = {
        let shift = HpFloat::from_i64(1 - a as i64, work);
        z + &HpComplex::from_real(shift)
    };
    let mut h = if b.is_zero() { tiny.clone() } else { b.clone() };
    let mut c = h.clone();
    let mut d = HpComplex::zero(work);

    for i in 1..=cap {
        // a_i = -i(i - a) = i(a - i)
        let an_val = (i as i128) * (a as i128 - i as i128);
        let an = HpComplex::from_real(HpFloat::from_i64(an_val as i64, work));
        b = &b + &HpComplex::from_u64(2, work);

        d = &(&an * &d) + &b;
        if d.is_zero() {
            d = tiny.clone();
        }
        c = &b + &(&an / &c);
        if c.is_zero() {
            c = tiny.clone();
        }
        d = d.recip();
        let delta = &d * &c;
        h = &h * &delta;

        let dev = &delta - &one;
        if dev.is_zero() || dev.ord10() < -(work as i64) - 2 {
            // Γ(a,z) = e^{-z} z^a / h; normalize by Γ(a) = (a-1)!
            let mut q = z.pow_u64(a);
            q = &q * &exp_complex(&(-z));
            q = &q / &h;
            return Ok(q.div_real(&factorial_hp(a - 1, work)));
        }
    }
    Err(HpError::NonConvergence { iterations: cap })
}
