//! Error function of a complex argument via the Maclaurin series
//!
//! erf z = (2/√π) Σ_{n≥0} (-1)^n z^(2n+1) / (n!(2n+1)).
//!
//! The series is used everywhere: all call sites in this crate have |z|
//! bounded by a few units, where convergence is rapid and cancellation
//! negligible. Inputs are accepted up to |z| = 30; whether a given argument
//! is feasible at a given precision is decided by monitoring how much of the
//! term magnitude cancels, and exhausting the guard digits is an error
//! rather than a silently inaccurate answer. No asymptotic continuation for
//! large |z| is provided.

use super::complex::HpComplex;
use super::consts::pi;
use super::float::HpFloat;
use super::{HpError, PrecisionPolicy};

/// erf(z). Requires |z| ≤ 30.
pub fn erf(z: &HpComplex, policy: &PrecisionPolicy) -> Result<HpComplex, HpError> {
    let work = policy.working_digits();
    let z = HpComplex::new(z.re.with_precision(work), z.im.with_precision(work));
    if z.is_zero() {
        return Ok(HpComplex::zero(work));
    }
    if z.norm_sqr().cmp_value(&HpFloat::from_u64(900, work)) == core::cmp::Ordering::Greater {
        return Err(HpError::Domain("erf series restricted to |z| <= 30"));
    }

    let cutoff = -((policy.target_digits() + policy.guard_digits()) as i64);
    let z2 = &z * &z;
    // u_n = z^(2n+1)/n!, term_n = u_n/(2n+1) with alternating sign
    let mut u = z.clone();
    let mut sum = z.clone();
    let mut n = 1u64;
    let mut max_ord = sum.ord10();
    let mut prev_ord = max_ord;
    loop {
        u = &u * &z2;
        u = u.div_real(&HpFloat::from_u64(n, work));
        let term = u.div_real(&HpFloat::from_u64(2 * n + 1, work));
        let ord = term.ord10();
        max_ord = max_ord.max(ord);
        if n % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum = &sum + &term;
        }
        // stop once the terms are past their peak and negligibly small
        if ord < cutoff && ord <= prev_ord {
            break;
        }
        prev_ord = ord;
        n += 1;
    }

    // how many leading digits cancelled between the largest term and the sum
    let lost = if sum.is_zero() {
        (max_ord - cutoff) as u64
    } else {
        (max_ord - sum.ord10()).max(0) as u64
    };
    if lost > policy.guard_digits() as u64 {
        return Err(HpError::PrecisionInfeasible {
            lost_digits: lost,
            guard_digits: policy.guard_digits(),
        });
    }

    let factor = HpFloat::from_u64(2, work).div(&pi(work).sqrt());
    Ok(sum.scale(&factor))
}

/// erfc(z) = 1 - erf(z). Same domain restriction as [`erf`].
pub fn erfc(z: &HpComplex, policy: &PrecisionPolicy) -> Result<HpComplex, HpError> {
    let work = policy.working_digits();
    let one = HpComplex::one(work);
    Ok(&one - &erf(z, policy)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational;

    fn policy(t: u32) -> PrecisionPolicy {
        PrecisionPolicy::new(t)
    }

    fn from_g(s: &str, prec: u32) -> HpComplex {
        HpComplex::from_gaussian(&s.parse::<GaussianRational>().unwrap(), prec)
    }

    #[test]
    fn erf_at_zero_and_odd_symmetry() {
        let pol = policy(40);
        let w = pol.working_digits();
        assert!(erf(&HpComplex::zero(w), &pol).unwrap().is_zero());
        for s in ["1/2", "-3/4", "1,1", "0,1", "2,-1"] {
            let z = from_g(s, w);
            let plus = erf(&z, &pol).unwrap();
            let minus = erf(&(-&z), &pol).unwrap();
            let sum = &plus + &minus;
            assert!(
                sum.is_zero() || sum.ord10() < plus.ord10() - (w as i64 - 6),
                "erf not odd at {}",
                s
            );
        }
    }

    #[test]
    fn erf_reference_value() {
        // erf(2^{-1/2}·(1/2)) = 0.3829249225480262072754092212166…
        let pol = policy(40);
        let w = pol.working_digits();
        let half = HpFloat::from_rational(&"1/2".parse().unwrap(), w);
        let arg = HpComplex::from_real(
            &half * &HpFloat::from_rational(&"1/2".parse().unwrap(), w).sqrt(),
        );
        let v = erf(&arg, &pol).unwrap();
        assert_eq!(v.re.to_sci(20).to_string(), "0.38292492254802620728e0");
        assert!(v.im.is_zero());
    }

    #[test]
    fn erfc_complements_erf() {
        let pol = policy(50);
        let w = pol.working_digits();
        for s in ["0", "1/2", "1,3/2", "2,1", "-5/2,1/3"] {
            let z = from_g(s, w);
            let sum = &erf(&z, &pol).unwrap() + &erfc(&z, &pol).unwrap();
            let err = &sum - &HpComplex::one(w);
            assert!(
                err.is_zero() || err.ord10() < -(w as i64 - 8),
                "erf+erfc != 1 at {}",
                s
            );
        }
    }

    #[test]
    fn erf_domain_guard() {
        let pol = policy(40);
        let w = pol.working_digits();
        let too_big = HpComplex::from_u64(31, w);
        assert!(matches!(erf(&too_big, &pol), Err(HpError::Domain(_))));
    }

    #[test]
    fn erf_doubled_precision_agrees() {
        // independent oracle: the same series at twice the precision
        let lo = policy(30);
        let hi = policy(60);
        for s in ["1/2", "1,3/2", "2,1"] {
            let zl = from_g(s, lo.working_digits());
            let zh = from_g(s, hi.working_digits());
            let a = erf(&zl, &lo).unwrap();
            let b = erf(&zh, &hi).unwrap();
            assert_eq!(a.re.to_sci(30), b.re.to_sci(30), "re mismatch at {}", s);
            assert_eq!(a.im.to_sci(30), b.im.to_sci(30), "im mismatch at {}", s);
        }
    }
}
