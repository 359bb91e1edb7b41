//! Truncated inverse-factorial-series approximations of the late expansion
//! coefficients, and the normalized residual diagnostics behind them.
//!
//! The late coefficients re-expand in terms of the early ones. With
//! s(m) = sin(mπ/2) ∈ {0, ±1} taken from its exact four-cycle:
//!
//! * odd family:
//!   `C_{2n-1}(τ) ≈ [Γ(n)/(2π)^{n+1/2}]·s(n)·e^{τ²/2}·erf(2^{-1/2}τ)
//!                 - (1/π)·Σ_{k=1..N} C_{2k-1}(τ)·s(n-k)·Γ(n-k)/(2π)^{n-k}`
//! * even family:
//!   `C_{2n}(τ) ≈ -[Γ(n+1/2)/(2π)^{n+1}]·sin((n+1/2)π/2)·e^{τ²/2}
//!                 - (1/π)·Σ_{k=0..N} C_{2k}(τ)·s(n-k)·Γ(n-k)/(2π)^{n-k}`
//!
//! with the half-integer sine drawn from its exact eight-cycle (±√2/2).
//! The same shape serves the Stirling coefficients γ_n and the τ = 0
//! specialization. The sines are never evaluated in floating point, so the
//! structurally absent terms are exactly zero.

use core::fmt;

use crate::coeffs::CoefficientTable;
use crate::exact::{ExactRational, GaussianRational};
use crate::hp::{
    erf, exp_complex, factorial_exact, gamma_half_int, pi, sqrt_2pi, HpComplex, HpError, HpFloat,
    PrecisionPolicy,
};

/// Which coefficient family an approximation or report refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesParity {
    /// The `C_{2n-1}` / `D_{2n-1}` family.
    Odd,
    /// The `C_{2n}` / `D_{2n}` family.
    Even,
}

impl fmt::Display for SeriesParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesParity::Odd => write!(f, "odd"),
            SeriesParity::Even => write!(f, "even"),
        }
    }
}

/// Errors from the approximation evaluators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResurgenceError {
    /// The truncation index must stay below n: Γ(n-k) is undefined at k = n.
    /// Out-of-range truncations are a hard error, never a silent clamp.
    TruncationTooLong {
        n: u64,
        trunc: u64,
    },
    /// The coefficient table does not reach the requested index.
    TableTooSmall {
        needed: usize,
        max_n: usize,
    },
    Numeric(HpError),
}

impl fmt::Display for ResurgenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResurgenceError::TruncationTooLong { n, trunc } => {
                write!(f, "truncation N = {} must be smaller than n = {}", trunc, n)
            }
            ResurgenceError::TableTooSmall { needed, max_n } => {
                write!(
                    f,
                    "coefficient table reaches {} but index {} is needed",
                    max_n, needed
                )
            }
            ResurgenceError::Numeric(e) => write!(f, "{}", e),
        }
    }
}

impl From<HpError> for ResurgenceError {
    fn from(e: HpError) -> Self {
        ResurgenceError::Numeric(e)
    }
}

/// One comparison of an exact coefficient value against its truncated
/// inverse-factorial approximation.
#[derive(Clone, Debug)]
pub struct ApproxReport {
    pub n: u64,
    pub tau: GaussianRational,
    /// Truncation index N (number of retained sum terms in the odd family,
    /// N+1 terms k = 0..N in the even family).
    pub trunc: u64,
    pub parity: SeriesParity,
    pub exact: HpComplex,
    pub approx: HpComplex,
    /// exact - approx.
    pub abs_err: HpComplex,
    /// |abs_err| / |exact| (zero when exact = 0).
    pub rel_err: HpFloat,
}

/// sin(mπ/2) from the exact cycle {0, 1, 0, -1}.
fn sin_half_pi(m: i64) -> i8 {
    match m.rem_euclid(4) {
        0 => 0,
        1 => 1,
        2 => 0,
        _ => -1,
    }
}

/// Sign of sin((n+1/2)·π/2) = sin((2n+1)π/4), whose magnitude is √2/2.
fn sin_quarter_odd_sign(n: u64) -> i8 {
    match (2 * n + 1) % 8 {
        1 | 3 => 1,
        _ => -1,
    }
}

/// Γ(m)/(2π)^m at working precision (m ≥ 1).
fn gamma_over_two_pi_pow(m: u64, work: u32) -> HpFloat {
    let two_pi = pi(work).mul_i64(2);
    &HpFloat::from_biguint(factorial_exact(m - 1), work) / &two_pi.pow_u64(m)
}

/// e^{τ²/2} with the square taken exactly first.
fn exp_half_tau_sq(tau: &GaussianRational, work: u32) -> HpComplex {
    let half_sq = &tau.square() * &ExactRational::new(1, 2);
    exp_complex(&HpComplex::from_gaussian(&half_sq, work))
}

fn require_table(table: &CoefficientTable, needed: usize) -> Result<(), ResurgenceError> {
    if table.max_n() < needed {
        Err(ResurgenceError::TableTooSmall {
            needed,
            max_n: table.max_n(),
        })
    } else {
        Ok(())
    }
}

/// Truncated approximation of `C_{2n-1}(τ)` (sum terms k = 1..trunc).
pub fn odd_coeff_approx(
    n: u64,
    tau: &GaussianRational,
    trunc: u64,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<HpComplex, ResurgenceError> {
    if trunc >= n {
        return Err(ResurgenceError::TruncationTooLong { n, trunc });
    }
    if trunc >= 1 {
        require_table(table, 2 * trunc as usize - 1)?;
    }
    let work = policy.working_digits();

    let mut result = HpComplex::zero(work);
    let s0 = sin_half_pi(n as i64);
    if s0 != 0 {
        // Γ(n)/(2π)^{n+1/2} · s(n) · e^{τ²/2} · erf(2^{-1/2}τ)
        let scale = &gamma_over_two_pi_pow(n, work) / &sqrt_2pi(work);
        let half = HpFloat::from_rational(&ExactRational::new(1, 2), work);
        let arg = HpComplex::from_gaussian(tau, work).scale(&half.sqrt());
        let erf_factor = erf(&arg, policy)?;
        result = erf_factor.scale(&scale).mul_i64(s0 as i64);
        result = &result * &exp_half_tau_sq(tau, work);
    }

    let mut sum = HpComplex::zero(work);
    for k in 1..=trunc {
        let s = sin_half_pi(n as i64 - k as i64);
        if s == 0 {
            continue;
        }
        let coeff = table.transition_poly(2 * k as usize - 1).eval_gaussian(tau);
        let term = HpComplex::from_gaussian(&coeff, work)
            .scale(&gamma_over_two_pi_pow(n - k, work))
            .mul_i64(s as i64);
        sum = &sum + &term;
    }
    Ok(&result - &sum.div_real(&pi(work)))
}

/// Truncated approximation of `C_{2n}(τ)` (sum terms k = 0..trunc).
pub fn even_coeff_approx(
    n: u64,
    tau: &GaussianRational,
    trunc: u64,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<HpComplex, ResurgenceError> {
    if trunc >= n {
        return Err(ResurgenceError::TruncationTooLong { n, trunc });
    }
    require_table(table, 2 * trunc as usize)?;
    let work = policy.working_digits();

    let lead = even_leading_scale(n, work);
    let mut result = exp_half_tau_sq(tau, work).scale(&lead);

    let mut sum = HpComplex::zero(work);
    for k in 0..=trunc {
        let s = sin_half_pi(n as i64 - k as i64);
        if s == 0 {
            continue;
        }
        let coeff = table.transition_poly(2 * k as usize).eval_gaussian(tau);
        let term = HpComplex::from_gaussian(&coeff, work)
            .scale(&gamma_over_two_pi_pow(n - k, work))
            .mul_i64(s as i64);
        sum = &sum + &term;
    }
    result = &result - &sum.div_real(&pi(work));
    Ok(result)
}

/// -Γ(n+1/2)/(2π)^{n+1} · sin((n+1/2)π/2), the even-family leading factor.
fn even_leading_scale(n: u64, work: u32) -> HpFloat {
    let policy = PrecisionPolicy::with_guard(work.max(10), 0);
    let gamma = gamma_half_int(2 * n + 1, &policy);
    let two_pi = pi(work).mul_i64(2);
    let sign = sin_quarter_odd_sign(n);
    let half = HpFloat::from_rational(&ExactRational::new(1, 2), work);
    let magnitude = &(&gamma / &two_pi.pow_u64(n + 1)) * &half.sqrt();
    magnitude.mul_i64(-(sign as i64))
}

/// Truncated inverse-factorial series for the Stirling coefficient `γ_n`
/// (sum terms k = 0..trunc-1; empty at trunc = 0).
pub fn stirling_coeff_approx(
    n: u64,
    trunc: u64,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<HpFloat, ResurgenceError> {
    if trunc >= n {
        return Err(ResurgenceError::TruncationTooLong { n, trunc });
    }
    if trunc >= 1 && table.stirling_len() < trunc as usize {
        return Err(ResurgenceError::TableTooSmall {
            needed: trunc as usize - 1,
            max_n: table.stirling_len().saturating_sub(1),
        });
    }
    let work = policy.working_digits();
    let mut sum = HpFloat::zero(work);
    for k in 0..trunc {
        let s = sin_half_pi(n as i64 - k as i64);
        if s == 0 {
            continue;
        }
        let term = &HpFloat::from_rational(table.stirling_coeff(k as usize), work)
            * &gamma_over_two_pi_pow(n - k, work);
        sum = &sum + &term.mul_i64(s as i64);
    }
    Ok(sum.div(&pi(work)).negate())
}

/// Truncated inverse-factorial series for `C_{2n}(0)` (sum terms k = 0..trunc),
/// with the early values supplied as the exact constant terms of the even
/// family. Mirrors [`even_coeff_approx`] at τ = 0 term by term.
pub fn center_coeff_approx(
    n: u64,
    trunc: u64,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<HpFloat, ResurgenceError> {
    if trunc >= n {
        return Err(ResurgenceError::TruncationTooLong { n, trunc });
    }
    require_table(table, 2 * trunc as usize)?;
    let work = policy.working_digits();

    let mut result = even_leading_scale(n, work);
    let mut sum = HpFloat::zero(work);
    for k in 0..=trunc {
        let s = sin_half_pi(n as i64 - k as i64);
        if s == 0 {
            continue;
        }
        let c0 = table.transition_poly(2 * k as usize).constant_term();
        let term = &HpFloat::from_rational(&c0, work) * &gamma_over_two_pi_pow(n - k, work);
        sum = &sum + &term.mul_i64(s as i64);
    }
    result = &result - &sum.div(&pi(work));
    Ok(result)
}

/// Normalized remainder of the truncated inverse-factorial behaviour of the
/// `D` family: |exact - truncation| / [Γ(n-N)/(2π)^{n-N}].
///
/// The odd branch subtracts the leading term
/// `-(1/π)·Γ(n)/(2π)^n·s(n)` plus sum terms k = 1..N-1; the even branch has
/// no leading term and sums k = 0..N-1. Boundedness of the result in n (at
/// fixed τ and N) is the property the diagnostics measure.
pub fn normalized_residual(
    parity: SeriesParity,
    n: u64,
    trunc: u64,
    tau: &GaussianRational,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<HpFloat, ResurgenceError> {
    if trunc >= n {
        return Err(ResurgenceError::TruncationTooLong { n, trunc });
    }
    let exact_idx = match parity {
        SeriesParity::Odd => 2 * n as usize - 1,
        SeriesParity::Even => 2 * n as usize,
    };
    require_table(table, exact_idx)?;
    let work = policy.working_digits();

    let exact =
        HpComplex::from_gaussian(&table.derivative_poly(exact_idx).eval_gaussian(tau), work);

    let mut truncation = HpComplex::zero(work);
    if parity == SeriesParity::Odd {
        let s0 = sin_half_pi(n as i64);
        if s0 != 0 {
            truncation = HpComplex::from_real(
                (&gamma_over_two_pi_pow(n, work) / &pi(work)).mul_i64(-(s0 as i64)),
            );
        }
    }
    let k_lo = match parity {
        SeriesParity::Odd => 1,
        SeriesParity::Even => 0,
    };
    let mut sum = HpComplex::zero(work);
    for k in k_lo..trunc {
        let s = sin_half_pi(n as i64 - k as i64);
        if s == 0 {
            continue;
        }
        let idx = match parity {
            SeriesParity::Odd => 2 * k as usize - 1,
            SeriesParity::Even => 2 * k as usize,
        };
        let coeff = table.derivative_poly(idx).eval_gaussian(tau);
        let term = HpComplex::from_gaussian(&coeff, work)
            .scale(&gamma_over_two_pi_pow(n - k, work))
            .mul_i64(s as i64);
        sum = &sum + &term;
    }
    truncation = &truncation - &sum.div_real(&pi(work));

    let remainder = &exact - &truncation;
    let scale = gamma_over_two_pi_pow(n - trunc, work);
    Ok(&remainder.abs() / &scale)
}

/// Builds the exact-vs-approximation comparison for one (parity, n, τ, N).
pub fn report(
    parity: SeriesParity,
    n: u64,
    tau: &GaussianRational,
    trunc: u64,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<ApproxReport, ResurgenceError> {
    let work = policy.working_digits();
    let exact_idx = match parity {
        SeriesParity::Odd => 2 * n as usize - 1,
        SeriesParity::Even => 2 * n as usize,
    };
    require_table(table, exact_idx)?;
    let exact =
        HpComplex::from_gaussian(&table.transition_poly(exact_idx).eval_gaussian(tau), work);
    let approx = match parity {
        SeriesParity::Odd => odd_coeff_approx(n, tau, trunc, table, policy)?,
        SeriesParity::Even => even_coeff_approx(n, tau, trunc, table, policy)?,
    };
    let abs_err = &exact - &approx;
    let rel_err = if exact.is_zero() {
        HpFloat::zero(work)
    } else {
        &abs_err.abs() / &exact.abs()
    };
    Ok(ApproxReport {
        n,
        tau: tau.clone(),
        trunc,
        parity,
        exact,
        approx,
        abs_err,
        rel_err,
    })
}
