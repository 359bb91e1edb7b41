//! Evaluation of the transitional expansion of Q(a, a+τ√a) against the
//! independent reference route, with per-term error tracking.
//!
//! The expansion reads
//!
//! `Q(a, a+τ√a) ≈ (1/2)·erfc(2^{-1/2}τ)
//!               + [e^{-τ²/2}/√(2πa)]·Σ_{n=0..terms} C_n(τ)·a^{-n/2}`
//!
//! and is asymptotic in a, not convergent: accuracy claims are always tied
//! to a measured term count. Polynomials are evaluated exactly at the
//! Gaussian-rational τ before any rounding, so the only inexactness is the
//! truncation plus one rounding per arithmetic step at working precision.

use alloc::vec::Vec;
use core::fmt;

use crate::coeffs::CoefficientTable;
use crate::exact::{ExactRational, GaussianRational};
use crate::hp::{
    erfc, exp_complex, incomplete_gamma_q, sqrt_2pi, HpComplex, HpError, HpFloat, PrecisionPolicy,
};

/// Result of one expansion evaluation at fixed (a, τ).
///
/// `partials[k]` is the value after k added coefficient terms, so index 0 is
/// the erfc head alone and index terms+1 is the full `value`;
/// `errors_by_term[k] = |partials[k] - oracle|`.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub a: u64,
    pub tau: GaussianRational,
    /// Highest coefficient index included in `value` (terms+1 polynomials).
    pub terms: usize,
    pub value: HpComplex,
    pub oracle: HpComplex,
    pub partials: Vec<HpComplex>,
    pub errors_by_term: Vec<HpFloat>,
}

/// Errors from expansion evaluation and decay-rate extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    Domain(&'static str),
    TableTooSmall {
        needed: usize,
        max_n: usize,
    },
    Numeric(HpError),
    /// The two results must differ in `a` for a decay exponent to exist.
    DegenerateInputs,
    /// The two results must share τ and the term count.
    MismatchedResults,
    /// An error entry vanished at working precision; its exponent is undefined.
    UnderflowedError {
        index: usize,
    },
}

impl fmt::Display for ExpansionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionError::Domain(msg) => write!(f, "domain error: {}", msg),
            ExpansionError::TableTooSmall { needed, max_n } => {
                write!(
                    f,
                    "coefficient table reaches {} but index {} is needed",
                    max_n, needed
                )
            }
            ExpansionError::Numeric(e) => write!(f, "{}", e),
            ExpansionError::DegenerateInputs => {
                write!(f, "decay exponent needs two distinct values of a")
            }
            ExpansionError::MismatchedResults => {
                write!(f, "decay exponent needs results sharing τ and term count")
            }
            ExpansionError::UnderflowedError { index } => {
                write!(f, "error {} underflowed working precision", index)
            }
        }
    }
}

impl From<HpError> for ExpansionError {
    fn from(e: HpError) -> Self {
        ExpansionError::Numeric(e)
    }
}

/// Evaluates the expansion with coefficient terms 0..=terms and fills in the
/// reference value of Q(a, a+τ√a).
///
/// Requires a ≥ 1, terms ≤ table.max_n() and |τ| < √a.
pub fn evaluate(
    a: u64,
    tau: &GaussianRational,
    terms: usize,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<ExpansionResult, ExpansionError> {
    if a < 1 {
        return Err(ExpansionError::Domain("a must be a positive integer"));
    }
    if terms > table.max_n() {
        return Err(ExpansionError::TableTooSmall {
            needed: terms,
            max_n: table.max_n(),
        });
    }
    // standing assumption |τ| < √a, checked exactly on |τ|²
    let a_rat = ExactRational::from_integer(a as i64);
    if tau.norm_sqr() >= a_rat {
        return Err(ExpansionError::Domain("requires |tau| < sqrt(a)"));
    }

    let work = policy.working_digits();
    let sqrt_a = HpFloat::from_u64(a, work).sqrt();
    let tau_hp = HpComplex::from_gaussian(tau, work);
    let z = &HpComplex::from_u64(a, work) + &tau_hp.scale(&sqrt_a);
    let oracle = incomplete_gamma_q(a, &z, policy)?;

    // (1/2)·erfc(2^{-1/2}·τ)
    let half = HpFloat::from_rational(&ExactRational::new(1, 2), work);
    let head = erfc(&tau_hp.scale(&half.sqrt()), policy)?.scale(&half);

    // e^{-τ²/2} / √(2πa)
    let neg_half_sq = &tau.square() * &ExactRational::new(-1, 2);
    let prefactor = exp_complex(&HpComplex::from_gaussian(&neg_half_sq, work))
        .div_real(&(&sqrt_2pi(work) * &sqrt_a));

    let inv_sqrt_a = sqrt_a.recip();
    let mut partials = Vec::with_capacity(terms + 2);
    let mut acc = head;
    partials.push(acc.clone());
    let mut scale = prefactor;
    for n in 0..=terms {
        let coeff = table.transition_poly(n).eval_gaussian(tau);
        let term = HpComplex::from_gaussian(&coeff, work);
        acc = &acc + &(&term * &scale);
        partials.push(acc.clone());
        scale = scale.scale(&inv_sqrt_a);
    }

    let errors_by_term = partials.iter().map(|p| (p - &oracle).abs()).collect();
    Ok(ExpansionResult {
        a,
        tau: tau.clone(),
        terms,
        value: partials.last().unwrap().clone(),
        oracle,
        partials,
        errors_by_term,
    })
}

/// Empirical decay exponents from two evaluations at different a.
///
/// Entry k is `log(err_{a1,k}/err_{a2,k}) / log(a2/a1)`, expected near
/// (k+1)/2 when the k-th omitted term dominates the error.
pub fn decay_exponents(
    first: &ExpansionResult,
    second: &ExpansionResult,
) -> Result<Vec<f64>, ExpansionError> {
    if first.tau != second.tau || first.terms != second.terms {
        return Err(ExpansionError::MismatchedResults);
    }
    if first.a == second.a {
        return Err(ExpansionError::DegenerateInputs);
    }
    let denom = libm::log(second.a as f64) - libm::log(first.a as f64);
    first
        .errors_by_term
        .iter()
        .zip(second.errors_by_term.iter())
        .enumerate()
        .map(|(k, (e1, e2))| {
            if e1.is_zero() || e2.is_zero() {
                return Err(ExpansionError::UnderflowedError { index: k });
            }
            Ok((e1.ln_abs_f64() - e2.ln_abs_f64()) / denom)
        })
        .collect()
}
