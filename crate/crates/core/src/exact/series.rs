//! Formal power series utilities over polynomial coefficients.
//!
//! A series here is a truncated formal sum Σ q_n(τ) x^n represented by the
//! slice of its polynomial coefficients q_0..q_N. The exponential below is
//! what turns the logarithm-side expansion of the incomplete gamma derivative
//! into the polynomial family p_n(τ).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use super::poly::ExactPoly;
use super::scaled::{scaled_linear_combination, ScaledPoly};

/// Formal exponential of a series with no constant term.
///
/// Input: coefficients f_1..f_maxN of F = Σ_{k≥1} f_k x^k, with `f[i]`
/// holding f_{i+1}. Output: p_0..p_maxN of exp(F), computed through the
/// logarithmic-derivative convolution
///
/// n·p_n = Σ_{k=1..n} k·f_k·p_{n-k},   p_0 = 1.
///
/// All coefficient arithmetic is exact. Internally each p_n is assembled
/// fraction-free over one shared denominator and reduced once, which keeps
/// the convolution from paying a gcd per elementary operation.
pub fn series_exp(f: &[ExactPoly], max_n: usize) -> Vec<ExactPoly> {
    assert!(
        f.len() >= max_n,
        "need f_1..f_{} but got {} terms",
        max_n,
        f.len()
    );
    let mut out_len = 1usize;
    for fk in f.iter().take(max_n) {
        out_len = out_len.max(fk.coeffs().len());
    }
    let mut ps: Vec<ScaledPoly> = Vec::with_capacity(max_n + 1);
    ps.push(ScaledPoly::one());
    for n in 1..=max_n {
        let mut terms: Vec<(BigInt, BigUint, &ScaledPoly, usize)> = Vec::new();
        let mut len_n = 1usize;
        for k in 1..=n {
            let fk = &f[k - 1];
            if fk.is_zero() {
                continue;
            }
            let prev = &ps[n - k];
            for (e, c) in fk.nonzero_terms() {
                len_n = len_n.max(e + prev.coeffs.len());
                terms.push((
                    c.numer() * BigInt::from(k as u64),
                    c.denom().magnitude().clone(),
                    prev,
                    e,
                ));
            }
        }
        let next = scaled_linear_combination(&terms, n as u64, len_n);
        drop(terms);
        ps.push(next);
    }
    ps.iter().map(ScaledPoly::to_exact).collect()
}

/// Product of two truncated series, dropping orders above `max_n`.
pub fn series_mul_trunc(a: &[ExactPoly], b: &[ExactPoly], max_n: usize) -> Vec<ExactPoly> {
    let mut out = vec![ExactPoly::zero(); max_n + 1];
    for (i, ai) in a.iter().enumerate().take(max_n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(max_n + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}
