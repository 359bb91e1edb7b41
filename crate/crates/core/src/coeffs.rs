//! Generation of the polynomial and rational coefficient families.
//!
//! Four interlocking families are produced here, all exactly:
//!
//! * `C_n(τ)` — degree 3n+2 polynomials of the transitional expansion of
//!   `Q(a, a+τ√a)`, generated by a coefficient-level recurrence seeded with
//!   the leading coefficient `1/(3^{n+1}(n+1)!)`.
//! * `p_n(τ)` — degree 3n polynomials from exponentiating the series
//!   `F(a,τ) = Σ (1/n - τ²/(n+2))(-τ)^n a^{-n/2}`.
//! * `γ_n` — Stirling coefficients of the scaled gamma function, obtained by
//!   formally exponentiating the classical series for `ln Γ*`.
//! * `D_n(τ)` — degree 3n+3 polynomials of the τ-derivative expansion,
//!   assembled as convolutions of the `γ` and `p` families.
//!
//! The three polynomial pipelines are independent enough that the exact
//! identities `τC_n - C_n' = D_n` and the first-order recurrence between
//! consecutive `C_n` serve as whole-pipeline consistency checks.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{scaled_linear_combination, series_exp, ExactPoly, ExactRational, ScaledPoly};

/// Immutable cache of all coefficient families up to a maximum index.
///
/// Construction is sequential (each recurrence consumes the previous index);
/// the finished table is read-only and freely shareable across threads.
#[derive(Clone)]
pub struct CoefficientTable {
    max_n: usize,
    transition: Vec<ExactPoly>,
    exp_series: Vec<ExactPoly>,
    derivative: Vec<ExactPoly>,
    stirling: Vec<ExactRational>,
    bernoulli: Vec<ExactRational>,
}

impl CoefficientTable {
    /// Builds every family up to index `max_n` (`p` up to `max_n + 1`,
    /// Stirling coefficients up to `⌈max_n/2⌉ + 1`).
    pub fn build(max_n: usize) -> Self {
        let transition = transition_polys(max_n);
        let exp_series = exp_polys(max_n + 1);
        let stirling_hi = max_n.div_ceil(2) + 1;
        let bernoulli = bernoulli_numbers(2 * (stirling_hi + 1));
        let stirling = stirling_from_bernoulli(&bernoulli, stirling_hi);
        let derivative = derivative_polys(max_n, &exp_series, &stirling);
        CoefficientTable {
            max_n,
            transition,
            exp_series,
            derivative,
            stirling,
            bernoulli,
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `C_n(τ)`, 0 ≤ n ≤ max_n.
    pub fn transition_poly(&self, n: usize) -> &ExactPoly {
        &self.transition[n]
    }

    /// `p_n(τ)`, 0 ≤ n ≤ max_n + 1.
    pub fn exp_poly(&self, n: usize) -> &ExactPoly {
        &self.exp_series[n]
    }

    /// `D_n(τ)`, 0 ≤ n ≤ max_n.
    pub fn derivative_poly(&self, n: usize) -> &ExactPoly {
        &self.derivative[n]
    }

    /// Stirling coefficient `γ_n`, 0 ≤ n ≤ ⌈max_n/2⌉ + 1.
    pub fn stirling_coeff(&self, n: usize) -> &ExactRational {
        &self.stirling[n]
    }

    pub fn stirling_len(&self) -> usize {
        self.stirling.len()
    }

    /// Bernoulli number `B_n`.
    pub fn bernoulli_number(&self, n: usize) -> &ExactRational {
        &self.bernoulli[n]
    }

    pub fn bernoulli_len(&self) -> usize {
        self.bernoulli.len()
    }

    /// Exact check of `τ·C_n(τ) - C_n'(τ) = D_n(τ)`.
    pub fn check_derivative_identity(&self, n: usize) -> bool {
        assert!(
            n <= self.max_n,
            "index {} out of range (max {})",
            n,
            self.max_n
        );
        derivative_identity_holds(&self.transition[n], &self.derivative[n])
    }

    /// Exact check of the differential recurrence tying `C_n` to `C_{n-1}`:
    ///
    /// `C_n + τC_n' - C_n'' = τ(τ²-2)C_{n-1} - (2τ²-1)C_{n-1}' + τC_{n-1}''`.
    ///
    /// An independent cross-check: generation uses the coefficient-level
    /// recurrence, not this polynomial identity.
    pub fn check_transition_recurrence(&self, n: usize) -> bool {
        assert!(
            n >= 1 && n <= self.max_n,
            "index {} out of range (1..={})",
            n,
            self.max_n
        );
        transition_recurrence_holds(&self.transition[n - 1], &self.transition[n])
    }
}

fn derivative_identity_holds(c_n: &ExactPoly, d_n: &ExactPoly) -> bool {
    &(&c_n.mul_x() - &c_n.derivative()) - d_n == ExactPoly::zero()
}

fn transition_recurrence_holds(c_prev: &ExactPoly, c_n: &ExactPoly) -> bool {
    let d1 = c_n.derivative();
    let d2 = d1.derivative();
    let lhs = &(c_n + &d1.mul_x()) - &d2;

    let e1 = c_prev.derivative();
    let e2 = e1.derivative();
    // τ(τ²-2) = τ³ - 2τ
    let cubic = &ExactPoly::monomial(3, ExactRational::one())
        + &ExactPoly::monomial(1, ExactRational::from_integer(-2));
    // 2τ² - 1
    let quad = &ExactPoly::monomial(2, ExactRational::from_integer(2))
        + &ExactPoly::constant(ExactRational::from_integer(-1));
    let rhs = &(&(&cubic * c_prev) - &(&quad * &e1)) + &e2.mul_x();

    lhs == rhs
}

/// Generates `C_0..C_max_n` by the coefficient recurrence
///
/// `c_{n,k} = (k+2)c_{n,k+2} + (k+1)c_{n-1,k+1} - (2k/(k+1))c_{n-1,k-1}
///          + (1/(k+1))c_{n-1,k-3}`,
///
/// descending k = 3n, 3n-2, … after seeding `c_{n,3n+2} = 1/(3^{n+1}(n+1)!)`
/// and `c_{n,3n+1} = 0`. Indices outside 0..=3n+2 read as zero, which
/// subsumes the explicit sentinel assignments of the naive formulation.
/// Only parity-consistent k are visited; the skipped entries are zero.
pub fn transition_polys(max_n: usize) -> Vec<ExactPoly> {
    // rows kept fraction-free: row n is coeffs/den with one shared denominator
    let mut rows: Vec<ScaledPoly> = Vec::with_capacity(max_n + 1);
    rows.push(ScaledPoly {
        den: BigUint::from(3u32),
        coeffs: vec![BigInt::from(-1), BigInt::zero(), BigInt::from(1)],
    });

    // 3^{n+1}·(n+1)! maintained incrementally
    let mut seed_den = BigUint::from(3u32);
    for n in 1..=max_n {
        seed_den *= 3 * (n as u64 + 1);
        let top = 3 * n + 2;

        // row denominator must absorb the previous row's, every 1/(k+1)
        // division in the loop, and the 1/(3^{n+1}(n+1)!) seed
        let mut divisor_lcm = BigUint::one();
        let mut k = 3 * n as i64;
        while k >= 0 {
            divisor_lcm = divisor_lcm.lcm(&BigUint::from((k + 1) as u64));
            k -= 2;
        }
        let prev = rows.last().unwrap();
        let den = (&prev.den * &divisor_lcm).lcm(&seed_den);
        // prev-row values rescale by this exact integer factor
        let prev_scale = BigInt::from_biguint(Sign::Plus, &den / &prev.den);

        let mut x = vec![BigInt::zero(); top + 1];
        x[top] = BigInt::from_biguint(Sign::Plus, &den / &seed_den);

        let at = |r: &[BigInt], k: i64| -> BigInt {
            if k < 0 || k as usize >= r.len() {
                BigInt::zero()
            } else {
                r[k as usize].clone()
            }
        };

        let mut k = 3 * n as i64;
        while k >= 0 {
            // scale/(k+1) is exact because den absorbed every k+1
            let scale_over_kp1 = &prev_scale / (k + 1);
            let mut c = at(&x, k + 2) * (k + 2);
            c += at(&prev.coeffs, k + 1) * (k + 1) * &prev_scale;
            c -= at(&prev.coeffs, k - 1) * (2 * k) * &scale_over_kp1;
            c += at(&prev.coeffs, k - 3) * &scale_over_kp1;
            x[k as usize] = c;
            k -= 2;
        }
        let mut row = ScaledPoly { den, coeffs: x };
        row.reduce_content();
        rows.push(row);
    }

    rows.iter().map(ScaledPoly::to_exact).collect()
}

/// The series terms `f_n(τ) = (1/n - τ²/(n+2))·(-τ)^n`, n = 1..=max_n.
fn log_series_terms(max_n: usize) -> Vec<ExactPoly> {
    (1..=max_n)
        .map(|n| {
            let sign: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
            let low = ExactPoly::monomial(n, ExactRational::new(sign, n as i64));
            let high = ExactPoly::monomial(n + 2, ExactRational::new(-sign, n as i64 + 2));
            &low + &high
        })
        .collect()
}

/// Generates `p_0..p_max_n`, the polynomial coefficients of `exp(F(a,τ))`.
pub fn exp_polys(max_n: usize) -> Vec<ExactPoly> {
    series_exp(&log_series_terms(max_n), max_n)
}

/// Bernoulli numbers `B_0..B_max_idx` (convention `B_1 = -1/2`), from
/// `Σ_{k=0..n} binom(n+1,k)·B_k = 0` solved for `B_n`.
pub fn bernoulli_numbers(max_idx: usize) -> Vec<ExactRational> {
    let mut b = Vec::with_capacity(max_idx + 1);
    b.push(ExactRational::one());
    for n in 1..=max_idx {
        // binom(n+1, k) built incrementally across the inner sum
        let mut binom = BigInt::from(1);
        let mut acc = ExactRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += &(bk * &ExactRational::from_bigint(binom.clone()));
            }
            // binom(n+1, k+1) = binom(n+1, k)·(n+1-k)/(k+1)
            binom = binom * (n as i64 + 1 - k as i64) / (k as i64 + 1);
        }
        b.push(&(-acc) / &ExactRational::from_integer(n as i64 + 1));
    }
    b
}

/// Stirling coefficients `γ_0..γ_max_n` of `Γ*(a) ~ Σ (-1)^n γ_n a^{-n}`.
///
/// Route: exponentiate `ln Γ*(a) ~ Σ_{k≥1} B_{2k}/(2k(2k-1)) · a^{1-2k}`
/// formally in x = 1/a and read off signed coefficients. The first five
/// outputs are pinned against the classical values in the tests.
pub fn stirling_coeffs(max_n: usize) -> Vec<ExactRational> {
    let bernoulli = bernoulli_numbers(max_n + 2);
    stirling_from_bernoulli(&bernoulli, max_n)
}

/// Same as [`stirling_coeffs`] but reusing precomputed Bernoulli numbers
/// (needs `B_0..B_{max_n+1}` at least).
pub fn stirling_from_bernoulli(bernoulli: &[ExactRational], max_n: usize) -> Vec<ExactRational> {
    // ln Γ* as a series in x = 1/a: order 2k-1 carries B_{2k}/(2k(2k-1)).
    let log_terms: Vec<ExactPoly> = (1..=max_n)
        .map(|j| {
            if j % 2 == 1 {
                let k = j.div_ceil(2);
                let denom = ExactRational::from_integer((2 * k * (2 * k - 1)) as i64);
                ExactPoly::constant(&bernoulli[2 * k] / &denom)
            } else {
                ExactPoly::zero()
            }
        })
        .collect();
    series_exp(&log_terms, max_n)
        .into_iter()
        .enumerate()
        .map(|(n, p)| {
            let g = p.constant_term();
            if n % 2 == 0 {
                g
            } else {
                -g
            }
        })
        .collect()
}

/// Generates `D_0..D_max_n` from the convolutions
///
/// `D_{2m-1} = Σ_{k=0..m} γ_{m-k} p_{2k}`,
/// `D_{2m}   = Σ_{k=0..m} γ_{m-k} p_{2k+1}`.
///
/// Requires `p` up to index `max_n + 1` and `γ` up to `⌈max_n/2⌉`.
pub fn derivative_polys(
    max_n: usize,
    exp_series: &[ExactPoly],
    stirling: &[ExactRational],
) -> Vec<ExactPoly> {
    assert!(exp_series.len() > max_n + 1, "need p_0..p_{}", max_n + 1);
    assert!(
        stirling.len() > max_n.div_ceil(2),
        "need γ_0..γ_{}",
        max_n.div_ceil(2)
    );
    let scaled: Vec<ScaledPoly> = exp_series
        .iter()
        .take(max_n + 2)
        .map(ScaledPoly::from_exact)
        .collect();
    (0..=max_n)
        .map(|n| {
            let m = n.div_ceil(2);
            let offset = if n % 2 == 1 { 0 } else { 1 };
            let terms: Vec<(BigInt, BigUint, &ScaledPoly, usize)> = (0..=m)
                .filter(|k| !stirling[m - k].is_zero())
                .map(|k| {
                    let g = &stirling[m - k];
                    (
                        g.numer().clone(),
                        g.denom().magnitude().clone(),
                        &scaled[2 * k + offset],
                        0,
                    )
                })
                .collect();
            scaled_linear_combination(&terms, 1, 3 * n + 4).to_exact()
        })
        .collect()
}
