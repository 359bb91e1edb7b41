//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criterion 9 is expected to fail: the factor-10-of-median proxy
//! contradicts the correct residual values (see `residuals_bounded_by_
//! published_envelope` for the boundedness property that does hold, and the
//! module comment on `criterion_9_prop1_residuals`).

use std::sync::OnceLock;
use std::time::Instant;

use transigamma::verify::{verify_tables_with, VERIFY_TABLE_MAX_N};
use transigamma_core::coeffs::{stirling_coeffs, CoefficientTable};
use transigamma_core::exact::{ExactRational, GaussianRational, Parity};
use transigamma_core::expansion;
use transigamma_core::hp::{factorial_exact, pi, HpFloat};
use transigamma_core::resurgence::{
    center_coeff_approx, normalized_residual, odd_coeff_approx, stirling_coeff_approx, SeriesParity,
};
use transigamma_core::PrecisionPolicy;

fn shared_table() -> &'static CoefficientTable {
    static TABLE: OnceLock<CoefficientTable> = OnceLock::new();
    TABLE.get_or_init(|| CoefficientTable::build(VERIFY_TABLE_MAX_N))
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

/// Γ(m)/(2π)^m at working precision.
fn gamma_over_2pi(m: u64, w: u32) -> HpFloat {
    &HpFloat::from_biguint(factorial_exact(m - 1), w) / &pi(w).mul_i64(2).pow_u64(m)
}

#[test]
fn criterion_1_table1_reproduction() {
    let t0 = Instant::now();
    let outcomes = verify_tables_with(120, shared_table()).unwrap();
    let elapsed = t0.elapsed();
    let table1 = outcomes.iter().find(|o| o.table_id == 1).unwrap();
    for row in &table1.rows {
        println!(
            "  table 1 block n={} tau={} N={}: matched {} digits, {}",
            row.n,
            row.tau,
            row.trunc,
            row.matched_digits,
            status(row.pass)
        );
    }
    // runtime budget: generation to n=199 plus evaluation at 120 digits
    let within_budget = elapsed.as_secs() < 300;
    let pass = table1.overall_pass && within_budget;
    println!(
        "criterion 1 (table 1 reproduction, {:.1?} for both tables): {}",
        elapsed,
        status(pass)
    );
    assert!(
        table1.overall_pass,
        "table 1 rows must match to their printed digits"
    );
    assert!(
        within_budget,
        "verification exceeded the 5 minute budget: {:?}",
        elapsed
    );
}

#[test]
fn criterion_2_table2_reproduction() {
    let outcomes = verify_tables_with(120, shared_table()).unwrap();
    let table2 = outcomes.iter().find(|o| o.table_id == 2).unwrap();
    for row in &table2.rows {
        println!(
            "  table 2 block n={} tau={} N={}: matched {} digits, {}",
            row.n,
            row.tau,
            row.trunc,
            row.matched_digits,
            status(row.pass)
        );
    }
    println!(
        "criterion 2 (table 2 reproduction): {}",
        status(table2.overall_pass)
    );
    assert!(
        table2.overall_pass,
        "table 2 rows must match to their printed digits"
    );
}

#[test]
fn criterion_3_exact_identity_suite() {
    let table = shared_table();
    let mut derivative_ok = true;
    let mut recurrence_ok = true;
    for n in 0..=100 {
        if !table.check_derivative_identity(n) {
            derivative_ok = false;
            println!("  τC_{n} - C_{n}' = D_{n} violated");
        }
    }
    for n in 1..=100 {
        if !table.check_transition_recurrence(n) {
            recurrence_ok = false;
            println!("  differential recurrence violated at n = {n}");
        }
    }
    let pass = derivative_ok && recurrence_ok;
    println!(
        "criterion 3 (exact identities, n <= 100, zero tolerance): {}",
        status(pass)
    );
    assert!(pass);
}

#[test]
fn criterion_4_stirling_validation() {
    let gammas = stirling_coeffs(200);
    let expected = ["1/1", "-1/12", "1/288", "139/51840", "-571/2488320"];
    let first_five_ok = expected
        .iter()
        .enumerate()
        .all(|(i, s)| gammas[i] == s.parse::<ExactRational>().unwrap());

    // |γ_n| ≤ Γ(n)/(2π)^n at 50 digits with a rounding-safe margin
    let policy = PrecisionPolicy::new(50);
    let w = policy.working_digits();
    let mut bound_ok = true;
    for (n, gamma_n) in gammas.iter().enumerate().skip(1) {
        let value = HpFloat::from_rational(gamma_n, w).abs();
        let bound = gamma_over_2pi(n as u64, w);
        let margin = &bound - &value;
        // rounding at working precision cannot produce a gap this large
        let safe =
            !margin.is_negative() && !margin.is_zero() && margin.ord10() > bound.ord10() - 10;
        if !safe {
            bound_ok = false;
            println!("  |γ_{}| too close to or above Γ(n)/(2π)^n", n);
        }
    }
    let pass = first_five_ok && bound_ok;
    println!(
        "criterion 4 (γ_0..γ_4 exact + |γ_n| <= Γ(n)/(2π)^n for n <= 200): {}",
        status(pass)
    );
    assert!(
        first_five_ok,
        "first five Stirling coefficients must match the classical values"
    );
    assert!(bound_ok);
}

#[test]
fn criterion_5_exp_poly_bound() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    let w = policy.working_digits();
    let grid = [
        "0", "1/2", "-1/2", "1", "-1", "2", "-2", "0,1", "1,1", "2,1", "1,3/2",
    ];
    let mut pass = true;
    for tau_s in grid {
        let tau = g(tau_s);
        // (|τ|³+1)² = |τ|⁶ + 2|τ|³ + 1 with |τ|⁶ exact and |τ|³ rounded once
        let norm_sq = tau.norm_sqr();
        let sixth = HpFloat::from_rational(&(&(&norm_sq * &norm_sq) * &norm_sq), w);
        let cube = sixth.sqrt();
        let base = &(&sixth + &cube.mul_i64(2)) + &HpFloat::one(w);
        for k in 0..=60usize {
            let value_sq =
                HpFloat::from_rational(&table.exp_poly(k).eval_gaussian(&tau).norm_sqr(), w);
            let bound = base.pow_u64(k as u64).mul_i64(16);
            let gap = &bound - &value_sq;
            // rounding-safe: demand a relative gap far above working error
            let safe = !gap.is_negative() && gap.ord10() > bound.ord10() - (w as i64 - 10);
            if !safe {
                pass = false;
                println!("  |p_{}({})| exceeds 4(|τ|³+1)^k", k, tau_s);
            }
        }
    }
    println!(
        "criterion 5 (|p_k(τ)| <= 4(|τ|³+1)^k, k <= 60, 11-point grid): {}",
        status(pass)
    );
    assert!(pass);
}

#[test]
fn criterion_6_structural_invariants() {
    let table = shared_table();
    let mut pass = true;
    let mut lead_den = num_bigint::BigInt::from(3);
    for n in 0..=100usize {
        let c = table.transition_poly(n);
        if c.degree() != 3 * n as i64 + 2 {
            pass = false;
            println!("  deg C_{} = {} (want {})", n, c.degree(), 3 * n + 2);
        }
        if c.parity() != Parity::of_index(n) {
            pass = false;
            println!("  parity of C_{} wrong", n);
        }
        if n % 2 == 1 && !c.constant_term().is_zero() {
            pass = false;
            println!("  C_{}(0) != 0", n);
        }
        if n > 0 {
            lead_den *= 3 * (n as i64 + 1);
        }
        let lead = ExactRational::from_parts(num_bigint::BigInt::from(1), lead_den.clone());
        if c.leading_coeff() != Some(&lead) {
            pass = false;
            println!("  leading coefficient of C_{} is not 1/(3^(n+1)(n+1)!)", n);
        }
    }
    println!(
        "criterion 6 (deg, parity, odd-at-zero, leading coefficient, n <= 100): {}",
        status(pass)
    );
    assert!(pass);
}

#[test]
fn criterion_7_resurgence_self_consistency() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    let w = policy.working_digits();

    // γ_40 against the N = 8 truncation; first omitted nonzero term is the
    // smallest k ≥ 8 with sin((40-k)π/2) ≠ 0
    let gammas = stirling_coeffs(40);
    let exact_g = HpFloat::from_rational(&gammas[40], w);
    let approx_g = stirling_coeff_approx(40, 8, table, &policy).unwrap();
    let k = (8u64..).find(|k| (40 - k) % 2 == 1).unwrap();
    let omitted_g = &(&HpFloat::from_rational(&gammas[k as usize], w).abs()
        * &gamma_over_2pi(40 - k, w))
        / &pi(w);
    let err_g = (&exact_g - &approx_g).abs();
    let gamma_ok = err_g.cmp_value(&omitted_g.mul_i64(2)) != std::cmp::Ordering::Greater;
    println!(
        "  γ_40, N=8: |err| = {}, 2|first omitted| = {}",
        err_g.to_sci(4),
        omitted_g.mul_i64(2).to_sci(4)
    );

    // C_60(0) against the n = 30, N = 6 truncation (sum k = 0..6; first
    // omitted nonzero k ≥ 7 with sin((30-k)π/2) ≠ 0)
    let exact_c = HpFloat::from_rational(&table.transition_poly(60).constant_term(), w);
    let approx_c = center_coeff_approx(30, 6, table, &policy).unwrap();
    let k = (7u64..).find(|k| (30 - k) % 2 == 1).unwrap();
    let c2k = HpFloat::from_rational(&table.transition_poly(2 * k as usize).constant_term(), w);
    let omitted_c = &(&c2k.abs() * &gamma_over_2pi(30 - k, w)) / &pi(w);
    let err_c = (&exact_c - &approx_c).abs();
    let center_ok = err_c.cmp_value(&omitted_c.mul_i64(2)) != std::cmp::Ordering::Greater;
    println!(
        "  C_60(0), N=6: |err| = {}, 2|first omitted| = {}",
        err_c.to_sci(4),
        omitted_c.mul_i64(2).to_sci(4)
    );

    let pass = gamma_ok && center_ok;
    println!(
        "criterion 7 (resurgence self-consistency vs exact pipeline): {}",
        status(pass)
    );
    assert!(pass);
}

#[test]
fn criterion_8_expansion_decay() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    let mut pass = true;
    for tau_s in ["0", "1/2"] {
        let tau = g(tau_s);
        let lo = expansion::evaluate(10_000, &tau, 6, table, &policy).unwrap();
        let hi = expansion::evaluate(1_000_000, &tau, 6, table, &policy).unwrap();
        let exps = expansion::decay_exponents(&lo, &hi).unwrap();
        for k in [0usize, 2, 4] {
            let want = (k as f64 + 1.0) / 2.0;
            let got = exps[k];
            if (got - want).abs() > 0.2 {
                pass = false;
            }
            println!(
                "  τ={}, k={}: exponent {:.3} (want {:.1} ± 0.2)",
                tau_s, k, got, want
            );
        }
        if tau_s == "1/2" {
            let err = lo.errors_by_term.last().unwrap();
            let small = err.is_zero() || err.ord10() < -12;
            if !small {
                pass = false;
            }
            println!(
                "  τ=1/2, a=10^4, terms=6: |value - oracle| = {} (want < 1e-12)",
                err.to_sci(3)
            );
        }
    }
    println!(
        "criterion 8 (expansion decay exponents and accuracy): {}",
        status(pass)
    );
    assert!(pass);
}

/// Expected FAIL. The two-cluster structure forced by the exact sine cycle
/// (alternate terms drop to the next inverse-factorial order) spreads the
/// residuals far beyond a factor 10 around their median, and at τ = 1 the
/// n = 15..40 window still contains the decaying startup transient of the
/// exp(2π(|τ|³+1)²) envelope. The residual values themselves are correct —
/// the dominant cluster converges to the independently computed
/// (1/π)|D_9(τ)| — and bounded, which
/// `residuals_bounded_by_published_envelope` asserts.
#[test]
fn criterion_9_prop1_residuals() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    let mut pass = true;
    for parity in [SeriesParity::Odd, SeriesParity::Even] {
        for tau_s in ["0", "1/2", "1"] {
            let tau = g(tau_s);
            let values: Vec<HpFloat> = (15..=40)
                .map(|n| normalized_residual(parity, n, 5, &tau, table, &policy).unwrap())
                .collect();
            if values.iter().all(|v| v.is_zero()) {
                println!(
                    "  {} τ={}: identically zero (vacuous pass)",
                    parity_str(parity),
                    tau_s
                );
                continue;
            }
            let mut sorted: Vec<f64> = values.iter().map(|v| v.to_f64()).collect();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let median = (sorted[12] + sorted[13]) / 2.0;
            let min = sorted[0];
            let max = *sorted.last().unwrap();
            let ok = max <= 10.0 * median && min >= median / 10.0;
            if !ok {
                pass = false;
            }
            println!(
                "  {} τ={}: min {:.2e}, median {:.2e}, max {:.2e} -> {}",
                parity_str(parity),
                tau_s,
                min,
                median,
                max,
                status(ok)
            );
        }
    }
    println!(
        "criterion 9 (residuals within factor 10 of median): {}",
        status(pass)
    );
    assert!(
        pass,
        "expected failure: the factor-10-of-median proxy contradicts the correct \
         two-cluster residual structure (see test doc comment)"
    );
}

fn parity_str(p: SeriesParity) -> &'static str {
    match p {
        SeriesParity::Odd => "odd",
        SeriesParity::Even => "even",
    }
}

/// The boundedness property criterion 9 was a proxy for: every normalized
/// residual stays below the published envelope
/// (|τ|³+1)^(2N or 2N+1)·exp(2π(|τ|³+1)²) with implied constant 1.
#[test]
fn residuals_bounded_by_published_envelope() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    for parity in [SeriesParity::Odd, SeriesParity::Even] {
        for tau_s in ["0", "1/2", "1"] {
            let tau = g(tau_s);
            let cube = HpFloat::from_rational(&tau.norm_sqr(), 60)
                .to_f64()
                .powf(1.5);
            let envelope_pow = match parity {
                SeriesParity::Odd => 10.0,  // 2N
                SeriesParity::Even => 11.0, // 2N+1
            };
            let envelope = (cube + 1.0).powf(envelope_pow)
                * (2.0 * std::f64::consts::PI * (cube + 1.0) * (cube + 1.0)).exp();
            for n in 15..=40 {
                let r = normalized_residual(parity, n, 5, &tau, table, &policy).unwrap();
                assert!(
                    r.to_f64() <= envelope,
                    "residual at parity {:?}, τ = {}, n = {} exceeds the envelope",
                    parity,
                    tau_s,
                    n
                );
            }
        }
    }
}

#[test]
fn criterion_10_leading_term_absence() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    let mut pass = true;
    for n in (2..=100u64).step_by(2) {
        // with an empty sum the approximation is exactly the leading term
        let lead = odd_coeff_approx(n, &g("1,3/2"), 0, table, &policy).unwrap();
        if !lead.is_zero() {
            pass = false;
            println!("  leading term at even n = {} is not exactly zero", n);
        }
    }
    println!(
        "criterion 10 (odd-family leading term exactly zero at even n): {}",
        status(pass)
    );
    assert!(pass);
}
