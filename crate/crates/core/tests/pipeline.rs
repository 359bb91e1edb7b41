//! Cross-module integration checks: the generation, approximation, and
//! expansion layers against each other at realistic sizes.

use std::sync::OnceLock;

use transigamma_core::coeffs::CoefficientTable;
use transigamma_core::exact::GaussianRational;
use transigamma_core::expansion;
use transigamma_core::hp::{erf, gamma_half_int, incomplete_gamma_q, HpComplex, HpFloat};
use transigamma_core::resurgence::{report, SeriesParity};
use transigamma_core::PrecisionPolicy;

fn shared_table() -> &'static CoefficientTable {
    static TABLE: OnceLock<CoefficientTable> = OnceLock::new();
    TABLE.get_or_init(|| CoefficientTable::build(200))
}

fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

#[test]
fn truncation_error_decreases_with_more_terms() {
    // asymptotic, so only near-monotonicity is claimed: each deeper
    // truncation may beat the previous one by no less than a factor 2
    let table = shared_table();
    let policy = PrecisionPolicy::new(120);
    for parity in [SeriesParity::Odd, SeriesParity::Even] {
        for n in [50u64, 100] {
            for tau_s in ["1/2", "1"] {
                let tau = g(tau_s);
                let errs: Vec<HpFloat> = [5u64, 10, 15, 20]
                    .iter()
                    .map(|&trunc| {
                        report(parity, n, &tau, trunc, table, &policy)
                            .unwrap()
                            .abs_err
                            .abs()
                    })
                    .collect();
                for w in errs.windows(2) {
                    let bound = w[0].mul_i64(2);
                    assert!(
                        w[1].cmp_value(&bound) != std::cmp::Ordering::Greater,
                        "error grew past slack at {:?} n={} tau={}",
                        parity,
                        n,
                        tau_s
                    );
                }
            }
        }
    }
}

#[test]
fn expansion_error_envelope() {
    // |value - oracle| ≤ K·a^{-(terms+1)/2} with K measured once and frozen:
    // worst observed K at terms = 6 over this grid is 1.9e-4 (τ = 1, a = 10³)
    const FROZEN_K: f64 = 1e-3;
    let table = shared_table();
    let policy = PrecisionPolicy::new(60);
    for tau_s in ["0", "1/2", "1"] {
        let tau = g(tau_s);
        for a in [1_000u64, 10_000, 100_000, 1_000_000] {
            let r = expansion::evaluate(a, &tau, 6, table, &policy).unwrap();
            let err = r.errors_by_term.last().unwrap().to_f64();
            let envelope = FROZEN_K * (a as f64).powf(-3.5);
            assert!(
                err <= envelope,
                "tau={} a={}: err {:.3e} above envelope {:.3e}",
                tau_s,
                a,
                err,
                envelope
            );
        }
    }
}

#[test]
fn operations_stable_under_ten_extra_digits() {
    // fixed regression grid: rerunning with target+10 agrees to target digits
    let target = 40u32;
    let lo = PrecisionPolicy::new(target);
    let hi = PrecisionPolicy::new(target + 10);
    let points = ["1/2", "1", "1,3/2", "2,1"];

    for s in points {
        let zl = HpComplex::from_gaussian(&g(s), lo.working_digits());
        let zh = HpComplex::from_gaussian(&g(s), hi.working_digits());
        let a = erf(&zl, &lo).unwrap();
        let b = erf(&zh, &hi).unwrap();
        assert_eq!(a.re.to_sci(target), b.re.to_sci(target), "erf re at {}", s);
        assert_eq!(a.im.to_sci(target), b.im.to_sci(target), "erf im at {}", s);
    }

    for twice in [1u64, 7, 40, 201] {
        let a = gamma_half_int(twice, &lo);
        let b = gamma_half_int(twice, &hi);
        assert_eq!(a.to_sci(target), b.to_sci(target), "gamma at {}/2", twice);
    }

    for (a_par, num, den) in [(50u64, 45u64, 1u64), (50, 55, 1), (100, 199, 2)] {
        let z_lo = HpComplex::from_real(
            &HpFloat::from_u64(num, lo.working_digits())
                / &HpFloat::from_u64(den, lo.working_digits()),
        );
        let z_hi = HpComplex::from_real(
            &HpFloat::from_u64(num, hi.working_digits())
                / &HpFloat::from_u64(den, hi.working_digits()),
        );
        let a = incomplete_gamma_q(a_par, &z_lo, &lo).unwrap();
        let b = incomplete_gamma_q(a_par, &z_hi, &hi).unwrap();
        assert_eq!(
            a.re.to_sci(target),
            b.re.to_sci(target),
            "Q({}, {}/{})",
            a_par,
            num,
            den
        );
    }

    let table = shared_table();
    let r_lo = expansion::evaluate(5_000, &g("1/2"), 5, table, &lo).unwrap();
    let r_hi = expansion::evaluate(5_000, &g("1/2"), 5, table, &hi).unwrap();
    assert_eq!(r_lo.value.re.to_sci(target), r_hi.value.re.to_sci(target));
}

#[test]
fn identities_hold_over_the_full_table_range() {
    // exact cross-validation of every entry the table holds: the D family
    // is built from γ and p, so τC_n - C_n' = D_n over the whole range
    // pins all three pipelines against the C recurrence
    let table = shared_table();
    for n in 0..=table.max_n() {
        assert!(
            table.check_derivative_identity(n),
            "derivative identity fails at {}",
            n
        );
    }
    for n in 1..=table.max_n() {
        assert!(
            table.check_transition_recurrence(n),
            "transition recurrence fails at {}",
            n
        );
    }
}

#[test]
fn stirling_series_tracks_exact_values_as_truncation_deepens() {
    let table = shared_table();
    let policy = PrecisionPolicy::new(80);
    let w = policy.working_digits();
    let gammas = transigamma_core::coeffs::stirling_coeffs(100);
    let exact = HpFloat::from_rational(&gammas[100], w);
    let mut prev_err: Option<HpFloat> = None;
    for trunc in [5u64, 10, 20, 40] {
        let approx =
            transigamma_core::resurgence::stirling_coeff_approx(100, trunc, table, &policy)
                .unwrap();
        let err = (&exact - &approx).abs();
        if let Some(p) = prev_err {
            // asymptotic improvement with factor-2 slack, as for the C family
            assert!(
                err.cmp_value(&p.mul_i64(2)) != std::cmp::Ordering::Greater,
                "γ_100 approximation worsened past slack at N = {}",
                trunc
            );
        }
        prev_err = Some(err);
    }
    // the deepest truncation sits many orders below the exact magnitude
    // (the divergent series bottoms out near N ≈ n/2, well past N = 40)
    assert!(prev_err.unwrap().ord10() < exact.ord10() - 20);
}

#[test]
fn table_is_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<CoefficientTable>();
    assert_send_sync::<HpFloat>();
    assert_send_sync::<HpComplex>();
    assert_send_sync::<GaussianRational>();

    // read-only evaluation from several threads at once
    let table = shared_table();
    let policy = PrecisionPolicy::new(40);
    let handles: Vec<_> = ["1/2", "1", "1,1", "2,1"]
        .into_iter()
        .map(|tau_s| {
            std::thread::spawn(move || {
                let tau = g(tau_s);
                let rep = report(SeriesParity::Even, 20, &tau, 6, table, &policy).unwrap();
                rep.rel_err.to_f64()
            })
        })
        .collect();
    for h in handles {
        let rel = h.join().unwrap();
        assert!(rel.is_finite() && rel >= 0.0);
    }
}

#[test]
fn published_value_spot_check() {
    // one full pipeline pass at publication precision: exact C_99(1/2)
    let table = shared_table();
    let policy = PrecisionPolicy::new(120);
    let rep = report(SeriesParity::Odd, 50, &g("1/2"), 10, table, &policy).unwrap();
    assert_eq!(
        rep.exact.re.to_sci(25).to_string(),
        "-0.1605549419108870432185698e20"
    );
    assert_eq!(
        rep.approx.re.to_sci(25).to_string(),
        "-0.1605549417678948233999888e20"
    );
    assert!(rep.exact.im.is_zero());
}
