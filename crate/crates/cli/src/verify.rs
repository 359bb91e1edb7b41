//! Verification harness: recomputes every block of the published tables and
//! compares against the golden strings digit by digit.
//!
//! Pass rules per row:
//! * the exact coefficient value must reproduce all 25 printed significant
//!   digits exactly;
//! * the approximation must match its 25 printed digits to ±1 unit in the
//!   last place;
//! * each error entry must match all of its printed digits to ±1 unit in
//!   the last place. Error digits are compared on magnitudes: the error
//!   columns are recomputed as exact − approx, and the published Table 2
//!   imaginary parts carry a sign that contradicts the published exact and
//!   approx rows, so signs are enforced through those columns instead.
//!
//! The error columns sit ~22 orders of magnitude below the values they come
//! from, which is why at least 120 working digits are required.

use std::fmt;

use serde_json::{json, Value};

use transigamma_core::coeffs::CoefficientTable;
use transigamma_core::exact::GaussianRational;
use transigamma_core::hp::HpComplex;
use transigamma_core::resurgence::{report, SeriesParity};
use transigamma_core::sci::SciDigits;
use transigamma_core::PrecisionPolicy;

use crate::golden::{published_tables, ComplexStrings, GoldenBlock};

/// Minimum precision accepted by [`verify_tables`].
pub const MIN_VERIFY_DIGITS: u32 = 120;

/// Coefficient index ceiling the verification needs (C_200 for the even
/// family at n = 100).
pub const VERIFY_TABLE_MAX_N: usize = 200;

#[derive(Debug)]
pub enum VerifyError {
    InsufficientDigits { digits: u32 },
    BadGolden(String),
    Numeric(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::InsufficientDigits { digits } => write!(
                f,
                "verification needs at least {} digits (error columns sit ~22 orders below the values); got {}",
                MIN_VERIFY_DIGITS, digits
            ),
            VerifyError::BadGolden(msg) => write!(f, "golden data problem: {}", msg),
            VerifyError::Numeric(msg) => write!(f, "{}", msg),
        }
    }
}

/// One verified table row.
#[derive(Debug, Clone)]
pub struct RowOutcome {
    pub n: u64,
    pub tau: String,
    pub trunc: u64,
    pub expected: RowStrings,
    pub computed: RowStrings,
    /// Leading digits of the exact value reproduced (min over re/im).
    pub matched_digits: usize,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct RowStrings {
    pub exact: ComplexStrings,
    pub approx: ComplexStrings,
    pub error: ComplexStrings,
}

/// Outcome for one table.
#[derive(Debug, Clone)]
pub struct VerificationOutcome {
    pub table_id: u32,
    pub rows: Vec<RowOutcome>,
    pub overall_pass: bool,
}

impl VerificationOutcome {
    pub fn to_json(&self) -> Value {
        json!({
            "table": self.table_id,
            "overall_pass": self.overall_pass,
            "rows": self.rows.iter().map(|r| json!({
                "n": r.n,
                "tau": r.tau,
                "N": r.trunc,
                "expected": strings_json(&r.expected),
                "computed": strings_json(&r.computed),
                "matched_digits": r.matched_digits,
                "pass": r.pass,
            })).collect::<Vec<_>>(),
        })
    }
}

fn strings_json(s: &RowStrings) -> Value {
    json!({
        "exact": { "re": s.exact.re, "im": s.exact.im },
        "approx": { "re": s.approx.re, "im": s.approx.im },
        "error": { "re": s.error.re, "im": s.error.im },
    })
}

/// Recomputes both tables at the given precision.
pub fn verify_tables(digits: u32) -> Result<Vec<VerificationOutcome>, VerifyError> {
    let table = CoefficientTable::build(VERIFY_TABLE_MAX_N);
    verify_tables_with(digits, &table)
}

/// Same as [`verify_tables`] but reusing a prebuilt coefficient table
/// (must reach index [`VERIFY_TABLE_MAX_N`]).
pub fn verify_tables_with(
    digits: u32,
    table: &CoefficientTable,
) -> Result<Vec<VerificationOutcome>, VerifyError> {
    if digits < MIN_VERIFY_DIGITS {
        return Err(VerifyError::InsufficientDigits { digits });
    }
    let policy = PrecisionPolicy::new(digits);
    let mut outcomes = Vec::new();
    for golden in published_tables() {
        let parity = match golden.table {
            1 => SeriesParity::Odd,
            2 => SeriesParity::Even,
            other => {
                return Err(VerifyError::BadGolden(format!(
                    "unknown table id {}",
                    other
                )))
            }
        };
        let mut rows = Vec::new();
        for block in &golden.blocks {
            rows.push(verify_block(parity, block, table, &policy)?);
        }
        let overall_pass = rows.iter().all(|r| r.pass);
        outcomes.push(VerificationOutcome {
            table_id: golden.table,
            rows,
            overall_pass,
        });
    }
    Ok(outcomes)
}

fn verify_block(
    parity: SeriesParity,
    block: &GoldenBlock,
    table: &CoefficientTable,
    policy: &PrecisionPolicy,
) -> Result<RowOutcome, VerifyError> {
    let tau: GaussianRational = block
        .tau
        .parse()
        .map_err(|_| VerifyError::BadGolden(format!("bad tau string {:?}", block.tau)))?;
    let rep = report(parity, block.n, &tau, block.trunc, table, policy)
        .map_err(|e| VerifyError::Numeric(e.to_string()))?;

    let exact_cmp = compare_complex(&rep.exact, &block.exact, 0, true)?;
    let approx_cmp = compare_complex(&rep.approx, &block.approx, 1, true)?;
    let error_cmp = compare_complex(&rep.abs_err, &block.error, 1, false)?;

    let computed = RowStrings {
        exact: exact_cmp.rendered,
        approx: approx_cmp.rendered,
        error: error_cmp.rendered,
    };
    let expected = RowStrings {
        exact: block.exact.clone(),
        approx: block.approx.clone(),
        error: block.error.clone(),
    };
    Ok(RowOutcome {
        n: block.n,
        tau: block.tau.clone(),
        trunc: block.trunc,
        expected,
        computed,
        matched_digits: exact_cmp.matched_digits,
        pass: exact_cmp.pass && approx_cmp.pass && error_cmp.pass,
    })
}

struct EntryComparison {
    rendered: ComplexStrings,
    matched_digits: usize,
    pass: bool,
}

/// Renders `value` at each expected entry's printed digit count and checks
/// the unit-in-last-place distance against `tol_ulp`. With `signed` false,
/// magnitudes are compared (see module docs).
fn compare_complex(
    value: &HpComplex,
    expected: &ComplexStrings,
    tol_ulp: u32,
    signed: bool,
) -> Result<EntryComparison, VerifyError> {
    let re = compare_part(&value.re.to_sci(200), &expected.re, tol_ulp, signed)?;
    let im = compare_part(&value.im.to_sci(200), &expected.im, tol_ulp, signed)?;
    Ok(EntryComparison {
        rendered: ComplexStrings {
            re: re.rendered,
            im: im.rendered,
        },
        matched_digits: re.matched.min(im.matched),
        pass: re.pass && im.pass,
    })
}

struct PartComparison {
    rendered: String,
    matched: usize,
    pass: bool,
}

fn compare_part(
    full: &SciDigits,
    expected_str: &str,
    tol_ulp: u32,
    signed: bool,
) -> Result<PartComparison, VerifyError> {
    let expected: SciDigits = expected_str
        .parse()
        .map_err(|_| VerifyError::BadGolden(format!("bad golden number {:?}", expected_str)))?;
    if expected.is_zero() {
        // a printed 0 must be met by an exact structural zero
        return Ok(PartComparison {
            rendered: full.to_string(),
            matched: if full.is_zero() { 25 } else { 0 },
            pass: full.is_zero(),
        });
    }
    let sig = expected.sig_digits() as u32;
    let mut rendered = rerender(full, sig);
    let mut exp_cmp = expected.clone();
    if !signed {
        rendered.neg = false;
        exp_cmp.neg = false;
    }
    let distance = rendered.ulp_distance(&exp_cmp);
    let pass = match &distance {
        Some(d) => *d <= tol_ulp.into(),
        None => false,
    };
    Ok(PartComparison {
        rendered: rerender(full, sig).to_string(),
        matched: rendered.matched_digits(&exp_cmp),
        pass,
    })
}

/// Re-round an already rendered value to fewer digits.
fn rerender(full: &SciDigits, sig: u32) -> SciDigits {
    use transigamma_core::hp::HpFloat;
    HpFloat::from_sci_digits(full, 220).to_sci(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_insufficient_digits() {
        assert!(matches!(
            verify_tables(60),
            Err(VerifyError::InsufficientDigits { digits: 60 })
        ));
    }

    #[test]
    fn perturbed_golden_digits_are_caught() {
        use transigamma_core::coeffs::CoefficientTable;

        let table = CoefficientTable::build(21);
        let policy = PrecisionPolicy::new(120);
        // a freshly computed reference row for (odd, n=11, τ=1/2, N=3)
        let tau: GaussianRational = "1/2".parse().unwrap();
        let rep = report(SeriesParity::Odd, 11, &tau, 3, &table, &policy).unwrap();
        let mk = |z: &HpComplex, sig: u32| ComplexStrings {
            re: z.re.to_sci(sig).to_string(),
            im: z.im.to_sci(sig).to_string(),
        };
        let good = GoldenBlock {
            n: 11,
            tau: "1/2".into(),
            trunc: 3,
            exact: mk(&rep.exact, 25),
            approx: mk(&rep.approx, 25),
            error: mk(&rep.abs_err, 12),
        };
        let row = verify_block(SeriesParity::Odd, &good, &table, &policy).unwrap();
        assert!(row.pass, "self-generated golden row must verify");

        // flip one digit deep inside the exact value: must be caught
        let mut bad = good.clone();
        let mut chars: Vec<char> = bad.exact.re.chars().collect();
        let pos = chars.len() - 4;
        chars[pos] = if chars[pos] == '9' { '0' } else { '9' };
        bad.exact.re = chars.into_iter().collect();
        let row = verify_block(SeriesParity::Odd, &bad, &table, &policy).unwrap();
        assert!(!row.pass, "a perturbed exact value must fail the row");
    }

    #[test]
    fn part_comparison_rules() {
        let full: SciDigits = "0.143012345678901234567890e11".parse().unwrap();
        // same leading digits, tolerance honored
        let ok = compare_part(&full, "0.1430123456789012e11", 1, true).unwrap();
        assert!(ok.pass);
        let off = compare_part(&full, "0.1430123456789014e11", 1, true).unwrap();
        assert!(!off.pass);
        // magnitude comparison ignores the stored sign
        let neg = compare_part(&full, "-0.1430123456789012e11", 1, false).unwrap();
        assert!(neg.pass);
        let neg_signed = compare_part(&full, "-0.1430123456789012e11", 1, true).unwrap();
        assert!(!neg_signed.pass);
        // zero expectation demands exact zero
        let z = compare_part(&SciDigits::zero(), "0", 0, true).unwrap();
        assert!(z.pass);
        let nz = compare_part(&full, "0", 0, true).unwrap();
        assert!(!nz.pass);
    }
}
