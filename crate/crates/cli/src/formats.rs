//! Wire formats: JSON objects and CSV rows for the library types.
//!
//! All numeric output is decimal strings, never binary floats, so golden
//! files stay stable across languages and platforms. Complex values render
//! as {"re": ..., "im": ...}; in CSV a complex cell is `re` or `re±im·i`
//! with no comma, keeping cells unquoted.

use serde_json::{json, Value};

use transigamma_core::exact::{ExactPoly, ExactRational, GaussianRational};
use transigamma_core::expansion::ExpansionResult;
use transigamma_core::hp::{HpComplex, HpFloat};
use transigamma_core::resurgence::ApproxReport;
use transigamma_core::sci::SciDigits;

/// `{"re": "num/den", "im": "num/den"}`.
pub fn gaussian_json(z: &GaussianRational) -> Value {
    json!({ "re": z.re().to_string(), "im": z.im().to_string() })
}

/// `{"re": "<decimal string>", "im": "<decimal string>", "digits": int}`.
pub fn complex_json(z: &HpComplex, digits: u32) -> Value {
    json!({
        "re": z.re.to_sci(digits).to_string(),
        "im": z.im.to_sci(digits).to_string(),
        "digits": digits,
    })
}

/// Parses the output of [`complex_json`] back into an `HpComplex`.
pub fn complex_from_json(v: &Value) -> Option<HpComplex> {
    let digits = v.get("digits")?.as_u64()? as u32;
    let re: SciDigits = v.get("re")?.as_str()?.parse().ok()?;
    let im: SciDigits = v.get("im")?.as_str()?.parse().ok()?;
    Some(HpComplex::new(
        HpFloat::from_sci_digits(&re, digits),
        HpFloat::from_sci_digits(&im, digits),
    ))
}

/// One-cell CSV rendering of a complex value: `re` or `re±im·i`.
pub fn complex_cell(z: &HpComplex, digits: u32) -> String {
    let re = z.re.to_sci(digits).to_string();
    if z.im.is_zero() {
        return re;
    }
    let im = z.im.to_sci(digits).to_string();
    if im.starts_with('-') {
        format!("{}{}i", re, im)
    } else {
        format!("{}+{}i", re, im)
    }
}

/// Coefficient export record: nonzero entries in ascending power order.
pub fn poly_record(n: usize, p: &ExactPoly) -> Value {
    let coeffs: Vec<Value> = p
        .nonzero_terms()
        .map(|(k, c)| json!({ "k": k, "value": c.to_string() }))
        .collect();
    json!({ "n": n, "degree": p.degree(), "coeffs": coeffs })
}

/// Polynomial family as JSON: array of [`poly_record`]s.
pub fn poly_family_json(polys: &[ExactPoly]) -> Value {
    Value::Array(
        polys
            .iter()
            .enumerate()
            .map(|(n, p)| poly_record(n, p))
            .collect(),
    )
}

/// Polynomial family as CSV with columns n,k,value (nonzero entries only).
pub fn poly_family_csv(polys: &[ExactPoly]) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, p) in polys.iter().enumerate() {
        for (k, c) in p.nonzero_terms() {
            out.push_str(&format!("{},{},{}\n", n, k, c));
        }
    }
    out
}

/// Rational family (γ or Bernoulli) as a flat JSON array of "num/den".
pub fn rational_family_json(values: &[ExactRational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

/// Rational family as CSV: one value per row, no header.
pub fn rational_family_csv(values: &[ExactRational]) -> String {
    let mut out = String::new();
    for v in values {
        out.push_str(&format!("{}\n", v));
    }
    out
}

/// ApproxReport as JSON.
pub fn report_json(r: &ApproxReport, digits: u32) -> Value {
    json!({
        "n": r.n,
        "tau": gaussian_json(&r.tau),
        "N": r.trunc,
        "parity": r.parity.to_string(),
        "exact": complex_json(&r.exact, digits),
        "approx": complex_json(&r.approx, digits),
        "abs_err": complex_json(&r.abs_err, digits.min(20)),
        "rel_err": r.rel_err.to_sci(10).to_string(),
    })
}

/// A report grid as a JSON array.
pub fn reports_json(reports: &[ApproxReport], digits: u32) -> Value {
    Value::Array(reports.iter().map(|r| report_json(r, digits)).collect())
}

/// ApproxReport rows as CSV.
pub fn report_csv(reports: &[ApproxReport], digits: u32) -> String {
    let mut out = String::from("n,tau_re,tau_im,N,exact,approx,abs_err_re,abs_err_im,rel_err\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.tau.re(),
            r.tau.im(),
            r.trunc,
            complex_cell(&r.exact, digits),
            complex_cell(&r.approx, digits),
            r.abs_err.re.to_sci(digits.min(20)),
            r.abs_err.im.to_sci(digits.min(20)),
            r.rel_err.to_sci(10),
        ));
    }
    out
}

/// ExpansionResult as JSON with all partials and per-term errors.
pub fn expansion_json(r: &ExpansionResult, digits: u32) -> Value {
    json!({
        "a": r.a,
        "tau": gaussian_json(&r.tau),
        "terms": r.terms,
        "value": complex_json(&r.value, digits),
        "oracle": complex_json(&r.oracle, digits),
        "abs_err": (&r.value - &r.oracle).abs().to_sci(10).to_string(),
        "partials": Value::Array(
            r.partials.iter().map(|p| complex_json(p, digits)).collect()
        ),
        "errors_by_term": Value::Array(
            r.errors_by_term.iter().map(|e| Value::String(e.to_sci(10).to_string())).collect()
        ),
    })
}

/// ExpansionResult convergence table as CSV: term index, partial, error.
pub fn expansion_csv(r: &ExpansionResult, digits: u32) -> String {
    let mut out = String::from("k,partial,abs_err\n");
    for (k, (p, e)) in r.partials.iter().zip(r.errors_by_term.iter()).enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            k,
            complex_cell(p, digits),
            e.to_sci(10)
        ));
    }
    out
}
