//! Command-line interface: coefficient export, approximation reports,
//! expansion evaluation, residual diagnostics, and table verification.
//!
//! Exit codes: 0 success / verification pass, 1 numeric verification
//! failure or non-convergence, 2 usage errors. Output is deterministic:
//! identical flags produce byte-identical bytes.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use transigamma::formats;
use transigamma::verify::{verify_tables, VerifyError, MIN_VERIFY_DIGITS};
use transigamma_core::coeffs::{self, CoefficientTable};
use transigamma_core::exact::GaussianRational;
use transigamma_core::expansion::{self, ExpansionError};
use transigamma_core::hp::HpError;
use transigamma_core::resurgence::{
    self, normalized_residual, stirling_coeff_approx, SeriesParity,
};
use transigamma_core::{HpFloat, PrecisionPolicy};

#[derive(Parser)]
#[command(
    name = "transigamma",
    version,
    about = "Exact transitional-expansion coefficients of the incomplete gamma function and their resurgence numerics"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    C,
    P,
    D,
    Gamma,
    Bernoulli,
}

#[derive(Clone, Copy, Debug, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for SeriesParity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Odd => SeriesParity::Odd,
            ParityArg::Even => SeriesParity::Even,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Export coefficient families (C, p, D polynomials; γ, Bernoulli rationals).
    Coeffs {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, ignore_case = true)]
        which: Family,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare an exact late coefficient against its truncated
    /// inverse-factorial approximation.
    Approx {
        /// Index n of C_{2n-1} (odd parity) or C_{2n} (even parity).
        #[arg(long)]
        n: u64,
        /// Gaussian-rational point: `p/q` or `p/q,r/s`.
        #[arg(long)]
        tau: String,
        /// Truncation index (must be < n).
        #[arg(long = "N")]
        trunc: u64,
        #[arg(long, value_enum, ignore_case = true)]
        parity: ParityArg,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare an exact Stirling coefficient γ_n against its truncated
    /// inverse-factorial approximation.
    ApproxGamma {
        #[arg(long)]
        n: u64,
        /// Truncation index (must be < n).
        #[arg(long = "N")]
        trunc: u64,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the transitional expansion of Q(a, a+τ√a) against the
    /// independent reference route.
    Expand {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        tau: String,
        /// Highest coefficient index included.
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalized inverse-factorial residuals of the D family over a range
    /// of n (boundedness diagnostics).
    Residuals {
        #[arg(long, value_enum, ignore_case = true)]
        parity: ParityArg,
        #[arg(long)]
        tau: String,
        /// Truncation index (must be < n_min).
        #[arg(long = "N")]
        trunc: u64,
        #[arg(long, default_value_t = 15)]
        n_min: u64,
        #[arg(long, default_value_t = 40)]
        n_max: u64,
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every block of the published approximation tables and
    /// compare digit by digit against the golden data.
    VerifyTables {
        #[arg(long, default_value_t = 120)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CmdError::Numeric(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(CmdError::Io(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}

enum CmdError {
    Usage(String),
    Numeric(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CmdError> {
    Err(CmdError::Usage(msg.into()))
}

fn parse_tau(s: &str) -> Result<GaussianRational, CmdError> {
    s.parse().map_err(|_| {
        CmdError::Usage(format!(
            "tau must be a Gaussian rational `p/q` or `p/q,r/s` (decimal input is rejected to keep evaluation exact); got {:?}",
            s
        ))
    })
}

fn parse_policy(digits: u32) -> Result<PrecisionPolicy, CmdError> {
    if digits < 10 {
        return usage(format!("--digits must be at least 10, got {}", digits));
    }
    Ok(PrecisionPolicy::new(digits))
}

fn emit(out: Option<PathBuf>, content: &str) -> Result<(), CmdError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{}", content),
    }
    Ok(())
}

fn emit_json(out: Option<PathBuf>, value: &Value) -> Result<(), CmdError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit(out, &text)
}

fn run(cmd: Cmd) -> Result<ExitCode, CmdError> {
    match cmd {
        Cmd::Coeffs {
            max_n,
            which,
            format,
            out,
        } => cmd_coeffs(max_n, which, format, out),
        Cmd::Approx {
            n,
            tau,
            trunc,
            parity,
            digits,
            format,
            out,
        } => cmd_approx(n, &tau, trunc, parity, digits, format, out),
        Cmd::ApproxGamma {
            n,
            trunc,
            digits,
            format,
            out,
        } => cmd_approx_gamma(n, trunc, digits, format, out),
        Cmd::Expand {
            a,
            tau,
            terms,
            digits,
            format,
            out,
        } => cmd_expand(a, &tau, terms, digits, format, out),
        Cmd::Residuals {
            parity,
            tau,
            trunc,
            n_min,
            n_max,
            digits,
            format,
            out,
        } => cmd_residuals(parity, &tau, trunc, n_min, n_max, digits, format, out),
        Cmd::VerifyTables {
            digits,
            format,
            out,
        } => cmd_verify_tables(digits, format, out),
    }
}

fn cmd_coeffs(
    max_n: u64,
    which: Family,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CmdError> {
    let max_n = max_n as usize;
    match which {
        Family::C => {
            let polys = coeffs::transition_polys(max_n);
            emit_poly_family(&polys, format, out)?;
        }
        Family::P => {
            let polys = coeffs::exp_polys(max_n);
            emit_poly_family(&polys, format, out)?;
        }
        Family::D => {
            let table = CoefficientTable::build(max_n);
            let polys: Vec<_> = (0..=max_n)
                .map(|n| table.derivative_poly(n).clone())
                .collect();
            emit_poly_family(&polys, format, out)?;
        }
        Family::Gamma => {
            let values = coeffs::stirling_coeffs(max_n);
            emit_rational_family(&values, format, out)?;
        }
        Family::Bernoulli => {
            let values = coeffs::bernoulli_numbers(max_n);
            emit_rational_family(&values, format, out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_poly_family(
    polys: &[transigamma_core::ExactPoly],
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CmdError> {
    match format {
        Format::Json => emit_json(out, &formats::poly_family_json(polys)),
        Format::Csv => emit(out, &formats::poly_family_csv(polys)),
    }
}

fn emit_rational_family(
    values: &[transigamma_core::ExactRational],
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CmdError> {
    match format {
        Format::Json => emit_json(out, &formats::rational_family_json(values)),
        Format::Csv => emit(out, &formats::rational_family_csv(values)),
    }
}

fn cmd_approx(
    n: u64,
    tau: &str,
    trunc: u64,
    parity: ParityArg,
    digits: u32,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CmdError> {
    if trunc >= n {
        return usage(format!("--N must be smaller than --n ({} >= {})", trunc, n));
    }
    let tau = parse_tau(tau)?;
    let policy = parse_policy(digits)?;
    let parity: SeriesParity = parity.into();
    let table_max = match parity {
        SeriesParity::Odd => 2 * n as usize - 1,
        SeriesParity::Even => 2 * n as usize,
    };
    let table = CoefficientTable::build(table_max);
    let rep = resurgence::report(parity, n, &tau, trunc, &table, &policy)
        .map_err(|e| CmdError::Numeric(e.to_string()))?;
    match format {
        Format::Json => emit_json(out, &formats::report_json(&rep, digits))?,
        Format::Csv => emit(out, &formats::report_csv(&[rep], digits))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_approx_gamma(
    n: u64,
    trunc: u64,
    digits: u32,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CmdError> {
    if trunc >= n {
        return usage(format!("--N must be smaller than --n ({} >= {})", trunc, n));
    }
    let policy = parse_policy(digits)?;
    let work = policy.working_digits();
    let exact_values = coeffs::stirling_coeffs(n as usize);
    let exact = HpFloat::from_rational(&exact_values[n as usize], work);
    // the approximation reads γ_0..γ_{N-1}, covered by any table of size 2N
    let table = CoefficientTable::build((2 * trunc as usize).max(2));
    let approx = stirling_coeff_approx(n, trunc, &table, &policy)
        .map_err(|e| CmdError::Numeric(e.to_string()))?;
    let abs_err = &exact - &approx;
    let rel_err = if exact.is_zero() {
        HpFloat::zero(work)
    } else {
        &abs_err.abs() / &exact.abs()
    };
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "n": n,
                "N": trunc,
                "exact": exact.to_sci(digits).to_string(),
                "approx": approx.to_sci(digits).to_string(),
                "abs_err": abs_err.to_sci(20.min(digits)).to_string(),
                "rel_err": rel_err.to_sci(10).to_string(),
            }),
        )?,
        Format::Csv => {
            let mut text = String::from("n,N,exact,approx,abs_err,rel_err\n");
            text.push_str(&format!(
                "{},{},{},{},{},{}\n",
                n,
                trunc,
                exact.to_sci(digits),
                approx.to_sci(digits),
                abs_err.to_sci(20.min(digits)),
                rel_err.to_sci(10),
            ));
            emit(out, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(
    a: u64,
    tau: &str,
    terms: usize,
    digits: u32,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CmdError> {
    if a < 1 {
        return usage("--a must be a positive integer");
    }
    let tau = parse_tau(tau)?;
    let policy = parse_policy(digits)?;
    let table = CoefficientTable::build(terms.max(1));
    let result = match expansion::evaluate(a, &tau, terms, &table, &policy) {
        Ok(r) => r,
        Err(ExpansionError::Numeric(HpError::NonConvergence { iterations })) => {
            return Err(CmdError::Numeric(format!(
                "reference evaluation of Q did not converge within {} iterations",
                iterations
            )));
        }
        Err(ExpansionError::Domain(msg)) => return usage(msg),
        Err(e) => return usage(e.to_string()),
    };
    match format {
        Format::Json => emit_json(out, &formats::expansion_json(&result, digits))?,
        Format::Csv => emit(out, &formats::expansion_csv(&result, digits))?,
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_residuals(
    parity: ParityArg,
    tau: &str,
    trunc: u64,
    n_min: u64,
    n_max: u64,
    digits: u32,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CmdError> {
    if n_min > n_max {
        return usage("--n-min must not exceed --n-max");
    }
    if trunc >= n_min {
        return usage(format!(
            "--N must be smaller than --n-min ({} >= {})",
            trunc, n_min
        ));
    }
    let tau = parse_tau(tau)?;
    let policy = parse_policy(digits)?;
    let parity: SeriesParity = parity.into();
    let table = CoefficientTable::build(2 * n_max as usize);
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let r = normalized_residual(parity, n, trunc, &tau, &table, &policy)
            .map_err(|e| CmdError::Numeric(e.to_string()))?;
        rows.push((n, r));
    }
    match format {
        Format::Json => {
            let value = json!({
                "parity": parity.to_string(),
                "tau": formats::gaussian_json(&tau),
                "N": trunc,
                "rows": rows.iter().map(|(n, r)| json!({
                    "n": n,
                    "residual": r.to_sci(12).to_string(),
                })).collect::<Vec<_>>(),
            });
            emit_json(out, &value)?;
        }
        Format::Csv => {
            let mut text = String::from("n,residual\n");
            for (n, r) in &rows {
                text.push_str(&format!("{},{}\n", n, r.to_sci(12)));
            }
            emit(out, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_tables(
    digits: u32,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CmdError> {
    let outcomes = match verify_tables(digits) {
        Ok(o) => o,
        Err(VerifyError::InsufficientDigits { digits }) => {
            return usage(format!(
                "--digits must be at least {} for table verification, got {}",
                MIN_VERIFY_DIGITS, digits
            ));
        }
        Err(e) => return Err(CmdError::Numeric(e.to_string())),
    };
    let all_pass = outcomes.iter().all(|o| o.overall_pass);
    match format {
        Format::Json => {
            let value = Value::Array(outcomes.iter().map(|o| o.to_json()).collect());
            emit_json(out, &value)?;
        }
        Format::Csv => {
            let mut text = String::from("table,n,tau,N,matched_digits,pass\n");
            for o in &outcomes {
                for r in &o.rows {
                    // tau may contain a comma; keep the cell quoted
                    text.push_str(&format!(
                        "{},{},\"{}\",{},{},{}\n",
                        o.table_id, r.n, r.tau, r.trunc, r.matched_digits, r.pass
                    ));
                }
            }
            emit(out, &text)?;
        }
    }
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
