//! Subcommand implementations.
//!
//! Exit-code contract: 0 on success, 1 on verification or tolerance
//! failure, 2 on usage and domain errors. Clap's own parse errors also
//! exit 2 (handled in [`crate::run`]).

use eulersum_core::euler::{euler_number, euler_numbers_upto};
use eulersum_core::exact::Rational;
use eulersum_core::sums::{
    parity_residual, s_sum_closed, s_sum_naive, t_sum_closed, t_sum_expanded, t_sum_naive,
    verify_range, SumReport,
};
use eulersum_core::zeta::{
    format_decimal, remark_table, zeta_e_exact_result, zeta_e_integral, zeta_e_series, Method,
    ZetaResult,
};
use eulersum_core::Error;

use crate::args::{Cli, Command, ZetaMethod};
use crate::bench::run_bench;
use crate::output::OutputConfig;

/// Largest n accepted by the exact route; the O(n^2) rational recurrence
/// is impractical far beyond this.
const MAX_EXACT_N: f64 = 10_000.0;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn failure(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ToleranceNotMet { .. } => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<(), CliError> {
    let out = OutputConfig {
        format: cli.format,
        digits: cli.digits.max(1),
    };
    match &cli.command {
        Command::Euler { n, upto } => cmd_euler(*n, *upto, &out),
        Command::Tsum { m, k, verify } => cmd_tsum(*m, *k, *verify, &out),
        Command::Ssum { n, k, verify } => cmd_ssum(*n, *k, *verify, &out),
        Command::Zeta { s, x, method, eps } => cmd_zeta(*s, *x, *method, *eps, &out),
        Command::RemarkTable => cmd_remark_table(&out),
        Command::Verify { m_max, k_max } => cmd_verify(*m_max, *k_max, &out),
        Command::Bench { m, k, reps } => cmd_bench(*m, *k, *reps, &out),
    }
}

fn cmd_euler(n: usize, upto: bool, out: &OutputConfig) -> Result<(), CliError> {
    if upto {
        let values = euler_numbers_upto(n);
        if out.is_json() {
            let list: Vec<String> = values.iter().map(Rational::to_string).collect();
            out.emit_json(&serde_json::json!({ "n": n, "values": list }));
        } else {
            let line: Vec<String> = values.iter().map(Rational::to_string).collect();
            println!("{}", line.join(" "));
        }
    } else {
        let value = euler_number(n);
        if out.is_json() {
            out.emit_json(&serde_json::json!({ "n": n, "value": value.to_string() }));
        } else {
            println!("{value}");
        }
    }
    Ok(())
}

fn cmd_tsum(m: usize, k: u64, verify: bool, out: &OutputConfig) -> Result<(), CliError> {
    let closed = t_sum_closed(m, k);
    if !verify {
        if out.is_json() {
            out.emit_json(&serde_json::json!({ "m": m, "k": k, "value": closed.to_string() }));
        } else {
            println!("{closed}");
        }
        return Ok(());
    }

    let naive = t_sum_naive(m, k);
    let expanded = if m >= 1 {
        Some(t_sum_expanded(m, k)?)
    } else {
        None
    };
    let all_agree = closed == naive && expanded.as_ref().map_or(true, |e| e == &closed);
    let report = SumReport {
        m,
        k,
        closed,
        expanded,
        naive,
        all_agree,
    };
    if !report.all_agree {
        return Err(CliError::failure(format!(
            "mismatch at m={m} k={k}: closed={} expanded={:?} naive={}",
            report.closed, report.expanded, report.naive
        )));
    }
    if out.is_json() {
        out.emit_json(&serde_json::to_value(&report).expect("report serializes"));
    } else if m >= 1 {
        println!("{} (verified: closed=expanded=naive)", report.closed);
    } else {
        println!("{} (verified: closed=naive)", report.closed);
    }
    Ok(())
}

fn cmd_ssum(n: usize, k: u64, verify: bool, out: &OutputConfig) -> Result<(), CliError> {
    let closed = s_sum_closed(n, k);
    if !verify {
        if out.is_json() {
            out.emit_json(&serde_json::json!({ "n": n, "k": k, "value": closed.to_string() }));
        } else {
            println!("{closed}");
        }
        return Ok(());
    }

    let naive = s_sum_naive(n, k);
    if closed != naive {
        return Err(CliError::failure(format!(
            "mismatch at n={n} k={k}: closed={closed} naive={naive}"
        )));
    }
    if out.is_json() {
        out.emit_json(&serde_json::json!({
            "n": n,
            "k": k,
            "closed": closed.to_string(),
            "naive": naive.to_string(),
            "all_agree": true,
        }));
    } else {
        println!("{closed} (verified)");
    }
    Ok(())
}

fn is_non_positive_integer(s: f64) -> bool {
    s <= 0.0 && s.fract() == 0.0
}

fn exact_zeta(s: f64, x: f64) -> Result<ZetaResult, CliError> {
    if -s > MAX_EXACT_N {
        return Err(CliError::usage(format!(
            "exact route supports s down to -{MAX_EXACT_N}, got {s}"
        )));
    }
    let xr = Rational::from_float(x)
        .ok_or_else(|| CliError::usage(format!("x must be finite, got {x}")))?;
    Ok(zeta_e_exact_result(-s as u32, &xr))
}

fn cmd_zeta(
    s: f64,
    x: f64,
    method: ZetaMethod,
    eps: f64,
    out: &OutputConfig,
) -> Result<(), CliError> {
    let result = match method {
        ZetaMethod::Auto => {
            if is_non_positive_integer(s) {
                exact_zeta(s, x)?
            } else {
                zeta_e_series(s, x, eps)?
            }
        }
        ZetaMethod::Exact => {
            if !is_non_positive_integer(s) {
                return Err(CliError::usage(format!(
                    "exact method needs a non-positive integer s, got {s}"
                )));
            }
            exact_zeta(s, x)?
        }
        ZetaMethod::Series => zeta_e_series(s, x, eps)?,
        ZetaMethod::Quadrature => zeta_e_integral(s, x, eps)?,
    };

    if out.is_json() {
        out.emit_json(&result.to_json(out.digits));
        return Ok(());
    }
    match result.method {
        Method::ExactNegative => {
            println!("{}", result.exact.as_ref().expect("exact route"));
        }
        Method::SeriesAccel => {
            println!(
                "{} ± {} (series-accel, {} terms)",
                format_decimal(&result.value, out.digits),
                format_decimal(&result.error_bound, 3),
                result.terms_or_nodes
            );
        }
        Method::Quadrature => {
            println!(
                "{} ± {} (quadrature, {} nodes)",
                format_decimal(&result.value, out.digits),
                format_decimal(&result.error_bound, 3),
                result.terms_or_nodes
            );
        }
    }
    Ok(())
}

fn cmd_remark_table(out: &OutputConfig) -> Result<(), CliError> {
    let rows = remark_table();
    if out.is_json() {
        let list: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.n,
                    "exact": r.exact.to_string(),
                    "series": r.description,
                })
            })
            .collect();
        out.emit_json(&serde_json::Value::Array(list));
    } else {
        for r in &rows {
            println!("zeta_E({}) = {}    {}", -(r.n as i64), r.exact, r.description);
        }
    }
    Ok(())
}

fn cmd_verify(m_max: usize, k_max: u64, out: &OutputConfig) -> Result<(), CliError> {
    let reports = verify_range(m_max, k_max);
    let total = reports.len();
    let agree = reports.iter().filter(|r| r.all_agree).count();
    if let Some(bad) = reports.iter().find(|r| !r.all_agree) {
        return Err(CliError::failure(format!(
            "first failure at m={} k={}: closed={} expanded={:?} naive={}",
            bad.m, bad.k, bad.closed, bad.expanded, bad.naive
        )));
    }

    let mut parity_checks = 0usize;
    let mut parity_violations = 0usize;
    let mut first_violation = None;
    for m in 1..=m_max {
        for k in (2..=k_max).step_by(2) {
            parity_checks += 1;
            let residual = parity_residual(m, k).expect("even k >= 2");
            if residual != Rational::from_integer(0.into()) {
                parity_violations += 1;
                first_violation.get_or_insert((m, k, residual));
            }
        }
    }
    if let Some((m, k, residual)) = first_violation {
        return Err(CliError::failure(format!(
            "parity residual nonzero at m={m} k={k}: {residual}"
        )));
    }

    if out.is_json() {
        out.emit_json(&serde_json::json!({
            "m_max": m_max,
            "k_max": k_max,
            "total": total,
            "agree": agree,
            "parity_checks": parity_checks,
            "parity_violations": parity_violations,
            "reports": serde_json::to_value(&reports).expect("reports serialize"),
        }));
    } else {
        println!("{agree}/{total} agree, parity {parity_violations}/{parity_checks} violations");
    }
    Ok(())
}

fn cmd_bench(m: usize, k: u64, reps: usize, out: &OutputConfig) -> Result<(), CliError> {
    if m < 1 || k < 1 || reps < 1 {
        return Err(CliError::usage("bench requires m, k, reps >= 1"));
    }
    let report = run_bench(m, k, reps);
    if !report.agree {
        return Err(CliError::failure(format!(
            "naive and closed forms disagree at m={m} k={k}"
        )));
    }
    if out.is_json() {
        out.emit_json(&report.to_json());
    } else {
        println!("T_{}({}) = {}", report.m, report.k, report.value);
        println!(
            "naive:   {:.3} ms (median of {})",
            report.naive_ns as f64 / 1e6,
            report.reps
        );
        println!(
            "closed:  {:.3} ms (median of {})",
            report.closed_ns as f64 / 1e6,
            report.reps
        );
        println!("speedup: {:.1}x", report.speedup);
    }
    Ok(())
}
