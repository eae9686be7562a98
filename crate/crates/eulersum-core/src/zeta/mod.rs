//! The Euler-zeta function `zeta_E(s, x) = 2 sum_{n>=0} (-1)^n / (n+x)^s`.
//!
//! Three evaluation routes that cross-check each other:
//!
//! - **exact-negative**: at non-positive integer `s = -n` the analytic
//!   continuation is the Euler polynomial value `E_n(x)`, computed
//!   exactly as a rational ([`zeta_e_exact`]).
//! - **series-accel**: for real `s > 0`, the alternating series summed
//!   with the Chebyshev-coefficient acceleration scheme, which certifies
//!   a geometric error bound (`~5.83^-n` per term) because the terms
//!   `1/(n+x)^s` are a Hausdorff moment sequence ([`zeta_e_series`]).
//! - **quadrature**: the integral representation
//!   `zeta_E(s, x) = (2/Gamma(s)) int_0^inf t^{s-1} e^{-xt}/(1+e^{-t}) dt`
//!   evaluated by double-exponential quadrature ([`zeta_e_integral`]).
//!
//! Numeric paths work in `rug::Float` (MPFR) with at least 128 bits
//! (~38 decimal digits) internally; reported error bounds add a
//! 10-ulp rounding allowance on top of the truncation bound. `s` is
//! restricted to real values: the series diverges for negative
//! non-integer `s` and the integral route is only validated down to a
//! configurable `s_min`, so values at negative integers come exclusively
//! from the exact route.

mod accel;
mod quad;

use rug::Float;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::euler::euler_polynomial;
use crate::exact::Rational;

/// Budgets and floors for the numeric evaluation routes.
#[derive(Debug, Clone)]
pub struct ZetaOptions {
    /// Maximum series terms the accelerator may spend.
    pub term_budget: usize,
    /// Maximum integrand evaluations for quadrature.
    pub node_budget: usize,
    /// Smallest `s` accepted by the integral route; the `t^{s-1}`
    /// endpoint singularity worsens as `s` approaches 0.
    pub s_min: f64,
    /// Floor on the internal working precision in bits.
    pub min_prec_bits: u32,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        ZetaOptions {
            term_budget: 10_000,
            node_budget: 200_000,
            s_min: 0.1,
            min_prec_bits: 128,
        }
    }
}

/// How a [`ZetaResult`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactNegative,
    SeriesAccel,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactNegative => "exact-negative",
            Method::SeriesAccel => "series-accel",
            Method::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A numeric zeta evaluation together with its claimed error bound.
#[derive(Debug, Clone)]
pub struct ZetaResult {
    pub s: f64,
    pub x: f64,
    /// High-precision value of `zeta_E(s, x)`.
    pub value: Float,
    /// Claimed bound on `|value - true value|`; zero for the exact route.
    pub error_bound: Float,
    pub method: Method,
    /// Series terms or quadrature nodes spent (0 for the exact route).
    pub terms_or_nodes: usize,
    /// The exact rational value, present only for [`Method::ExactNegative`].
    pub exact: Option<Rational>,
}

impl ZetaResult {
    /// Serializes to the wire shape
    /// `{"s":…, "x":…, "value":"…", "error_bound":"…", "method":"…",
    /// "terms_or_nodes":…}` plus an `"exact":"p/q"` field for the exact
    /// route, with `value` rendered to `digits` significant digits.
    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "s": self.s,
            "x": self.x,
            "value": format_decimal(&self.value, digits),
            "error_bound": format_decimal(&self.error_bound, 3),
            "method": self.method.as_str(),
            "terms_or_nodes": self.terms_or_nodes,
        });
        if let Some(r) = &self.exact {
            obj["exact"] = serde_json::Value::String(r.to_string());
        }
        obj
    }
}

/// `zeta_E(-n, x) = E_n(x)`: the analytic continuation at non-positive
/// integers, computed exactly.
pub fn zeta_e_exact(n: u32, x: &Rational) -> Rational {
    euler_polynomial(n as usize).eval(x)
}

/// [`zeta_e_exact`] wrapped as a [`ZetaResult`] (for uniform output).
pub fn zeta_e_exact_result(n: u32, x: &Rational) -> ZetaResult {
    use num_traits::ToPrimitive;
    let exact = zeta_e_exact(n, x);
    let prec = 192;
    let value = Float::with_val(
        prec,
        rug::Rational::from_str(&exact.to_string()).expect("canonical p/q form"),
    );
    ZetaResult {
        s: -(n as f64),
        x: x.to_f64().unwrap_or(f64::NAN),
        value,
        error_bound: Float::with_val(prec, 0),
        method: Method::ExactNegative,
        terms_or_nodes: 0,
        exact: Some(exact),
    }
}

/// One row of the divergent-series value table: the exact value of
/// `zeta_E(-n)` next to the series display it regularizes.
#[derive(Debug, Clone, PartialEq)]
pub struct RemarkRow {
    pub n: u32,
    pub exact: Rational,
    pub description: &'static str,
}

/// The three-row table of `zeta_E(0)`, `zeta_E(-1)`, `zeta_E(-2)`
/// computed via the exact route at `x = 1`.
pub fn remark_table() -> Vec<RemarkRow> {
    let one = Rational::from_integer(1.into());
    let descriptions = [
        "2(1-1+1-1+...)",
        "2(1-2+3-4+...)",
        "2(1^2-2^2+3^2-4^2+...)",
    ];
    (0..3u32)
        .map(|n| RemarkRow {
            n,
            exact: zeta_e_exact(n, &one),
            description: descriptions[n as usize],
        })
        .collect()
}

/// `zeta_E(s, x)` for real `s > 0` by accelerated alternating-series
/// summation, with `error_bound <= eps` on success.
pub fn zeta_e_series(s: f64, x: f64, eps: f64) -> Result<ZetaResult> {
    zeta_e_series_with(s, x, eps, &ZetaOptions::default())
}

/// [`zeta_e_series`] with explicit budgets.
pub fn zeta_e_series_with(s: f64, x: f64, eps: f64, opts: &ZetaOptions) -> Result<ZetaResult> {
    accel::evaluate(s, x, eps, opts)
}

/// `zeta_E(s, x)` via double-exponential quadrature of the integral
/// representation, divided by `Gamma(s)`.
pub fn zeta_e_integral(s: f64, x: f64, eps: f64) -> Result<ZetaResult> {
    zeta_e_integral_with(s, x, eps, &ZetaOptions::default())
}

/// [`zeta_e_integral`] with explicit budgets.
pub fn zeta_e_integral_with(s: f64, x: f64, eps: f64, opts: &ZetaOptions) -> Result<ZetaResult> {
    quad::evaluate(s, x, eps, opts)
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    Ok(())
}

/// Working precision in bits for a computation whose result scale is
/// about `2^scale_log2` and whose target accuracy is `eps`.
pub(crate) fn working_precision(eps: f64, scale_log2: f64, opts: &ZetaOptions) -> u32 {
    let needed = (scale_log2.max(0.0) - eps.log2()).ceil();
    let bits = if needed.is_finite() && needed > 0.0 {
        needed as u32 + 64
    } else {
        64
    };
    bits.max(opts.min_prec_bits)
}

/// Ten units in the last place of `value` at precision `prec`, used as
/// the rounding allowance added to truncation bounds.
pub(crate) fn rounding_allowance(value: &Float, prec: u32) -> Float {
    let ulp_scale = Float::with_val(prec, Float::exp2(Float::with_val(prec, 1 - prec as i32)));
    Float::with_val(prec, value.clone().abs() * ulp_scale * 10u32)
}

/// Renders a float with `digits` significant digits, plain decimal when
/// the exponent is moderate and scientific (`d.dddde±x`) otherwise.
pub fn format_decimal(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    if !f.is_finite() {
        return f.to_f64().to_string();
    }
    let digits = digits.max(1);
    let raw = f.to_string_radix(10, Some(digits));
    let (mantissa, exp) = match raw.split_once(['e', 'E']) {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (raw, 0),
    };
    let (sign, unsigned) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa.as_str()),
    };
    let point = unsigned.find('.').unwrap_or(unsigned.len());
    let digit_str: String = unsigned.chars().filter(|c| c.is_ascii_digit()).collect();
    // value = 0.digit_str * 10^dec_exp, then normalize away leading zeros
    let mut dec_exp = point as i64 + exp;
    let trimmed = digit_str.trim_start_matches('0');
    dec_exp -= (digit_str.len() - trimmed.len()) as i64;
    let trimmed = trimmed.trim_end_matches('0');
    if trimmed.is_empty() {
        return "0".to_string();
    }

    if -3 < dec_exp && dec_exp <= digits as i64 + 2 {
        if dec_exp <= 0 {
            format!("{sign}0.{}{}", "0".repeat(-dec_exp as usize), trimmed)
        } else if (dec_exp as usize) < trimmed.len() {
            let (int_part, frac_part) = trimmed.split_at(dec_exp as usize);
            format!("{sign}{int_part}.{frac_part}")
        } else {
            format!("{sign}{}{}", trimmed, "0".repeat(dec_exp as usize - trimmed.len()))
        }
    } else {
        let (head, tail) = trimmed.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{}", dec_exp - 1)
        } else {
            format!("{sign}{head}.{tail}e{}", dec_exp - 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn exact_values_at_one() {
        assert_eq!(zeta_e_exact(0, &rat(1)), rat(1));
        assert_eq!(zeta_e_exact(1, &rat(1)), ratio(1, 2));
        assert_eq!(zeta_e_exact(2, &rat(1)), rat(0));
    }

    #[test]
    fn exact_matches_polynomial_evaluation() {
        for n in 0..=3u32 {
            for x in [ratio(1, 4), ratio(1, 2), ratio(3, 4), rat(1)] {
                assert_eq!(
                    zeta_e_exact(n, &x),
                    euler_polynomial(n as usize).eval(&x),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn remark_rows() {
        let rows = remark_table();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].exact, rat(1));
        assert_eq!(rows[0].description, "2(1-1+1-1+...)");
        assert_eq!(rows[1].exact, ratio(1, 2));
        assert_eq!(rows[1].description, "2(1-2+3-4+...)");
        assert_eq!(rows[2].exact, rat(0));
        assert_eq!(rows[2].description, "2(1^2-2^2+3^2-4^2+...)");
    }

    #[test]
    fn exact_result_wrapper() {
        let r = zeta_e_exact_result(1, &rat(1));
        assert_eq!(r.method, Method::ExactNegative);
        assert_eq!(r.exact, Some(ratio(1, 2)));
        assert_eq!(r.error_bound, 0);
        assert_eq!(r.s, -1.0);
        let json = r.to_json(15);
        assert_eq!(json["exact"], "1/2");
        assert_eq!(json["value"], "0.5");
        assert_eq!(json["method"], "exact-negative");
    }

    #[test]
    fn decimal_formatting() {
        let f = |v: f64, d: usize| format_decimal(&Float::with_val(96, v), d);
        assert_eq!(f(0.0, 10), "0");
        assert_eq!(f(0.5, 8), "0.5");
        assert_eq!(f(-0.5, 8), "-0.5");
        assert_eq!(f(3.25, 15), "3.25");
        assert_eq!(f(1234.5, 15), "1234.5");
        assert_eq!(f(0.001, 6), "0.001");
        assert_eq!(f(1.0e-7, 4), "1e-7");
        assert_eq!(f(-2.5e-9, 4), "-2.5e-9");
        assert_eq!(f(1.0e12, 4), "1e12");
        let two_ln_two = Float::with_val(160, 2).ln() * 2u32;
        assert_eq!(format_decimal(&two_ln_two, 15), "1.38629436111989");
        assert_eq!(format_decimal(&two_ln_two, 16), "1.386294361119891");
    }
}
