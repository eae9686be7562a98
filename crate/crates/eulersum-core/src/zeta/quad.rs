//! Double-exponential quadrature for the integral representation
//! `zeta_E(s, x) = (2/Gamma(s)) int_0^inf t^{s-1} e^{-xt}/(1+e^{-t}) dt`.
//!
//! After normalizing `w = x t` the integrand decays like `e^{-w}`, so
//! the substitution `w = phi(u) = exp(u - e^{-u})` makes the trapezoid
//! sum converge double-exponentially on both ends: toward `u -> -inf`
//! the `w^{s-1}` endpoint singularity is flattened into
//! `exp(-s e^{-u})`, toward `u -> +inf` the `e^{-w}` factor takes over.
//! Step halving reuses all previously evaluated nodes; the claimed error
//! is the difference between the last two refinement levels plus the
//! rounding allowance.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::zeta::{
    check_eps, rounding_allowance, working_precision, Method, ZetaOptions, ZetaResult,
};

const MAX_LEVELS: usize = 14;

struct Integrand {
    prec: u32,
    sf: Float,
    xf: Float,
    nodes: usize,
    budget: usize,
}

impl Integrand {
    /// `G(u) = phi^s (1+e^{-u}) e^{-phi} / (1 + e^{-phi/x})`, the
    /// transformed integrand including the `phi'` weight; `None` once
    /// the node budget is spent.
    fn eval(&mut self, u: &Float) -> Option<Float> {
        if self.nodes >= self.budget {
            return None;
        }
        self.nodes += 1;
        let prec = self.prec;
        let eu = Float::with_val(prec, -u).exp();
        let w_log = Float::with_val(prec, u - &eu);
        let w = w_log.clone().exp();
        // phi^s * e^{-phi} in a single exponential
        let top = (Float::with_val(prec, &self.sf * &w_log) - &w).exp()
            * Float::with_val(prec, 1u32 + &eu);
        let ratio = Float::with_val(prec, &w / &self.xf);
        let bottom = 1u32 + (-ratio).exp();
        Some(top / bottom)
    }
}

/// Adds `G(first)`, `G(first + step)`, ... into `sum` until the terms
/// fall below the relative cutoff; `false` if the budget ran out.
fn sweep(g: &mut Integrand, sum: &mut Float, tiny: &Float, first: Float, step: &Float) -> bool {
    let mut u = first;
    let mut consecutive_small = 0;
    loop {
        let Some(v) = g.eval(&u) else {
            return false;
        };
        *sum += &v;
        // G > 0 everywhere, so the running sum is a valid scale.
        if v <= Float::with_val(g.prec, tiny * &*sum) {
            consecutive_small += 1;
            if consecutive_small >= 2 {
                return true;
            }
        } else {
            consecutive_small = 0;
        }
        u += step;
    }
}

pub(crate) fn evaluate(s: f64, x: f64, eps: f64, opts: &ZetaOptions) -> Result<ZetaResult> {
    if !s.is_finite() || s < opts.s_min {
        return Err(Error::Domain(format!(
            "integral route needs s >= {}, got {s}",
            opts.s_min
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "integral route needs x > 0, got {x}"
        )));
    }
    check_eps(eps)?;

    let prec = working_precision(eps, -s * x.log2(), opts);
    let sf = Float::with_val(prec, s);
    let xf = Float::with_val(prec, x);
    let a0 = Float::with_val(prec, (&xf).pow(Float::with_val(prec, -&sf)));
    let gamma = sf.clone().gamma();
    let prefactor = Float::with_val(prec, 2u32 * a0 / gamma);
    let tiny = Float::with_val(prec, Float::exp2(Float::with_val(prec, -(prec as i32) - 8)));

    let mut g = Integrand {
        prec,
        sf,
        xf,
        nodes: 0,
        budget: opts.node_budget,
    };

    let out_of_budget = |claimed: &Option<Float>| Error::ToleranceNotMet {
        requested: eps,
        achieved: claimed
            .as_ref()
            .map(Float::to_f64)
            .unwrap_or(f64::INFINITY),
    };

    // Level 0: trapezoid at h = 1/2.
    let mut h = Float::with_val(prec, 0.5f64);
    let mut claimed: Option<Float> = None;
    let mut sum = match g.eval(&Float::with_val(prec, 0)) {
        Some(v) => v,
        None => return Err(out_of_budget(&claimed)),
    };
    let pos_step = h.clone();
    let neg_step = Float::with_val(prec, -&h);
    if !sweep(&mut g, &mut sum, &tiny, h.clone(), &pos_step)
        || !sweep(&mut g, &mut sum, &tiny, neg_step.clone(), &neg_step)
    {
        return Err(out_of_budget(&claimed));
    }

    let mut previous: Option<Float> = None;
    for level in 0..=MAX_LEVELS {
        let estimate = Float::with_val(prec, &prefactor * &sum) * &h;
        if let Some(prev) = &previous {
            let diff = Float::with_val(prec, &estimate - prev).abs();
            let bound = diff + rounding_allowance(&estimate, prec);
            let converged = level >= 2 && bound.clone() * 4u32 <= eps;
            claimed = Some(bound.clone());
            if converged {
                return Ok(ZetaResult {
                    s,
                    x,
                    value: estimate,
                    error_bound: bound,
                    method: Method::Quadrature,
                    terms_or_nodes: g.nodes,
                    exact: None,
                });
            }
        }
        previous = Some(estimate);

        // Halve the step; new nodes sit at odd multiples of the new h.
        h /= 2u32;
        let stride = Float::with_val(prec, 2u32 * &h);
        let neg_stride = Float::with_val(prec, -&stride);
        if !sweep(&mut g, &mut sum, &tiny, h.clone(), &stride)
            || !sweep(
                &mut g,
                &mut sum,
                &tiny,
                Float::with_val(prec, -&h),
                &neg_stride,
            )
        {
            return Err(out_of_budget(&claimed));
        }
    }

    Err(out_of_budget(&claimed))
}
