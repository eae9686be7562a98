//! Cross-module identity checks at moderate grid sizes. The full
//! acceptance-scale grids live in the CLI crate's acceptance suite.

use std::str::FromStr;

use eulersum_core::euler::{euler_number, euler_polynomial, verify_generating_function};
use eulersum_core::exact::{rat, ratio, Rational};
use eulersum_core::sums::{
    parity_residual, s_sum_closed, s_sum_naive, t_sum_closed, t_sum_naive, verify_range,
};
use num_traits::One;

#[test]
fn theorem_equivalence_on_moderate_grid() {
    let reports = verify_range(20, 60);
    assert_eq!(reports.len(), 21 * 61);
    for r in &reports {
        assert!(r.all_agree, "mismatch at m={} k={}", r.m, r.k);
        assert_eq!(r.expanded.is_none(), r.m == 0);
    }
}

#[test]
fn telescoping_identity_direct_form() {
    // E_m + (-1)^{k+1} E_m(k) = 2 T_m(k), written out without the
    // packaged closed-form helper.
    for m in 1..=10usize {
        let p = euler_polynomial(m);
        let e_m = euler_number(m);
        for k in 0..=20u64 {
            let at_k = p.eval(&Rational::from_integer(k.into()));
            let signed = if k % 2 == 0 { -at_k } else { at_k };
            let lhs = &e_m + signed;
            let rhs = t_sum_naive(m, k) * rat(2);
            assert_eq!(lhs, rhs, "m={m} k={k}");
        }
    }
}

#[test]
fn parity_residual_vanishes_on_moderate_grid() {
    for m in 1..=15usize {
        for k in (2..=40u64).step_by(2) {
            assert_eq!(parity_residual(m, k).unwrap(), rat(0), "m={m} k={k}");
        }
    }
}

#[test]
fn faulhaber_on_moderate_grid() {
    for n in 0..=20usize {
        for k in 0..=60u64 {
            assert_eq!(s_sum_closed(n, k), s_sum_naive(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn alternating_sums_are_integers() {
    for m in 1..=40usize {
        for k in [0u64, 1, 2, 3, 50, 200] {
            let t = t_sum_closed(m, k);
            assert!(t.denom().is_one(), "T_{m}({k}) = {t}");
        }
    }
}

#[test]
fn generating_function_spot_checks() {
    for x in [rat(0), rat(1), rat(-1), ratio(1, 2), ratio(5, 7)] {
        assert!(verify_generating_function(&x, 12), "x = {x}");
    }
}

#[test]
fn report_json_round_trips_rationals() {
    let reports = verify_range(5, 10);
    let json = serde_json::to_string(&reports).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    for (r, cell) in reports.iter().zip(parsed.as_array().unwrap()) {
        let closed = Rational::from_str(cell["closed"].as_str().unwrap()).unwrap();
        assert_eq!(closed, r.closed);
        match &r.expanded {
            Some(e) => {
                let back = Rational::from_str(cell["expanded"].as_str().unwrap()).unwrap();
                assert_eq!(&back, e);
                // Round trip through the p/q grammar is the identity.
                assert_eq!(back.to_string(), cell["expanded"].as_str().unwrap());
            }
            None => assert!(cell["expanded"].is_null()),
        }
        let naive = Rational::from_str(cell["naive"].as_str().unwrap()).unwrap();
        assert_eq!(naive, r.naive);
    }
}
