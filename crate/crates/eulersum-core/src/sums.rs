//! Alternating power sums, classical Bernoulli power sums, and the
//! brute-force oracles they are checked against.
//!
//! `T_m(k) = sum_{l=0}^{k-1} (-1)^l l^m` has two closed forms built from
//! Euler numbers and polynomials, and `S_n(k) = sum_{l=0}^{k-1} l^n` has
//! the classical Bernoulli closed form. Every closed form here is paired
//! with direct summation so callers can demand exact agreement; the
//! convention `0^0 = 1` applies to both oracles, which is what makes the
//! exponent-zero cases line up with the closed forms.
//!
//! Bernoulli numbers use the `B_1 = -1/2` convention, seeded by `B_0 = 1`
//! and the recurrence `sum_{k=0..=n} C(n+1,k) B_k = 0` for `n >= 1`;
//! under that convention the closed form for `S_n(k)` is exact with the
//! lower summation range `l = 0 .. k-1`.

use std::sync::{LazyLock, Mutex};

use num_traits::{One, Pow, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::euler::{euler_number, euler_numbers_upto, euler_polynomial};
use crate::exact::{binomial_row, BigInt, Rational};
use crate::poly::Polynomial;

/// Monotonically growing table of Bernoulli numbers `B_0 ..= B_n`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![Rational::one()],
        }
    }

    pub fn computed_upto(&self) -> usize {
        self.values.len() - 1
    }

    /// Extends the table through `B_n`:
    /// `B_n = -(1/(n+1)) * sum_{k<n} C(n+1,k) B_k`.
    pub fn ensure(&mut self, n: usize) {
        for m in self.values.len()..=n {
            let row = binomial_row(m as u64 + 1);
            let mut acc = Rational::zero();
            for (k, b) in self.values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(row[k].clone());
                }
            }
            self.values
                .push(-acc / Rational::from_integer((m as u64 + 1).into()));
        }
    }

    pub fn value(&mut self, n: usize) -> Rational {
        self.ensure(n);
        self.values[n].clone()
    }

    pub fn prefix(&mut self, n: usize) -> Vec<Rational> {
        self.ensure(n);
        self.values[..=n].to_vec()
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

static TABLE: LazyLock<Mutex<BernoulliTable>> = LazyLock::new(|| Mutex::new(BernoulliTable::new()));

/// The Bernoulli number `B_n` (`B_1 = -1/2` convention).
pub fn bernoulli_number(n: usize) -> Rational {
    TABLE.lock().unwrap().value(n)
}

fn bernoulli_prefix(n: usize) -> Vec<Rational> {
    TABLE.lock().unwrap().prefix(n)
}

fn int_pow(base: u64, exp: usize) -> BigInt {
    // 0^0 = 1 falls out of the empty product.
    BigInt::from(base).pow(exp as u32)
}

fn sign(k: u64) -> i32 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `T_m(k) = sum_{l=0}^{k-1} (-1)^l l^m` by direct summation (`0^0 = 1`).
pub fn t_sum_naive(m: usize, k: u64) -> Rational {
    let mut acc = BigInt::zero();
    for l in 0..k {
        let term = int_pow(l, m);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Rational::from_integer(acc)
}

fn t_sum_closed_with(poly: &Polynomial, e_m: &Rational, k: u64) -> Rational {
    let at_k = poly.eval(&Rational::from_integer(k.into()));
    let signed = if sign(k + 1) > 0 { at_k } else { -at_k };
    (signed + e_m) / Rational::from_integer(2.into())
}

/// `T_m(k)` via the Euler-polynomial closed form
/// `( (-1)^{k+1} E_m(k) + E_m ) / 2`.
pub fn t_sum_closed(m: usize, k: u64) -> Rational {
    t_sum_closed_with(&euler_polynomial(m), &euler_number(m), k)
}

fn t_sum_expanded_with(numbers: &[Rational], m: usize, k: u64) -> Rational {
    debug_assert!(m >= 1 && numbers.len() > m);
    let row = binomial_row(m as u64);
    let mut acc = Rational::zero();
    // sum_{l=0}^{m-1} C(m,l) E_l k^{m-l}
    for (l, e) in numbers.iter().take(m).enumerate() {
        if !e.is_zero() {
            acc += e
                * Rational::from_integer(row[l].clone())
                * Rational::from_integer(int_pow(k, m - l));
        }
    }
    let two = Rational::from_integer(2.into());
    if sign(k + 1) > 0 {
        // odd k: tail contributes E_m
        acc / &two + &numbers[m]
    } else {
        // even k: tail vanishes
        -acc / &two
    }
}

/// `T_m(k)` via the expanded binomial form
/// `(-1)^{k+1}/2 * sum_{l=0}^{m-1} C(m,l) E_l k^{m-l} + (E_m/2)(1 + (-1)^{k+1})`.
///
/// Requires `m >= 1`; the inner sum is empty for `m = 0`.
pub fn t_sum_expanded(m: usize, k: u64) -> Result<Rational> {
    if m == 0 {
        return Err(Error::Domain("t_sum_expanded requires m >= 1".into()));
    }
    Ok(t_sum_expanded_with(&euler_numbers_upto(m), m, k))
}

/// For even `k`, the residual `T_m(k) + (1/2) sum_{l=0}^{m-1} C(m,l) E_l k^{m-l}`.
///
/// The parity identity says this is exactly zero; returning the residual
/// lets callers assert that with exact equality.
pub fn parity_residual(m: usize, k: u64) -> Result<Rational> {
    if m == 0 {
        return Err(Error::Domain("parity_residual requires m >= 1".into()));
    }
    if k == 0 || k % 2 != 0 {
        return Err(Error::Domain(format!(
            "parity_residual requires even k >= 2, got {k}"
        )));
    }
    let numbers = euler_numbers_upto(m);
    let row = binomial_row(m as u64);
    let mut half_sum = Rational::zero();
    for (l, e) in numbers.iter().take(m).enumerate() {
        if !e.is_zero() {
            half_sum += e
                * Rational::from_integer(row[l].clone())
                * Rational::from_integer(int_pow(k, m - l));
        }
    }
    half_sum /= Rational::from_integer(2.into());
    Ok(t_sum_closed(m, k) + half_sum)
}

/// `S_n(k) = sum_{l=0}^{k-1} l^n` by direct summation (`0^0 = 1`).
pub fn s_sum_naive(n: usize, k: u64) -> Rational {
    let mut acc = BigInt::zero();
    for l in 0..k {
        acc += int_pow(l, n);
    }
    Rational::from_integer(acc)
}

/// `S_n(k)` via the Bernoulli closed form
/// `(1/(n+1)) * sum_{i=0}^{n} C(n+1,i) B_i k^{n+1-i}`.
pub fn s_sum_closed(n: usize, k: u64) -> Rational {
    let bernoulli = bernoulli_prefix(n);
    let row = binomial_row(n as u64 + 1);
    let mut acc = Rational::zero();
    for (i, b) in bernoulli.iter().enumerate() {
        if !b.is_zero() {
            acc += b
                * Rational::from_integer(row[i].clone())
                * Rational::from_integer(int_pow(k, n + 1 - i));
        }
    }
    acc / Rational::from_integer((n as u64 + 1).into())
}

/// One verification record: a closed-form value next to its oracle.
///
/// Serializes as `{"m":…, "k":…, "closed":"p/q", "expanded":"p/q"|null,
/// "naive":"p/q", "all_agree":…}` with rationals in the `p/q` text form.
#[derive(Debug, Clone, PartialEq)]
pub struct SumReport {
    pub m: usize,
    pub k: u64,
    pub closed: Rational,
    /// `None` for `m = 0`, where the expanded form is undefined.
    pub expanded: Option<Rational>,
    pub naive: Rational,
    pub all_agree: bool,
}

impl Serialize for SumReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SumReport", 6)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("closed", &self.closed.to_string())?;
        match &self.expanded {
            Some(e) => st.serialize_field("expanded", &e.to_string())?,
            None => st.serialize_field("expanded", &Option::<String>::None)?,
        }
        st.serialize_field("naive", &self.naive.to_string())?;
        st.serialize_field("all_agree", &self.all_agree)?;
        st.end()
    }
}

/// Evaluates the closed, expanded (`m >= 1`), and naive forms over the
/// whole grid `0 ..= m_max` x `0 ..= k_max`, one report per cell,
/// ordered by `(m, k)`.
pub fn verify_range(m_max: usize, k_max: u64) -> Vec<SumReport> {
    let numbers = euler_numbers_upto(m_max);
    let mut reports = Vec::with_capacity((m_max + 1) * (k_max as usize + 1));
    for m in 0..=m_max {
        let poly = euler_polynomial(m);
        for k in 0..=k_max {
            let closed = t_sum_closed_with(&poly, &numbers[m], k);
            let expanded = (m >= 1).then(|| t_sum_expanded_with(&numbers, m, k));
            let naive = t_sum_naive(m, k);
            let all_agree =
                closed == naive && expanded.as_ref().map_or(true, |e| e == &closed);
            reports.push(SumReport {
                m,
                k,
                closed,
                expanded,
                naive,
                all_agree,
            });
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use num_traits::One;

    #[test]
    fn t_naive_examples() {
        assert_eq!(t_sum_naive(1, 2), rat(-1));
        assert_eq!(t_sum_naive(0, 5), rat(1));
        assert_eq!(t_sum_naive(3, 0), rat(0));
    }

    #[test]
    fn t_closed_examples() {
        assert_eq!(t_sum_closed(1, 2), rat(-1));
        assert_eq!(t_sum_closed(2, 3), rat(3));
        for m in 0..=12 {
            assert_eq!(t_sum_closed(m, 0), rat(0), "T_{m}(0)");
        }
    }

    #[test]
    fn t_expanded_examples() {
        assert_eq!(t_sum_expanded(1, 2).unwrap(), rat(-1));
        assert_eq!(t_sum_expanded(2, 4).unwrap(), rat(-6));
        assert!(matches!(t_sum_expanded(0, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_residual(3, 2).unwrap(), rat(0));
        assert_eq!(parity_residual(5, 10).unwrap(), rat(0));
        assert!(matches!(parity_residual(2, 3), Err(Error::Domain(_))));
        assert!(matches!(parity_residual(2, 0), Err(Error::Domain(_))));
        assert!(matches!(parity_residual(0, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn bernoulli_values() {
        // First rows of the recurrence, checked against an independent
        // run of sum C(n+1,k) B_k = 0.
        let expected = [
            "1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0",
            "-691/2730",
        ];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(bernoulli_number(n).to_string(), *want, "B_{n}");
        }
    }

    #[test]
    fn bernoulli_recurrence_invariant() {
        for n in 1..=30usize {
            let row = binomial_row(n as u64 + 1);
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += bernoulli_number(k) * Rational::from_integer(row[k].clone());
            }
            assert_eq!(acc, rat(0), "sum C({},k) B_k", n + 1);
        }
    }

    #[test]
    fn s_sum_examples() {
        assert_eq!(s_sum_closed(1, 3), rat(3));
        assert_eq!(s_sum_closed(0, 7), rat(7));
        assert_eq!(s_sum_closed(2, 4), rat(14));
        assert_eq!(s_sum_naive(2, 4), rat(14));
        assert_eq!(s_sum_naive(5, 0), rat(0));
        assert_eq!(s_sum_naive(0, 1), rat(1));
    }

    #[test]
    fn closed_forms_are_integers() {
        for m in 1..=15usize {
            for k in 0..=25u64 {
                let t = t_sum_closed(m, k);
                assert!(t.denom().is_one(), "T_{m}({k}) = {t} not an integer");
            }
        }
    }

    #[test]
    fn small_grid_reports() {
        let reports = verify_range(2, 2);
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(|r| r.all_agree));
        // Ordered by (m, k).
        let order: Vec<_> = reports.iter().map(|r| (r.m, r.k)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);

        let single = verify_range(0, 0);
        assert_eq!(single.len(), 1);
        assert!(single[0].all_agree);
        assert_eq!(single[0].expanded, None);
    }

    #[test]
    fn report_json_shape() {
        let reports = verify_range(1, 1);
        let json = serde_json::to_value(&reports).unwrap();
        assert_eq!(json[0]["m"], 0);
        assert_eq!(json[0]["expanded"], serde_json::Value::Null);
        assert_eq!(json[3]["m"], 1);
        assert_eq!(json[3]["k"], 1);
        assert_eq!(json[3]["closed"], "0");
        assert_eq!(json[3]["expanded"], "0");
        assert_eq!(json[3]["naive"], "0");
        assert_eq!(json[3]["all_agree"], true);
    }

    #[test]
    fn expanded_agrees_with_closed_on_sample() {
        for m in 1..=10usize {
            for k in 0..=20u64 {
                assert_eq!(
                    t_sum_expanded(m, k).unwrap(),
                    t_sum_closed(m, k),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn faulhaber_small_values() {
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        for n in 0..=10usize {
            for k in 0..=30u64 {
                assert_eq!(s_sum_closed(n, k), s_sum_naive(n, k), "n={n} k={k}");
            }
        }
    }
}
