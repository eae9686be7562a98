//! Euler numbers and Euler polynomials.
//!
//! The numbers here follow the rational convention generated by
//! `2 / (e^t + 1)`: `E_0 = 1`, `E_1 = -1/2`, `E_2 = 0`, `E_3 = 1/4`, and
//! `E_{2k} = 0` for `k >= 1`. (This is not the integer secant-number
//! sequence.) The only seed is `E_0`; everything else comes out of the
//! recurrence `sum_{k=0..=n} C(n,k) E_k + E_n = 2 [n = 0]`, i.e.
//! `2 E_n = -sum_{k<n} C(n,k) E_k` for `n >= 1`.
//!
//! Euler polynomials are the binomial expansion
//! `E_n(x) = sum_{k=0..=n} C(n,k) E_k x^{n-k}`, so `E_n(0) = E_n`, and
//! the generating function `2 e^{xt} / (e^t + 1)` can be rebuilt from
//! them; [`verify_generating_function`] does exactly that check.

use std::sync::{LazyLock, Mutex};

use num_traits::Zero;

use crate::exact::{binomial_row, BigInt, Rational};
use crate::poly::Polynomial;
use crate::series::TruncatedSeries;

/// Monotonically growing table of Euler numbers `E_0 ..= E_n`.
#[derive(Debug, Clone)]
pub struct EulerTable {
    values: Vec<Rational>,
}

impl EulerTable {
    /// A fresh table holding only the seed `E_0 = 1`.
    pub fn new() -> Self {
        EulerTable {
            values: vec![Rational::from_integer(1.into())],
        }
    }

    /// Highest index currently present.
    pub fn computed_upto(&self) -> usize {
        self.values.len() - 1
    }

    /// Extends the table through `E_n` with one incremental pass of the
    /// recurrence; indices already present are never recomputed.
    pub fn ensure(&mut self, n: usize) {
        for m in self.values.len()..=n {
            let row = binomial_row(m as u64);
            let mut acc = Rational::zero();
            for (k, e) in self.values.iter().enumerate() {
                if !e.is_zero() {
                    acc += e * Rational::from_integer(row[k].clone());
                }
            }
            self.values.push(-acc / Rational::from_integer(2.into()));
        }
    }

    /// `E_n`, extending the table if needed.
    pub fn value(&mut self, n: usize) -> Rational {
        self.ensure(n);
        self.values[n].clone()
    }

    /// The prefix `[E_0, ..., E_n]`.
    pub fn prefix(&mut self, n: usize) -> Vec<Rational> {
        self.ensure(n);
        self.values[..=n].to_vec()
    }
}

impl Default for EulerTable {
    fn default() -> Self {
        Self::new()
    }
}

// One shared table; the lock keeps concurrent callers observationally pure.
static TABLE: LazyLock<Mutex<EulerTable>> = LazyLock::new(|| Mutex::new(EulerTable::new()));

/// The Euler number `E_n`.
pub fn euler_number(n: usize) -> Rational {
    TABLE.lock().unwrap().value(n)
}

/// The list `[E_0, ..., E_n]`, computed in one incremental pass.
pub fn euler_numbers_upto(n: usize) -> Vec<Rational> {
    TABLE.lock().unwrap().prefix(n)
}

/// The Euler polynomial `E_n(x) = sum_{k=0..=n} C(n,k) E_k x^{n-k}`,
/// a monic polynomial of degree `n` with constant term `E_n`.
pub fn euler_polynomial(n: usize) -> Polynomial {
    let numbers = euler_numbers_upto(n);
    let row = binomial_row(n as u64);
    // Coefficient of x^j is C(n, n-j) * E_{n-j}.
    let coeffs = (0..=n)
        .map(|j| {
            let k = n - j;
            &numbers[k] * Rational::from_integer(row[k].clone())
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Rebuilds `F(t,x) = 2 e^{xt} / (e^t + 1)` as an exact truncated series
/// and checks `n! * [t^n] F(t,x) = E_n(x)` for every `n <= order`.
pub fn verify_generating_function(x: &Rational, order: usize) -> bool {
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());

    let numerator = TruncatedSeries::exp_scaled(x, order).scale(&two);
    let denominator = TruncatedSeries::exp_scaled(&one, order).add_constant(&one);
    let f = match denominator.reciprocal() {
        Ok(r) => numerator.mul(&r),
        Err(_) => return false, // constant term is 2, never hit
    };

    let mut n_factorial = BigInt::from(1);
    for n in 0..=order {
        if n > 0 {
            n_factorial *= n;
        }
        let from_series = f.coeff(n) * Rational::from_integer(n_factorial.clone());
        let from_polynomial = euler_polynomial(n).eval(x);
        if from_series != from_polynomial {
            return false;
        }
    }
    true
}
