//! Truncated power series with exact rational coefficients.
//!
//! A series of order `N` stores the `N + 1` coefficients of
//! `t^0 ..= t^N`; everything above the order is discarded. Coefficients
//! are stored already divided by factorials (coefficient `n` of
//! `exp_scaled` is `a^n / n!`, not `a^n`), which keeps multiplication a
//! plain Cauchy product. Arithmetic is closed at the order: coefficient
//! `n` of a product depends only on input coefficients `0..=n`, so
//! products of order-`N` series are again order-`N` series.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Power series truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from the coefficients of `t^0 ..= t^N`.
    ///
    /// Panics if `coeffs` is empty; an order-0 series still has one
    /// coefficient.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        TruncatedSeries { coeffs }
    }

    /// The constant series `c + O(t^{N+1})`.
    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// The series of `exp(a t)` to the given order: coefficient `n` is
    /// `a^n / n!`.
    pub fn exp_scaled(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Rational::one());
        for n in 1..=order {
            let prev = &coeffs[n - 1];
            coeffs.push(prev * a / Rational::from_integer(n.into()));
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Termwise sum, truncated to the smaller order.
    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: &Rational) -> TruncatedSeries {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    /// Multiplicative inverse `r` with `self * r = 1 + O(t^{N+1})`,
    /// by the standard recursion
    /// `r_n = -(1/s_0) * sum_{j=1..=n} s_j r_{n-j}`.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let s0_inv = Rational::one() / s0;
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(s0_inv.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[n - j];
                }
            }
            out.push(-acc * &s0_inv);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl std::ops::Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl std::ops::Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}
