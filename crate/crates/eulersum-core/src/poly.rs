//! Dense polynomials over exact rationals.
//!
//! Coefficient `i` is the coefficient of `x^i`. The canonical zero
//! polynomial is the empty coefficient list, and nonzero polynomials
//! never carry trailing zero coefficients, so `degree` is
//! `len - 1` for nonzero polynomials and `None` (the "minus infinity"
//! sentinel) for zero.

use num_traits::Zero;
use std::fmt;

use crate::exact::{binomial_row, Rational};

/// Dense polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming
    /// trailing zeros to keep the representation canonical.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Low-to-high coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Returns `p(x + offset)` by binomial re-expansion of each term.
    pub fn shift(&self, offset: &Rational) -> Polynomial {
        let Some(deg) = self.degree() else {
            return Polynomial::zero();
        };
        let mut out = vec![Rational::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a * (x + offset)^i contributes a * C(i,j) * offset^(i-j) to x^j.
            let row = binomial_row(i as u64);
            let mut pow = Rational::from_integer(1.into());
            for j in (0..=i).rev() {
                out[j] += a * Rational::from_integer(row[j].clone()) * &pow;
                pow *= offset;
            }
        }
        Polynomial::new(out)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let one = abs == Rational::from_integer(1.into());
            match (i, one) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{abs}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{abs}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use num_traits::Pow;
    use proptest::prelude::*;

    fn x_minus_half() -> Polynomial {
        Polynomial::new(vec![ratio(-1, 2), rat(1)])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(x_minus_half().eval(&rat(0)), ratio(-1, 2));
        assert_eq!(x_minus_half().eval(&rat(2)), ratio(3, 2));
        assert_eq!(Polynomial::zero().eval(&ratio(7, 3)), rat(0));
    }

    #[test]
    fn canonical_zero_and_degree() {
        assert_eq!(Polynomial::new(vec![]), Polynomial::zero());
        assert_eq!(Polynomial::new(vec![rat(0), rat(0)]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(x_minus_half().degree(), Some(1));
        assert_eq!(Polynomial::new(vec![rat(5), rat(0)]).degree(), Some(0));
    }

    #[test]
    fn shift_matches_pointwise_evaluation() {
        let p = Polynomial::new(vec![rat(2), ratio(-1, 3), rat(0), rat(5)]);
        let q = p.shift(&rat(1));
        for k in -5..=5 {
            assert_eq!(q.eval(&rat(k)), p.eval(&rat(k + 1)));
        }
        let half = ratio(1, 2);
        let r = p.shift(&half);
        for k in -3..=3 {
            assert_eq!(r.eval(&rat(k)), p.eval(&(rat(k) + &half)));
        }
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(x_minus_half().to_string(), "x - 1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::new(vec![rat(0), rat(-1), rat(1)]).to_string(),
            "x^2 - x"
        );
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-50i64..=50, 1i64..=20).prop_map(|(p, q)| ratio(p, q)), 0..=max_deg + 1)
            .prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn horner_agrees_with_power_summation(p in arb_poly(30), num in -30i64..=30, den in 1i64..=9) {
            let x = ratio(num, den);
            // Independent oracle: sum c_i * x^i with explicit powers.
            let naive: Rational = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * x.clone().pow(i as i32))
                .sum();
            prop_assert_eq!(p.eval(&x), naive);
        }
    }
}
