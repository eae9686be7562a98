//! Exact scalars: arbitrary-precision rationals and binomial coefficients.
//!
//! [`Rational`] is the universal scalar of this crate. It is always held
//! in canonical form: denominator positive, numerator and denominator
//! coprime, zero stored as 0/1. The text form is `p/q` in lowest terms,
//! or just `p` when the denominator is 1, with the minus sign on the
//! numerator (`-3/4`); both `Display` and `FromStr` speak that grammar.

pub use num_bigint::BigInt;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `p/q`.
///
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient `C(n, k)`, with the convention `C(n, k) = 0`
/// for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Exact factorial `n!`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// One row of Pascal's triangle: `C(n, 0) ..= C(n, n)`, computed by the
/// multiplicative recurrence so grid sweeps avoid recomputing from scratch.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::from(1);
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}
