//! Exact computation of Euler numbers and polynomials, closed-form
//! alternating sums of powers, Bernoulli power sums, and the Euler-zeta
//! function.
//!
//! Everything upstream of the `zeta` module is exact: scalars are
//! arbitrary-precision rationals in lowest terms, and every closed form
//! carries a brute-force oracle next to it so identities can be checked
//! with exact equality rather than tolerances. The `zeta` module adds
//! two independent numeric evaluation routes (accelerated alternating
//! series and double-exponential quadrature) on top of the exact values
//! at non-positive integers.
//!
//! Module map:
//! - [`exact`]: rationals, big integers, binomial coefficients
//! - [`poly`]: dense polynomials over rationals
//! - [`series`]: truncated power series with exact coefficients
//! - [`euler`]: Euler numbers `E_n` and polynomials `E_n(x)`
//! - [`sums`]: alternating sums `T_m(k)`, Bernoulli sums `S_n(k)`, oracles
//! - [`zeta`]: the Euler-zeta function `zeta_E(s, x)`

pub mod error;
pub mod exact;
pub mod poly;
pub mod series;

pub mod euler;
pub mod sums;
pub mod zeta;

pub use error::{Error, Result};
pub use exact::{binomial, factorial, rat, ratio, BigInt, Rational};
pub use poly::Polynomial;
pub use series::TruncatedSeries;
