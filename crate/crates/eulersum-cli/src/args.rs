//! Command-line argument definitions.

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "eulersum",
    version,
    about = "Exact Euler numbers, alternating and Bernoulli power sums, and the Euler-zeta function"
)]
pub struct Cli {
    /// Output format for all subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Significant digits for numeric display.
    #[arg(long, global = true, env = "EULERSUM_DIGITS", default_value_t = 15)]
    pub digits: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum ZetaMethod {
    /// Exact at non-positive integer s, accelerated series otherwise.
    Auto,
    Exact,
    Series,
    Quadrature,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Euler number E_n in p/q form.
    Euler {
        n: usize,
        /// Print the whole list E_0 ..= E_n instead.
        #[arg(long)]
        upto: bool,
    },

    /// Alternating power sum T_m(k) = sum_{l<k} (-1)^l l^m, closed form.
    Tsum {
        m: usize,
        k: u64,
        /// Also evaluate the expanded and brute-force forms and compare.
        #[arg(long)]
        verify: bool,
    },

    /// Power sum S_n(k) = sum_{l<k} l^n via the Bernoulli closed form.
    Ssum {
        n: usize,
        k: u64,
        /// Also evaluate the brute-force form and compare.
        #[arg(long)]
        verify: bool,
    },

    /// Evaluate the Euler-zeta function zeta_E(s, x) at real s.
    Zeta {
        #[arg(allow_negative_numbers = true)]
        s: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Auto)]
        method: ZetaMethod,
        /// Target error bound for the numeric routes.
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },

    /// Exact zeta values at 0, -1, -2 with their divergent-series displays.
    RemarkTable,

    /// Check the closed forms against brute force over a full grid.
    Verify {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        k_max: u64,
    },

    /// Time naive vs closed-form evaluation of T_m(k).
    Bench {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}
