//! Timing harness comparing naive and closed-form alternating sums.
//!
//! Both sides run the same exact big-integer arithmetic; the point of
//! the comparison is algorithmic (O(k) power sums against an O(m^2)
//! rational formula), so no floating-point shortcut is taken anywhere.

use std::time::Instant;

use eulersum_core::exact::Rational;
use eulersum_core::sums::{t_sum_closed, t_sum_naive};

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub m: usize,
    pub k: u64,
    pub reps: usize,
    /// Median wall time of the naive summation, nanoseconds.
    pub naive_ns: u64,
    /// Median wall time of the closed form, nanoseconds.
    pub closed_ns: u64,
    pub speedup: f64,
    pub value: Rational,
    /// Whether both methods produced identical values in every rep.
    pub agree: bool,
}

impl BenchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "k": self.k,
            "reps": self.reps,
            "naive_ns": self.naive_ns,
            "closed_ns": self.closed_ns,
            "speedup": self.speedup,
            "value": self.value.to_string(),
            "agree": self.agree,
        })
    }
}

fn median(samples: &mut [u64]) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

/// Times `reps` evaluations of each method and verifies the values
/// agree before reporting.
pub fn run_bench(m: usize, k: u64, reps: usize) -> BenchReport {
    assert!(reps >= 1);
    let mut naive_times = Vec::with_capacity(reps);
    let mut closed_times = Vec::with_capacity(reps);
    let mut agree = true;
    let mut value = Rational::from_integer(0.into());

    for _ in 0..reps {
        let start = Instant::now();
        let naive = t_sum_naive(m, k);
        naive_times.push(start.elapsed().as_nanos() as u64);

        let start = Instant::now();
        let closed = t_sum_closed(m, k);
        closed_times.push(start.elapsed().as_nanos() as u64);

        agree &= naive == closed;
        value = closed;
    }

    let naive_ns = median(&mut naive_times);
    let closed_ns = median(&mut closed_times);
    let speedup = naive_ns as f64 / closed_ns.max(1) as f64;

    BenchReport {
        m,
        k,
        reps,
        naive_ns,
        closed_ns,
        speedup,
        value,
        agree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulersum_core::exact::rat;

    #[test]
    fn trivial_bench_agrees() {
        let r = run_bench(1, 1, 1);
        assert!(r.agree);
        assert_eq!(r.value, rat(0));
        assert!(r.speedup > 0.0);
    }

    #[test]
    fn median_of_samples() {
        assert_eq!(median(&mut [5]), 5);
        assert_eq!(median(&mut [4, 2, 9]), 4);
        assert_eq!(median(&mut [4, 2, 8, 6]), 5);
    }

    #[test]
    fn json_fields_present() {
        let r = run_bench(2, 10, 2);
        let json = r.to_json();
        for key in ["m", "k", "reps", "naive_ns", "closed_ns", "speedup", "value", "agree"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}
