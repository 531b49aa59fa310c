//! Small statistics helpers for Monte-Carlo estimates.

/// Wilson score interval for a binomial proportion.
///
/// Returns `(low, high)` for `k` failures out of `n` trials at normal
/// quantile `z` (1.96 for 95%). Degenerate `n = 0` yields `(0, 1)`.
pub fn wilson_ci(k: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let p = k as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Point estimate with its Wilson 95% interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateEstimate {
    pub n_samples: u64,
    pub n_failures: u64,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl RateEstimate {
    pub fn new(n_failures: u64, n_samples: u64) -> Self {
        let rate = if n_samples == 0 {
            0.0
        } else {
            n_failures as f64 / n_samples as f64
        };
        let (ci_low, ci_high) = wilson_ci(n_failures, n_samples, 1.96);
        RateEstimate { n_samples, n_failures, rate, ci_low, ci_high }
    }

    /// True when the two 95% intervals do not intersect.
    pub fn disjoint_from(&self, other: &RateEstimate) -> bool {
        self.ci_high < other.ci_low || other.ci_high < self.ci_low
    }

    pub fn overlaps(&self, other: &RateEstimate) -> bool {
        !self.disjoint_from(other)
    }
}
