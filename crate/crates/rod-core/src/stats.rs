//! Dispersion statistics over irregularly sampled series.
//!
//! For a window of observations `x_1..x_n` (ordered by time, gaps ignored):
//!
//! ```text
//! rmssd^2 = (1/(n-1)) * sum_{i=2..n} (x_i - x_{i-1})^2
//! sigma^2 = (1/n)     * sum_{i=1..n} (x_i - mean)^2
//! rod     = rmssd / sigma
//! rho(1)  = [(1/(n-1)) * sum_{i=2..n} (x_i - mean)(x_{i-1} - mean)] / sigma^2
//! ```
//!
//! Successive differences are index-successive: the time gap between
//! observations never enters, only their order. The standard deviation uses
//! the population normalization `1/n`; the autocovariance numerator uses
//! `1/(n-1)`. With these conventions `rod^2 - 2 (1 - rho(1))` collapses
//! algebraically to `[2 sigma^2 - d_1^2 - d_n^2] / ((n-1) sigma^2)` (with
//! `d_i` the centered endpoints), which vanishes as the window grows — the
//! asymptotic link between RoD and lag-1 autocorrelation that the detector
//! exploits.
//!
//! All computations are two-pass and mean-centered; the naive
//! `sum(x^2) - sum(x)^2` form cancels catastrophically on windows with a
//! large mean and is not used.

use crate::series::IrregularSeries;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("insufficient data: need at least {required} observations, got {got}")]
    InsufficientData { required: usize, got: usize },
    #[error("degenerate series: window has zero standard deviation")]
    DegenerateSeries,
    #[error("trailing window length must be positive, got {length}")]
    InvalidWindowLength { length: f64 },
}

/// Which observations enter the statistic evaluated at observation `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowSpec {
    /// Every observation up to and including `k`.
    GrowingPrefix,
    /// Observations with time in the half-open interval `(t_k - length, t_k]`.
    TrailingTime { length: f64 },
}

impl WindowSpec {
    /// Trailing window of the given positive length.
    pub fn trailing(length: f64) -> Result<Self, StatsError> {
        if !(length > 0.0) || !length.is_finite() {
            return Err(StatsError::InvalidWindowLength { length });
        }
        Ok(WindowSpec::TrailingTime { length })
    }
}

/// A statistic plus the number of observations that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatValue {
    pub value: f64,
    pub n_obs: usize,
}

/// One entry of a windowed RoD scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RodPoint {
    /// Index of the observation the window ends at.
    pub index: usize,
    /// Time of that observation.
    pub time: f64,
    pub rod: f64,
    pub sigma: f64,
    pub rmssd: f64,
    /// Observations inside the window.
    pub n_obs: usize,
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Population variance (`1/n`), exactly zero for constant windows so that
/// degeneracy stays detectable by an equality test.
fn population_variance(values: &[f64]) -> f64 {
    let first = values[0];
    if values.iter().all(|&x| x == first) {
        return 0.0;
    }
    let mu = mean(values);
    values
        .iter()
        .map(|&x| {
            let d = x - mu;
            d * d
        })
        .sum::<f64>()
        / values.len() as f64
}

fn rmssd_of(values: &[f64]) -> f64 {
    let sum_sq: f64 = values
        .windows(2)
        .map(|pair| {
            let d = pair[1] - pair[0];
            d * d
        })
        .sum();
    (sum_sq / (values.len() - 1) as f64).sqrt()
}

/// Root mean squared of successive deviations. Needs two observations.
pub fn rmssd(series: &IrregularSeries) -> Result<StatValue, StatsError> {
    let n = series.len();
    if n < 2 {
        return Err(StatsError::InsufficientData {
            required: 2,
            got: n,
        });
    }
    Ok(StatValue {
        value: rmssd_of(series.values()),
        n_obs: n,
    })
}

/// Population standard deviation. Needs two observations.
pub fn std_dev(series: &IrregularSeries) -> Result<StatValue, StatsError> {
    let n = series.len();
    if n < 2 {
        return Err(StatsError::InsufficientData {
            required: 2,
            got: n,
        });
    }
    Ok(StatValue {
        value: population_variance(series.values()).sqrt(),
        n_obs: n,
    })
}

/// Ratio of deviations: RMSSD over standard deviation. Needs three
/// observations and a non-constant window.
pub fn rod(series: &IrregularSeries) -> Result<StatValue, StatsError> {
    let n = series.len();
    if n < 3 {
        return Err(StatsError::InsufficientData {
            required: 3,
            got: n,
        });
    }
    let variance = population_variance(series.values());
    if variance == 0.0 {
        return Err(StatsError::DegenerateSeries);
    }
    Ok(StatValue {
        value: rmssd_of(series.values()) / variance.sqrt(),
        n_obs: n,
    })
}

/// Lag-1 autocorrelation: `1/(n-1)` autocovariance over the population
/// variance, both centered on the window mean.
pub fn lag1_autocorr(series: &IrregularSeries) -> Result<StatValue, StatsError> {
    let n = series.len();
    if n < 3 {
        return Err(StatsError::InsufficientData {
            required: 3,
            got: n,
        });
    }
    let values = series.values();
    let variance = population_variance(values);
    if variance == 0.0 {
        return Err(StatsError::DegenerateSeries);
    }
    let mu = mean(values);
    let autocov: f64 = values
        .windows(2)
        .map(|pair| (pair[1] - mu) * (pair[0] - mu))
        .sum::<f64>()
        / (n - 1) as f64;
    Ok(StatValue {
        value: autocov / variance,
        n_obs: n,
    })
}

/// Evaluates RoD (plus sigma and RMSSD) at every observation whose window
/// holds at least three points with nonzero variance; other indices are
/// skipped. The scan starts at the first qualifying observation, so the
/// output may be empty.
pub fn rod_sequence(series: &IrregularSeries, window: WindowSpec) -> Vec<RodPoint> {
    let timestamps = series.timestamps();
    let values = series.values();
    let mut points = Vec::new();
    for k in 0..values.len() {
        let start = match window {
            WindowSpec::GrowingPrefix => 0,
            WindowSpec::TrailingTime { length } => {
                // First index with t > t_k - length: half-open (t_k - length, t_k].
                timestamps[..=k].partition_point(|&t| t <= timestamps[k] - length)
            }
        };
        let in_window = &values[start..=k];
        if in_window.len() < 3 {
            continue;
        }
        let variance = population_variance(in_window);
        if variance == 0.0 {
            continue;
        }
        let sigma = variance.sqrt();
        let nu = rmssd_of(in_window);
        points.push(RodPoint {
            index: k,
            time: timestamps[k],
            rod: nu / sigma,
            sigma,
            rmssd: nu,
            n_obs: in_window.len(),
        });
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::ar1_series;
    use approx::assert_relative_eq;

    fn series(values: &[f64]) -> IrregularSeries {
        let timestamps = (0..values.len()).map(|i| i as f64).collect();
        IrregularSeries::new(timestamps, values.to_vec()).unwrap()
    }

    #[test]
    fn rmssd_alternating() {
        // (1 + 1 + 1) / 3 = 1
        assert_eq!(rmssd(&series(&[0.0, 1.0, 0.0, 1.0])).unwrap().value, 1.0);
    }

    #[test]
    fn rmssd_constant_is_zero() {
        assert_eq!(rmssd(&series(&[3.7, 3.7, 3.7, 3.7])).unwrap().value, 0.0);
    }

    #[test]
    fn rmssd_single_difference() {
        assert_eq!(rmssd(&series(&[0.0, 2.0])).unwrap().value, 2.0);
    }

    #[test]
    fn rmssd_needs_two_points() {
        assert_eq!(
            rmssd(&series(&[1.0])).unwrap_err(),
            StatsError::InsufficientData {
                required: 2,
                got: 1
            }
        );
    }

    #[test]
    fn std_dev_alternating() {
        // mean 0.5, deviations +-0.5, population variance 0.25
        assert_eq!(std_dev(&series(&[0.0, 1.0, 0.0, 1.0])).unwrap().value, 0.5);
    }

    #[test]
    fn std_dev_constant_is_exactly_zero() {
        // 0.1 sums inexactly; the constant-window short circuit must still
        // report zero.
        assert_eq!(std_dev(&series(&[0.1, 0.1, 0.1])).unwrap().value, 0.0);
    }

    #[test]
    fn std_dev_symmetric_pair() {
        assert_eq!(std_dev(&series(&[-1.0, 1.0])).unwrap().value, 1.0);
    }

    #[test]
    fn rod_alternating() {
        assert_eq!(rod(&series(&[0.0, 1.0, 0.0, 1.0])).unwrap().value, 2.0);
    }

    #[test]
    fn rod_constant_window_is_degenerate() {
        assert_eq!(
            rod(&series(&[0.1, 0.1, 0.1])).unwrap_err(),
            StatsError::DegenerateSeries
        );
    }

    #[test]
    fn rod_needs_three_points() {
        assert_eq!(
            rod(&series(&[0.0, 2.0])).unwrap_err(),
            StatsError::InsufficientData {
                required: 3,
                got: 2
            }
        );
    }

    #[test]
    fn rod_ar1_matches_asymptotic_value() {
        // For AR(1) with coefficient 0.5, rod^2 -> 2 (1 - 0.5) = 1.
        let s = ar1_series(0.5, 1_000_000, 99).unwrap();
        let r = rod(&s).unwrap().value;
        assert!((r - 1.0).abs() < 0.01, "rod {r}");
    }

    #[test]
    fn lag1_alternating_is_minus_one() {
        let values: Vec<f64> = (0..10_000)
            .map(|i| if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect();
        assert_eq!(lag1_autocorr(&series(&values)).unwrap().value, -1.0);
    }

    #[test]
    fn lag1_iid_is_near_zero() {
        let s = ar1_series(0.0, 1_000_000, 7).unwrap();
        let rho = lag1_autocorr(&s).unwrap().value;
        assert!(rho.abs() < 0.01, "rho {rho}");
    }

    #[test]
    fn lag1_ar1_recovers_coefficient() {
        let s = ar1_series(0.8, 1_000_000, 11).unwrap();
        let rho = lag1_autocorr(&s).unwrap().value;
        assert!((rho - 0.8).abs() < 0.01, "rho {rho}");
    }

    #[test]
    fn lag1_degenerate_window() {
        assert_eq!(
            lag1_autocorr(&series(&[2.0, 2.0, 2.0])).unwrap_err(),
            StatsError::DegenerateSeries
        );
    }

    #[test]
    fn rod_sequence_growing_last_entry_matches_full_rod() {
        let s = series(&[0.0, 1.0, 0.0, 1.0]);
        let seq = rod_sequence(&s, WindowSpec::GrowingPrefix);
        let last = seq.last().unwrap();
        assert_eq!(last.index, 3);
        assert_eq!(last.rod, 2.0);
    }

    #[test]
    fn rod_sequence_narrow_trailing_window_is_empty() {
        let s = IrregularSeries::new(vec![0.0, 10.0, 20.0, 30.0], vec![0.0, 1.0, 2.0, 1.5])
            .unwrap();
        // Window shorter than every gap: never three in-window points.
        let seq = rod_sequence(&s, WindowSpec::trailing(5.0).unwrap());
        assert!(seq.is_empty());
    }

    #[test]
    fn rod_sequence_growing_matches_prefix_recomputation() {
        let values = [0.3, -1.2, 0.7, 2.4, -0.9];
        let s = series(&values);
        let seq = rod_sequence(&s, WindowSpec::GrowingPrefix);
        assert!(seq.len() <= 3);
        for point in &seq {
            let prefix = series(&values[..=point.index]);
            let expected = rod(&prefix).unwrap().value;
            assert_relative_eq!(point.rod, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn trailing_window_is_half_open() {
        // W = 30 at t = 30 covers (0, 30]: the observation at t = 0 is out.
        let s = IrregularSeries::new(
            vec![0.0, 10.0, 20.0, 30.0],
            vec![5.0, 0.0, 1.0, 0.5],
        )
        .unwrap();
        let seq = rod_sequence(&s, WindowSpec::trailing(30.0).unwrap());
        let last = seq.last().unwrap();
        assert_eq!(last.index, 3);
        assert_eq!(last.n_obs, 3);
        let expected = rod(&IrregularSeries::new(
            vec![10.0, 20.0, 30.0],
            vec![0.0, 1.0, 0.5],
        )
        .unwrap())
        .unwrap();
        assert_eq!(last.rod, expected.value);
    }

    #[test]
    fn rod_sequence_skips_degenerate_windows() {
        // First three observations constant: k = 2 is degenerate, the scan
        // starts at k = 3.
        let s = series(&[1.0, 1.0, 1.0, 2.0, 0.5]);
        let seq = rod_sequence(&s, WindowSpec::GrowingPrefix);
        assert_eq!(seq.first().unwrap().index, 3);
    }

    #[test]
    fn invalid_trailing_length_rejected() {
        assert!(WindowSpec::trailing(0.0).is_err());
        assert!(WindowSpec::trailing(-3.0).is_err());
        assert!(WindowSpec::trailing(f64::NAN).is_err());
    }
}
