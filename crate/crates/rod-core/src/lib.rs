//! Early-warning detection of Hopf bifurcations with the ratio of deviations.
//!
//! The ratio of deviations (RoD) divides the root mean squared of successive
//! differences of a time-series window by the window's standard deviation.
//! For weakly stationary series the squared ratio converges to
//! `2 (1 - rho(1))`, with `rho(1)` the lag-1 autocorrelation, so an increase
//! in RoD tracks a loss of autocorrelation — the signature of an equilibrium
//! losing stability through a Hopf bifurcation. The statistic needs no
//! uniform sampling grid and works on short, sparse series.
//!
//! The crate provides:
//! - [`stats`]: RMSSD, standard deviation, RoD, and lag-1 autocorrelation
//!   over irregular series, with growing-prefix and trailing-window scans;
//! - [`detector`]: the single-increase detection rule, tandem conditions,
//!   and the all-variables multivariate aggregation;
//! - [`sde`]: Euler-Maruyama integration of the Hopf normal form and a 3-D
//!   Van der Pol variant with a linearly ramped bifurcation parameter;
//! - [`sampler`]: sparse irregular observation of dense trajectories;
//! - [`experiments`]: seeded Monte Carlo harnesses for true/false-positive
//!   sweeps and ROC/AUC classifier evaluation;
//! - [`io`]: CSV/JSON interchange for trajectories, samples, and reports.
//!
//! Everything stochastic is driven by explicit `u64` seeds (see [`rng`]);
//! repeated runs are bit-identical regardless of thread count.

pub mod detector;
pub mod experiments;
pub mod io;
pub mod rng;
pub mod sampler;
pub mod sde;
pub mod series;
pub mod stats;

pub use detector::{
    detect_channels, detect_multivariate, detect_univariate, DetectionEvent, JointDetection,
    Quorum, TandemRule,
};
pub use experiments::{
    prop1_check, roc, run_highfreq_experiment, run_short_series_sweep, ClassifierCell,
    ClassifierReport, ExperimentError, Prop1Row, RateRow, RateTable, RocCurve, RocPoint,
    SweepConfig,
};
pub use sampler::{sample, SamplePlan, SamplerError};
pub use sde::{
    drift_hopf, drift_vdp3, equilibrium_vdp3, simulate, RampSchedule, SdeError, SdeModel,
    SdeSystem, Trajectory,
};
pub use series::{IrregularSeries, MultivariateSample, SeriesError};
pub use stats::{
    lag1_autocorr, rmssd, rod, rod_sequence, std_dev, RodPoint, StatValue, StatsError, WindowSpec,
};
