//! The single-increase detection rule and its multivariate aggregation.
//!
//! A variable flags a change at observation `k` when its RoD rises between
//! the windows ending at `k - 1` and `k` — one increase suffices, no trend is
//! required. Because RoD can rise while both of its ingredients fall, the
//! rule is usually paired with a tandem condition: an increase in standard
//! deviation, an increase in RMSSD, or a raw-value range violation. All
//! comparisons are strict; ties never fire.
//!
//! A multivariate detection requires every quorum variable to fire at the
//! same observation index. Variables share sampling times, so one noisy
//! channel firing alone is discounted while a structural change — which
//! moves every equation — lines up across channels.

use crate::series::{IrregularSeries, MultivariateSample};
use crate::stats::{rod_sequence, WindowSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DetectorError {
    #[error("range violation bounds must satisfy lower < upper, got [{lower}, {upper}]")]
    InvalidRange { lower: f64, upper: f64 },
}

/// Auxiliary condition conjoined with the RoD increase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TandemRule {
    /// RoD alone.
    None,
    /// Standard deviation must also increase.
    SdIncrease,
    /// RMSSD must also increase.
    RmssdIncrease,
    /// The raw observed value must fall outside `[lower, upper]`.
    RangeViolation { lower: f64, upper: f64 },
}

impl TandemRule {
    pub fn validate(&self) -> Result<(), DetectorError> {
        if let TandemRule::RangeViolation { lower, upper } = *self {
            if !(lower < upper) {
                return Err(DetectorError::InvalidRange { lower, upper });
            }
        }
        Ok(())
    }
}

impl fmt::Display for TandemRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TandemRule::None => write!(f, "none"),
            TandemRule::SdIncrease => write!(f, "sd"),
            TandemRule::RmssdIncrease => write!(f, "rmssd"),
            TandemRule::RangeViolation { lower, upper } => write!(f, "range[{lower},{upper}]"),
        }
    }
}

/// Which variables must fire simultaneously for a multivariate detection.
#[derive(Debug, Clone, PartialEq)]
pub enum Quorum {
    AllVariables,
    Subset(Vec<usize>),
}

/// A RoD increase (plus tandem condition) in one variable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetectionEvent {
    pub variable_index: usize,
    pub observation_index: usize,
    pub time: f64,
    pub rod_before: f64,
    pub rod_after: f64,
}

/// Earliest observation at which every quorum variable fired.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JointDetection {
    pub observation_index: usize,
    pub time: f64,
}

/// Scans one series and reports every observation where RoD increased and
/// the tandem rule held. Both windows of a pair must be valid and end at
/// adjacent observations; pairs spanning a skipped (degenerate or
/// under-filled) window never fire.
pub fn detect_univariate(
    series: &IrregularSeries,
    window: WindowSpec,
    tandem: &TandemRule,
) -> Vec<DetectionEvent> {
    let sequence = rod_sequence(series, window);
    let mut events = Vec::new();
    for pair in sequence.windows(2) {
        let (before, after) = (&pair[0], &pair[1]);
        if after.index != before.index + 1 {
            continue;
        }
        if !(after.rod > before.rod) {
            continue;
        }
        let tandem_holds = match *tandem {
            TandemRule::None => true,
            TandemRule::SdIncrease => after.sigma > before.sigma,
            TandemRule::RmssdIncrease => after.rmssd > before.rmssd,
            TandemRule::RangeViolation { lower, upper } => {
                let value = series.value(after.index);
                value < lower || value > upper
            }
        };
        if tandem_holds {
            events.push(DetectionEvent {
                variable_index: 0,
                observation_index: after.index,
                time: after.time,
                rod_before: before.rod,
                rod_after: after.rod,
            });
        }
    }
    events
}

/// Per-channel event lists with `variable_index` stamped.
pub fn detect_channels(
    sample: &MultivariateSample,
    window: WindowSpec,
    tandem: &TandemRule,
) -> Vec<Vec<DetectionEvent>> {
    (0..sample.num_channels())
        .map(|index| {
            let mut events = detect_univariate(&sample.channel(index), window, tandem);
            for event in &mut events {
                event.variable_index = index;
            }
            events
        })
        .collect()
}

/// Earliest observation index at which every quorum variable has an event,
/// or `None`. A subset quorum must be nonempty and in range.
pub fn detect_multivariate(
    sample: &MultivariateSample,
    window: WindowSpec,
    tandem: &TandemRule,
    quorum: &Quorum,
) -> Option<JointDetection> {
    let selected: Vec<usize> = match quorum {
        Quorum::AllVariables => (0..sample.num_channels()).collect(),
        Quorum::Subset(indices) => indices.clone(),
    };
    assert!(!selected.is_empty(), "quorum must name at least one variable");
    for &index in &selected {
        assert!(
            index < sample.num_channels(),
            "quorum variable {index} out of range ({} channels)",
            sample.num_channels()
        );
    }

    let mut common: Option<BTreeSet<usize>> = None;
    for &index in &selected {
        let events = detect_univariate(&sample.channel(index), window, tandem);
        let indices: BTreeSet<usize> = events.iter().map(|e| e.observation_index).collect();
        common = Some(match common {
            None => indices,
            Some(acc) => acc.intersection(&indices).copied().collect(),
        });
        if common.as_ref().is_some_and(|set| set.is_empty()) {
            return None;
        }
    }
    let first = *common?.iter().next()?;
    Some(JointDetection {
        observation_index: first,
        time: sample.timestamps()[first],
    })
}
