//! Observation containers shared by the statistics and detection layers.

use thiserror::Error;

/// Validation failures when constructing series containers.
#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("timestamps and values differ in length ({timestamps} vs {values})")]
    LengthMismatch { timestamps: usize, values: usize },
    #[error("timestamps must be strictly increasing (violated at index {index})")]
    NonIncreasingTimestamps { index: usize },
    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },
    #[error("a multivariate sample needs at least one channel")]
    NoChannels,
}

/// One variable's observations: strictly increasing timestamps plus finite
/// values, in dimensionless model time.
#[derive(Debug, Clone, PartialEq)]
pub struct IrregularSeries {
    timestamps: Vec<f64>,
    values: Vec<f64>,
}

impl IrregularSeries {
    pub fn new(timestamps: Vec<f64>, values: Vec<f64>) -> Result<Self, SeriesError> {
        if timestamps.len() != values.len() {
            return Err(SeriesError::LengthMismatch {
                timestamps: timestamps.len(),
                values: values.len(),
            });
        }
        check_timestamps(&timestamps)?;
        for (index, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(SeriesError::NonFinite { index });
            }
        }
        Ok(Self { timestamps, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn timestamps(&self) -> &[f64] {
        &self.timestamps
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn time(&self, index: usize) -> f64 {
        self.timestamps[index]
    }

    pub fn value(&self, index: usize) -> f64 {
        self.values[index]
    }
}

/// Several variables observed simultaneously: one timestamp grid shared by
/// every channel.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivariateSample {
    timestamps: Vec<f64>,
    channels: Vec<Vec<f64>>,
}

impl MultivariateSample {
    pub fn new(timestamps: Vec<f64>, channels: Vec<Vec<f64>>) -> Result<Self, SeriesError> {
        if channels.is_empty() {
            return Err(SeriesError::NoChannels);
        }
        check_timestamps(&timestamps)?;
        for channel in &channels {
            if channel.len() != timestamps.len() {
                return Err(SeriesError::LengthMismatch {
                    timestamps: timestamps.len(),
                    values: channel.len(),
                });
            }
            for (index, &v) in channel.iter().enumerate() {
                if !v.is_finite() {
                    return Err(SeriesError::NonFinite { index });
                }
            }
        }
        Ok(Self {
            timestamps,
            channels,
        })
    }

    /// Number of observations (shared by all channels).
    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.timestamps.is_empty()
    }

    pub fn num_channels(&self) -> usize {
        self.channels.len()
    }

    pub fn timestamps(&self) -> &[f64] {
        &self.timestamps
    }

    pub fn channel_values(&self, channel: usize) -> &[f64] {
        &self.channels[channel]
    }

    /// Extracts channel `channel` as a standalone series.
    pub fn channel(&self, channel: usize) -> IrregularSeries {
        IrregularSeries {
            timestamps: self.timestamps.clone(),
            values: self.channels[channel].clone(),
        }
    }
}

fn check_timestamps(timestamps: &[f64]) -> Result<(), SeriesError> {
    for (index, &t) in timestamps.iter().enumerate() {
        if !t.is_finite() {
            return Err(SeriesError::NonFinite { index });
        }
        if index > 0 && t <= timestamps[index - 1] {
            return Err(SeriesError::NonIncreasingTimestamps { index });
        }
    }
    Ok(())
}
