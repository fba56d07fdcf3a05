use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleSource {
    Bundled,
    File,
    Generated,
}

/// A validated set of observations, each strictly inside (0, 1).
///
/// Values keep the order in which they were read; consumers sort copies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitSample {
    values: Vec<f64>,
    label: String,
    source: SampleSource,
    scale_divisor: Option<f64>,
}

impl UnitSample {
    /// Validates `values` (already scaled) and wraps them.
    pub fn new(
        values: Vec<f64>,
        label: impl Into<String>,
        source: SampleSource,
        scale_divisor: Option<f64>,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Ingestion {
                row: None,
                message: "sample is empty".into(),
            });
        }
        if let Some(d) = scale_divisor {
            if !(d > 0.0 && d.is_finite()) {
                return Err(Error::Ingestion {
                    row: None,
                    message: format!("scale divisor must be positive, got {d}"),
                });
            }
        }
        for (i, &v) in values.iter().enumerate() {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::Ingestion {
                    row: Some(i + 1),
                    message: format!("value {v} is not strictly inside (0, 1)"),
                });
            }
        }
        Ok(Self {
            values,
            label: label.into(),
            source,
            scale_divisor,
        })
    }

    /// Divides raw observations by `divisor` and validates the result.
    pub fn from_raw(
        raw: &[f64],
        divisor: Option<f64>,
        label: impl Into<String>,
        source: SampleSource,
    ) -> Result<Self> {
        let d = divisor.unwrap_or(1.0);
        let scaled = raw.iter().map(|v| v / d).collect();
        Self::new(scaled, label, source, divisor)
    }

    pub(crate) fn generated(values: Vec<f64>, label: String) -> Self {
        debug_assert!(values.iter().all(|v| *v > 0.0 && *v < 1.0));
        Self {
            values,
            label,
            source: SampleSource::Generated,
            scale_divisor: None,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> SampleSource {
        self.source
    }

    pub fn scale_divisor(&self) -> Option<f64> {
        self.scale_divisor
    }

    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn has_ties(&self) -> bool {
        self.sorted().windows(2).any(|w| w[0] == w[1])
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_with_row() {
        let err = UnitSample::new(vec![0.2, 1.5], "x", SampleSource::File, None).unwrap_err();
        assert_eq!(
            err,
            Error::Ingestion {
                row: Some(2),
                message: "value 1.5 is not strictly inside (0, 1)".into()
            }
        );
        assert!(UnitSample::new(vec![0.0], "x", SampleSource::File, None).is_err());
        assert!(UnitSample::new(vec![f64::NAN], "x", SampleSource::File, None).is_err());
    }

    #[test]
    fn rejects_empty() {
        assert!(UnitSample::new(vec![], "x", SampleSource::File, None).is_err());
    }

    #[test]
    fn scaling_applies_divisor() {
        let s = UnitSample::from_raw(&[6.0, 3.0], Some(12.0), "d", SampleSource::File).unwrap();
        assert_eq!(s.values(), &[0.5, 0.25]);
        assert_eq!(s.sorted(), vec![0.25, 0.5]);
        assert_eq!(s.scale_divisor(), Some(12.0));
    }
}
