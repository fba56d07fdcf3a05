//! Dataset ingestion and the four bundled reference datasets.

use std::path::Path;

use crate::error::{Error, Result};
use crate::sample::{SampleSource, UnitSample};

/// Survival times (days) of 43 blood cancer patients; divided by 1970.
pub const BLOOD_CANCER_DAYS: [f64; 43] = [
    115.0, 181.0, 255.0, 418.0, 441.0, 461.0, 516.0, 739.0, 743.0, 789.0, 807.0, 865.0, 924.0,
    983.0, 1025.0, 1062.0, 1063.0, 1165.0, 1191.0, 1222.0, 1222.0, 1251.0, 1277.0, 1290.0,
    1357.0, 1369.0, 1408.0, 1455.0, 1478.0, 1519.0, 1578.0, 1578.0, 1599.0, 1603.0, 1605.0,
    1696.0, 1735.0, 1799.0, 1815.0, 1852.0, 1899.0, 1925.0, 1965.0,
];

/// Unit capacity factors estimated by the SC16 algorithm.
pub const CAPACITY_SC16: [f64; 23] = [
    0.853, 0.759, 0.866, 0.809, 0.717, 0.544, 0.492, 0.403, 0.344, 0.213, 0.116, 0.116, 0.092,
    0.070, 0.059, 0.048, 0.036, 0.029, 0.021, 0.014, 0.011, 0.008, 0.006,
];

/// Unit capacity factors estimated by the P3 algorithm.
pub const CAPACITY_P3: [f64; 22] = [
    0.853, 0.759, 0.874, 0.800, 0.716, 0.557, 0.503, 0.399, 0.334, 0.207, 0.118, 0.118, 0.097,
    0.078, 0.067, 0.056, 0.044, 0.036, 0.026, 0.019, 0.014, 0.010,
];

/// Failure times (hours) observed before a 12-hour test cutoff; divided by 12.
pub const FAILURE_HOURS: [f64; 30] = [
    0.80, 1.26, 1.29, 1.85, 2.41, 2.47, 2.76, 3.35, 3.68, 4.46, 4.65, 4.83, 5.21, 5.26, 5.36,
    5.39, 5.53, 5.64, 5.80, 6.08, 6.38, 7.02, 7.18, 7.60, 8.13, 8.46, 8.69, 10.52, 11.25, 11.90,
];

#[derive(Debug, Clone, Copy)]
pub struct BundledDataset {
    pub name: &'static str,
    pub description: &'static str,
    pub raw: &'static [f64],
    pub divisor: Option<f64>,
}

pub const BUNDLED: [BundledDataset; 4] = [
    BundledDataset {
        name: "data1",
        description: "blood cancer patient lifetimes (days / 1970)",
        raw: &BLOOD_CANCER_DAYS,
        divisor: Some(1970.0),
    },
    BundledDataset {
        name: "data2",
        description: "unit capacity factors, SC16 algorithm",
        raw: &CAPACITY_SC16,
        divisor: None,
    },
    BundledDataset {
        name: "data3",
        description: "unit capacity factors, P3 algorithm",
        raw: &CAPACITY_P3,
        divisor: None,
    },
    BundledDataset {
        name: "data4",
        description: "failure times before a 12 h cutoff (hours / 12)",
        raw: &FAILURE_HOURS,
        divisor: Some(12.0),
    },
];

pub fn bundled(name: &str) -> Result<UnitSample> {
    let ds = BUNDLED
        .iter()
        .find(|d| d.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::Ingestion {
            row: None,
            message: format!(
                "unknown bundled dataset '{name}' (available: data1, data2, data3, data4)"
            ),
        })?;
    UnitSample::from_raw(ds.raw, ds.divisor, ds.name, SampleSource::Bundled)
}

/// Parses numeric text: values separated by newlines, commas, semicolons or
/// whitespace. Blank lines and lines starting with `#` are skipped.
pub fn parse_values(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line
            .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let v: f64 = tok.parse().map_err(|_| Error::Ingestion {
                row: Some(lineno + 1),
                message: format!("cannot parse '{tok}' as a number"),
            })?;
            if !v.is_finite() {
                return Err(Error::Ingestion {
                    row: Some(lineno + 1),
                    message: format!("non-finite value '{tok}'"),
                });
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// Reads and validates a sample from text, reporting the offending line on
/// failure.
pub fn sample_from_text(text: &str, divisor: Option<f64>, label: &str) -> Result<UnitSample> {
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let parsed = parse_values(line).map_err(|e| match e {
            Error::Ingestion { message, .. } => Error::Ingestion {
                row: Some(lineno + 1),
                message,
            },
            other => other,
        })?;
        rows.extend(std::iter::repeat(lineno + 1).take(parsed.len()));
        values.extend(parsed);
    }
    if values.is_empty() {
        return Err(Error::Ingestion {
            row: None,
            message: "input contains no values".into(),
        });
    }
    UnitSample::from_raw(&values, divisor, label, SampleSource::File).map_err(|e| match e {
        Error::Ingestion {
            row: Some(i),
            message,
        } => Error::Ingestion {
            row: Some(rows[i - 1]),
            message,
        },
        other => other,
    })
}

/// Loads either a bundled dataset (by name) or a numeric text file.
///
/// A divisor supplied for a bundled dataset replaces its built-in scaling.
pub fn load_dataset(spec: &str, divisor: Option<f64>) -> Result<UnitSample> {
    if let Some(ds) = BUNDLED.iter().find(|d| d.name.eq_ignore_ascii_case(spec)) {
        let d = divisor.or(ds.divisor);
        return UnitSample::from_raw(ds.raw, d, ds.name, SampleSource::Bundled);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Ingestion {
        row: None,
        message: format!("cannot read '{}': {e}", path.display()),
    })?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    sample_from_text(&text, divisor, &label)
}
