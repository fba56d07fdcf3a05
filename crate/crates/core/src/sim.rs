//! Monte Carlo study of the USh maximum-likelihood estimators.
//!
//! Each replicate draws a sample, fits (ω, η), builds percentile bootstrap
//! intervals and records whether they cover the truth. Replicate `r` of the
//! cell `(ω, η, n)` uses the stream
//! `stream(seed, [ω.to_bits(), η.to_bits(), n, r])`, so a cell gives the same
//! numbers whether it runs alone or inside a full study, in any order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dists::DistFamily;
use crate::error::{Error, Result};
use crate::inference::{bootstrap_from_fit, fit_values, FitOptions};
use crate::rng::{derive_seed, stream};
use crate::sampling::{ush_sample_rejection_with, ush_sample_with};
use crate::shiha::UShParams;

/// Parameter points of the standard study grid.
pub const STUDY_POINTS: [(f64, f64); 7] = [
    (0.6, 0.2),
    (0.6, 1.8),
    (1.0, 0.7),
    (1.2, 0.8),
    (1.5, 0.2),
    (2.0, 0.6),
    (2.0, 1.4),
];

/// Sample sizes of the standard study grid.
pub const STUDY_SIZES: [usize; 5] = [30, 60, 100, 150, 200];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampler {
    Mixture,
    Rejection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub points: Vec<UShParams>,
    pub sample_sizes: Vec<usize>,
    /// Replicates per cell.
    pub m: usize,
    /// Bootstrap resamples per replicate.
    pub b: usize,
    pub level: f64,
    pub seed: u64,
    pub sampler: Sampler,
    /// Estimation box for (ω, η).
    pub bounds: [(f64, f64); 2],
}

impl SimConfig {
    /// Full grid with `m` replicates and `b` resamples.
    pub fn grid(m: usize, b: usize, seed: u64) -> Self {
        Self {
            points: STUDY_POINTS
                .iter()
                .map(|&(w, e)| UShParams::new_unchecked(w, e))
                .collect(),
            sample_sizes: STUDY_SIZES.to_vec(),
            m,
            b,
            level: 0.95,
            seed,
            sampler: Sampler::Rejection,
            bounds: SIM_BOUNDS,
        }
    }

    /// M = 200, B = 50.
    pub fn desk(seed: u64) -> Self {
        Self::grid(200, 50, seed)
    }

    /// M = 1000, B = 100.
    pub fn paper(seed: u64) -> Self {
        Self::grid(1000, 100, seed)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::Config("M must be at least 1".into()));
        }
        if self.b < 2 {
            return Err(Error::Config("B must be at least 2".into()));
        }
        if !(self.level > 0.0 && self.level < 1.0) {
            return Err(Error::Config(format!("level must be in (0, 1), got {}", self.level)));
        }
        if let Some(n) = self.sample_sizes.iter().find(|&&n| n < 2) {
            return Err(Error::Config(format!("sample sizes must be at least 2, got {n}")));
        }
        for (lo, hi) in self.bounds {
            if !(lo > 0.0 && lo < hi && hi.is_finite()) {
                return Err(Error::Config(format!("invalid estimation bound [{lo}, {hi}]")));
            }
        }
        for p in &self.points {
            for (v, (lo, hi)) in [p.omega(), p.eta()].into_iter().zip(self.bounds) {
                if !(v > lo && v < hi) {
                    return Err(Error::Config(format!(
                        "true value {v} is not inside the estimation box [{lo}, {hi}]"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Default estimation box used by the study.
pub const SIM_BOUNDS: [(f64, f64); 2] = [(1e-6, 1000.0), (1e-6, 1000.0)];

/// Metrics for one parameter, each with its Monte Carlo standard error
/// (absent when fewer than two replicates converged).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamMetrics {
    pub bias: f64,
    pub mse: f64,
    pub mre: f64,
    pub cp: f64,
    pub se_bias: Option<f64>,
    pub se_mse: Option<f64>,
    pub se_mre: Option<f64>,
    pub se_cp: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimCellResult {
    pub omega: f64,
    pub eta: f64,
    pub n: usize,
    /// Replicates run.
    pub m: usize,
    /// Replicates whose fit converged.
    pub converged: usize,
    pub cr: f64,
    /// Absent when no replicate converged.
    pub omega_metrics: Option<ParamMetrics>,
    pub eta_metrics: Option<ParamMetrics>,
}

#[derive(Debug, Clone, Copy)]
struct Replicate {
    estimate: Option<[f64; 2]>,
    covered: [bool; 2],
}

fn run_replicate(config: &SimConfig, p: &UShParams, n: usize, r: u64, opts: &FitOptions) -> Result<Replicate> {
    let seed = derive_seed(config.seed, &[p.omega().to_bits(), p.eta().to_bits(), n as u64, r]);
    let mut rng = stream(seed, &[0]);
    let xs = match config.sampler {
        Sampler::Mixture => ush_sample_with(n, p, &mut rng),
        Sampler::Rejection => ush_sample_rejection_with(n, p, &mut rng)?.0,
    };
    let fit = fit_values(&xs, DistFamily::USh, opts)?;
    if !fit.converged {
        return Ok(Replicate {
            estimate: None,
            covered: [false; 2],
        });
    }
    let est = [fit.values()[0], fit.values()[1]];
    let ci = bootstrap_from_fit(&xs, &fit, config.b, config.level, derive_seed(seed, &[1]), opts)?;
    Ok(Replicate {
        estimate: Some(est),
        covered: [ci.contains(0, p.omega()), ci.contains(1, p.eta())],
    })
}

fn mean_and_se(values: &[f64]) -> (f64, Option<f64>) {
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    if values.len() < 2 {
        return (mean, None);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
    (mean, Some((var / k).sqrt()))
}

fn metrics(truth: f64, estimates: &[f64], covered: &[bool]) -> Option<ParamMetrics> {
    if estimates.is_empty() {
        return None;
    }
    let err: Vec<f64> = estimates.iter().map(|e| e - truth).collect();
    let sq: Vec<f64> = err.iter().map(|e| e * e).collect();
    let rel: Vec<f64> = err.iter().map(|e| (e / truth).abs()).collect();
    let cov: Vec<f64> = covered.iter().map(|&c| if c { 1.0 } else { 0.0 }).collect();
    let (bias, se_bias) = mean_and_se(&err);
    let (mse, se_mse) = mean_and_se(&sq);
    let (mre, se_mre) = mean_and_se(&rel);
    let (cp, _) = mean_and_se(&cov);
    let se_cp = (cov.len() > 1).then(|| (cp * (1.0 - cp) / cov.len() as f64).sqrt());
    Some(ParamMetrics {
        bias,
        mse,
        mre,
        cp,
        se_bias,
        se_mse,
        se_mre,
        se_cp,
    })
}

fn fit_options(config: &SimConfig) -> FitOptions {
    FitOptions::thorough().with_bounds(config.bounds.to_vec())
}

/// Runs the `M` replicates of one `(ω, η, n)` cell.
pub fn run_cell(config: &SimConfig, p: &UShParams, n: usize) -> Result<SimCellResult> {
    config.validate()?;
    if n < 2 {
        return Err(Error::Config(format!("sample size must be at least 2, got {n}")));
    }
    let opts = fit_options(config);
    let reps: Vec<Replicate> = (0..config.m as u64)
        .into_par_iter()
        .map(|r| run_replicate(config, p, n, r, &opts))
        .collect::<Result<_>>()?;

    let ok: Vec<&Replicate> = reps.iter().filter(|r| r.estimate.is_some()).collect();
    let est = |j: usize| -> Vec<f64> { ok.iter().map(|r| r.estimate.unwrap()[j]).collect() };
    let cov = |j: usize| -> Vec<bool> { ok.iter().map(|r| r.covered[j]).collect() };
    Ok(SimCellResult {
        omega: p.omega(),
        eta: p.eta(),
        n,
        m: config.m,
        converged: ok.len(),
        cr: ok.len() as f64 / config.m as f64,
        omega_metrics: metrics(p.omega(), &est(0), &cov(0)),
        eta_metrics: metrics(p.eta(), &est(1), &cov(1)),
    })
}

/// Every parameter point crossed with every sample size, points outermost.
pub fn run_study(config: &SimConfig) -> Result<Vec<SimCellResult>> {
    config.validate()?;
    let mut out = Vec::with_capacity(config.points.len() * config.sample_sizes.len());
    for p in &config.points {
        for &n in &config.sample_sizes {
            out.push(run_cell(config, p, n)?);
        }
    }
    Ok(out)
}
