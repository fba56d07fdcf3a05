//! Goodness-of-fit measures, descriptive statistics and plot points.

use serde::{Deserialize, Serialize};

use crate::dists::{cdf_unchecked, dist_quantile, log_likelihood, DistFamily, ParamVector};
use crate::error::{Error, Result};
use crate::inference::{quantile_type7, FitResult};
use crate::sample::UnitSample;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InfoCriteria {
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
    pub hqic: f64,
}

/// AIC, AICc, BIC and HQIC from a maximized log-likelihood.
///
/// AICc needs `n > k + 1`; smaller samples are an error.
pub fn info_criteria(log_lik: f64, k: usize, n: usize) -> Result<InfoCriteria> {
    if n <= k + 1 {
        return Err(Error::Undefined("AICc requires n > k + 1"));
    }
    let (kf, nf) = (k as f64, n as f64);
    let aic = 2.0 * kf - 2.0 * log_lik;
    Ok(InfoCriteria {
        aic,
        aicc: aic + 2.0 * kf * (kf + 1.0) / (nf - kf - 1.0),
        bic: kf * nf.ln() - 2.0 * log_lik,
        hqic: 2.0 * kf * nf.ln().ln() - 2.0 * log_lik,
    })
}

/// One-sample Kolmogorov–Smirnov distance between the data and `cdf`.
pub fn ks_statistic<F: Fn(f64) -> f64>(data: &[f64], cdf: F) -> f64 {
    let mut xs = data.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// How a KS p-value is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KsPValueMethod {
    /// Exact finite-n distribution of D (Marsaglia–Tsang–Wang).
    Exact,
    /// Limiting Kolmogorov distribution at `√n·D`.
    Asymptotic,
    /// Limiting distribution at `(√n + 0.12 + 0.11/√n)·D`.
    Stephens,
}

impl KsPValueMethod {
    /// Exact for `n < 100` without ties, asymptotic otherwise.
    pub fn auto(n: usize, ties: bool) -> Self {
        if n < 100 && !ties {
            KsPValueMethod::Exact
        } else {
            KsPValueMethod::Asymptotic
        }
    }
}

/// Two-sided p-value `P(D_n >= d)`, clamped to [0, 1].
pub fn ks_pvalue(d: f64, n: usize, method: KsPValueMethod) -> Result<f64> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::Domain {
            what: "D",
            value: d,
            domain: "[0, 1]",
        });
    }
    if n == 0 {
        return Err(Error::Config("KS p-value needs n >= 1".into()));
    }
    let sn = (n as f64).sqrt();
    let p = match method {
        KsPValueMethod::Exact => 1.0 - kolmogorov_exact_cdf(n, d),
        KsPValueMethod::Asymptotic => kolmogorov_sf(sn * d),
        KsPValueMethod::Stephens => kolmogorov_sf((sn + 0.12 + 0.11 / sn) * d),
    };
    Ok(p.clamp(0.0, 1.0))
}

/// Survival function of the Kolmogorov distribution.
pub fn kolmogorov_sf(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    if x < 1.0 {
        let c = -std::f64::consts::PI.powi(2) / (8.0 * x * x);
        let mut s = 0.0;
        for k in 1..=20 {
            let j = (2 * k - 1) as f64;
            let term = (c * j * j).exp();
            s += term;
            if term < 1e-17 * s {
                break;
            }
        }
        1.0 - (2.0 * std::f64::consts::PI).sqrt() / x * s
    } else {
        let mut s = 0.0;
        let mut sign = 1.0;
        for k in 1..=100 {
            let kf = k as f64;
            let term = (-2.0 * kf * kf * x * x).exp();
            s += sign * term;
            sign = -sign;
            if term < 1e-17 {
                break;
            }
        }
        2.0 * s
    }
}

/// `P(D_n < d)` by the Marsaglia–Tsang–Wang matrix method.
fn kolmogorov_exact_cdf(n: usize, d: f64) -> f64 {
    let nf = n as f64;
    if d <= 0.5 / nf {
        return 0.0;
    }
    if d >= 1.0 {
        return 1.0;
    }
    let nd = nf * d;
    let k = nd.floor() as usize + 1;
    let m = 2 * k - 1;
    let h = k as f64 - nd;

    let mut hm = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            if i + 1 >= j {
                hm[i * m + j] = 1.0;
            }
        }
    }
    for i in 0..m {
        hm[i * m] -= h.powi(i as i32 + 1);
        hm[(m - 1) * m + i] -= h.powi((m - i) as i32);
    }
    if 2.0 * h - 1.0 > 0.0 {
        hm[(m - 1) * m] += (2.0 * h - 1.0).powi(m as i32);
    }
    for i in 0..m {
        for j in 0..m {
            if i + 1 > j {
                let mut fact = 1.0;
                for g in 1..=(i + 1 - j) {
                    fact *= g as f64;
                }
                hm[i * m + j] /= fact;
            }
        }
    }

    let (q, mut eq) = matrix_power(&hm, m, n);
    let mut s = q[(k - 1) * m + (k - 1)];
    for i in 1..=n {
        s *= i as f64 / nf;
        if s < 1e-140 {
            s *= 1e140;
            eq -= 140;
        }
    }
    s * 10f64.powi(eq)
}

fn matrix_mul(a: &[f64], b: &[f64], m: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * m];
    for i in 0..m {
        for l in 0..m {
            let ail = a[i * m + l];
            if ail == 0.0 {
                continue;
            }
            for j in 0..m {
                c[i * m + j] += ail * b[l * m + j];
            }
        }
    }
    c
}

/// `A^n` as a mantissa matrix and a base-10 exponent.
fn matrix_power(a: &[f64], m: usize, n: usize) -> (Vec<f64>, i32) {
    if n == 1 {
        return (a.to_vec(), 0);
    }
    let (half, eh) = matrix_power(a, m, n / 2);
    let mut v = matrix_mul(&half, &half, m);
    let mut ev = 2 * eh;
    if n % 2 == 1 {
        v = matrix_mul(a, &v, m);
    }
    let centre = (m / 2) * m + m / 2;
    if v[centre] > 1e140 {
        v.iter_mut().for_each(|x| *x *= 1e-140);
        ev += 140;
    }
    (v, ev)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub n: usize,
    pub min: f64,
    /// Quartiles use linear interpolation between order statistics at
    /// `h = (n - 1)p`.
    pub q1: f64,
    pub median: f64,
    pub mean: f64,
    pub q3: f64,
    pub max: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    /// `m₃ / m₂^{3/2}` with central moments `m_r` about the mean.
    pub skewness: f64,
    /// `m₄ / m₂²`.
    pub kurtosis: f64,
    /// `m₄ / m₂² + 3`.
    pub kurtosis_plus_three: f64,
    /// Bias-adjusted skewness `G₁` (needs n > 2).
    pub skewness_adjusted: Option<f64>,
    /// Bias-adjusted kurtosis `G₂ + 3` (needs n > 3).
    pub kurtosis_adjusted: Option<f64>,
}

pub fn descriptive_stats(data: &UnitSample) -> Result<DescriptiveStats> {
    describe(data.values())
}

pub(crate) fn describe(values: &[f64]) -> Result<DescriptiveStats> {
    let n = values.len();
    if n < 2 {
        return Err(Error::Undefined("descriptive statistics need at least two observations"));
    }
    let mut xs = values.to_vec();
    xs.sort_by(f64::total_cmp);
    let nf = n as f64;
    let mean = xs.iter().sum::<f64>() / nf;
    let central = |r: i32| xs.iter().map(|x| (x - mean).powi(r)).sum::<f64>() / nf;
    let (m2, m3, m4) = (central(2), central(3), central(4));
    if m2 <= 0.0 {
        return Err(Error::Undefined("skewness and kurtosis of constant data"));
    }
    let skewness = m3 / m2.powf(1.5);
    let kurtosis = m4 / (m2 * m2);
    let skewness_adjusted = (n > 2).then(|| skewness * (nf * (nf - 1.0)).sqrt() / (nf - 2.0));
    let kurtosis_adjusted =
        (n > 3).then(|| ((nf + 1.0) * (kurtosis - 3.0) + 6.0) * (nf - 1.0) / ((nf - 2.0) * (nf - 3.0)) + 3.0);
    Ok(DescriptiveStats {
        n,
        min: xs[0],
        q1: quantile_type7(&xs, 0.25),
        median: quantile_type7(&xs, 0.5),
        mean,
        q3: quantile_type7(&xs, 0.75),
        max: xs[n - 1],
        variance: m2 * nf / (nf - 1.0),
        skewness,
        kurtosis,
        kurtosis_plus_three: kurtosis + 3.0,
        skewness_adjusted,
        kurtosis_adjusted,
    })
}

/// Scaled total-time-on-test curve, including the end points (0, 0) and (1, 1).
pub fn ttt_points(data: &UnitSample) -> Result<Vec<(f64, f64)>> {
    ttt(data.values())
}

pub(crate) fn ttt(values: &[f64]) -> Result<Vec<(f64, f64)>> {
    let n = values.len();
    if n < 2 {
        return Err(Error::Undefined("TTT curve needs at least two observations"));
    }
    let mut xs = values.to_vec();
    xs.sort_by(f64::total_cmp);
    let total: f64 = xs.iter().sum();
    let mut out = Vec::with_capacity(n + 1);
    out.push((0.0, 0.0));
    let mut partial = 0.0;
    for i in 1..=n {
        partial += xs[i - 1];
        let g = (partial + (n - i) as f64 * xs[i - 1]) / total;
        out.push((i as f64 / n as f64, g.min(1.0)));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityPlots {
    /// `(F(x_(i)), (i - 0.5)/n)`.
    pub pp: Vec<(f64, f64)>,
    /// `(Q((i - 0.5)/n), x_(i))`.
    pub qq: Vec<(f64, f64)>,
}

pub fn pp_qq_points(data: &UnitSample, family: DistFamily, theta: &ParamVector) -> Result<ProbabilityPlots> {
    let mut xs = data.values().to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut pp = Vec::with_capacity(xs.len());
    let mut qq = Vec::with_capacity(xs.len());
    for (i, &x) in xs.iter().enumerate() {
        let pos = (i as f64 + 0.5) / n;
        pp.push((cdf_unchecked(family, x, theta.values()), pos));
        qq.push((dist_quantile(family, pos, theta)?, x));
    }
    Ok(ProbabilityPlots { pp, qq })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BinRule {
    FreedmanDiaconis,
    Sturges,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub rule: BinRule,
    /// `bins + 1` increasing edges spanning the data.
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    /// `count / (n · width)`, so the bars integrate to one.
    pub density: Vec<f64>,
}

/// Histogram with Freedman–Diaconis bins (width `2·IQR·n^{-1/3}`), or
/// Sturges' `⌈log₂ n⌉ + 1` bins when `n < 25` or the IQR is zero.
pub fn histogram(data: &UnitSample) -> Histogram {
    let mut xs = data.values().to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    let (lo, hi) = (xs[0], xs[n - 1]);
    let iqr = if n >= 2 {
        quantile_type7(&xs, 0.75) - quantile_type7(&xs, 0.25)
    } else {
        0.0
    };
    let sturges = ((n as f64).log2().ceil() as usize + 1).max(1);
    let (rule, bins) = if n < 25 || iqr <= 0.0 || hi <= lo {
        (BinRule::Sturges, sturges)
    } else {
        let width = 2.0 * iqr / (n as f64).cbrt();
        (BinRule::FreedmanDiaconis, (((hi - lo) / width).ceil() as usize).max(1))
    };
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5e-3, hi + 0.5e-3) };
    let width = (hi - lo) / bins as f64;
    let edges: Vec<f64> = (0..=bins).map(|i| if i == bins { hi } else { lo + i as f64 * width }).collect();
    let mut counts = vec![0usize; bins];
    for &x in &xs {
        let b = (((x - lo) / width).floor() as usize).min(bins - 1);
        counts[b] += 1;
    }
    let density = counts.iter().map(|&c| c as f64 / (n as f64 * width)).collect();
    Histogram {
        rule,
        edges,
        counts,
        density,
    }
}

/// Fit summary for one family on one dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    pub family: DistFamily,
    pub estimates: Vec<f64>,
    pub at_bound: Vec<bool>,
    pub converged: bool,
    pub log_lik: f64,
    pub aic: f64,
    pub aicc: f64,
    pub bic: f64,
    pub hqic: f64,
    pub ks_stat: f64,
    pub ks_pvalue: f64,
    pub ks_method: KsPValueMethod,
    pub n: usize,
    pub k: usize,
}

/// Criteria and KS test for a fitted family; the p-value method follows
/// [`KsPValueMethod::auto`].
pub fn gof_report(data: &UnitSample, fit: &FitResult) -> Result<GofReport> {
    if !fit.log_lik.is_finite() {
        return Err(Error::NoConvergence {
            routine: "maximum likelihood",
            iterations: fit.iterations,
            achieved: fit.log_lik,
        });
    }
    let mut g = gof_report_at(data, fit.family, &fit.estimates)?;
    g.at_bound = fit.at_bound.clone();
    g.converged = fit.converged;
    Ok(g)
}

/// The same summary at user-supplied parameters, without fitting.
pub fn gof_report_at(data: &UnitSample, family: DistFamily, theta: &ParamVector) -> Result<GofReport> {
    let n = data.len();
    let k = family.param_count();
    if theta.len() != k {
        return Err(Error::InvalidParams(format!("{family} takes {k} parameters, got {}", theta.len())));
    }
    let log_lik = log_likelihood(family, data.values(), theta.values())?;
    if !log_lik.is_finite() {
        return Err(Error::Undefined("log-likelihood is not finite at these parameters"));
    }
    let ic = info_criteria(log_lik, k, n)?;
    let d = ks_statistic(data.values(), |x| cdf_unchecked(family, x, theta.values()));
    let method = KsPValueMethod::auto(n, data.has_ties());
    Ok(GofReport {
        family,
        estimates: theta.values().to_vec(),
        at_bound: vec![false; k],
        converged: true,
        log_lik,
        aic: ic.aic,
        aicc: ic.aicc,
        bic: ic.bic,
        hqic: ic.hqic,
        ks_stat: d,
        ks_pvalue: ks_pvalue(d, n, method)?,
        ks_method: method,
        n,
        k,
    })
}
