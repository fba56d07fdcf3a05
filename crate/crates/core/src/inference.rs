//! Maximum-likelihood fitting and percentile bootstrap intervals.
//!
//! USh fits use the analytic score; every other family uses central
//! differences. By default the optimizer works on `ln θ` so that parameters
//! spanning several orders of magnitude are equally well conditioned.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dists::{log_likelihood_unchecked, DistFamily, ParamVector, DEFAULT_BOUNDS};
use crate::error::{Error, Result};
use crate::optim::{lbfgsb, nelder_mead_box, LbfgsbOptions, NelderMeadOptions, OptimResult, Termination};
use crate::rng::stream;
use crate::roots::{brent, BrentOptions};
use crate::sample::UnitSample;
use crate::shiha::{ush_log_pdf_from_ln, ush_raw_moment, UShParams};

/// USh log-likelihood. The sample is already validated to lie in (0, 1).
pub fn ush_log_likelihood(data: &UnitSample, p: &UShParams) -> f64 {
    data.values().iter().map(|&x| ush_log_pdf_from_ln(x.ln(), p)).sum()
}

/// Partial derivatives `(∂ℓ/∂ω, ∂ℓ/∂η)` of the USh log-likelihood.
pub fn ush_score(data: &UnitSample, p: &UShParams) -> (f64, f64) {
    let lnx: Vec<f64> = data.values().iter().map(|x| x.ln()).collect();
    let (_, d) = ush_ll_and_score(&lnx, p.omega(), p.eta());
    (d[0], d[1])
}

/// Log-likelihood and score from precomputed `ln x`. Each density term is
/// divided through by `x^{ω-1}`, leaving `k = ω + (2η - 8ωη ln x) x^ω`.
fn ush_ll_and_score(lnx: &[f64], w: f64, e: f64) -> (f64, [f64; 2]) {
    let n = lnx.len() as f64;
    let norm = w + 3.0 * e;
    let mut ll = n * (w.ln() - norm.ln());
    let mut dw = n / w - n / norm;
    let mut de = -3.0 * n / norm;
    for &lx in lnx {
        let xw = (w * lx).exp();
        let a = 2.0 * e - 8.0 * w * e * lx;
        let k = w + a * xw;
        ll += (w - 1.0) * lx + k.ln();
        dw += lx + (1.0 - 8.0 * e * lx * xw + a * xw * lx) / k;
        de += (2.0 - 8.0 * w * lx) * xw / k;
    }
    (ll, [dw, de])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parametrization {
    /// Optimize over `ln θ`.
    Log,
    /// Optimize over `θ` directly.
    Raw,
}

/// Step rule for central-difference gradients of non-USh families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FdStep {
    /// `h = max(floor, rel·|θ|)`.
    Relative { floor: f64, rel: f64 },
    /// Constant `h`.
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitOptions {
    /// Per-parameter box; `None` means [`DEFAULT_BOUNDS`] for each.
    pub bounds: Option<Vec<(f64, f64)>>,
    /// Starting points; `None` means [`default_starts`].
    pub starts: Option<Vec<Vec<f64>>>,
    pub parametrization: Parametrization,
    pub fd_step: FdStep,
    pub optimizer: LbfgsbOptions,
    /// Run Nelder–Mead from the quasi-Newton end point when the latter fails.
    pub simplex_fallback: bool,
}

impl FitOptions {
    /// Multistart, log parametrization, tight tolerances.
    pub fn thorough() -> Self {
        Self {
            bounds: None,
            starts: None,
            parametrization: Parametrization::Log,
            fd_step: FdStep::Relative { floor: 1e-6, rel: 1e-6 },
            optimizer: LbfgsbOptions::default(),
            simplex_fallback: true,
        }
    }

    /// Conventional single-run protocol: one start at all ones, raw
    /// parameters, central differences with `h = 1e-3`, relative reduction
    /// `1e7·ε`, no gradient test, at most 100 iterations, no fallback.
    pub fn reference() -> Self {
        Self {
            bounds: None,
            starts: Some(Vec::new()),
            parametrization: Parametrization::Raw,
            fd_step: FdStep::Fixed(1e-3),
            optimizer: LbfgsbOptions {
                pgtol: 0.0,
                rel_reduction: 1e7 * f64::EPSILON,
                max_iter: 100,
                ..LbfgsbOptions::default()
            },
            simplex_fallback: false,
        }
    }

    pub fn with_bounds(mut self, bounds: Vec<(f64, f64)>) -> Self {
        self.bounds = Some(bounds);
        self
    }

    pub fn with_starts(mut self, starts: Vec<Vec<f64>>) -> Self {
        self.starts = Some(starts);
        self
    }
}

impl Default for FitOptions {
    fn default() -> Self {
        Self::thorough()
    }
}

/// Named fitting protocol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Protocol {
    /// [`FitOptions::thorough`].
    Thorough,
    /// [`FitOptions::reference`].
    Reference,
}

impl Protocol {
    pub fn options(self) -> FitOptions {
        match self {
            Protocol::Thorough => FitOptions::thorough(),
            Protocol::Reference => FitOptions::reference(),
        }
    }
}

impl std::fmt::Display for Protocol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Protocol::Thorough => "thorough",
            Protocol::Reference => "reference",
        })
    }
}

impl std::str::FromStr for Protocol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "thorough" => Ok(Protocol::Thorough),
            "reference" => Ok(Protocol::Reference),
            _ => Err(Error::Config(format!("unknown protocol '{s}' (expected thorough or reference)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub family: DistFamily,
    pub estimates: ParamVector,
    pub log_lik: f64,
    pub converged: bool,
    /// Per parameter: estimate within relative `1e-8` of a bound.
    pub at_bound: Vec<bool>,
    pub iterations: usize,
    pub start_point: ParamVector,
    pub termination: Termination,
    pub starts_tried: usize,
    pub starts_converged: usize,
    /// Why the fit is not trustworthy, when it is not.
    pub diagnostic: Option<String>,
}

impl FitResult {
    pub fn values(&self) -> &[f64] {
        self.estimates.values()
    }
}

/// Default multistart list.
///
/// USh: ω solving `E[X] = x̄` at η ∈ {0.01, 1, 10}, then (0.5, 0.5), (1, 1)
/// and (2, 0.5). Other families: every point of `{0.5, 1, 2}^k` plus a few
/// family-specific points in regions where those likelihoods tend to peak.
pub fn default_starts(family: DistFamily, data: &[f64]) -> Vec<Vec<f64>> {
    if family == DistFamily::USh {
        let mean = data.iter().sum::<f64>() / data.len().max(1) as f64;
        let mut starts = Vec::new();
        for eta in [0.01, 1.0, 10.0] {
            if let Some(w) = moment_omega(mean, eta) {
                starts.push(vec![w, eta]);
            }
        }
        starts.extend([vec![0.5, 0.5], vec![1.0, 1.0], vec![2.0, 0.5]]);
        return starts;
    }
    let k = family.param_count();
    let grid = [0.5, 1.0, 2.0];
    let mut starts: Vec<Vec<f64>> = vec![Vec::new()];
    for _ in 0..k {
        starts = starts
            .into_iter()
            .flat_map(|s| {
                grid.iter().map(move |&g| {
                    let mut t = s.clone();
                    t.push(g);
                    t
                })
            })
            .collect();
    }
    let extra: &[&[f64]] = match family {
        DistFamily::UE => &[&[10.0, 0.1], &[100.0, 0.01]],
        DistFamily::UEL => &[&[10.0, 0.1, 1.0], &[50.0, 0.02, 1.0]],
        DistFamily::EUEHL => &[&[0.1, 1.0, 10.0], &[0.1, 1.0, 40.0]],
        DistFamily::TL => &[&[5.0]],
        _ => &[],
    };
    starts.extend(extra.iter().map(|s| s.to_vec()));
    starts
}

/// ω with `E[X | ω, η] = mean`, if it lies inside the default bounds.
fn moment_omega(mean: f64, eta: f64) -> Option<f64> {
    if !(mean > 0.0 && mean < 1.0) {
        return None;
    }
    let g = |u: f64| ush_raw_moment(1, &UShParams::new_unchecked(u.exp(), eta)) - mean;
    let (lo, hi) = (DEFAULT_BOUNDS.0.ln(), DEFAULT_BOUNDS.1.ln());
    brent(g, lo, hi, &BrentOptions::default()).ok().map(|r| r.x.exp())
}

/// Negative log-likelihood with its gradient in the optimizer's coordinates.
struct Objective<'a> {
    family: DistFamily,
    xs: &'a [f64],
    lnx: Vec<f64>,
    bounds: &'a [(f64, f64)],
    param: Parametrization,
    fd_step: FdStep,
}

impl<'a> Objective<'a> {
    fn new(family: DistFamily, xs: &'a [f64], bounds: &'a [(f64, f64)], opts: &FitOptions) -> Self {
        Self {
            family,
            xs,
            lnx: xs.iter().map(|x| x.ln()).collect(),
            bounds,
            param: opts.parametrization,
            fd_step: opts.fd_step,
        }
    }

    fn to_theta(&self, u: &[f64]) -> Vec<f64> {
        match self.param {
            Parametrization::Raw => u.to_vec(),
            Parametrization::Log => u
                .iter()
                .zip(self.bounds)
                .map(|(v, &(lo, hi))| v.exp().clamp(lo, hi))
                .collect(),
        }
    }

    fn to_u(&self, theta: &[f64]) -> Vec<f64> {
        match self.param {
            Parametrization::Raw => theta.to_vec(),
            Parametrization::Log => theta.iter().map(|t| t.ln()).collect(),
        }
    }

    fn box_u(&self) -> (Vec<f64>, Vec<f64>) {
        let lo: Vec<f64> = self.bounds.iter().map(|b| b.0).collect();
        let hi: Vec<f64> = self.bounds.iter().map(|b| b.1).collect();
        (self.to_u(&lo), self.to_u(&hi))
    }

    fn log_lik(&self, theta: &[f64]) -> f64 {
        if self.family == DistFamily::USh {
            let p = UShParams::new_unchecked(theta[0], theta[1]);
            return self.lnx.iter().map(|&lx| ush_log_pdf_from_ln(lx, &p)).sum();
        }
        log_likelihood_unchecked(self.family, self.xs, theta)
    }

    /// Returns `-ℓ` and writes `-∂ℓ/∂u` into `grad`.
    fn value_grad(&self, u: &[f64], grad: &mut [f64]) -> f64 {
        let theta = self.to_theta(u);
        let (ll, dtheta) = if self.family == DistFamily::USh {
            let (ll, d) = ush_ll_and_score(&self.lnx, theta[0], theta[1]);
            (ll, d.to_vec())
        } else {
            (self.log_lik(&theta), self.fd_gradient(&theta))
        };
        for i in 0..grad.len() {
            let chain = match self.param {
                Parametrization::Raw => 1.0,
                Parametrization::Log => theta[i],
            };
            grad[i] = -dtheta[i] * chain;
        }
        -ll
    }

    fn fd_gradient(&self, theta: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; theta.len()];
        let mut t = theta.to_vec();
        for i in 0..theta.len() {
            let h = match self.fd_step {
                FdStep::Relative { floor, rel } => floor.max(rel * theta[i].abs()),
                FdStep::Fixed(h) => h,
            };
            let (lo, hi) = self.bounds[i];
            let up = (theta[i] + h).min(hi);
            let down = (theta[i] - h).max(lo);
            t[i] = up;
            let f_up = self.log_lik(&t);
            t[i] = down;
            let f_down = self.log_lik(&t);
            t[i] = theta[i];
            g[i] = (f_up - f_down) / (up - down);
        }
        g
    }
}

fn resolve_bounds(family: DistFamily, opts: &FitOptions) -> Result<Vec<(f64, f64)>> {
    let k = family.param_count();
    let bounds = opts.bounds.clone().unwrap_or_else(|| vec![DEFAULT_BOUNDS; k]);
    if bounds.len() != k {
        return Err(Error::Config(format!("{family} needs {k} bounds, got {}", bounds.len())));
    }
    if let Some(b) = bounds.iter().find(|b| !(b.0 > 0.0 && b.0 < b.1 && b.1.is_finite())) {
        return Err(Error::Config(format!("invalid bound [{}, {}]", b.0, b.1)));
    }
    Ok(bounds)
}

fn resolve_starts(family: DistFamily, xs: &[f64], bounds: &[(f64, f64)], opts: &FitOptions) -> Result<Vec<Vec<f64>>> {
    let k = family.param_count();
    let starts = match &opts.starts {
        None => default_starts(family, xs),
        Some(s) if s.is_empty() => vec![vec![1.0; k]],
        Some(s) => s.clone(),
    };
    starts
        .into_iter()
        .map(|s| {
            if s.len() != k || s.iter().any(|v| !v.is_finite()) {
                return Err(Error::Config(format!("start {s:?} does not fit {family}")));
            }
            Ok(s.iter().zip(bounds).map(|(v, b)| v.clamp(b.0, b.1)).collect())
        })
        .collect()
}

fn run_one(obj: &Objective<'_>, start: &[f64], opts: &FitOptions) -> Result<OptimResult> {
    let (lo, hi) = obj.box_u();
    let u0 = obj.to_u(start);
    let mut res = lbfgsb(|u, g| obj.value_grad(u, g), &u0, &lo, &hi, &opts.optimizer)?;
    if opts.simplex_fallback && !res.termination.is_success() {
        let from = if res.f.is_finite() { res.x.clone() } else { u0 };
        let nm = nelder_mead_box(|u| -obj.log_lik(&obj.to_theta(u)), &from, &lo, &hi, &NelderMeadOptions::default())?;
        if nm.f <= res.f || !res.f.is_finite() || nm.termination.is_success() {
            let iterations = res.iterations + nm.iterations;
            let evaluations = res.evaluations + nm.evaluations;
            let f = nm.f.min(res.f);
            let (x, termination) = if nm.f <= res.f || !res.f.is_finite() {
                (nm.x, nm.termination)
            } else {
                (res.x, nm.termination)
            };
            res = OptimResult {
                x,
                f,
                grad: Vec::new(),
                iterations,
                evaluations,
                termination,
            };
        }
    }
    Ok(res)
}

/// Fits `family` to `data` by maximum likelihood.
///
/// Errors only on invalid options. A fit that does not converge from any
/// start comes back with `converged = false` and a diagnostic.
pub fn fit_mle(data: &UnitSample, family: DistFamily, opts: &FitOptions) -> Result<FitResult> {
    fit_values(data.values(), family, opts)
}

pub(crate) fn fit_values(xs: &[f64], family: DistFamily, opts: &FitOptions) -> Result<FitResult> {
    if xs.is_empty() {
        return Err(Error::Config("cannot fit an empty sample".into()));
    }
    let bounds = resolve_bounds(family, opts)?;
    let starts = resolve_starts(family, xs, &bounds, opts)?;
    if starts.is_empty() {
        return Err(Error::Config("no starting points".into()));
    }
    let obj = Objective::new(family, xs, &bounds, opts);
    let make_pv = |v: Vec<f64>| ParamVector::with_bounds(family, v, bounds.clone());

    let degenerate = xs.iter().all(|&x| x == xs[0]);
    if degenerate {
        let start = starts[0].clone();
        let ll = obj.log_lik(&start);
        return Ok(FitResult {
            family,
            estimates: make_pv(start.clone())?,
            log_lik: ll,
            converged: false,
            at_bound: vec![false; start.len()],
            iterations: 0,
            start_point: make_pv(start)?,
            termination: Termination::NonFiniteStart,
            starts_tried: 0,
            starts_converged: 0,
            diagnostic: Some("all observations are identical; the likelihood has no interior maximum".into()),
        });
    }

    let mut best: Option<(usize, OptimResult)> = None;
    let mut n_ok = 0;
    for (i, s) in starts.iter().enumerate() {
        let r = run_one(&obj, s, opts)?;
        if r.termination.is_success() {
            n_ok += 1;
        }
        if !r.f.is_finite() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((_, b)) => {
                let tie = 1e-10 * (1.0 + b.f.abs());
                r.f < b.f - tie
                    || (r.f <= b.f + tie && r.termination.is_success() && !b.termination.is_success())
            }
        };
        if better {
            best = Some((i, r));
        }
    }

    let Some((idx, r)) = best else {
        let start = starts[0].clone();
        return Ok(FitResult {
            family,
            estimates: make_pv(start.clone())?,
            log_lik: f64::NAN,
            converged: false,
            at_bound: vec![false; start.len()],
            iterations: 0,
            start_point: make_pv(start)?,
            termination: Termination::NonFiniteStart,
            starts_tried: starts.len(),
            starts_converged: 0,
            diagnostic: Some("log-likelihood is not finite at any starting point".into()),
        });
    };

    let theta = obj.to_theta(&r.x);
    let log_lik = obj.log_lik(&theta);
    let at_bound = theta
        .iter()
        .zip(&bounds)
        .map(|(&t, &(lo, hi))| (t.ln() - lo.ln()).abs() <= 1e-8 || (t.ln() - hi.ln()).abs() <= 1e-8)
        .collect();
    let converged = r.termination.is_success();
    let diagnostic = (!converged).then(|| format!("best start ended with {:?}", r.termination));
    Ok(FitResult {
        family,
        estimates: make_pv(theta)?,
        log_lik,
        converged,
        at_bound,
        iterations: r.iterations,
        start_point: make_pv(starts[idx].clone())?,
        termination: r.termination,
        starts_tried: starts.len(),
        starts_converged: n_ok,
        diagnostic,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BootstrapCI {
    pub level: f64,
    /// Per-parameter `(lower, upper)`; NaN when the interval is invalid.
    pub intervals: Vec<(f64, f64)>,
    /// Requested resample count.
    pub b: usize,
    pub successes: usize,
    pub failures: usize,
    /// False when more than half of the resample fits failed.
    pub valid: bool,
}

impl BootstrapCI {
    pub fn contains(&self, i: usize, value: f64) -> bool {
        self.valid && {
            let (lo, hi) = self.intervals[i];
            lo <= value && value <= hi
        }
    }
}

fn check_bootstrap_args(b: usize, level: f64) -> Result<()> {
    if b < 2 {
        return Err(Error::Config(format!("bootstrap needs B >= 2, got {b}")));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::Config(format!("confidence level must be in (0, 1), got {level}")));
    }
    Ok(())
}

/// Percentile bootstrap interval for each parameter of `family`.
///
/// Resample `i` draws from the stream `stream(seed, [i])`, so results do not
/// depend on how resamples are scheduled across threads.
pub fn bootstrap_ci(
    data: &UnitSample,
    family: DistFamily,
    b: usize,
    level: f64,
    seed: u64,
    opts: &FitOptions,
) -> Result<BootstrapCI> {
    check_bootstrap_args(b, level)?;
    let fit = fit_mle(data, family, opts)?;
    if !fit.converged {
        return Ok(invalid_ci(family, b, level, 0, b));
    }
    bootstrap_from_fit(data.values(), &fit, b, level, seed, opts)
}

fn invalid_ci(family: DistFamily, b: usize, level: f64, successes: usize, failures: usize) -> BootstrapCI {
    BootstrapCI {
        level,
        intervals: vec![(f64::NAN, f64::NAN); family.param_count()],
        b,
        successes,
        failures,
        valid: false,
    }
}

/// Bootstrap around an existing full-sample fit.
///
/// Each resample is fitted from the full-sample estimate plus the usual
/// start set, so a resample whose optimum sits elsewhere is still found.
pub(crate) fn bootstrap_from_fit(
    xs: &[f64],
    fit: &FitResult,
    b: usize,
    level: f64,
    seed: u64,
    opts: &FitOptions,
) -> Result<BootstrapCI> {
    check_bootstrap_args(b, level)?;
    let family = fit.family;
    let bounds = Some(fit.estimates.bounds().to_vec());
    let n = xs.len();
    let fits: Vec<Option<Vec<f64>>> = (0..b as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream(seed, &[i]);
            let resample: Vec<f64> = (0..n).map(|_| xs[rng.random_range(0..n)]).collect();
            let mut starts = match &opts.starts {
                Some(s) if !s.is_empty() => s.clone(),
                Some(_) => vec![vec![1.0; family.param_count()]],
                None => default_starts(family, &resample),
            };
            starts.insert(0, fit.values().to_vec());
            let warm = FitOptions {
                starts: Some(starts),
                bounds: bounds.clone(),
                ..opts.clone()
            };
            match fit_values(&resample, family, &warm) {
                Ok(f) if f.converged => Some(f.values().to_vec()),
                _ => None,
            }
        })
        .collect();
    let ok: Vec<Vec<f64>> = fits.into_iter().flatten().collect();
    let successes = ok.len();
    let failures = b - successes;
    if 2 * failures > b || successes < 2 {
        return Ok(invalid_ci(family, b, level, successes, failures));
    }
    let alpha = 1.0 - level;
    let intervals = (0..family.param_count())
        .map(|j| {
            let mut col: Vec<f64> = ok.iter().map(|v| v[j]).collect();
            col.sort_by(f64::total_cmp);
            (quantile_type7(&col, alpha / 2.0), quantile_type7(&col, 1.0 - alpha / 2.0))
        })
        .collect();
    Ok(BootstrapCI {
        level,
        intervals,
        b,
        successes,
        failures,
        valid: true,
    })
}

/// Linear-interpolation sample quantile (`h = (n-1)p`) of sorted data.
pub(crate) fn quantile_type7(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}
