//! Random variate generation for the unit Shiha law.
//!
//! [`ush_sample`] draws from the exact mixture representation. The rejection
//! sampler proposes from Beta(ω, 1) (`X = U^{1/ω}`) and is kept as an
//! independent check: since `(-ln x)·x^ω ≤ 1/(eω)` on (0, 1],
//!
//! ```text
//! f(x) / (ω x^{ω-1}) = (ω + (2η - 8ωη ln x) x^ω) / (ω + 3η) ≤ (ω + (2 + 8/e) η) / (ω + 3η) = M,
//! ```
//!
//! so the acceptance rate is `1/M`, which lies in `[0.61, 1]`.

use rand::Rng;
use rand_distr::{Distribution, Exp, Gamma};

use crate::error::{Error, Result};
use crate::rng;
use crate::sample::UnitSample;
use crate::shiha::{ush_log_pdf, UShParams};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Config("sample size must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Draws `n` values by picking a mixture component and mapping `X = e^{-Y}`.
///
/// Draws that round to exactly 0 or 1 in double precision are redrawn so the
/// output lies strictly inside (0, 1).
pub fn ush_sample_with<R: Rng + ?Sized>(n: usize, p: &UShParams, rng: &mut R) -> Vec<f64> {
    let w = p.omega();
    let [p1, p2, _] = p.mixture_weights();
    let slow = Exp::new(w).expect("omega > 0");
    let fast = Exp::new(2.0 * w).expect("omega > 0");
    let gamma = Gamma::new(2.0, 1.0 / (2.0 * w)).expect("omega > 0");
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u: f64 = rng.random();
        let y = if u < p1 {
            slow.sample(rng)
        } else if u < p1 + p2 {
            fast.sample(rng)
        } else {
            gamma.sample(rng)
        };
        let x = (-y).exp();
        if x > 0.0 && x < 1.0 {
            out.push(x);
        }
    }
    out
}

/// Exact mixture sampler; deterministic given `seed`.
pub fn ush_sample(n: usize, p: &UShParams, seed: u64) -> Result<UnitSample> {
    check_n(n)?;
    let mut rng = rng::stream(seed, &[]);
    let values = ush_sample_with(n, p, &mut rng);
    Ok(UnitSample::generated(
        values,
        format!("USh({}, {}) mixture draw", p.omega(), p.eta()),
    ))
}

/// Envelope constant `M` of the Beta(ω, 1) proposal.
pub fn rejection_envelope_constant(p: &UShParams) -> f64 {
    let e = std::f64::consts::E;
    (p.omega() + (2.0 + 8.0 / e) * p.eta()) / p.normalizer()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RejectionStats {
    pub proposed: u64,
    pub accepted: u64,
}

impl RejectionStats {
    pub fn acceptance_rate(&self) -> f64 {
        self.accepted as f64 / self.proposed as f64
    }
}

/// Rejection sampler driven by a caller-supplied generator.
///
/// An envelope violation (`f > M·g` anywhere) is reported as
/// [`Error::Internal`].
pub fn ush_sample_rejection_with<R: Rng + ?Sized>(
    n: usize,
    p: &UShParams,
    rng: &mut R,
) -> Result<(Vec<f64>, RejectionStats)> {
    let w = p.omega();
    let log_m = rejection_envelope_constant(p).ln();
    let mut stats = RejectionStats::default();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u: f64 = 1.0 - rng.random::<f64>();
        let x = u.powf(1.0 / w);
        if !(x > 0.0 && x < 1.0) {
            continue;
        }
        stats.proposed += 1;
        let log_g = w.ln() + (w - 1.0) * x.ln();
        let log_ratio = ush_log_pdf(x, p)? - log_g - log_m;
        if log_ratio > 1e-12 {
            return Err(Error::Internal(format!(
                "rejection envelope violated at x = {x}: log f/(M g) = {log_ratio}"
            )));
        }
        let v: f64 = rng.random();
        if v.ln() <= log_ratio {
            stats.accepted += 1;
            out.push(x);
        }
    }
    Ok((out, stats))
}

/// Rejection sampler; deterministic given `seed`.
pub fn ush_sample_rejection(n: usize, p: &UShParams, seed: u64) -> Result<UnitSample> {
    check_n(n)?;
    let mut rng = rng::stream(seed, &[]);
    let (values, _) = ush_sample_rejection_with(n, p, &mut rng)?;
    Ok(UnitSample::generated(
        values,
        format!("USh({}, {}) rejection draw", p.omega(), p.eta()),
    ))
}
