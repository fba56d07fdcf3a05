//! The Shiha law on [0, ∞) and the unit Shiha law on (0, 1].
//!
//! If `Y ~ Sh(ω, η)` then `X = exp(-Y) ~ USh(ω, η)`, so `F_X(x) = 1 - F_Y(-ln x)`
//! and `f_X(x) = f_Y(-ln x) / x`. Equivalently the Shiha law is the mixture
//! `p₁·Exp(ω) + p₂·Exp(2ω) + p₃·Gamma(2, 2ω)` with weights
//! `(ω, η, 2η) / (ω + 3η)`, which is what the exact sampler uses.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate_semi_infinite, QuadOptions};
use crate::roots::{brent, BrentOptions};

/// Shape parameters `(ω, η)` of the (unit) Shiha distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UShParams {
    omega: f64,
    eta: f64,
}

impl UShParams {
    /// Requires `ω > 0` and `η > 0`.
    pub fn new(omega: f64, eta: f64) -> Result<Self> {
        if !(eta > 0.0) {
            return Err(Error::InvalidParams(format!(
                "eta must be > 0 (use with_boundary for eta = 0), got {eta}"
            )));
        }
        Self::with_boundary(omega, eta)
    }

    /// Also admits `η = 0`, where the law reduces to Beta(ω, 1).
    pub fn with_boundary(omega: f64, eta: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::InvalidParams(format!("omega must be > 0, got {omega}")));
        }
        if !(eta >= 0.0 && eta.is_finite()) {
            return Err(Error::InvalidParams(format!("eta must be >= 0, got {eta}")));
        }
        Ok(Self { omega, eta })
    }

    /// Caller guarantees `omega > 0`, `eta >= 0`.
    pub(crate) fn new_unchecked(omega: f64, eta: f64) -> Self {
        Self { omega, eta }
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// `ω + 3η`.
    pub fn normalizer(&self) -> f64 {
        self.omega + 3.0 * self.eta
    }

    /// `ω / (ω + 3η)`.
    pub fn base_weight(&self) -> f64 {
        self.omega / self.normalizer()
    }

    /// Weights of the Exp(ω), Exp(2ω) and Gamma(2, 2ω) components.
    pub fn mixture_weights(&self) -> [f64; 3] {
        let s = self.normalizer();
        [self.omega / s, self.eta / s, 2.0 * self.eta / s]
    }
}

// ---------------------------------------------------------------------------
// Shiha (base) distribution
// ---------------------------------------------------------------------------

fn check_y(y: f64) -> Result<()> {
    if y >= 0.0 && !y.is_nan() {
        Ok(())
    } else {
        Err(domain("y", y, "[0, ∞)"))
    }
}

pub(crate) fn sh_pdf_unchecked(y: f64, p: &UShParams) -> f64 {
    let (w, e) = (p.omega, p.eta);
    let decay = (-w * y).exp();
    p.base_weight() * (w + (2.0 * e + 8.0 * w * e * y) * decay) * decay
}

// 1 - F written with expm1 so that small y keeps full relative precision.
pub(crate) fn sh_cdf_unchecked(y: f64, p: &UShParams) -> f64 {
    if y == f64::INFINITY {
        return 1.0;
    }
    let (w, e) = (p.omega, p.eta);
    let one_minus_e1 = -(-w * y).exp_m1();
    let one_minus_e2 = -(-2.0 * w * y).exp_m1();
    let e2 = (-2.0 * w * y).exp();
    let num = w * one_minus_e1 + 3.0 * e * one_minus_e2 - 4.0 * w * e * y * e2;
    (num / p.normalizer()).clamp(0.0, 1.0)
}

pub(crate) fn sh_sf_unchecked(y: f64, p: &UShParams) -> f64 {
    let (w, e) = (p.omega, p.eta);
    let decay = (-w * y).exp();
    ((w + (3.0 * e + 4.0 * w * e * y) * decay) * decay / p.normalizer()).clamp(0.0, 1.0)
}

/// Shiha density on `y >= 0`.
pub fn sh_pdf(y: f64, p: &UShParams) -> Result<f64> {
    check_y(y)?;
    Ok(sh_pdf_unchecked(y, p))
}

/// Shiha distribution function on `y >= 0`.
pub fn sh_cdf(y: f64, p: &UShParams) -> Result<f64> {
    check_y(y)?;
    Ok(sh_cdf_unchecked(y, p))
}

/// Shiha survival function `1 - F(y)`, accurate in the upper tail.
pub fn sh_sf(y: f64, p: &UShParams) -> Result<f64> {
    check_y(y)?;
    Ok(sh_sf_unchecked(y, p))
}

// ---------------------------------------------------------------------------
// Unit Shiha distribution
// ---------------------------------------------------------------------------

fn check_unit_closed(x: f64) -> Result<()> {
    if x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(domain("x", x, "(0, 1]"))
    }
}

/// ln f(x) given `ln x`; the bracket is divided through by `x^(ω-1)` so it
/// stays in [ω, ∞) and never overflows for tiny x.
#[inline]
pub(crate) fn ush_log_pdf_from_ln(lx: f64, p: &UShParams) -> f64 {
    let (w, e) = (p.omega, p.eta);
    let xw = (w * lx).exp();
    let bracket = w + (2.0 * e - 8.0 * w * e * lx) * xw;
    w.ln() - p.normalizer().ln() + (w - 1.0) * lx + bracket.ln()
}

/// Unit Shiha density on (0, 1].
///
/// Diverges as x → 0⁺ when ω < 1; it stays finite for every representable
/// x > 0 except where `x^(ω-1)` itself overflows, in which case `+∞` is
/// returned and [`ush_log_pdf`] should be used instead.
pub fn ush_pdf(x: f64, p: &UShParams) -> Result<f64> {
    check_unit_closed(x)?;
    let (w, e) = (p.omega, p.eta);
    let lx = x.ln();
    let xw = (w * lx).exp();
    let bracket = w + (2.0 * e - 8.0 * w * e * lx) * xw;
    let direct = p.base_weight() * ((w - 1.0) * lx).exp() * bracket;
    if direct.is_finite() {
        Ok(direct)
    } else {
        Ok(ush_log_pdf_from_ln(lx, p).exp())
    }
}

/// Natural log of the unit Shiha density.
pub fn ush_log_pdf(x: f64, p: &UShParams) -> Result<f64> {
    check_unit_closed(x)?;
    Ok(ush_log_pdf_from_ln(x.ln(), p))
}

/// Unit Shiha distribution function; total on ℝ (0 below the support, 1 above).
pub fn ush_cdf(x: f64, p: &UShParams) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let (w, e) = (p.omega, p.eta);
    let lx = x.ln();
    let xw = (w * lx).exp();
    let value = (w * xw + (3.0 * e - 4.0 * w * e * lx) * xw * xw) / p.normalizer();
    value.clamp(0.0, 1.0)
}

/// Unit Shiha survival function `1 - F(x)`, accurate as x → 1⁻.
pub fn ush_sf(x: f64, p: &UShParams) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 {
        return 1.0;
    }
    if x >= 1.0 {
        return 0.0;
    }
    sh_cdf_unchecked(-x.ln(), p)
}

/// Hazard rate `f(x) / (1 - F(x))` on (0, 1).
///
/// The survival term is evaluated through the base law so that the ratio
/// stays accurate next to x = 1; once it is no longer representable the
/// result is `+∞`.
pub fn ush_hazard(x: f64, p: &UShParams) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain("x", x, "(0, 1)"));
    }
    let (w, e) = (p.omega, p.eta);
    let lx = x.ln();
    let xw = (w * lx).exp();
    let numerator = w * ((w - 1.0) * lx).exp() * (w + 2.0 * e * xw * (1.0 - 4.0 * w * lx));
    let denominator = p.normalizer() * sh_cdf_unchecked(-lx, p);
    if denominator <= 0.0 {
        return Ok(f64::INFINITY);
    }
    let h = numerator / denominator;
    Ok(if h.is_finite() { h } else { f64::INFINITY })
}

/// Quantile `x_p` solving `F(x_p) = prob`.
///
/// The search runs over `y = -ln x` on a doubling bracket, using the base
/// survival function for `prob <= 1/2` and the base CDF otherwise, so both
/// tails keep their precision. Fails if `|F(x_p) - prob| > tol`.
pub fn ush_quantile(prob: f64, p: &UShParams, tol: f64) -> Result<f64> {
    if !(prob > 0.0 && prob < 1.0) {
        return Err(domain("prob", prob, "(0, 1)"));
    }
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let residual = |y: f64| {
        if prob <= 0.5 {
            sh_sf_unchecked(y, p) - prob
        } else {
            (1.0 - prob) - sh_cdf_unchecked(y, p)
        }
    };

    let mut hi = 1.0 / p.omega;
    let mut doublings = 0;
    while residual(hi) > 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 2100 || !hi.is_finite() {
            return Err(Error::NoConvergence {
                routine: "quantile bracketing",
                iterations: doublings,
                achieved: residual(hi),
            });
        }
    }
    let root = brent(residual, 0.0, hi, &BrentOptions::default())?;
    let x = (-root.x).exp();
    let achieved = (ush_cdf(x, p) - prob).abs();
    if achieved > tol {
        return Err(Error::NoConvergence {
            routine: "quantile",
            iterations: root.iterations,
            achieved,
        });
    }
    Ok(x)
}

/// Raw moment `E[X^k]`.
pub fn ush_raw_moment(k: u32, p: &UShParams) -> f64 {
    let (w, e) = (p.omega, p.eta);
    let k = f64::from(k);
    let two_w = k + 2.0 * w;
    p.base_weight() * (w / (k + w) + 2.0 * e / two_w + 8.0 * w * e / (two_w * two_w))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentSummary {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
    /// `E[X], E[X²], E[X³], E[X⁴]`.
    pub raw_moments: [f64; 4],
}

/// Mean, variance, skewness and (non-excess) kurtosis from the first four
/// raw moments.
pub fn ush_moment_summary(p: &UShParams) -> MomentSummary {
    let m = [1, 2, 3, 4].map(|k| ush_raw_moment(k, p));
    let (m1, m2, m3, m4) = (m[0], m[1], m[2], m[3]);
    let variance = m2 - m1 * m1;
    let skewness = (m3 - 3.0 * m2 * m1 + 2.0 * m1.powi(3)) / variance.powf(1.5);
    let kurtosis =
        (m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1.powi(4)) / (variance * variance);
    MomentSummary {
        mean: m1,
        variance,
        skewness,
        kurtosis,
        raw_moments: m,
    }
}

/// Moment generating function `E[e^{tX}]` as the power series in the raw
/// moments.
///
/// With `terms = None` the series is summed until a term falls below
/// `1e-14 × |partial sum|` (at most 200 terms); otherwise exactly `terms`
/// terms `κ = 0..terms` are added.
pub fn ush_mgf(t: f64, p: &UShParams, terms: Option<usize>) -> f64 {
    const CAP: usize = 200;
    let limit = terms.unwrap_or(CAP).max(1);
    let mut factor = 1.0; // t^κ / κ!
    let mut sum = 0.0;
    for k in 0..limit {
        if k > 0 {
            factor *= t / k as f64;
        }
        let term = factor * ush_raw_moment(k as u32, p);
        sum += term;
        if terms.is_none() && k > 0 && (k as f64) > t.abs() && term.abs() < 1e-14 * sum.abs() {
            break;
        }
    }
    sum
}

/// Differential entropy `-E[ln f(X)]`.
///
/// Integrated in `y = -ln x`, where `ln f_X(x) = ln f_Y(y) + y` and the
/// x → 0 singularity becomes an exponential tail. `tol` is the absolute
/// quadrature tolerance.
pub fn ush_entropy(p: &UShParams, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let (w, e) = (p.omega, p.eta);
    let ln_c = w.ln() - p.normalizer().ln();
    let integrand = |y: f64| {
        let decay = (-w * y).exp();
        let log_f = ln_c + (w + (2.0 * e + 8.0 * w * e * y) * decay).ln() - w * y;
        let f = log_f.exp();
        if f == 0.0 {
            0.0
        } else {
            -f * (log_f + y)
        }
    };
    let opts = QuadOptions {
        abs_tol: tol,
        rel_tol: 0.0,
        max_subdivisions: 4000,
    };
    Ok(integrate_semi_infinite(integrand, 0.0, 1.0 / w, &opts)?.value)
}

/// Strength `X₁ ~ USh(ω₁, η₁)` against stress `X₂ ~ USh(ω₂, η₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StressStrengthInput {
    pub strength: UShParams,
    pub stress: UShParams,
}

/// Closed-form reliability `R = P(X₂ < X₁)`.
pub fn ush_stress_strength(input: &StressStrengthInput) -> f64 {
    let (w1, e1) = (input.strength.omega, input.strength.eta);
    let (w2, e2) = (input.stress.omega, input.stress.eta);
    let a = 2.0 * w1 + w2;
    let b = w1 + 2.0 * w2;
    let s = 2.0 * w1 + 2.0 * w2;
    let bracket = w1 * w2 / (w1 + w2)
        + w2 * e1 * (2.0 / a + 8.0 * w1 / (a * a))
        + w1 * e2 * (3.0 / b + 4.0 * w2 / (b * b))
        + e1 * e2 * (6.0 / s + (24.0 * w1 + 8.0 * w2) / (s * s) + 64.0 * w1 * w2 / (s * s * s));
    w1 / ((w1 + 3.0 * e1) * (w2 + 3.0 * e2)) * bracket
}
