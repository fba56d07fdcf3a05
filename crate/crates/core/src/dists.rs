//! The unit Shiha law and seven competitor unit-interval families behind one
//! evaluation interface.
//!
//! | family | parameters | density |
//! |--------|------------|---------|
//! | USh    | ω, η       | `ω/(ω+3η) [ω x^{ω-1} + (2η - 8ωη ln x) x^{2ω-1}]` |
//! | Kw     | ω, η       | `ωη x^{η-1} (1 - x^η)^{ω-1}` |
//! | UB     | ω, η       | `(6ω/η)(1 - x^{ω/η}) x^{2ω/η - 1}` |
//! | UE     | ω, η       | `2ωη/(1-x²) ((1+x)/(1-x))^η exp[ω(1 - ((1+x)/(1-x))^η)]` |
//! | EUEHL  | ω, η, α    | `2ωηα x^{ω-1}/(1+x^ω)² v^{η-1} (1 - v^η)^{α-1}`, `v = (1-x^ω)/(1+x^ω)` |
//! | UEL    | ω, η, α    | `(ηωα/x) t^{-ω-1} (1 - t^{-ω})^{α-1}`, `t = 1 - η ln x` |
//! | Beta   | ω, η       | `x^{ω-1}(1-x)^{η-1} / B(ω, η)` |
//! | TL     | ω          | `2ω x^{ω-1}(1-x)(2-x)^{ω-1}` |
//!
//! Distribution functions are the antiderivatives of these densities; each
//! one is checked against quadrature in the tests. Everything is evaluated in
//! log space (`expm1`/`ln_1p` where a difference from one appears), so values
//! of x within a few ulps of 0 or 1 stay finite.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::roots::bisect_increasing;
use crate::shiha::{ush_cdf, ush_log_pdf_from_ln, ush_quantile, UShParams};
use crate::special::{log_beta, reg_inc_beta};

/// Default box for every parameter of every family.
pub const DEFAULT_BOUNDS: (f64, f64) = (1e-6, 1000.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DistFamily {
    USh,
    Kw,
    UB,
    UE,
    EUEHL,
    UEL,
    Beta,
    TL,
}

impl DistFamily {
    /// All families in reporting order.
    pub const ALL: [DistFamily; 8] = [
        DistFamily::USh,
        DistFamily::Kw,
        DistFamily::UB,
        DistFamily::UE,
        DistFamily::EUEHL,
        DistFamily::UEL,
        DistFamily::Beta,
        DistFamily::TL,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            DistFamily::USh => "USh",
            DistFamily::Kw => "Kw",
            DistFamily::UB => "UB",
            DistFamily::UE => "UE",
            DistFamily::EUEHL => "EUEHL",
            DistFamily::UEL => "UEL",
            DistFamily::Beta => "Beta",
            DistFamily::TL => "TL",
        }
    }

    pub fn param_count(self) -> usize {
        self.param_names().len()
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            DistFamily::EUEHL | DistFamily::UEL => &["omega", "eta", "alpha"],
            DistFamily::TL => &["omega"],
            _ => &["omega", "eta"],
        }
    }
}

impl fmt::Display for DistFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DistFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DistFamily::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Config(format!("unknown distribution family '{s}'")))
    }
}

/// Parameter values together with the box they must lie in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamVector {
    values: Vec<f64>,
    bounds: Vec<(f64, f64)>,
}

impl ParamVector {
    /// Values for `family` inside [`DEFAULT_BOUNDS`].
    pub fn new(family: DistFamily, values: Vec<f64>) -> Result<Self> {
        let bounds = vec![DEFAULT_BOUNDS; values.len()];
        Self::with_bounds(family, values, bounds)
    }

    pub fn with_bounds(family: DistFamily, values: Vec<f64>, bounds: Vec<(f64, f64)>) -> Result<Self> {
        if values.len() != family.param_count() || bounds.len() != values.len() {
            return Err(Error::InvalidParams(format!(
                "{family} takes {} parameters, got {} values and {} bounds",
                family.param_count(),
                values.len(),
                bounds.len()
            )));
        }
        for (i, (&v, &(lo, hi))) in values.iter().zip(&bounds).enumerate() {
            if !(lo > 0.0 && lo < hi) {
                return Err(Error::InvalidParams(format!(
                    "bound [{lo}, {hi}] for {} must satisfy 0 < lower < upper",
                    family.param_names()[i]
                )));
            }
            if !(v >= lo && v <= hi) {
                return Err(Error::InvalidParams(format!(
                    "{} = {v} is outside [{lo}, {hi}]",
                    family.param_names()[i]
                )));
            }
        }
        Ok(Self { values, bounds })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_arity(family: DistFamily, theta: &[f64]) -> Result<()> {
    if theta.len() != family.param_count() || theta.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidParams(format!(
            "{family} needs {} positive parameters, got {theta:?}",
            family.param_count()
        )));
    }
    Ok(())
}

/// `ln(1 - e^a)` for `a <= 0`.
#[inline]
fn ln_one_minus_exp(a: f64) -> f64 {
    if a > -std::f64::consts::LN_2 {
        (-a.exp_m1()).ln()
    } else {
        (-a.exp()).ln_1p()
    }
}

/// `(ln v, ln(1 - v^η))` for `v = (1 - x^ω)/(1 + x^ω)`. Once `x^ω` is
/// tiny, `1 - v^η = 2η x^ω (1 + O(x^ω))` replaces the form that underflows.
fn euehl_logs(w: f64, e: f64, lx: f64) -> (f64, f64) {
    let wl = w * lx;
    let ln_v = ln_one_minus_exp(wl) - wl.exp().ln_1p();
    let ln_tail = if wl < -600.0 {
        (2.0 * e).ln() + wl
    } else {
        ln_one_minus_exp(e * ln_v)
    };
    (ln_v, ln_tail)
}

/// Log density without argument checks; `x` must be in (0, 1) and `theta`
/// must hold `param_count` positive values.
pub(crate) fn log_pdf_unchecked(family: DistFamily, x: f64, theta: &[f64]) -> f64 {
    let lx = x.ln();
    match family {
        DistFamily::USh => ush_log_pdf_from_ln(lx, &UShParams::new_unchecked(theta[0], theta[1])),
        DistFamily::Kw => {
            let (w, e) = (theta[0], theta[1]);
            (w * e).ln() + (e - 1.0) * lx + (w - 1.0) * ln_one_minus_exp(e * lx)
        }
        DistFamily::UB => {
            let r = theta[0] / theta[1];
            (6.0 * r).ln() + ln_one_minus_exp(r * lx) + (2.0 * r - 1.0) * lx
        }
        DistFamily::UE => {
            let (w, e) = (theta[0], theta[1]);
            let (lp, lm) = (x.ln_1p(), (-x).ln_1p());
            let z = lp - lm;
            (2.0 * w * e).ln() - (lp + lm) + e * z - w * (e * z).exp_m1()
        }
        DistFamily::EUEHL => {
            let (w, e, a) = (theta[0], theta[1], theta[2]);
            let (ln_v, ln_tail) = euehl_logs(w, e, lx);
            (2.0 * w * e * a).ln() + (w - 1.0) * lx - 2.0 * (w * lx).exp().ln_1p()
                + (e - 1.0) * ln_v
                + (a - 1.0) * ln_tail
        }
        DistFamily::UEL => {
            let (w, e, a) = (theta[0], theta[1], theta[2]);
            let ln_t = (-e * lx).ln_1p();
            (e * w * a).ln() - lx - (w + 1.0) * ln_t + (a - 1.0) * ln_one_minus_exp(-w * ln_t)
        }
        DistFamily::Beta => {
            let (a, b) = (theta[0], theta[1]);
            let lb = log_beta(a, b).unwrap_or(f64::NAN);
            (a - 1.0) * lx + (b - 1.0) * (-x).ln_1p() - lb
        }
        DistFamily::TL => {
            let w = theta[0];
            (2.0 * w).ln() + (w - 1.0) * lx + (-x).ln_1p() + (w - 1.0) * (2.0 - x).ln()
        }
    }
}

/// Sum of log densities over `xs`, which must lie in (0, 1).
pub fn log_likelihood(family: DistFamily, xs: &[f64], theta: &[f64]) -> Result<f64> {
    check_arity(family, theta)?;
    if let Some(&bad) = xs.iter().find(|x| !(**x > 0.0 && **x < 1.0)) {
        return Err(domain("x", bad, "(0, 1)"));
    }
    Ok(log_likelihood_unchecked(family, xs, theta))
}

pub(crate) fn log_likelihood_unchecked(family: DistFamily, xs: &[f64], theta: &[f64]) -> f64 {
    if family == DistFamily::Beta {
        let (a, b) = (theta[0], theta[1]);
        let lb = match log_beta(a, b) {
            Ok(v) => v,
            Err(_) => return f64::NAN,
        };
        return xs
            .iter()
            .map(|&x| (a - 1.0) * x.ln() + (b - 1.0) * (-x).ln_1p())
            .sum::<f64>()
            - xs.len() as f64 * lb;
    }
    xs.iter().map(|&x| log_pdf_unchecked(family, x, theta)).sum()
}

fn check_open_unit(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(domain("x", x, "(0, 1)"))
    }
}

/// Log density on (0, 1); `-∞` where the density underflows to zero.
pub fn dist_log_pdf(family: DistFamily, x: f64, theta: &ParamVector) -> Result<f64> {
    check_open_unit(x)?;
    check_arity(family, theta.values())?;
    let v = log_pdf_unchecked(family, x, theta.values());
    if v.is_nan() {
        return Err(Error::Internal(format!("{family} log density is NaN at x = {x}")));
    }
    Ok(v)
}

/// Density on (0, 1).
pub fn dist_pdf(family: DistFamily, x: f64, theta: &ParamVector) -> Result<f64> {
    Ok(dist_log_pdf(family, x, theta)?.exp())
}

/// Distribution function; total on ℝ (0 below the support, 1 above).
pub fn dist_cdf(family: DistFamily, x: f64, theta: &ParamVector) -> Result<f64> {
    let t = theta.values();
    check_arity(family, t)?;
    if x.is_nan() {
        return Err(domain("x", x, "ℝ"));
    }
    if x <= 0.0 {
        return Ok(0.0);
    }
    if x >= 1.0 {
        return Ok(1.0);
    }
    Ok(cdf_unchecked(family, x, t))
}

pub(crate) fn cdf_unchecked(family: DistFamily, x: f64, t: &[f64]) -> f64 {
    let lx = x.ln();
    let v = match family {
        DistFamily::USh => ush_cdf(x, &UShParams::new_unchecked(t[0], t[1])),
        DistFamily::Kw => -(t[0] * ln_one_minus_exp(t[1] * lx)).exp_m1(),
        DistFamily::UB => {
            let s = (t[0] / t[1] * lx).exp();
            s * s * (3.0 - 2.0 * s)
        }
        DistFamily::UE => {
            let z = x.ln_1p() - (-x).ln_1p();
            -(-t[0] * (t[1] * z).exp_m1()).exp_m1()
        }
        DistFamily::EUEHL => {
            let (w, e, a) = (t[0], t[1], t[2]);
            let (_, ln_tail) = euehl_logs(w, e, lx);
            (a * ln_tail).exp()
        }
        DistFamily::UEL => {
            let (w, e, a) = (t[0], t[1], t[2]);
            let ln_t = (-e * lx).ln_1p();
            -(a * ln_one_minus_exp(-w * ln_t)).exp_m1()
        }
        DistFamily::Beta => reg_inc_beta(t[0], t[1], x).unwrap_or(f64::NAN),
        DistFamily::TL => (t[0] * (lx + (2.0 - x).ln())).exp(),
    };
    v.clamp(0.0, 1.0)
}

/// Quantile function. USh uses its dedicated root finder; the other
/// families are inverted by bisection on the distribution function.
pub fn dist_quantile(family: DistFamily, prob: f64, theta: &ParamVector) -> Result<f64> {
    if !(prob > 0.0 && prob < 1.0) {
        return Err(domain("prob", prob, "(0, 1)"));
    }
    let t = theta.values();
    check_arity(family, t)?;
    if family == DistFamily::USh {
        return ush_quantile(prob, &UShParams::new_unchecked(t[0], t[1]), 1e-10);
    }
    Ok(bisect_increasing(
        |x| cdf_unchecked(family, x, t),
        prob,
        0.0,
        1.0,
        1e-15,
        200,
    ))
}
