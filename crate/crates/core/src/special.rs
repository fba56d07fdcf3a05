//! Special functions needed by the Beta family.

use statrs::function::{beta, gamma};

use crate::error::{domain, Error, Result};

/// ln Γ(z) for z > 0.
pub fn log_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(domain("z", z, "(0, ∞)"));
    }
    Ok(gamma::ln_gamma(z))
}

/// ln B(a, b).
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    Ok(log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?)
}

/// Regularized incomplete beta function I_x(a, b).
pub fn reg_inc_beta(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("a", a, "(0, ∞)"));
    }
    if !(b > 0.0) || !b.is_finite() {
        return Err(domain("b", b, "(0, ∞)"));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("x", x, "[0, 1]"));
    }
    beta::checked_beta_reg(a, b, x).map_err(|_| Error::NoConvergence {
        routine: "incomplete beta continued fraction",
        iterations: 0,
        achieved: f64::NAN,
    })
}
