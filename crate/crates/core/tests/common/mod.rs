//! Helpers shared by the integration suites. The quadrature here is a
//! double-exponential rule written independently of the crate's adaptive
//! Gauss–Kronrod integrator, so it can serve as an oracle for it.
#![allow(dead_code)]

pub mod checks;
pub mod tables;

use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tanh–sinh quadrature of `f` over `(a, b)`.
///
/// Nodes are placed by their distance to the nearer endpoint, so integrable
/// power singularities as strong as `x^{-0.95}` are resolved.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let h = 1.0 / 256.0;
    let mut sum = 0.0;
    let mut k = 0i64;
    loop {
        let t = k as f64 * h;
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u).exp();
        // distance from the nearer endpoint: (b - a) / (1 + e^{2u})
        let d = (b - a) * e / (1.0 + e);
        let w = half * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if d <= 0.0 || w < 1e-300 {
            break;
        }
        // nodes that round onto an endpoint carry negligible weight
        let (right, left) = (b - d, a + d);
        if right < b {
            sum += w * f(right);
        }
        if k > 0 && left > a {
            sum += w * f(left);
        }
        if t > 8.0 {
            break;
        }
        k += 1;
    }
    sum * h
}

/// Central difference of `f` at `x`.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` points drawn uniformly from `lo..hi` in every coordinate.
pub fn random_points(seed: u64, count: usize, dims: usize, lo: f64, hi: f64) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| (0..dims).map(|_| r.random_range(lo..hi)).collect())
        .collect()
}

/// Asymptotic one-sample KS critical value at α = 0.01.
pub fn ks_critical_one_sample(n: usize) -> f64 {
    1.6276 / (n as f64).sqrt()
}

/// Asymptotic two-sample KS critical value at α = 0.01.
pub fn ks_critical_two_sample(n: usize, m: usize) -> f64 {
    1.6276 * ((n + m) as f64 / (n * m) as f64).sqrt()
}

/// Two-sample KS distance.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / a.len() as f64 - j as f64 / b.len() as f64).abs());
    }
    d
}

/// One-sample KS distance against `cdf`.
pub fn ks_one_sample<F: Fn(f64) -> f64>(xs: &[f64], cdf: F) -> f64 {
    let mut xs = xs.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter().enumerate().fold(0.0, |d, (i, &x)| {
        let f = cdf(x);
        d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n)
    })
}
