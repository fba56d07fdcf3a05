//! Invariant checks shared by the oracle suite and the acceptance target.
//! Each returns a one-line summary, `Err` when the invariant is violated.

use unit_shiha::dists::{dist_cdf, dist_pdf, DistFamily, ParamVector};
use unit_shiha::inference::{ush_log_likelihood, ush_score};
use unit_shiha::sampling::{ush_sample, ush_sample_rejection};
use unit_shiha::shiha::{sh_cdf, sh_pdf, ush_cdf, ush_pdf, ush_quantile};
use unit_shiha::UShParams;

use super::{
    central_diff, ks_critical_one_sample, ks_critical_two_sample, ks_one_sample, ks_two_sample,
    random_points, tanh_sinh,
};

pub type Check = Result<String, String>;

fn verdict(ok: bool, summary: String) -> Check {
    if ok {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn params(v: &[f64]) -> UShParams {
    UShParams::new(v[0], v[1]).unwrap()
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|i| lo + i as f64 * step).collect()
}

/// ∫₀¹ f = 1 within 1e-8 at 50 points of (0.05, 10)².
pub fn normalization() -> Check {
    let mut worst = 0.0f64;
    for v in random_points(11, 50, 2, 0.05, 10.0) {
        let p = params(&v);
        let total = tanh_sinh(|x| ush_pdf(x, &p).unwrap(), 0.0, 1.0);
        worst = worst.max((total - 1.0).abs());
    }
    verdict(worst <= 1e-8, format!("max |∫f - 1| = {worst:.2e} over 50 points"))
}

/// F(x) = 1 - F_Y(-ln x) and f(x) = f_Y(-ln x)/x within 1e-12.
pub fn transformation_identity() -> Check {
    let mut worst = 0.0f64;
    for v in random_points(12, 30, 2, 0.05, 10.0) {
        let p = params(&v);
        for x in grid(0.01, 0.99, 0.01) {
            let y = -x.ln();
            let dc = (ush_cdf(x, &p) - (1.0 - sh_cdf(y, &p).unwrap())).abs();
            let f = ush_pdf(x, &p).unwrap();
            let df = (f - sh_pdf(y, &p).unwrap() / x).abs() / f.max(1.0);
            worst = worst.max(dc).max(df);
        }
    }
    verdict(worst <= 1e-12, format!("max deviation {worst:.2e} over 30 x 99 points"))
}

/// Central difference of F matches f within 1e-6 relative on (0.05, 0.95).
pub fn cdf_pdf_consistency() -> Check {
    let mut worst = 0.0f64;
    for v in random_points(13, 30, 2, 0.1, 8.0) {
        let p = params(&v);
        for x in grid(0.05, 0.95, 0.05) {
            let fd = central_diff(|t| ush_cdf(t, &p), x, 1e-5);
            let f = ush_pdf(x, &p).unwrap();
            worst = worst.max((fd - f).abs() / f);
        }
    }
    verdict(worst <= 1e-6, format!("max relative error {worst:.2e}"))
}

/// The same consistency for every family at 20 random parameter points.
pub fn family_cdf_pdf_consistency() -> Check {
    let mut worst = (0.0f64, DistFamily::USh);
    for (i, family) in DistFamily::ALL.into_iter().enumerate() {
        for v in random_points(100 + i as u64, 20, family.param_count(), 0.3, 5.0) {
            let theta = ParamVector::new(family, v).unwrap();
            for x in grid(0.05, 0.95, 0.05) {
                let fd = central_diff(|t| dist_cdf(family, t, &theta).unwrap(), x, 1e-5);
                let f = dist_pdf(family, x, &theta).unwrap();
                // floor keeps underflowed tails from dominating the ratio
                let err = (fd - f).abs() / f.max(1e-3);
                if err > worst.0 {
                    worst = (err, family);
                }
            }
        }
    }
    verdict(worst.0 <= 1e-6, format!("max relative error {:.2e} ({})", worst.0, worst.1))
}

/// F(Q(p)) = p within 1e-9 for p = 0.01, ..., 0.99.
pub fn quantile_inversion() -> Check {
    let mut worst = 0.0f64;
    for v in random_points(14, 30, 2, 0.05, 10.0) {
        let p = params(&v);
        for prob in grid(0.01, 0.99, 0.01) {
            let q = ush_quantile(prob, &p, 1e-12).map_err(|e| e.to_string())?;
            worst = worst.max((ush_cdf(q, &p) - prob).abs());
        }
    }
    verdict(worst <= 1e-9, format!("max |F(Q(p)) - p| = {worst:.2e}"))
}

/// Analytic score against central differences of the log-likelihood on 20
/// random (data, parameter) draws.
pub fn score_vs_finite_difference() -> Check {
    let truths = random_points(15, 20, 2, 0.2, 4.0);
    let evals = random_points(16, 20, 2, 0.2, 4.0);
    let mut worst = 0.0f64;
    for (i, (t, e)) in truths.iter().zip(&evals).enumerate() {
        let data = ush_sample(50 + 10 * i, &params(t), 1000 + i as u64).unwrap();
        let (w, eta) = (e[0], e[1]);
        let (dw, de) = ush_score(&data, &params(e));
        let hw = 1e-6 * w.max(1.0);
        let he = 1e-6 * eta.max(1.0);
        let fw = central_diff(|s| ush_log_likelihood(&data, &params(&[s, eta])), w, hw);
        let fe = central_diff(|s| ush_log_likelihood(&data, &params(&[w, s])), eta, he);
        worst = worst
            .max((dw - fw).abs() / dw.abs().max(1.0))
            .max((de - fe).abs() / de.abs().max(1.0));
    }
    verdict(worst <= 1e-5, format!("max relative error {worst:.2e} over 20 draws"))
}

/// One-sample KS of 10⁴ mixture draws from USh(0.6, 1.8) at α = 0.01.
pub fn sampler_one_sample_ks() -> Check {
    let p = UShParams::new(0.6, 1.8).unwrap();
    let n = 10_000;
    let xs = ush_sample(n, &p, 2024).unwrap();
    let d = ks_one_sample(xs.values(), |x| ush_cdf(x, &p));
    let crit = ks_critical_one_sample(n);
    verdict(d < crit, format!("D = {d:.4}, critical {crit:.4}"))
}

/// Two-sample KS between mixture and rejection draws from USh(2, 1.4).
pub fn mixture_vs_rejection_ks() -> Check {
    let p = UShParams::new(2.0, 1.4).unwrap();
    let n = 10_000;
    let a = ush_sample(n, &p, 31).unwrap();
    let b = ush_sample_rejection(n, &p, 32).map_err(|e| e.to_string())?;
    let d = ks_two_sample(a.values(), b.values());
    let crit = ks_critical_two_sample(n, n);
    verdict(d < crit, format!("D = {d:.4}, critical {crit:.4}"))
}
