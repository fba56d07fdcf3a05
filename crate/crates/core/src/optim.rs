//! Box-constrained minimization.
//!
//! [`lbfgsb`] follows the limited-memory BFGS-B iteration: generalized Cauchy
//! point along the projected steepest-descent path, subspace Newton step on
//! the free variables (projected, with backtracking when the projection
//! spoils descent), and a Moré–Thuente line search. The limited-memory
//! matrix is rebuilt densely from the stored pairs each iteration, which is
//! exact and cheap for the handful of parameters fitted here.
//!
//! [`nelder_mead_box`] is the derivative-free fallback.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// Projected-gradient infinity norm at or below `pgtol`.
    ProjectedGradient,
    /// Relative objective reduction at or below `rel_reduction`.
    RelativeReduction,
    /// Simplex diameter and spread of values below tolerance.
    SimplexConverged,
    MaxIterations,
    MaxEvaluations,
    LineSearchFailed,
    /// Objective or gradient not finite at the starting point.
    NonFiniteStart,
}

impl Termination {
    pub fn is_success(self) -> bool {
        matches!(
            self,
            Termination::ProjectedGradient | Termination::RelativeReduction | Termination::SimplexConverged
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimResult {
    pub x: Vec<f64>,
    pub f: f64,
    /// Gradient at `x`; empty for derivative-free runs.
    pub grad: Vec<f64>,
    pub iterations: usize,
    pub evaluations: usize,
    pub termination: Termination,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LbfgsbOptions {
    /// Number of correction pairs kept.
    pub memory: usize,
    pub pgtol: f64,
    /// Stop when `(f_old - f) <= rel_reduction * max(|f_old|, |f|, 1)`.
    pub rel_reduction: f64,
    pub max_iter: usize,
    /// Evaluations allowed per line search.
    pub max_line_search: usize,
    pub ftol: f64,
    pub gtol: f64,
    pub xtol: f64,
}

impl Default for LbfgsbOptions {
    fn default() -> Self {
        Self {
            memory: 5,
            pgtol: 1e-8,
            rel_reduction: 1e-12,
            max_iter: 1000,
            max_line_search: 20,
            ftol: 1e-3,
            gtol: 0.9,
            xtol: 0.1,
        }
    }
}

fn check_box(x0: &[f64], lower: &[f64], upper: &[f64]) -> Result<()> {
    let n = x0.len();
    if n == 0 || lower.len() != n || upper.len() != n {
        return Err(Error::InvalidParams(format!(
            "dimension mismatch: x0 {}, lower {}, upper {}",
            n,
            lower.len(),
            upper.len()
        )));
    }
    for i in 0..n {
        if !(lower[i] < upper[i]) || !lower[i].is_finite() || !upper[i].is_finite() || !x0[i].is_finite() {
            return Err(Error::InvalidParams(format!(
                "coordinate {i}: need finite x0 and lower < upper, got {} in [{}, {}]",
                x0[i], lower[i], upper[i]
            )));
        }
    }
    Ok(())
}

fn projected_gradient_norm(x: &[f64], g: &[f64], lower: &[f64], upper: &[f64]) -> f64 {
    let mut norm = 0.0f64;
    for i in 0..x.len() {
        let gi = if g[i] < 0.0 {
            (x[i] - upper[i]).max(g[i])
        } else {
            (x[i] - lower[i]).min(g[i])
        };
        norm = norm.max(gi.abs());
    }
    norm
}

struct Memory {
    pairs: VecDeque<(DVector<f64>, DVector<f64>)>,
    theta: f64,
    cap: usize,
}

impl Memory {
    fn new(cap: usize) -> Self {
        Self {
            pairs: VecDeque::with_capacity(cap),
            theta: 1.0,
            cap: cap.max(1),
        }
    }

    fn reset(&mut self) {
        self.pairs.clear();
        self.theta = 1.0;
    }

    fn push(&mut self, s: DVector<f64>, y: DVector<f64>) {
        if self.pairs.len() == self.cap {
            self.pairs.pop_front();
        }
        self.theta = y.dot(&y) / s.dot(&y);
        self.pairs.push_back((s, y));
    }

    /// Quasi-Newton matrix: BFGS updates of `theta * I` by the stored pairs.
    fn matrix(&self, n: usize) -> DMatrix<f64> {
        let mut b = DMatrix::identity(n, n) * self.theta;
        for (s, y) in &self.pairs {
            let bs = &b * s;
            let sbs = s.dot(&bs);
            let sy = s.dot(y);
            b -= &bs * bs.transpose() / sbs;
            b += y * y.transpose() / sy;
        }
        b
    }
}

/// Generalized Cauchy point. Returns the point and which coordinates are
/// held at a bound there.
fn cauchy(x: &[f64], g: &[f64], lower: &[f64], upper: &[f64], b: &DMatrix<f64>) -> (Vec<f64>, Vec<bool>) {
    let n = x.len();
    let mut xcp = x.to_vec();
    let mut d = vec![0.0; n];
    let mut fixed = vec![false; n];
    let mut breaks: Vec<(f64, usize)> = Vec::new();
    for i in 0..n {
        let tl = x[i] - lower[i];
        let tu = upper[i] - x[i];
        let neg = -g[i];
        if (tl <= 0.0 && neg <= 0.0) || (tu <= 0.0 && neg >= 0.0) {
            fixed[i] = true;
            continue;
        }
        if neg == 0.0 {
            continue;
        }
        d[i] = neg;
        let t = if neg < 0.0 { tl / -neg } else { tu / neg };
        breaks.push((t, i));
    }
    breaks.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let dv = DVector::from_column_slice(&d);
    let gv = DVector::from_column_slice(g);
    let f1 = gv.dot(&dv);
    let f2_org = dv.dot(&(b * &dv));
    let mut dtm = -f1 / f2_org;
    let mut tsum = 0.0;
    let mut t_prev = 0.0;
    let nbreak = breaks.len();

    let mut idx = 0;
    while idx < nbreak {
        let (tj, ibp) = breaks[idx];
        let dt = tj - t_prev;
        if dtm < dt {
            break;
        }
        tsum += dt;
        idx += 1;
        t_prev = tj;
        let dibp = d[ibp];
        d[ibp] = 0.0;
        xcp[ibp] = if dibp > 0.0 { upper[ibp] } else { lower[ibp] };
        fixed[ibp] = true;
        if idx == nbreak && nbreak == n {
            return (xcp, fixed);
        }
        let dv = DVector::from_column_slice(&d);
        let z = DVector::from_fn(n, |i, _| if fixed[i] { xcp[i] - x[i] } else { tsum * d[i] });
        let bd = b * &dv;
        let f1 = gv.dot(&dv) + z.dot(&bd);
        let f2 = dv.dot(&bd).max(f64::EPSILON * f2_org);
        dtm = if idx < nbreak { -f1 / f2 } else { 0.0 };
        if idx == nbreak {
            break;
        }
    }
    let dtm = if dtm > 0.0 { dtm } else { 0.0 };
    tsum += dtm;
    for i in 0..n {
        if d[i] != 0.0 {
            xcp[i] = x[i] + tsum * d[i];
        }
    }
    (xcp, fixed)
}

/// Newton step on the free coordinates from the Cauchy point.
fn subspace_step(
    x: &[f64],
    g: &[f64],
    lower: &[f64],
    upper: &[f64],
    b: &DMatrix<f64>,
    xcp: &[f64],
    fixed: &[bool],
) -> Vec<f64> {
    let n = x.len();
    let free: Vec<usize> = (0..n).filter(|&i| !fixed[i]).collect();
    if free.is_empty() {
        return xcp.to_vec();
    }
    let disp = DVector::from_fn(n, |i, _| xcp[i] - x[i]);
    let r = DVector::from_column_slice(g) + b * disp;
    let m = free.len();
    let bff = DMatrix::from_fn(m, m, |a, c| b[(free[a], free[c])]);
    let rf = DVector::from_fn(m, |a, _| -r[free[a]]);
    let du = match bff.clone().cholesky() {
        Some(ch) => ch.solve(&rf),
        None => match bff.lu().solve(&rf) {
            Some(v) => v,
            None => return xcp.to_vec(),
        },
    };

    let mut z = xcp.to_vec();
    for (a, &k) in free.iter().enumerate() {
        z[k] = (xcp[k] + du[a]).clamp(lower[k], upper[k]);
    }
    let dd: f64 = (0..n).map(|i| (z[i] - x[i]) * g[i]).sum();
    if dd <= 0.0 {
        return z;
    }

    // Projection lost descent: truncate the step at the first bound instead.
    let mut z = xcp.to_vec();
    let mut alpha = 1.0f64;
    let mut ibd = None;
    for (a, &k) in free.iter().enumerate() {
        let dk = du[a];
        let mut t = alpha;
        if dk < 0.0 {
            let room = lower[k] - z[k];
            if room >= 0.0 {
                t = 0.0;
            } else if dk * alpha < room {
                t = room / dk;
            }
        } else if dk > 0.0 {
            let room = upper[k] - z[k];
            if room <= 0.0 {
                t = 0.0;
            } else if dk * alpha > room {
                t = room / dk;
            }
        }
        if t < alpha {
            alpha = t;
            ibd = Some(a);
        }
    }
    let mut du = du;
    if alpha < 1.0 {
        if let Some(a) = ibd {
            let k = free[a];
            z[k] = if du[a] > 0.0 { upper[k] } else { lower[k] };
            du[a] = 0.0;
        }
    }
    for (a, &k) in free.iter().enumerate() {
        z[k] += alpha * du[a];
    }
    z
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SearchStatus {
    Continue,
    Done,
    Failed,
}

/// Moré–Thuente line search state (MINPACK-2 `dcsrch`).
struct MoreThuente {
    gtol: f64,
    xtol: f64,
    stpmin: f64,
    stpmax: f64,
    brackt: bool,
    stage: u8,
    finit: f64,
    ginit: f64,
    gtest: f64,
    width: f64,
    width1: f64,
    stx: f64,
    fx: f64,
    gx: f64,
    sty: f64,
    fy: f64,
    gy: f64,
    stmin: f64,
    stmax: f64,
}

const XTRAPL: f64 = 1.1;
const XTRAPU: f64 = 4.0;

impl MoreThuente {
    fn new(f: f64, g: f64, stp: f64, opts: &LbfgsbOptions, stpmin: f64, stpmax: f64) -> Option<Self> {
        if stp < stpmin || stp > stpmax || g >= 0.0 {
            return None;
        }
        let width = stpmax - stpmin;
        Some(Self {
            gtol: opts.gtol,
            xtol: opts.xtol,
            stpmin,
            stpmax,
            brackt: false,
            stage: 1,
            finit: f,
            ginit: g,
            gtest: opts.ftol * g,
            width,
            width1: width / 0.5,
            stx: 0.0,
            fx: f,
            gx: g,
            sty: 0.0,
            fy: f,
            gy: g,
            stmin: 0.0,
            stmax: stp + XTRAPU * stp,
        })
    }

    /// Consumes `f`, `g` at `stp`; on `Continue` writes the next trial step.
    fn step(&mut self, stp: &mut f64, f: f64, g: f64) -> SearchStatus {
        let ftest = self.finit + *stp * self.gtest;
        if self.stage == 1 && f <= ftest && g >= 0.0 {
            self.stage = 2;
        }
        if self.brackt && (*stp <= self.stmin || *stp >= self.stmax) {
            return SearchStatus::Done;
        }
        if self.brackt && self.stmax - self.stmin <= self.xtol * self.stmax {
            return SearchStatus::Done;
        }
        if *stp == self.stpmax && f <= ftest && g <= self.gtest {
            return SearchStatus::Done;
        }
        if *stp == self.stpmin && (f > ftest || g >= self.gtest) {
            return SearchStatus::Done;
        }
        if f <= ftest && g.abs() <= self.gtol * (-self.ginit) {
            return SearchStatus::Done;
        }

        if self.stage == 1 && f <= self.fx && f > ftest {
            let gt = self.gtest;
            let mut fxm = self.fx - self.stx * gt;
            let mut fym = self.fy - self.sty * gt;
            let mut gxm = self.gx - gt;
            let mut gym = self.gy - gt;
            let fm = f - *stp * gt;
            let gm = g - gt;
            dcstep(
                &mut self.stx,
                &mut fxm,
                &mut gxm,
                &mut self.sty,
                &mut fym,
                &mut gym,
                stp,
                fm,
                gm,
                &mut self.brackt,
                self.stmin,
                self.stmax,
            );
            self.fx = fxm + self.stx * gt;
            self.fy = fym + self.sty * gt;
            self.gx = gxm + gt;
            self.gy = gym + gt;
        } else {
            dcstep(
                &mut self.stx,
                &mut self.fx,
                &mut self.gx,
                &mut self.sty,
                &mut self.fy,
                &mut self.gy,
                stp,
                f,
                g,
                &mut self.brackt,
                self.stmin,
                self.stmax,
            );
        }

        if self.brackt {
            if (self.sty - self.stx).abs() >= 0.66 * self.width1 {
                *stp = self.stx + 0.5 * (self.sty - self.stx);
            }
            self.width1 = self.width;
            self.width = (self.sty - self.stx).abs();
            self.stmin = self.stx.min(self.sty);
            self.stmax = self.stx.max(self.sty);
        } else {
            self.stmin = *stp + XTRAPL * (*stp - self.stx);
            self.stmax = *stp + XTRAPU * (*stp - self.stx);
        }
        *stp = stp.clamp(self.stpmin, self.stpmax);
        if self.brackt
            && (*stp <= self.stmin || *stp >= self.stmax || self.stmax - self.stmin <= self.xtol * self.stmax)
        {
            *stp = self.stx;
        }
        if !stp.is_finite() {
            return SearchStatus::Failed;
        }
        SearchStatus::Continue
    }
}

/// Safeguarded cubic/quadratic step (MINPACK-2 `dcstep`).
#[allow(clippy::too_many_arguments)]
fn dcstep(
    stx: &mut f64,
    fx: &mut f64,
    dx: &mut f64,
    sty: &mut f64,
    fy: &mut f64,
    dy: &mut f64,
    stp: &mut f64,
    fp: f64,
    dp: f64,
    brackt: &mut bool,
    stpmin: f64,
    stpmax: f64,
) {
    let sgnd = dp * (*dx / dx.abs());
    let stpf;
    if fp > *fx {
        let theta = 3.0 * (*fx - fp) / (*stp - *stx) + *dx + dp;
        let s = theta.abs().max(dx.abs()).max(dp.abs());
        let mut gamma = s * ((theta / s).powi(2) - (*dx / s) * (dp / s)).sqrt();
        if *stp < *stx {
            gamma = -gamma;
        }
        let p = (gamma - *dx) + theta;
        let q = ((gamma - *dx) + gamma) + dp;
        let r = p / q;
        let stpc = *stx + r * (*stp - *stx);
        let stpq = *stx + ((*dx / ((*fx - fp) / (*stp - *stx) + *dx)) / 2.0) * (*stp - *stx);
        stpf = if (stpc - *stx).abs() < (stpq - *stx).abs() {
            stpc
        } else {
            stpc + (stpq - stpc) / 2.0
        };
        *brackt = true;
    } else if sgnd < 0.0 {
        let theta = 3.0 * (*fx - fp) / (*stp - *stx) + *dx + dp;
        let s = theta.abs().max(dx.abs()).max(dp.abs());
        let mut gamma = s * ((theta / s).powi(2) - (*dx / s) * (dp / s)).sqrt();
        if *stp > *stx {
            gamma = -gamma;
        }
        let p = (gamma - dp) + theta;
        let q = ((gamma - dp) + gamma) + *dx;
        let r = p / q;
        let stpc = *stp + r * (*stx - *stp);
        let stpq = *stp + (dp / (dp - *dx)) * (*stx - *stp);
        stpf = if (stpc - *stp).abs() > (stpq - *stp).abs() { stpc } else { stpq };
        *brackt = true;
    } else if dp.abs() < dx.abs() {
        let theta = 3.0 * (*fx - fp) / (*stp - *stx) + *dx + dp;
        let s = theta.abs().max(dx.abs()).max(dp.abs());
        let mut gamma = s * ((theta / s).powi(2) - (*dx / s) * (dp / s)).max(0.0).sqrt();
        if *stp > *stx {
            gamma = -gamma;
        }
        let p = (gamma - dp) + theta;
        let q = (gamma + (*dx - dp)) + gamma;
        let r = p / q;
        let stpc = if r < 0.0 && gamma != 0.0 {
            *stp + r * (*stx - *stp)
        } else if *stp > *stx {
            stpmax
        } else {
            stpmin
        };
        let stpq = *stp + (dp / (dp - *dx)) * (*stx - *stp);
        if *brackt {
            let mut v = if (stpc - *stp).abs() < (stpq - *stp).abs() { stpc } else { stpq };
            v = if *stp > *stx {
                v.min(*stp + 0.66 * (*sty - *stp))
            } else {
                v.max(*stp + 0.66 * (*sty - *stp))
            };
            stpf = v;
        } else {
            let v = if (stpc - *stp).abs() > (stpq - *stp).abs() { stpc } else { stpq };
            stpf = v.min(stpmax).max(stpmin);
        }
    } else if *brackt {
        let theta = 3.0 * (fp - *fy) / (*sty - *stp) + *dy + dp;
        let s = theta.abs().max(dy.abs()).max(dp.abs());
        let mut gamma = s * ((theta / s).powi(2) - (*dy / s) * (dp / s)).sqrt();
        if *stp > *sty {
            gamma = -gamma;
        }
        let p = (gamma - dp) + theta;
        let q = ((gamma - dp) + gamma) + *dy;
        let r = p / q;
        stpf = *stp + r * (*sty - *stp);
    } else if *stp > *stx {
        stpf = stpmax;
    } else {
        stpf = stpmin;
    }

    if fp > *fx {
        *sty = *stp;
        *fy = fp;
        *dy = dp;
    } else {
        if sgnd < 0.0 {
            *sty = *stx;
            *fy = *fx;
            *dy = *dx;
        }
        *stx = *stp;
        *fx = fp;
        *dx = dp;
    }
    *stp = stpf;
}

struct LineSearchOutcome {
    stp: f64,
    x: Vec<f64>,
    f: f64,
    g: Vec<f64>,
    gd: f64,
    gd0: f64,
}

#[allow(clippy::too_many_arguments)]
fn line_search<F: FnMut(&[f64], &mut [f64]) -> f64>(
    fg: &mut F,
    x: &[f64],
    g: &[f64],
    f0: f64,
    d: &[f64],
    z: &[f64],
    lower: &[f64],
    upper: &[f64],
    first: bool,
    opts: &LbfgsbOptions,
    evaluations: &mut usize,
) -> Option<LineSearchOutcome> {
    let n = x.len();
    let gd0: f64 = g.iter().zip(d).map(|(a, b)| a * b).sum();
    if gd0 >= 0.0 {
        return None;
    }
    let mut stpmax = 1e10f64;
    if first {
        stpmax = 1.0;
    } else {
        for i in 0..n {
            if d[i] < 0.0 {
                let room = lower[i] - x[i];
                if room >= 0.0 {
                    stpmax = 0.0;
                } else if room > d[i] * stpmax {
                    stpmax = room / d[i];
                }
            } else if d[i] > 0.0 {
                let room = upper[i] - x[i];
                if room <= 0.0 {
                    stpmax = 0.0;
                } else if room < d[i] * stpmax {
                    stpmax = room / d[i];
                }
            }
        }
    }
    let mut stp = 1.0f64.min(stpmax);
    let mut search = MoreThuente::new(f0, gd0, stp, opts, 0.0, stpmax)?;
    let mut xt = vec![0.0; n];
    let mut gt = vec![0.0; n];
    for _ in 0..opts.max_line_search {
        if stp == 1.0 {
            xt.copy_from_slice(z);
        } else {
            for i in 0..n {
                xt[i] = (x[i] + stp * d[i]).clamp(lower[i], upper[i]);
            }
        }
        let f = fg(&xt, &mut gt);
        *evaluations += 1;
        if !f.is_finite() || gt.iter().any(|v| !v.is_finite()) {
            // Shrink and restart the search below the offending step.
            stp *= 0.5;
            search = MoreThuente::new(f0, gd0, stp, opts, 0.0, stp)?;
            continue;
        }
        let gd: f64 = gt.iter().zip(d).map(|(a, b)| a * b).sum();
        match search.step(&mut stp, f, gd) {
            SearchStatus::Done => {
                return Some(LineSearchOutcome {
                    stp,
                    x: xt,
                    f,
                    g: gt,
                    gd,
                    gd0,
                })
            }
            SearchStatus::Continue => {}
            SearchStatus::Failed => return None,
        }
    }
    None
}

/// Minimizes `fg` over the box `[lower, upper]`. `fg(x, g)` returns the
/// objective and writes its gradient into `g`.
pub fn lbfgsb<F>(mut fg: F, x0: &[f64], lower: &[f64], upper: &[f64], opts: &LbfgsbOptions) -> Result<OptimResult>
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    check_box(x0, lower, upper)?;
    let n = x0.len();
    let mut x: Vec<f64> = (0..n).map(|i| x0[i].clamp(lower[i], upper[i])).collect();
    let mut g = vec![0.0; n];
    let mut f = fg(&x, &mut g);
    let mut evaluations = 1;
    let finish = |x: Vec<f64>, f: f64, g: Vec<f64>, iterations, evaluations, termination| OptimResult {
        x,
        f,
        grad: g,
        iterations,
        evaluations,
        termination,
    };
    if !f.is_finite() || g.iter().any(|v| !v.is_finite()) {
        return Ok(finish(x, f, g, 0, evaluations, Termination::NonFiniteStart));
    }
    if projected_gradient_norm(&x, &g, lower, upper) <= opts.pgtol {
        return Ok(finish(x, f, g, 0, evaluations, Termination::ProjectedGradient));
    }

    let mut memory = Memory::new(opts.memory);
    let mut iterations = 0;
    loop {
        let b = memory.matrix(n);
        let (xcp, fixed) = cauchy(&x, &g, lower, upper, &b);
        let z = if memory.pairs.is_empty() {
            xcp
        } else {
            subspace_step(&x, &g, lower, upper, &b, &xcp, &fixed)
        };
        let d: Vec<f64> = (0..n).map(|i| z[i] - x[i]).collect();
        let outcome = line_search(
            &mut fg,
            &x,
            &g,
            f,
            &d,
            &z,
            lower,
            upper,
            iterations == 0,
            opts,
            &mut evaluations,
        );
        let Some(ls) = outcome else {
            if memory.pairs.is_empty() {
                return Ok(finish(x, f, g, iterations, evaluations, Termination::LineSearchFailed));
            }
            memory.reset();
            continue;
        };

        iterations += 1;
        let f_old = f;
        let s = DVector::from_fn(n, |i, _| ls.x[i] - x[i]);
        let y = DVector::from_fn(n, |i, _| ls.g[i] - g[i]);
        x = ls.x;
        f = ls.f;
        g = ls.g;

        if projected_gradient_norm(&x, &g, lower, upper) <= opts.pgtol {
            return Ok(finish(x, f, g, iterations, evaluations, Termination::ProjectedGradient));
        }
        if f_old - f <= opts.rel_reduction * f_old.abs().max(f.abs()).max(1.0) {
            return Ok(finish(x, f, g, iterations, evaluations, Termination::RelativeReduction));
        }
        if iterations >= opts.max_iter {
            return Ok(finish(x, f, g, iterations, evaluations, Termination::MaxIterations));
        }

        let dr = (ls.gd - ls.gd0) * ls.stp;
        let ddum = -ls.gd0 * ls.stp;
        if dr > f64::EPSILON * ddum {
            memory.push(s, y);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    /// Relative size of the initial simplex edges.
    pub initial_step: f64,
    pub xtol: f64,
    pub ftol: f64,
    pub max_evaluations: usize,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.05,
            xtol: 1e-10,
            ftol: 1e-12,
            max_evaluations: 4000,
        }
    }
}

/// Nelder–Mead on the box. Vertices may leave the box; they are scored at
/// their projection plus the squared distance to it, so the simplex cannot
/// collapse onto a face. Non-finite values count as `+∞`. The search is
/// restarted from its best vertex until a restart no longer improves it.
pub fn nelder_mead_box<F>(
    mut f: F,
    x0: &[f64],
    lower: &[f64],
    upper: &[f64],
    opts: &NelderMeadOptions,
) -> Result<OptimResult>
where
    F: FnMut(&[f64]) -> f64,
{
    check_box(x0, lower, upper)?;
    let n = x0.len();
    let project = |v: &[f64]| -> Vec<f64> { (0..n).map(|i| v[i].clamp(lower[i], upper[i])).collect() };
    let mut evaluations = 0;
    let mut iterations = 0;
    let mut score = |v: &[f64], count: &mut usize| -> f64 {
        *count += 1;
        let p = project(v);
        let dist2: f64 = v.iter().zip(&p).map(|(a, b)| (a - b) * (a - b)).sum();
        let y = f(&p);
        if y.is_finite() {
            y + dist2
        } else {
            f64::INFINITY
        }
    };

    let mut best = project(x0);
    let mut best_f = score(&best, &mut evaluations);
    let mut termination;
    loop {
        let (x, fx, term) = nelder_mead_run(&mut score, &best, best_f, opts, &mut evaluations, &mut iterations);
        termination = term;
        let improved = fx < best_f - opts.ftol.max(f64::EPSILON * best_f.abs());
        if fx <= best_f {
            best = project(&x);
            best_f = fx;
        }
        if !improved || term != Termination::SimplexConverged {
            break;
        }
    }
    Ok(OptimResult {
        x: best,
        f: best_f,
        grad: Vec::new(),
        iterations,
        evaluations,
        termination,
    })
}

fn nelder_mead_run<S: FnMut(&[f64], &mut usize) -> f64>(
    score: &mut S,
    start: &[f64],
    start_f: f64,
    opts: &NelderMeadOptions,
    evaluations: &mut usize,
    iterations: &mut usize,
) -> (Vec<f64>, f64, Termination) {
    let n = start.len();
    let mut simplex = vec![start.to_vec()];
    let mut values = vec![start_f];
    for i in 0..n {
        let mut v = start.to_vec();
        v[i] += if v[i] != 0.0 { opts.initial_step * v[i].abs() } else { 0.00025 };
        values.push(score(&v, evaluations));
        simplex.push(v);
    }

    let termination = loop {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let xspread = simplex[1..]
            .iter()
            .flat_map(|v| v.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
            .fold(0.0f64, f64::max);
        let fspread = values[1..].iter().map(|v| (v - values[0]).abs()).fold(0.0f64, f64::max);
        if xspread <= opts.xtol && fspread <= opts.ftol {
            break Termination::SimplexConverged;
        }
        if *evaluations >= opts.max_evaluations {
            break Termination::MaxEvaluations;
        }
        *iterations += 1;

        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|v| v[j]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].clone();
        let along = |t: f64| -> Vec<f64> { (0..n).map(|j| centroid[j] + t * (worst[j] - centroid[j])).collect() };
        let xr = along(-1.0);
        let fr = score(&xr, evaluations);
        if fr < values[0] {
            let xe = along(-2.0);
            let fe = score(&xe, evaluations);
            if fe < fr {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
            continue;
        }
        if fr < values[n - 1] {
            simplex[n] = xr;
            values[n] = fr;
            continue;
        }
        let xc = if fr < values[n] { along(-0.5) } else { along(0.5) };
        let fc = score(&xc, evaluations);
        if fc < values[n].min(fr) {
            simplex[n] = xc;
            values[n] = fc;
            continue;
        }
        for k in 1..=n {
            let v: Vec<f64> = (0..n).map(|j| simplex[0][j] + 0.5 * (simplex[k][j] - simplex[0][j])).collect();
            values[k] = score(&v, evaluations);
            simplex[k] = v;
        }
    };
    (simplex[0].clone(), values[0], termination)
}
