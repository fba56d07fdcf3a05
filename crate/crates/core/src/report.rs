//! Report assembly and rendering.
//!
//! Three output forms share one set of report types:
//!
//! - text tables with a fixed column order and a configurable number of
//!   decimals;
//! - a structured JSON document carrying [`SCHEMA_VERSION`], where every table
//!   row is one object whose keys are the column names;
//! - plot data as CSV files with a header row and one numeric column per
//!   series.
//!
//! Plot payloads are not part of the JSON document; they are written only as
//! plot data.

use serde::{Deserialize, Serialize};

use crate::dists::{dist_cdf, dist_pdf, DistFamily, ParamVector};
use crate::error::{Error, Result};
use crate::gof::{descriptive_stats, gof_report, histogram, pp_qq_points, ttt_points, DescriptiveStats, GofReport, Histogram};
use crate::inference::{fit_mle, Protocol};
use crate::sample::UnitSample;
use crate::sim::{SimCellResult, SimConfig};

/// Version of the structured report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Points in the fitted-curve grid.
pub const CURVE_POINTS: usize = 512;

/// A family that could not be fitted or summarized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyFailure {
    pub family: DistFamily,
    pub message: String,
}

/// Best family under each criterion, among converged fits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct BestModels {
    pub aic: Option<DistFamily>,
    pub aicc: Option<DistFamily>,
    pub bic: Option<DistFamily>,
    pub hqic: Option<DistFamily>,
    pub ks_stat: Option<DistFamily>,
    pub ks_pvalue: Option<DistFamily>,
}

impl BestModels {
    /// Minimizers of AIC, AICc, BIC, HQIC and D; maximizer of the p-value.
    /// Ties go to the earlier row.
    pub fn from_fits(fits: &[GofReport]) -> Self {
        let ok: Vec<&GofReport> = fits.iter().filter(|g| g.converged).collect();
        let pick = |key: &dyn Fn(&GofReport) -> f64| {
            ok.iter()
                .fold(None::<&GofReport>, |best, g| match best {
                    Some(b) if key(b) <= key(g) => Some(b),
                    _ => Some(g),
                })
                .map(|g| g.family)
        };
        Self {
            aic: pick(&|g| g.aic),
            aicc: pick(&|g| g.aicc),
            bic: pick(&|g| g.bic),
            hqic: pick(&|g| g.hqic),
            ks_stat: pick(&|g| g.ks_stat),
            ks_pvalue: pick(&|g| -g.ks_pvalue),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedCurve {
    pub family: DistFamily,
    pub pdf: Vec<f64>,
    pub cdf: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyProbabilityPlot {
    pub family: DistFamily,
    /// `(F(x_(i)), (i - 0.5)/n)`.
    pub pp: Vec<(f64, f64)>,
    /// `(Q((i - 0.5)/n), x_(i))`.
    pub qq: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotPayload {
    /// Midpoints `(i + 0.5)/512`.
    pub grid: Vec<f64>,
    pub curves: Vec<FittedCurve>,
    pub probability: Vec<FamilyProbabilityPlot>,
    pub ttt: Vec<(f64, f64)>,
    pub histogram: Histogram,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub dataset: String,
    pub n: usize,
    pub protocol: Protocol,
    /// Absent for samples too small or constant.
    pub descriptives: Option<DescriptiveStats>,
    /// One row per family, in the requested order.
    pub fits: Vec<GofReport>,
    pub failures: Vec<FamilyFailure>,
    pub best: BestModels,
    #[serde(skip)]
    pub plots: Option<PlotPayload>,
}

impl AnalysisReport {
    pub fn fit(&self, family: DistFamily) -> Option<&GofReport> {
        self.fits.iter().find(|g| g.family == family)
    }
}

pub fn curve_grid() -> Vec<f64> {
    (0..CURVE_POINTS).map(|i| (i as f64 + 0.5) / CURVE_POINTS as f64).collect()
}

fn fit_family(data: &UnitSample, family: DistFamily, protocol: Protocol) -> Result<GofReport> {
    let fit = fit_mle(data, family, &protocol.options())?;
    if !fit.converged && !fit.log_lik.is_finite() {
        return Err(Error::NoConvergence {
            routine: "maximum likelihood",
            iterations: fit.iterations,
            achieved: fit.log_lik,
        });
    }
    gof_report(data, &fit)
}

/// Fits every family and assembles the comparison. Failures of single
/// families are recorded in [`AnalysisReport::failures`]; the rest of the
/// report is still produced.
pub fn analyze(data: &UnitSample, families: &[DistFamily], protocol: Protocol, with_plots: bool) -> AnalysisReport {
    let mut fits = Vec::with_capacity(families.len());
    let mut failures = Vec::new();
    for &family in families {
        match fit_family(data, family, protocol) {
            Ok(g) => fits.push(g),
            Err(e) => failures.push(FamilyFailure {
                family,
                message: e.to_string(),
            }),
        }
    }
    let plots = with_plots.then(|| plot_payload(data, &fits, &mut failures));
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        dataset: data.label().to_string(),
        n: data.len(),
        protocol,
        descriptives: descriptive_stats(data).ok(),
        best: BestModels::from_fits(&fits),
        fits,
        failures,
        plots,
    }
}

fn plot_payload(data: &UnitSample, fits: &[GofReport], failures: &mut Vec<FamilyFailure>) -> PlotPayload {
    let grid = curve_grid();
    let mut curves = Vec::new();
    let mut probability = Vec::new();
    for g in fits {
        let theta = match ParamVector::new(g.family, g.estimates.clone()) {
            Ok(t) => t,
            Err(e) => {
                failures.push(FamilyFailure {
                    family: g.family,
                    message: format!("plot data: {e}"),
                });
                continue;
            }
        };
        let pdf = grid.iter().map(|&x| dist_pdf(g.family, x, &theta)).collect::<Result<Vec<_>>>();
        let cdf = grid.iter().map(|&x| dist_cdf(g.family, x, &theta)).collect::<Result<Vec<_>>>();
        let pq = pp_qq_points(data, g.family, &theta);
        match (pdf, cdf, pq) {
            (Ok(pdf), Ok(cdf), Ok(pq)) => {
                curves.push(FittedCurve {
                    family: g.family,
                    pdf,
                    cdf,
                });
                probability.push(FamilyProbabilityPlot {
                    family: g.family,
                    pp: pq.pp,
                    qq: pq.qq,
                });
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => failures.push(FamilyFailure {
                family: g.family,
                message: format!("plot data: {e}"),
            }),
        }
    }
    PlotPayload {
        grid,
        curves,
        probability,
        ttt: ttt_points(data).unwrap_or_default(),
        histogram: histogram(data),
    }
}

/// Monte Carlo study output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub schema_version: u32,
    pub config: SimConfig,
    pub cells: Vec<SimCellResult>,
}

impl SimReport {
    pub fn new(config: SimConfig, cells: Vec<SimCellResult>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            config,
            cells,
        }
    }
}

/// Serializes a report as pretty JSON.
pub fn to_json<T: Serialize>(report: &T) -> Result<String> {
    serde_json::to_string_pretty(report).map_err(|e| Error::Internal(format!("serialization failed: {e}")))
}

/// Parses a report, rejecting any other schema version.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("malformed report: {e}")))?;
    match value.get("schema_version").and_then(|v| v.as_u64()) {
        Some(v) if v == u64::from(SCHEMA_VERSION) => {}
        Some(v) => return Err(Error::Config(format!("unsupported schema version {v}"))),
        None => return Err(Error::Config("report has no schema_version".into())),
    }
    serde_json::from_value(value).map_err(|e| Error::Config(format!("malformed report: {e}")))
}

/// Right-aligned plain-text table.
#[derive(Debug, Clone, Default)]
pub struct TextTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl TextTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let cols = self.header.len();
        let mut width = vec![0usize; cols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |row: &[String]| {
            let cells: Vec<String> = row
                .iter()
                .zip(&width)
                .enumerate()
                .map(|(j, (c, &w))| if j == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        };
        line(&self.header);
        let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
        line(&rule);
        for row in &self.rows {
            line(row);
        }
        out
    }
}

fn num(v: f64, precision: usize) -> String {
    if v.is_finite() {
        format!("{v:.precision$}")
    } else {
        "--".into()
    }
}

fn opt(v: Option<f64>, precision: usize) -> String {
    v.map_or_else(|| "--".into(), |v| num(v, precision))
}

/// Descriptive statistics, one row per dataset.
pub fn render_descriptives(rows: &[(&str, &DescriptiveStats)], precision: usize) -> String {
    let mut t = TextTable::new(["Data", "n", "Min", "Q1", "Median", "Mean", "Q3", "Max", "Var", "SK", "KU"]);
    for (label, d) in rows {
        let mut row = vec![label.to_string(), d.n.to_string()];
        row.extend(
            [d.min, d.q1, d.median, d.mean, d.q3, d.max, d.variance, d.skewness, d.kurtosis_plus_three]
                .iter()
                .map(|&v| num(v, precision)),
        );
        t.push(row);
    }
    t.render()
}

/// Fit comparison; estimates on a bound carry a trailing `*`, rows whose fit
/// did not converge carry `(nc)`.
pub fn render_fits(fits: &[GofReport], failures: &[FamilyFailure], precision: usize) -> String {
    let k = fits.iter().map(|g| g.k).max().unwrap_or(2).max(2);
    let names = ["ω̂", "η̂", "α̂"];
    let mut header = vec!["Model".to_string()];
    header.extend(names.iter().take(k).map(|s| s.to_string()));
    header.extend(["-ℓ", "AIC", "AICC", "BIC", "HQIC", "KS", "p-value"].map(String::from));
    let mut t = TextTable::new(header);
    for g in fits {
        let label = if g.converged {
            g.family.to_string()
        } else {
            format!("{} (nc)", g.family)
        };
        let mut row = vec![label];
        for j in 0..k {
            row.push(match g.estimates.get(j) {
                Some(&v) if g.at_bound.get(j).copied().unwrap_or(false) => format!("{}*", num(v, precision)),
                Some(&v) => num(v, precision),
                None => "--".into(),
            });
        }
        row.extend(
            [-g.log_lik, g.aic, g.aicc, g.bic, g.hqic, g.ks_stat, g.ks_pvalue]
                .iter()
                .map(|&v| num(v, precision)),
        );
        t.push(row);
    }
    let mut out = t.render();
    if fits.iter().any(|g| g.at_bound.iter().any(|&b| b)) {
        out.push_str("* estimate on the boundary of the parameter box\n");
    }
    for f in failures {
        out.push_str(&format!("{}: failed: {}\n", f.family, f.message));
    }
    out
}

pub fn render_best(best: &BestModels) -> String {
    let name = |f: Option<DistFamily>| f.map_or_else(|| "--".to_string(), |f| f.to_string());
    format!(
        "best by AIC: {}  AICC: {}  BIC: {}  HQIC: {}  KS: {}  p-value: {}\n",
        name(best.aic),
        name(best.aicc),
        name(best.bic),
        name(best.hqic),
        name(best.ks_stat),
        name(best.ks_pvalue)
    )
}

pub fn render_analysis(report: &AnalysisReport, precision: usize) -> String {
    let mut out = format!("dataset {} (n = {}, protocol {})\n\n", report.dataset, report.n, report.protocol);
    if let Some(d) = &report.descriptives {
        out.push_str(&render_descriptives(&[(report.dataset.as_str(), d)], precision));
        out.push('\n');
    }
    out.push_str(&render_fits(&report.fits, &report.failures, precision));
    out.push('\n');
    out.push_str(&render_best(&report.best));
    out
}

/// Study table: one row per cell.
pub fn render_simulation(cells: &[SimCellResult], precision: usize) -> String {
    let mut t = TextTable::new([
        "ω", "η", "n", "Bias(ω̂)", "Bias(η̂)", "MSE(ω̂)", "MSE(η̂)", "MRE(ω̂)", "MRE(η̂)", "CP_ω", "CP_η", "CR",
    ]);
    for c in cells {
        let (w, e) = (c.omega_metrics, c.eta_metrics);
        let mut row = vec![c.omega.to_string(), c.eta.to_string(), c.n.to_string()];
        for f in [
            |m: &crate::sim::ParamMetrics| m.bias,
            |m: &crate::sim::ParamMetrics| m.mse,
            |m: &crate::sim::ParamMetrics| m.mre,
            |m: &crate::sim::ParamMetrics| m.cp,
        ] {
            row.push(opt(w.as_ref().map(f), precision));
            row.push(opt(e.as_ref().map(f), precision));
        }
        row.push(num(c.cr, precision));
        t.push(row);
    }
    t.render()
}

/// A CSV file with a header row and equal-length numeric columns.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotFile {
    pub name: String,
    pub header: Vec<String>,
    pub columns: Vec<Vec<f64>>,
}

impl PlotFile {
    fn new(name: String, header: Vec<String>, columns: Vec<Vec<f64>>) -> Result<Self> {
        if header.len() != columns.len() || columns.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(Error::Internal(format!("ragged plot data in {name}")));
        }
        Ok(Self { name, header, columns })
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.header.iter().position(|h| h == name).map(|j| self.columns[j].as_slice())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for i in 0..self.rows() {
            let line: Vec<String> = self.columns.iter().map(|c| format!("{}", c[i])).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Plot-data files for an analysis with plot payloads: fitted curves, PP,
/// QQ, TTT and histogram.
pub fn plot_files(report: &AnalysisReport) -> Result<Vec<PlotFile>> {
    let p = report
        .plots
        .as_ref()
        .ok_or_else(|| Error::Config("report carries no plot data".into()))?;
    let stem = &report.dataset;
    let mut files = Vec::new();

    let mut header = vec!["x".to_string()];
    let mut cols = vec![p.grid.clone()];
    for c in &p.curves {
        header.push(format!("{}_pdf", c.family));
        cols.push(c.pdf.clone());
        header.push(format!("{}_cdf", c.family));
        cols.push(c.cdf.clone());
    }
    files.push(PlotFile::new(format!("{stem}_curves.csv"), header, cols)?);

    if let Some(first) = p.probability.first() {
        let mut header = vec!["position".to_string()];
        let mut cols = vec![first.pp.iter().map(|q| q.1).collect()];
        for f in &p.probability {
            header.push(f.family.to_string());
            cols.push(f.pp.iter().map(|q| q.0).collect());
        }
        files.push(PlotFile::new(format!("{stem}_pp.csv"), header, cols)?);

        let mut header = vec!["observed".to_string()];
        let mut cols = vec![first.qq.iter().map(|q| q.1).collect()];
        for f in &p.probability {
            header.push(f.family.to_string());
            cols.push(f.qq.iter().map(|q| q.0).collect());
        }
        files.push(PlotFile::new(format!("{stem}_qq.csv"), header, cols)?);
    }

    files.push(PlotFile::new(
        format!("{stem}_ttt.csv"),
        vec!["r_over_n".into(), "ttt".into()],
        vec![p.ttt.iter().map(|t| t.0).collect(), p.ttt.iter().map(|t| t.1).collect()],
    )?);

    let h = &p.histogram;
    files.push(PlotFile::new(
        format!("{stem}_histogram.csv"),
        vec!["left".into(), "right".into(), "count".into(), "density".into()],
        vec![
            h.edges[..h.counts.len()].to_vec(),
            h.edges[1..].to_vec(),
            h.counts.iter().map(|&c| c as f64).collect(),
            h.density.clone(),
        ],
    )?);
    Ok(files)
}
