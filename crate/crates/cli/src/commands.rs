use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use unit_shiha::data::{load_dataset, BUNDLED};
use unit_shiha::dists::{DistFamily, ParamVector};
use unit_shiha::gof::gof_report_at;
use unit_shiha::inference::Protocol;
use unit_shiha::report::{
    self, plot_files, render_analysis, render_best, render_fits, render_simulation, SimReport, TextTable,
    SCHEMA_VERSION,
};
use unit_shiha::sampling::ush_sample;
use unit_shiha::shiha::{
    ush_cdf, ush_entropy, ush_hazard, ush_moment_summary, ush_pdf, ush_quantile, ush_sf, ush_stress_strength,
    StressStrengthInput, UShParams,
};
use unit_shiha::sim::{run_study, Sampler, SimConfig};

use crate::output::{emit, emit_plot_files, significant, CliError};
use crate::{Format, GlobalOpts};

const TABLE_DECIMALS: usize = 4;
const DIST_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Eval {
    Pdf,
    Cdf,
    Sf,
    Hazard,
    Quantile,
    Moments,
    Entropy,
    StressStrength,
    /// Draw a sample with the mixture sampler.
    Sample,
}

impl Eval {
    fn name(self) -> &'static str {
        match self {
            Eval::Pdf => "pdf",
            Eval::Cdf => "cdf",
            Eval::Sf => "sf",
            Eval::Hazard => "hazard",
            Eval::Quantile => "quantile",
            Eval::Moments => "moments",
            Eval::Entropy => "entropy",
            Eval::StressStrength => "stress-strength",
            Eval::Sample => "sample",
        }
    }
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct DistArgs {
    #[arg(value_enum)]
    eval: Eval,
    #[arg(long)]
    omega: f64,
    #[arg(long)]
    eta: f64,
    /// Evaluation points (comma separated or repeated).
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    x: Vec<f64>,
    /// Probabilities for `quantile`.
    #[arg(long = "p", value_delimiter = ',', num_args = 1..)]
    p: Vec<f64>,
    /// Stress ω for `stress-strength`; `--omega`/`--eta` describe strength.
    #[arg(long)]
    omega2: Option<f64>,
    /// Stress η for `stress-strength`.
    #[arg(long)]
    eta2: Option<f64>,
    /// Sample size for `sample`.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct DataArgs {
    /// Bundled name (data1..data4) or path to a numeric text file.
    dataset: String,
    /// Divide every value by this before validation.
    #[arg(long)]
    divide_by: Option<f64>,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Families to fit, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    family: Vec<String>,
    #[arg(long, default_value = "thorough")]
    protocol: Protocol,
}

#[derive(Args, Debug)]
pub struct GofArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    family: DistFamily,
    /// Parameter values in the family's order.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    params: Vec<f64>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long, value_delimiter = ',', default_value = "all")]
    family: Vec<String>,
    #[arg(long, default_value = "thorough")]
    protocol: Protocol,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// M = 200, B = 50.
    Desk,
    /// M = 1000, B = 100.
    Paper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerArg {
    Mixture,
    Rejection,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value_t = Preset::Desk)]
    preset: Preset,
    /// Restrict to parameter points "ω,η" (repeatable).
    #[arg(long)]
    cell: Vec<String>,
    /// Sample sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Replicates per cell.
    #[arg(long = "M")]
    m: Option<usize>,
    /// Bootstrap resamples per replicate.
    #[arg(long = "B")]
    b: Option<usize>,
    #[arg(long, value_enum)]
    sampler: Option<SamplerArg>,
    /// Confidence level of the bootstrap intervals.
    #[arg(long)]
    level: Option<f64>,
}

#[derive(Args, Debug)]
pub struct DatasetsArgs {
    /// Print the scaled values of this dataset.
    name: Option<String>,
    #[arg(long)]
    divide_by: Option<f64>,
}

fn families(names: &[String]) -> Result<Vec<DistFamily>, CliError> {
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(DistFamily::ALL.to_vec());
    }
    let mut out = Vec::new();
    for n in names {
        let f: DistFamily = n.parse()?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn no_plot_data(what: &str) -> CliError {
    CliError::Usage(format!("`{what}` has no plot data; use --format text or structured"))
}

pub fn dist(g: &GlobalOpts, a: DistArgs) -> Result<(), CliError> {
    let p = UShParams::with_boundary(a.omega, a.eta)?;
    let digits = g.precision.unwrap_or(DIST_DIGITS);
    let fmt = |v: f64| significant(v, digits);
    let (header, rows): (Vec<&str>, Vec<Vec<f64>>) = match a.eval {
        Eval::Pdf | Eval::Cdf | Eval::Sf | Eval::Hazard => {
            if a.x.is_empty() {
                return Err(CliError::Usage(format!("`dist {}` needs --x", a.eval.name())));
            }
            let mut rows = Vec::with_capacity(a.x.len());
            for &x in &a.x {
                let v = match a.eval {
                    Eval::Pdf => ush_pdf(x, &p)?,
                    Eval::Cdf => ush_cdf(x, &p),
                    Eval::Sf => ush_sf(x, &p),
                    _ => ush_hazard(x, &p)?,
                };
                rows.push(vec![x, v]);
            }
            (vec!["x", a.eval.name()], rows)
        }
        Eval::Quantile => {
            if a.p.is_empty() {
                return Err(CliError::Usage("`dist quantile` needs --p".into()));
            }
            let rows = a
                .p
                .iter()
                .map(|&q| Ok(vec![q, ush_quantile(q, &p, 1e-12)?]))
                .collect::<Result<_, CliError>>()?;
            (vec!["p", "quantile"], rows)
        }
        Eval::Moments => {
            let m = ush_moment_summary(&p);
            let mut row = m.raw_moments.to_vec();
            row.extend([m.mean, m.variance, m.skewness, m.kurtosis]);
            (vec!["E[X]", "E[X^2]", "E[X^3]", "E[X^4]", "mean", "variance", "skewness", "kurtosis"], vec![row])
        }
        Eval::Entropy => (vec!["entropy"], vec![vec![ush_entropy(&p, 1e-10)?]]),
        Eval::StressStrength => {
            let (Some(w2), Some(e2)) = (a.omega2, a.eta2) else {
                return Err(CliError::Usage("`dist stress-strength` needs --omega2 and --eta2".into()));
            };
            let input = StressStrengthInput {
                strength: p,
                stress: UShParams::with_boundary(w2, e2)?,
            };
            (vec!["R"], vec![vec![ush_stress_strength(&input)]])
        }
        Eval::Sample => {
            let n = a.n.ok_or_else(|| CliError::Usage("`dist sample` needs --n".into()))?;
            let s = ush_sample(n, &p, g.seed)?;
            (vec!["x"], s.values().iter().map(|&v| vec![v]).collect())
        }
    };
    let text = match g.format {
        Format::Text => {
            let mut t = TextTable::new(header.iter().copied());
            for r in &rows {
                t.push(r.iter().map(|&v| fmt(v)).collect());
            }
            t.render()
        }
        Format::Structured => {
            let objs: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(header.iter().map(|h| h.to_string()).zip(r.iter().map(|&v| json!(v))).collect()))
                .collect();
            json_text(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "dist",
                "eval": a.eval.name(),
                "omega": a.omega,
                "eta": a.eta,
                "rows": objs,
            }))
        }
        Format::PlotData => {
            let mut s = header.join(",");
            s.push('\n');
            for r in &rows {
                let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                s.push_str(&cells.join(","));
                s.push('\n');
            }
            s
        }
    };
    emit(&text, g.out.as_deref())
}

pub fn fit(g: &GlobalOpts, a: FitArgs) -> Result<(), CliError> {
    let data = load_dataset(&a.data.dataset, a.data.divide_by)?;
    let fams = families(&a.family)?;
    let mut r = report::analyze(&data, &fams, a.protocol, g.format == Format::PlotData);
    r.descriptives = None;
    let precision = g.precision.unwrap_or(TABLE_DECIMALS);
    match g.format {
        Format::Text => {
            let mut text = format!("dataset {} (n = {}, protocol {})\n\n", r.dataset, r.n, r.protocol);
            text.push_str(&render_fits(&r.fits, &r.failures, precision));
            text.push('\n');
            text.push_str(&render_best(&r.best));
            emit(&text, g.out.as_deref())
        }
        Format::Structured => emit(&format!("{}\n", report::to_json(&r)?), g.out.as_deref()),
        Format::PlotData => emit_plot_files(&plot_files(&r)?, g.out.as_deref()),
    }
}

pub fn gof(g: &GlobalOpts, a: GofArgs) -> Result<(), CliError> {
    let data = load_dataset(&a.data.dataset, a.data.divide_by)?;
    let theta = ParamVector::new(a.family, a.params)?;
    let row = gof_report_at(&data, a.family, &theta)?;
    match g.format {
        Format::Text => {
            let text = format!(
                "dataset {} (n = {}), parameters given\n\n{}",
                data.label(),
                data.len(),
                render_fits(std::slice::from_ref(&row), &[], g.precision.unwrap_or(TABLE_DECIMALS))
            );
            emit(&text, g.out.as_deref())
        }
        Format::Structured => emit(
            &json_text(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "gof",
                "dataset": data.label(),
                "rows": [row],
            })),
            g.out.as_deref(),
        ),
        Format::PlotData => Err(no_plot_data("gof")),
    }
}

pub fn analyze(g: &GlobalOpts, a: AnalyzeArgs) -> Result<(), CliError> {
    let data = load_dataset(&a.data.dataset, a.data.divide_by)?;
    let fams = families(&a.family)?;
    let r = report::analyze(&data, &fams, a.protocol, true);
    let precision = g.precision.unwrap_or(TABLE_DECIMALS);
    match g.format {
        Format::Text => {
            let mut text = render_analysis(&r, precision);
            if let Some(p) = &r.plots {
                text.push_str(&format!(
                    "histogram: {} bins ({})\n",
                    p.histogram.counts.len(),
                    serde_json::to_value(p.histogram.rule)
                        .ok()
                        .and_then(|v| v.as_str().map(String::from))
                        .unwrap_or_default()
                ));
            }
            emit(&text, g.out.as_deref())
        }
        Format::Structured => emit(&format!("{}\n", report::to_json(&r)?), g.out.as_deref()),
        Format::PlotData => emit_plot_files(&plot_files(&r)?, g.out.as_deref()),
    }
}

fn parse_cell(s: &str) -> Result<UShParams, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [w, e] = parts.as_slice() else {
        return Err(CliError::Usage(format!("--cell expects \"omega,eta\", got '{s}'")));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|_| CliError::Usage(format!("--cell: '{t}' is not a number")));
    Ok(UShParams::new(num(w)?, num(e)?)?)
}

pub fn simulate(g: &GlobalOpts, a: SimulateArgs) -> Result<(), CliError> {
    let mut config = match a.preset {
        Preset::Desk => SimConfig::desk(g.seed),
        Preset::Paper => SimConfig::paper(g.seed),
    };
    if !a.cell.is_empty() {
        config.points = a.cell.iter().map(|c| parse_cell(c)).collect::<Result<_, _>>()?;
    }
    if let Some(s) = a.sizes {
        config.sample_sizes = s;
    }
    if let Some(m) = a.m {
        config.m = m;
    }
    if let Some(b) = a.b {
        config.b = b;
    }
    if let Some(s) = a.sampler {
        config.sampler = match s {
            SamplerArg::Mixture => Sampler::Mixture,
            SamplerArg::Rejection => Sampler::Rejection,
        };
    }
    if let Some(l) = a.level {
        config.level = l;
    }
    config.validate()?;
    let cells = run_study(&config)?;
    let precision = g.precision.unwrap_or(TABLE_DECIMALS);
    match g.format {
        Format::Text => {
            let text = format!(
                "M = {}, B = {}, level {}, seed {}\n\n{}",
                config.m,
                config.b,
                config.level,
                config.seed,
                render_simulation(&cells, precision)
            );
            emit(&text, g.out.as_deref())
        }
        Format::Structured => emit(&format!("{}\n", report::to_json(&SimReport::new(config, cells))?), g.out.as_deref()),
        Format::PlotData => Err(no_plot_data("simulate")),
    }
}

pub fn datasets(g: &GlobalOpts, a: DatasetsArgs) -> Result<(), CliError> {
    match a.name {
        Some(name) => {
            let d = load_dataset(&name, a.divide_by)?;
            let text = match g.format {
                Format::Structured => json_text(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "datasets",
                    "dataset": d.label(),
                    "scale_divisor": d.scale_divisor(),
                    "values": d.values(),
                })),
                _ => {
                    let mut s = String::from("x\n");
                    for v in d.values() {
                        s.push_str(&format!("{v}\n"));
                    }
                    s
                }
            };
            emit(&text, g.out.as_deref())
        }
        None => {
            let text = match g.format {
                Format::Text => {
                    let mut t = TextTable::new(["name", "n", "divisor", "description"]);
                    for d in BUNDLED {
                        t.push(vec![
                            d.name.into(),
                            d.raw.len().to_string(),
                            d.divisor.map_or_else(|| "--".into(), |v| v.to_string()),
                            d.description.into(),
                        ]);
                    }
                    t.render()
                }
                Format::Structured => json_text(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "datasets",
                    "rows": BUNDLED.iter().map(|d| json!({
                        "name": d.name,
                        "n": d.raw.len(),
                        "divisor": d.divisor,
                        "description": d.description,
                    })).collect::<Vec<_>>(),
                })),
                Format::PlotData => return Err(no_plot_data("datasets")),
            };
            emit(&text, g.out.as_deref())
        }
    }
}
