use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use unit_shiha::report::PlotFile;
use unit_shiha::Error;

/// Exit status classes.
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INGESTION: u8 = 3;
pub const EXIT_NUMERICAL: u8 = 4;
pub const EXIT_IO: u8 = 5;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Ingestion(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Ingestion(_) => EXIT_INGESTION,
            CliError::Numerical(_) => EXIT_NUMERICAL,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Ingestion(m) | CliError::Numerical(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Ingestion { .. } => CliError::Ingestion(msg),
            Error::Domain { .. } | Error::InvalidParams(_) | Error::Config(_) => CliError::Usage(msg),
            Error::NoConvergence { .. } | Error::Undefined(_) | Error::Internal(_) => CliError::Numerical(msg),
        }
    }
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write '{}': {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Writes each plot file into `dir` (created if missing) and lists them.
pub fn emit_plot_files(files: &[PlotFile], dir: Option<&Path>) -> Result<(), CliError> {
    let dir = dir.unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create '{}': {e}", dir.display())))?;
    let mut listing = String::new();
    for f in files {
        let path = dir.join(&f.name);
        fs::write(&path, f.to_csv()).map_err(|e| CliError::Io(format!("cannot write '{}': {e}", path.display())))?;
        listing.push_str(&format!("{}\n", path.display()));
    }
    emit(&listing, None)
}

/// `v` rounded to `digits` significant digits, in scientific notation
/// outside [1e-4, 1e6).
pub fn significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".into();
    }
    let mag = v.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        return format!("{:.*e}", digits - 1, v);
    }
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}
