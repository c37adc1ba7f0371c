//! Experiment reports: per-case rows, named checks, and their serializations.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use hvmu::geometry::io::format_significant;
use hvmu::FrontKind;
use serde::Serialize;

use crate::error::{ExperimentError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Optimizer budget and seed shared by every search in one command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub generations: usize,
    pub runs: usize,
    pub seed: u64,
}

impl Budget {
    pub const DEFAULT_SEED: u64 = 1;

    pub fn desk() -> Self {
        Self {
            generations: 2_000,
            runs: 20,
            seed: Self::DEFAULT_SEED,
        }
    }

    pub fn full() -> Self {
        Self {
            generations: 10_000,
            runs: 100,
            seed: Self::DEFAULT_SEED,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn is_full(&self) -> bool {
        self.generations >= 10_000 && self.runs >= 100
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::desk()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

/// One front/size case: the uniform set's hypervolume, the best searched
/// hypervolume, and the reference values they are compared against.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub front: FrontKind,
    pub h: Option<u32>,
    pub mu: usize,
    pub r: f64,
    /// Hypervolume of the uniform (DAS) set, always computed live.
    pub das_hv: f64,
    pub search_hv: Option<f64>,
    pub expected_das: f64,
    pub expected_search: Option<f64>,
    pub verdict: Verdict,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            verdict: Verdict::from_bool(ok),
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

impl FromStr for OutputFormat {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(ExperimentError::InvalidArgument(format!(
                "unknown format {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub version: String,
    pub seed: u64,
    pub generations: usize,
    pub runs: usize,
    pub rows: Vec<Row>,
    pub checks: Vec<Check>,
    /// Wall-clock time; the only field that differs between identical runs.
    pub elapsed_ms: u64,
}

impl ExperimentReport {
    pub fn new(experiment: impl Into<String>, budget: &Budget) -> Self {
        Self {
            experiment: experiment.into(),
            version: VERSION.to_string(),
            seed: budget.seed,
            generations: budget.generations,
            runs: budget.runs,
            rows: Vec::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed_ms = u64::try_from(elapsed.as_millis()).unwrap_or(u64::MAX);
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict.passed()) && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.verdict.passed()).count()
            + self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn merge(&mut self, other: ExperimentReport) {
        self.rows.extend(other.rows);
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn rows_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "experiment",
            "version",
            "seed",
            "generations",
            "runs",
            "front",
            "h",
            "mu",
            "r",
            "das_hv",
            "search_hv",
            "expected_das",
            "expected_search",
            "verdict",
            "note",
        ])?;
        let opt = |v: Option<f64>| v.map(|x| format_significant(x, 10)).unwrap_or_default();
        for row in &self.rows {
            let mut rec = self.meta_fields();
            rec.extend([
                row.front.name().to_string(),
                row.h.map(|h| h.to_string()).unwrap_or_default(),
                row.mu.to_string(),
                format_significant(row.r, 10),
                format_significant(row.das_hv, 10),
                opt(row.search_hv),
                format_significant(row.expected_das, 10),
                opt(row.expected_search),
                row.verdict.label().to_string(),
                row.note.clone(),
            ]);
            w.write_record(&rec)?;
        }
        csv_string(w)
    }

    pub fn checks_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "experiment",
            "version",
            "seed",
            "generations",
            "runs",
            "id",
            "verdict",
            "detail",
        ])?;
        for check in &self.checks {
            let mut rec = self.meta_fields();
            rec.extend([
                check.id.clone(),
                check.verdict.label().to_string(),
                check.detail.clone(),
            ]);
            w.write_record(&rec)?;
        }
        csv_string(w)
    }

    fn meta_fields(&self) -> Vec<String> {
        vec![
            self.experiment.clone(),
            self.version.clone(),
            self.seed.to_string(),
            self.generations.to_string(),
            self.runs.to_string(),
        ]
    }

    /// Writes the report into `dir` and returns the created paths. CSV output
    /// splits rows and checks into `<id>.csv` and `<id>_checks.csv`.
    pub fn write_to_dir(&self, dir: &Path, format: OutputFormat) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let stem = self.experiment.replace(['/', ' '], "_");
        let mut written = Vec::new();
        match format {
            OutputFormat::Json => {
                let path = dir.join(format!("{stem}.json"));
                fs::write(&path, self.to_json()? + "\n")?;
                written.push(path);
            }
            OutputFormat::Csv => {
                if !self.rows.is_empty() || self.checks.is_empty() {
                    let path = dir.join(format!("{stem}.csv"));
                    fs::write(&path, self.rows_csv()?)?;
                    written.push(path);
                }
                if !self.checks.is_empty() {
                    let path = dir.join(format!("{stem}_checks.csv"));
                    fs::write(&path, self.checks_csv()?)?;
                    written.push(path);
                }
            }
        }
        Ok(written)
    }

    /// Plain-text summary: a table of rows, then one line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} (hvmu {}, seed {}, {} generations x {} runs)",
            self.experiment, self.version, self.seed, self.generations, self.runs
        );
        if !self.rows.is_empty() {
            let _ = writeln!(
                out,
                "{:<10} {:>3} {:>4} {:>9} {:>10} {:>10} {:>10} {:>10}  verdict",
                "front", "H", "mu", "r", "uniform", "expected", "search", "expected"
            );
            let cell = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_else(|| "-".into());
            for row in &self.rows {
                let _ = writeln!(
                    out,
                    "{:<10} {:>3} {:>4} {:>9.5} {:>10.6} {:>10.4} {:>10} {:>10}  {}{}",
                    row.front.name(),
                    row.h.map(|h| h.to_string()).unwrap_or_else(|| "-".into()),
                    row.mu,
                    row.r,
                    row.das_hv,
                    row.expected_das,
                    cell(row.search_hv),
                    row.expected_search
                        .map(|x| format!("{x:.4}"))
                        .unwrap_or_else(|| "-".into()),
                    row.verdict.label(),
                    if row.note.is_empty() {
                        String::new()
                    } else {
                        format!("  {}", row.note)
                    },
                );
            }
        }
        for check in &self.checks {
            let _ = writeln!(
                out,
                "{} {}: {}",
                check.verdict.label(),
                check.id,
                check.detail
            );
        }
        let _ = writeln!(
            out,
            "{}: {} failure(s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.failures()
        );
        out
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| ExperimentError::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| ExperimentError::InvalidArgument(e.to_string()))
}
