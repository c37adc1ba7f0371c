//! Point sets and their contribution tables for external plotting.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use hvmu::geometry::io::write_csv;
use hvmu::geometry::Point;
use hvmu::hypervolume::{contributions, hv3};
use hvmu::optimizer::SearchResult;
use hvmu::FrontKind;
use serde::Serialize;

use crate::error::{ExperimentError, Result};
use crate::report::{Budget, OutputFormat};
use crate::tables::{lattice_set, run_search};

/// What to export: a uniform set (lattice parameter `h` or per-line `counts`),
/// or the best set found by search.
#[derive(Debug, Clone, Default)]
pub struct ExportSpec {
    pub front: Option<FrontKind>,
    pub h: Option<u32>,
    pub counts: Option<Vec<usize>>,
    pub reference: Option<f64>,
    pub search: bool,
    pub mu: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportedSet {
    pub front: FrontKind,
    pub source: String,
    pub reference: f64,
    pub hv: f64,
    pub points: Vec<[f64; 3]>,
    pub contributions: Vec<f64>,
    #[serde(skip)]
    trace: Option<SearchResult>,
}

impl ExportedSet {
    pub fn points(&self) -> Vec<Point<f64, 3>> {
        self.points.iter().map(|&c| Point::new(c)).collect()
    }

    pub fn search_result(&self) -> Option<&SearchResult> {
        self.trace.as_ref()
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        write_csv(&mut buf, &self.points(), Some(("hvc", &self.contributions)))?;
        String::from_utf8(buf).map_err(|e| ExperimentError::InvalidArgument(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Writes the set (and, for searched sets, the per-run traces) into `dir`.
    pub fn write_to_dir(&self, dir: &Path, format: OutputFormat) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let stem = format!("{}_{}", self.front.name(), self.source);
        let mut written = Vec::new();
        let path = match format {
            OutputFormat::Csv => {
                let path = dir.join(format!("{stem}.csv"));
                fs::write(&path, self.to_csv()?)?;
                path
            }
            OutputFormat::Json => {
                let path = dir.join(format!("{stem}.json"));
                fs::write(&path, self.to_json()? + "\n")?;
                path
            }
        };
        written.push(path);
        if let Some(result) = &self.trace {
            let path = dir.join(format!("{stem}_traces.csv"));
            result.write_traces_csv(BufWriter::new(File::create(&path)?))?;
            written.push(path);
        }
        Ok(written)
    }
}

fn uniform_points(
    front: FrontKind,
    spec: &ExportSpec,
) -> Result<(Vec<Point<f64, 3>>, String, f64)> {
    if front.is_plane_based() {
        let h = spec.h.ok_or_else(|| {
            ExperimentError::InvalidArgument(format!("{front} needs a lattice parameter (--h)"))
        })?;
        Ok((
            lattice_set::<f64>(front, h)?,
            format!("h{h}"),
            -1.0 / f64::from(h),
        ))
    } else {
        let counts = spec.counts.as_ref().ok_or_else(|| {
            ExperimentError::InvalidArgument(format!("{front} needs per-line counts (--counts)"))
        })?;
        let label = counts
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("_");
        Ok((
            hvmu::geometry::uniform_line_set(front, counts)?,
            format!("counts{label}"),
            -1.0,
        ))
    }
}

pub fn build(spec: &ExportSpec, budget: &Budget) -> Result<ExportedSet> {
    let front = spec
        .front
        .ok_or_else(|| ExperimentError::InvalidArgument("missing front kind".into()))?;
    if spec.mu == Some(0) {
        return Err(ExperimentError::InvalidArgument(
            "cannot export an empty set (mu = 0)".into(),
        ));
    }
    let (uniform, label, default_r) = match (spec.h, &spec.counts, spec.mu) {
        (None, None, Some(mu)) => (Vec::new(), format!("mu{mu}"), -1.0),
        _ => uniform_points(front, spec)?,
    };
    let r = spec.reference.unwrap_or(default_r);
    let (points, source, trace) = if spec.search {
        let mu = spec.mu.unwrap_or(uniform.len());
        let result = run_search(front, mu, r, budget)?;
        let points = result.best_set.points().to_vec();
        (points, format!("{label}_search"), Some(result))
    } else {
        if uniform.is_empty() {
            return Err(ExperimentError::InvalidArgument(
                "a uniform export needs --h or --counts; use --search for a bare mu".into(),
            ));
        }
        (uniform, format!("{label}_uniform"), None)
    };
    let reference = Point::splat(r);
    let table = contributions(&points, &reference)?;
    Ok(ExportedSet {
        front,
        source,
        reference: r,
        hv: hv3(&points, &reference)?,
        points: points.iter().map(|p| *p.coords()).collect(),
        contributions: table.into_values(),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(front: FrontKind) -> ExportSpec {
        ExportSpec {
            front: Some(front),
            ..ExportSpec::default()
        }
    }

    #[test]
    fn das_export_has_equal_contributions() {
        let set = build(
            &ExportSpec {
                h: Some(3),
                ..spec(FrontKind::TypeVII)
            },
            &Budget::desk(),
        )
        .unwrap();
        assert_eq!(set.points.len(), 10);
        let first = set.contributions[0];
        assert!(set.contributions.iter().all(|c| (c - first).abs() < 1e-12));
        let csv = set.to_csv().unwrap();
        assert!(csv.starts_with("f1,f2,f3,hvc\n"));
        assert_eq!(csv.lines().count(), 11);
    }

    #[test]
    fn empty_exports_are_rejected() {
        let err = build(
            &ExportSpec {
                mu: Some(0),
                search: true,
                ..spec(FrontKind::TypeVII)
            },
            &Budget::desk(),
        );
        assert!(matches!(err, Err(ExperimentError::InvalidArgument(_))));
        assert!(build(&spec(FrontKind::TypeVII), &Budget::desk()).is_err());
        assert!(build(&spec(FrontKind::TypeIII), &Budget::desk()).is_err());
    }

    #[test]
    fn line_export_uses_counts() {
        let set = build(
            &ExportSpec {
                counts: Some(vec![3, 3]),
                ..spec(FrontKind::TypeIV)
            },
            &Budget::desk(),
        )
        .unwrap();
        assert_eq!(set.points.len(), 5);
        assert_eq!(set.source, "counts3_3_uniform");
    }
}
