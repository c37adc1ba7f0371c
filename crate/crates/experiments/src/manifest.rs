//! Reference values, loaded from the embedded `expected.toml`.

use hvmu::FrontKind;
use serde::Deserialize;

use crate::error::{ExperimentError, Result};

const EMBEDDED: &str = include_str!("../expected.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    pub tolerances: Tolerances,
    pub table1: Vec<TableEntry>,
    pub table2: Vec<TableEntry>,
    pub fig1: Vec<Fig1Entry>,
    pub fig2: Vec<Fig2Entry>,
    pub summary: Vec<SummaryEntry>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct Tolerances {
    pub exact: f64,
    pub search_desk: f64,
    pub search_full: f64,
    pub strict_gain: f64,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct TableEntry {
    pub h: u32,
    pub das: f64,
    pub search: f64,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct Fig1Entry {
    pub front: FrontKind,
    pub uniform: f64,
    pub other: f64,
    pub uniform_optimal: bool,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct Fig2Entry {
    pub front: FrontKind,
    pub h: u32,
    pub das: f64,
    pub search: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    Uniform,
    Nonuniform,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SummaryEntry {
    pub front: FrontKind,
    pub optimal: Distribution,
    #[serde(default)]
    pub condition: Option<String>,
    /// Lattice parameters the row applies to (plane-based fronts only).
    #[serde(default)]
    pub h: Vec<u32>,
}

impl Manifest {
    pub fn embedded() -> Result<Self> {
        Self::parse(EMBEDDED)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    /// The table for `front`: `table1` for Type VII, `table2` for Type VIII.
    pub fn table(&self, front: FrontKind) -> Result<&[TableEntry]> {
        match front {
            FrontKind::TypeVII => Ok(&self.table1),
            FrontKind::TypeVIII => Ok(&self.table2),
            other => Err(ExperimentError::MissingExpected(format!(
                "lattice table on {other}"
            ))),
        }
    }

    pub fn table_entry(&self, front: FrontKind, h: u32) -> Result<TableEntry> {
        self.table(front)?
            .iter()
            .find(|e| e.h == h)
            .copied()
            .ok_or_else(|| ExperimentError::MissingExpected(format!("{front} at H = {h}")))
    }

    pub fn fig1_entry(&self, front: FrontKind) -> Result<Fig1Entry> {
        self.fig1
            .iter()
            .find(|e| e.front == front)
            .copied()
            .ok_or_else(|| {
                ExperimentError::MissingExpected(format!("line-front comparison on {front}"))
            })
    }

    pub fn fig2_entry(&self, front: FrontKind) -> Result<Fig2Entry> {
        self.fig2
            .iter()
            .find(|e| e.front == front)
            .copied()
            .ok_or_else(|| ExperimentError::MissingExpected(format!("H = 8 comparison on {front}")))
    }

    pub fn search_tolerance(&self, budget: &crate::Budget) -> f64 {
        if budget.is_full() {
            self.tolerances.search_full
        } else {
            self.tolerances.search_desk
        }
    }
}
