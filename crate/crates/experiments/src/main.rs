use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hvmu::FrontKind;
use hvmu_experiments::export::{self, ExportSpec};
use hvmu_experiments::suites::{run_suite, SuiteId, SuiteOptions, DEFAULT_TRIALS};
use hvmu_experiments::{tables, Budget, ExperimentReport, Manifest, OutputFormat, Result};

#[derive(Parser)]
#[command(
    name = "hvmu",
    version,
    about = "Hypervolume-optimal mu-distribution experiments"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Independent optimizer runs per case.
    #[arg(long, global = true)]
    runs: Option<usize>,
    /// Generations per optimizer run.
    #[arg(long, global = true)]
    generations: Option<usize>,
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_SEED)]
    seed: u64,
    /// Directory for report files; reports are only printed when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: OutputFormat,
    /// 10,000 generations x 100 runs unless overridden.
    #[arg(long, global = true)]
    paper_budget: bool,
}

impl Common {
    fn budget(&self) -> Budget {
        let base = if self.paper_budget {
            Budget::full()
        } else {
            Budget::desk()
        };
        Budget {
            generations: self.generations.unwrap_or(base.generations),
            runs: self.runs.unwrap_or(base.runs),
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lattice sets on the triangular front against the searched optimum.
    Table1 {
        /// Lattice parameters, e.g. `--h 3,4,5`.
        #[arg(long, value_delimiter = ',', default_values_t = 1..=10u32)]
        h: Vec<u32>,
    },
    /// Inverted lattice sets on the inverted triangular front.
    Table2 {
        #[arg(long, value_delimiter = ',', default_values_t = 1..=10u32)]
        h: Vec<u32>,
    },
    /// Uniform sets on the line-based fronts at r = -1.
    Fig1 {
        #[arg(long, value_delimiter = ',', value_parser = parse_front)]
        front: Vec<FrontKind>,
    },
    /// Both lattice fronts at H = 8.
    Fig2,
    /// Runs a property suite: T1..T6, L1, TypeI, TypeII, table4 or all.
    Verify {
        #[arg(value_parser = parse_suite)]
        id: SuiteId,
        /// Random added points per local-optimality check.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Writes a point set and its contributions.
    Export {
        #[arg(long, value_parser = parse_front)]
        front: FrontKind,
        /// Lattice parameter for the plane-based fronts.
        #[arg(long)]
        h: Option<u32>,
        /// Points per line (endpoints included) for the line-based fronts.
        #[arg(long, value_delimiter = ',')]
        counts: Option<Vec<usize>>,
        /// Reference coordinate r for (r, r, r).
        #[arg(long, allow_hyphen_values = true)]
        reference: Option<f64>,
        /// Export the best searched set instead of the uniform one.
        #[arg(long)]
        search: bool,
        /// Set size for the search; defaults to the uniform set's size.
        #[arg(long)]
        mu: Option<usize>,
    },
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse()
        .map_err(|e: hvmu_experiments::ExperimentError| e.to_string())
}

fn parse_front(s: &str) -> std::result::Result<FrontKind, String> {
    s.parse().map_err(|e: hvmu::Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<SuiteId, String> {
    s.parse()
        .map_err(|e: hvmu_experiments::ExperimentError| e.to_string())
}

fn emit(report: &ExperimentReport, common: &Common) -> Result<bool> {
    print!("{}", report.render());
    if let Some(dir) = &common.out {
        for path in report.write_to_dir(dir, common.format)? {
            println!("wrote {}", path.display());
        }
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    let manifest = Manifest::embedded()?;
    let budget = cli.common.budget();
    let report = match cli.command {
        Command::Table1 { h } => {
            tables::lattice_table("table1", FrontKind::TypeVII, &h, &budget, &manifest)?
        }
        Command::Table2 { h } => {
            tables::lattice_table("table2", FrontKind::TypeVIII, &h, &budget, &manifest)?
        }
        Command::Fig1 { front } => {
            let fronts = if front.is_empty() {
                vec![
                    FrontKind::TypeIII,
                    FrontKind::TypeIV,
                    FrontKind::TypeV,
                    FrontKind::TypeVI,
                ]
            } else {
                front
            };
            tables::line_comparison(&fronts, &budget, &manifest)?
        }
        Command::Fig2 => tables::lattice_h8(&budget, &manifest)?,
        Command::Verify { id, trials } => {
            run_suite(id, &SuiteOptions { trials, budget }, &manifest)?
        }
        Command::Export {
            front,
            h,
            counts,
            reference,
            search,
            mu,
        } => {
            let spec = ExportSpec {
                front: Some(front),
                h,
                counts,
                reference,
                search,
                mu,
            };
            let set = export::build(&spec, &budget)?;
            match &cli.common.out {
                Some(dir) => {
                    for path in set.write_to_dir(dir, cli.common.format)? {
                        println!("wrote {}", path.display());
                    }
                }
                None => match cli.common.format {
                    OutputFormat::Csv => print!("{}", set.to_csv()?),
                    OutputFormat::Json => println!("{}", set.to_json()?),
                },
            }
            return Ok(true);
        }
    };
    emit(&report, &cli.common)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
