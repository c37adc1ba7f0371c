use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::io::format_significant;
use crate::geometry::{FrontKind, ManifoldCoord, Point, SolutionSet};
use crate::hypervolume::contribution::contributions;
use crate::hypervolume::sweep::hv3_unchecked;
use crate::optimizer::mutation::{mutate, sample_uniform};

const DEFAULT_SIGMA: f64 = 0.3;
const DEFAULT_SIGMA_FINAL: f64 = 1e-3;
const DUPLICATE_ATTEMPTS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub front: FrontKind,
    pub mu: usize,
    pub reference: Point<f64, 3>,
    pub generations: usize,
    pub runs: usize,
    pub seed: u64,
    /// Initial step size in manifold-coordinate units.
    pub mutation_sigma: f64,
    /// Per-generation multiplicative decay of the step size.
    pub sigma_decay: f64,
    /// Probability of a segment hop on line-based fronts.
    pub hop_probability: f64,
    /// Record the best-so-far hypervolume every this many generations.
    pub trace_every: usize,
}

impl SearchConfig {
    /// Desk-scale defaults: 2,000 generations, 20 runs, step size decaying
    /// geometrically from 0.3 to 1e-3.
    pub fn new(front: FrontKind, mu: usize, reference: Point<f64, 3>) -> Self {
        let generations = 2_000;
        Self {
            front,
            mu,
            reference,
            generations,
            runs: 20,
            seed: 0,
            mutation_sigma: DEFAULT_SIGMA,
            sigma_decay: decay_for(generations, DEFAULT_SIGMA, DEFAULT_SIGMA_FINAL),
            hop_probability: 0.05,
            trace_every: 10,
        }
    }

    /// Sets the budget and rescales the decay so the step size still ends at 1e-3.
    pub fn with_budget(mut self, generations: usize, runs: usize) -> Self {
        self.generations = generations;
        self.runs = runs;
        self.sigma_decay = decay_for(generations, self.mutation_sigma, DEFAULT_SIGMA_FINAL);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.generations == 0 || self.runs == 0 || self.mu == 0 {
            return Err(Error::InvalidParameter(
                "generations, runs and mu must all be at least 1".into(),
            ));
        }
        let sigma_ok = self.mutation_sigma > 0.0 && self.mutation_sigma.is_finite();
        let decay_ok = self.sigma_decay > 0.0 && self.sigma_decay <= 1.0;
        if !sigma_ok || !decay_ok {
            return Err(Error::InvalidParameter(
                "need mutation_sigma > 0 and sigma_decay in (0, 1]".into(),
            ));
        }
        check_reference(self.front, &self.reference)
    }
}

/// Decay factor taking `start` to `end` over `generations` steps.
pub(crate) fn decay_for(generations: usize, start: f64, end: f64) -> f64 {
    if generations <= 1 || end >= start {
        return 1.0;
    }
    (end / start).powf(1.0 / (generations as f64 - 1.0))
}

/// Every front point must strictly dominate the reference. The fronts are
/// linear, so checking the extreme points suffices.
pub(crate) fn check_reference(front: FrontKind, reference: &Point<f64, 3>) -> Result<()> {
    if !reference.is_finite() {
        return Err(Error::NonFinite { index: usize::MAX });
    }
    for (index, p) in front.extreme_points::<f64>().iter().enumerate() {
        if !p.strictly_dominates(reference) {
            return Err(Error::NotDominatingReference { index });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    /// `(generation, best_hv)` samples; nondecreasing in `best_hv`.
    pub samples: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_set: SolutionSet<f64, 3>,
    pub best_hv: f64,
    pub best_run: usize,
    pub per_run_best: Vec<f64>,
    pub traces: Vec<RunTrace>,
}

impl SearchResult {
    /// Writes `run,generation,best_hv` rows.
    pub fn write_traces_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["run", "generation", "best_hv"])
            .map_err(io)?;
        for (run, trace) in self.traces.iter().enumerate() {
            for &(g, hv) in &trace.samples {
                w.write_record([run.to_string(), g.to_string(), format_significant(hv, 10)])
                    .map_err(io)?;
            }
        }
        w.flush().map_err(|e| Error::Io(e.to_string()))
    }
}

pub(crate) struct Schedule {
    pub generations: usize,
    pub sigma: f64,
    pub decay: f64,
    pub hop_probability: f64,
    pub trace_every: usize,
}

pub(crate) struct RunOutcome {
    pub best_points: Vec<Point<f64, 3>>,
    pub best_hv: f64,
    pub initial_hv: f64,
    pub trace: RunTrace,
}

/// One steady-state run starting from `coords`.
pub(crate) fn evolve<R: Rng>(
    front: FrontKind,
    reference: &Point<f64, 3>,
    mut coords: Vec<ManifoldCoord>,
    schedule: &Schedule,
    rng: &mut R,
) -> Result<RunOutcome> {
    let mut points = coords
        .iter()
        .map(|&c| front.embed(c))
        .collect::<Result<Vec<_>>>()?;
    let mu = points.len();
    let initial_hv = hv3_unchecked(&points, reference);
    let mut best_hv = initial_hv;
    let mut best_points = points.clone();
    let mut samples = vec![(0, best_hv)];
    let mut sigma = schedule.sigma;

    for generation in 1..=schedule.generations {
        let parent = coords[rng.random_range(0..mu)];
        let mut offspring = None;
        for _ in 0..DUPLICATE_ATTEMPTS {
            let child = mutate(front, parent, sigma, schedule.hop_probability, rng);
            let p = front.embed(child)?;
            if !points.contains(&p) {
                offspring = Some((child, p));
                break;
            }
        }
        if let Some((child, p)) = offspring {
            coords.push(child);
            points.push(p);
            let table = contributions(&points, reference)?;
            let worst = table.least().unwrap_or(mu);
            coords.remove(worst);
            points.remove(worst);
            let hv = hv3_unchecked(&points, reference);
            if hv > best_hv {
                best_hv = hv;
                best_points.clone_from(&points);
            }
        }
        sigma *= schedule.decay;
        if schedule.trace_every > 0
            && (generation % schedule.trace_every == 0 || generation == schedule.generations)
        {
            samples.push((generation, best_hv));
        }
    }
    Ok(RunOutcome {
        best_points,
        best_hv,
        initial_hv,
        trace: RunTrace { samples },
    })
}

pub(crate) fn run_rng(seed: u64, run: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(run as u64);
    rng
}

fn random_start<R: Rng>(front: FrontKind, mu: usize, rng: &mut R) -> Result<Vec<ManifoldCoord>> {
    let mut coords = Vec::with_capacity(mu);
    let mut points: Vec<Point<f64, 3>> = Vec::with_capacity(mu);
    while coords.len() < mu {
        let c = sample_uniform(front, rng);
        let p = front.embed(c)?;
        if !points.contains(&p) {
            coords.push(c);
            points.push(p);
        }
    }
    Ok(coords)
}

/// Independent runs from random initial populations; runs execute in
/// parallel but each is keyed only by `(seed, run index)`.
pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let schedule = Schedule {
        generations: config.generations,
        sigma: config.mutation_sigma,
        decay: config.sigma_decay,
        hop_probability: config.hop_probability,
        trace_every: config.trace_every,
    };
    let outcomes = (0..config.runs)
        .into_par_iter()
        .map(|run| {
            let mut rng = run_rng(config.seed, run);
            let start = random_start(config.front, config.mu, &mut rng)?;
            evolve(config.front, &config.reference, start, &schedule, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best_run = 0;
    for (i, o) in outcomes.iter().enumerate() {
        if o.best_hv > outcomes[best_run].best_hv {
            best_run = i;
        }
    }
    let per_run_best: Vec<f64> = outcomes.iter().map(|o| o.best_hv).collect();
    let best_hv = per_run_best[best_run];
    let best_set = SolutionSet::from_points(
        outcomes[best_run].best_points.iter().copied(),
        config.reference,
    )?;
    let traces = outcomes.into_iter().map(|o| o.trace).collect();
    Ok(SearchResult {
        best_set,
        best_hv,
        best_run,
        per_run_best,
        traces,
    })
}
