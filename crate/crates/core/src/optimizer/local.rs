use crate::error::{Error, Result};
use crate::geometry::{FrontKind, Point, SolutionSet};
use crate::hypervolume::contribution::contributions;
use crate::optimizer::mutation::sample_uniform;
use crate::optimizer::search::{check_reference, decay_for, evolve, run_rng, Schedule};

/// Added points whose contribution is within this of the smallest existing
/// contribution count as removed (ties go to the added point).
const TIE_TOL: f64 = 1e-12;

/// An added front point that would survive (mu + 1) selection.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub added: Point<f64, 3>,
    pub added_hvc: f64,
    /// Index of the point that selection removes instead.
    pub removed: usize,
    pub removed_hvc: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalOptVerdict {
    pub trials: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl LocalOptVerdict {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Adds `p` to `set` and reports a counterexample if `p` is not (one of) the
/// least contributors.
pub fn local_opt_probe(
    set: &SolutionSet<f64, 3>,
    p: Point<f64, 3>,
) -> Result<Option<Counterexample>> {
    if set.points().contains(&p) {
        return Ok(None);
    }
    let mut pts = set.points().to_vec();
    pts.push(p);
    let table = contributions(&pts, set.reference())?;
    let values = table.values();
    let added_hvc = values[pts.len() - 1];
    let (removed, removed_hvc) = values[..pts.len() - 1].iter().copied().enumerate().fold(
        (0, f64::INFINITY),
        |best, (i, v)| if v < best.1 { (i, v) } else { best },
    );
    if added_hvc <= removed_hvc + TIE_TOL {
        Ok(None)
    } else {
        Ok(Some(Counterexample {
            added: p,
            added_hvc,
            removed,
            removed_hvc,
        }))
    }
}

/// Adds `trials` uniformly random front points one at a time and checks that
/// each would be the one discarded by (mu + 1) selection.
pub fn local_opt_check(
    set: &SolutionSet<f64, 3>,
    front: FrontKind,
    trials: usize,
    seed: u64,
) -> Result<LocalOptVerdict> {
    if let Some(index) = set.points().iter().position(|p| !front.contains(p)) {
        return Err(Error::InvalidParameter(format!(
            "point {index} is not on {front}"
        )));
    }
    check_reference(front, set.reference())?;
    let mut rng = run_rng(seed, 0);
    let mut failures = 0;
    let mut first_counterexample = None;
    for _ in 0..trials {
        let p = front.embed(sample_uniform(front, &mut rng))?;
        if let Some(cx) = local_opt_probe(set, p)? {
            failures += 1;
            first_counterexample.get_or_insert(cx);
        }
    }
    Ok(LocalOptVerdict {
        trials,
        failures,
        first_counterexample,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescentResult {
    pub set: SolutionSet<f64, 3>,
    pub initial_hv: f64,
    pub final_hv: f64,
}

impl DescentResult {
    /// Whether the run gained more than 1e-9 over the starting set.
    pub fn improved(&self) -> bool {
        self.final_hv > self.initial_hv + 1e-9
    }
}

/// Runs the (mu + 1) loop starting from `set` (projected onto `front`) and
/// returns the best set seen.
pub fn seeded_descent(
    set: &SolutionSet<f64, 3>,
    front: FrontKind,
    iterations: usize,
    seed: u64,
) -> Result<DescentResult> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    check_reference(front, set.reference())?;
    let coords = set
        .points()
        .iter()
        .map(|p| front.project(p))
        .collect::<Result<Vec<_>>>()?;
    let sigma = 0.3;
    let schedule = Schedule {
        generations: iterations,
        sigma,
        decay: decay_for(iterations, sigma, 1e-3),
        hop_probability: 0.05,
        trace_every: 0,
    };
    let mut rng = run_rng(seed, 0);
    let outcome = evolve(front, set.reference(), coords, &schedule, &mut rng)?;
    // Keep the caller's exact points when nothing improved.
    let (best, final_hv) = if outcome.best_hv > outcome.initial_hv {
        (
            SolutionSet::from_points(outcome.best_points, *set.reference())?,
            outcome.best_hv,
        )
    } else {
        (set.clone(), outcome.initial_hv)
    };
    Ok(DescentResult {
        set: best,
        initial_hv: outcome.initial_hv,
        final_hv,
    })
}
