//! Property suites behind `hvmu verify`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use hvmu::closed_forms::{
    lemma1_front_points, lemma1_positions, owned_to_segment_counts, reference_threshold,
    type3_component_hv, type3_split, type4_best_alpha, type4_move_delta, type5_split,
    type78_region_hvc, CellRegion, LatticeCell, Lemma1Params,
};
use hvmu::geometry::{uniform_line_set, Point, SolutionSet};
use hvmu::hypervolume::{contributions, hv2, hv3, hvc};
use hvmu::optimizer::{local_opt_check, seeded_descent, LocalOptVerdict};
use hvmu::{FrontKind, Rational64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ExperimentError, Result};
use crate::manifest::{Distribution, Manifest};
use crate::report::{Budget, Check, ExperimentReport};
use crate::tables::{lattice_set, run_search};

pub const DEFAULT_TRIALS: usize = 10_000;

const FORMULA_TOL: f64 = 1e-12;
const STRICT_TOL: f64 = 1e-9;
/// Grid resolution of the single-move scan, per gap to the nearest neighbor.
const SCAN_STEPS: usize = 40;
const DESCENT_ITERATIONS: usize = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    L1,
    TypeI,
    TypeII,
    Table4,
    All,
}

impl SuiteId {
    pub const EACH: [SuiteId; 10] = [
        SuiteId::L1,
        SuiteId::TypeI,
        SuiteId::TypeII,
        SuiteId::T1,
        SuiteId::T2,
        SuiteId::T3,
        SuiteId::T4,
        SuiteId::T5,
        SuiteId::T6,
        SuiteId::Table4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::T1 => "T1",
            SuiteId::T2 => "T2",
            SuiteId::T3 => "T3",
            SuiteId::T4 => "T4",
            SuiteId::T5 => "T5",
            SuiteId::T6 => "T6",
            SuiteId::L1 => "L1",
            SuiteId::TypeI => "TypeI",
            SuiteId::TypeII => "TypeII",
            SuiteId::Table4 => "table4",
            SuiteId::All => "all",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "t1" => SuiteId::T1,
            "t2" => SuiteId::T2,
            "t3" => SuiteId::T3,
            "t4" => SuiteId::T4,
            "t5" => SuiteId::T5,
            "t6" => SuiteId::T6,
            "l1" => SuiteId::L1,
            "typei" | "type1" => SuiteId::TypeI,
            "typeii" | "type2" => SuiteId::TypeII,
            "table4" | "summary" => SuiteId::Table4,
            "all" => SuiteId::All,
            _ => {
                return Err(ExperimentError::InvalidArgument(format!(
                    "unknown suite {s:?}"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Random added points per local-optimality check.
    pub trials: usize,
    pub budget: Budget,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            budget: Budget::desk(),
        }
    }
}

pub fn run_suite(
    id: SuiteId,
    options: &SuiteOptions,
    manifest: &Manifest,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new(format!("verify_{id}"), &options.budget);
    let seed = options.budget.seed;
    report.checks = match id {
        SuiteId::L1 => two_d_suite(seed)?,
        SuiteId::TypeI => type1_suite(options.trials, seed)?,
        SuiteId::TypeII => type2_suite(seed)?,
        SuiteId::T1 => type3_suite()?,
        SuiteId::T2 => type4_suite()?,
        SuiteId::T3 => type5_suite()?,
        SuiteId::T4 => type6_suite()?,
        SuiteId::T5 => lattice_suite(FrontKind::TypeVII, options.trials, seed)?,
        SuiteId::T6 => lattice_suite(FrontKind::TypeVIII, options.trials, seed)?,
        SuiteId::Table4 => summary_suite(options, manifest)?,
        SuiteId::All => {
            let mut checks = Vec::new();
            for each in SuiteId::EACH {
                checks.extend(run_suite(each, options, manifest)?.checks);
            }
            checks
        }
    };
    report.set_elapsed(start.elapsed());
    Ok(report)
}

fn fmt_point(p: &Point<f64, 3>) -> String {
    format!("({:.4}, {:.4}, {:.4})", p[0], p[1], p[2])
}

fn describe(v: &LocalOptVerdict) -> String {
    match &v.first_counterexample {
        None => format!("{} trials, added point always least", v.trials),
        Some(cx) => format!(
            "{}/{} failures; first: added {} (hvc {:.3e}) kept, removed #{} (hvc {:.3e})",
            v.failures,
            v.trials,
            fmt_point(&cx.added),
            cx.added_hvc,
            cx.removed,
            cx.removed_hvc
        ),
    }
}

fn spread(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// One solution moved along a line of the front.
#[derive(Debug, Clone, PartialEq)]
pub struct Improvement {
    pub index: usize,
    pub from: Point<f64, 3>,
    pub to: Point<f64, 3>,
    pub gain: f64,
}

/// Tries moving each solution along every line it lies on, up to its nearest
/// neighbor on that line, and returns the best resulting change.
pub fn best_single_move(
    front: FrontKind,
    points: &[Point<f64, 3>],
    r: f64,
) -> Result<Option<Improvement>> {
    let reference = Point::splat(r);
    let base = hv3(points, &reference)?;
    let segments = front.segments::<f64>();
    let mut best: Option<Improvement> = None;
    for (index, p) in points.iter().enumerate() {
        for seg in &segments {
            let t0 = seg.closest_t(p);
            if seg.at(t0).distance(p) > FORMULA_TOL {
                continue;
            }
            let on_line: Vec<f64> = points
                .iter()
                .filter(|q| seg.at(seg.closest_t(q)).distance(q) <= FORMULA_TOL)
                .map(|q| seg.closest_t(q))
                .collect();
            let left = on_line
                .iter()
                .copied()
                .filter(|&t| t < t0)
                .fold(0.0, f64::max);
            let right = on_line
                .iter()
                .copied()
                .filter(|&t| t > t0)
                .fold(1.0, f64::min);
            let mut moved = points.to_vec();
            for k in 1..SCAN_STEPS {
                let frac = k as f64 / SCAN_STEPS as f64;
                for t in [t0 - (t0 - left) * frac, t0 + (right - t0) * frac] {
                    if t == t0 {
                        continue;
                    }
                    moved[index] = seg.at(t);
                    let gain = hv3(&moved, &reference)? - base;
                    if best.as_ref().is_none_or(|b| gain > b.gain) {
                        best = Some(Improvement {
                            index,
                            from: *p,
                            to: moved[index],
                            gain,
                        });
                    }
                }
            }
        }
    }
    Ok(best)
}

fn two_d_suite(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let cases: [(usize, f64, f64, usize); 5] = [
        (5, -0.1, -0.1, 10_000),
        (2, -1.0, -1.0, 2_000),
        (3, -0.5, -0.2, 2_000),
        (4, -0.05, -0.3, 2_000),
        (8, -1.0, -1.0, 2_000),
    ];
    for (mu, r1, r2, samples) in cases {
        let params = Lemma1Params::new(mu, r1, r2)?;
        let reference = Point::new([r1, r2]);
        let xs = lemma1_positions(&params);
        let opt = hv2(&lemma1_front_points(&params), &reference)?;

        let gaps: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        let equispaced = gaps.is_empty() || spread(&gaps) <= FORMULA_TOL;
        let in_range = xs
            .iter()
            .all(|&x| (-FORMULA_TOL..=1.0 + FORMULA_TOL).contains(&x));

        let mut best_random = f64::NEG_INFINITY;
        for _ in 0..samples {
            let set: Vec<Point<f64, 2>> = (0..mu)
                .map(|_| {
                    let x: f64 = rng.random();
                    Point::new([x, 1.0 - x])
                })
                .collect();
            best_random = best_random.max(hv2(&set, &reference)?);
        }

        let mut best_nudge = f64::NEG_INFINITY;
        for i in 0..mu {
            for d in [-1e-4, 1e-4] {
                let mut ys = xs.clone();
                ys[i] = (ys[i] + d).clamp(0.0, 1.0);
                let set: Vec<Point<f64, 2>> =
                    ys.iter().map(|&x| Point::new([x, 1.0 - x])).collect();
                best_nudge = best_nudge.max(hv2(&set, &reference)? - opt);
            }
        }
        checks.push(Check::new(
            format!("L1 mu={mu} r=({r1}, {r2})"),
            equispaced && in_range && opt >= best_random && best_nudge <= FORMULA_TOL,
            format!(
                "hv {opt:.6} vs best of {samples} random sets {best_random:.6}; best nudge {best_nudge:+.2e}"
            ),
        ));
    }
    Ok(checks)
}

fn type1_suite(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let front = FrontKind::TypeI;
    let mut checks = Vec::new();
    for mu in 3..=10usize {
        let threshold = reference_threshold(front, mu).expect("type I has a threshold");
        let pts = uniform_line_set::<f64>(front, &[mu])?;
        let table = contributions(&pts, &Point::splat(threshold))?;
        let equal = spread(table.values()) <= FORMULA_TOL;
        let set = SolutionSet::from_points(pts.clone(), Point::splat(threshold))?;
        let verdict = local_opt_check(&set, front, trials.min(2_000), seed)?;
        let descent = seeded_descent(&set, front, DESCENT_ITERATIONS, seed)?;

        // Above the threshold the 2D optimum pulls the extremes inward.
        let r_close = threshold / 2.0;
        let inner: Vec<Point<f64, 3>> = lemma1_positions(&Lemma1Params::new(mu, r_close, r_close)?)
            .into_iter()
            .map(|x| Point::new([x, 0.0, 1.0 - x]))
            .collect();
        let close_ref = Point::splat(r_close);
        let lemma_gain = hv3(&inner, &close_ref)? - hv3(&pts, &close_ref)?;

        checks.push(Check::new(
            format!("TypeI mu={mu} r={threshold:.4}"),
            equal && verdict.passed() && !descent.improved() && lemma_gain > STRICT_TOL,
            format!(
                "contribution spread {:.1e}; {}; descent gain {:+.1e}; at r={r_close:.4} inward set gains {lemma_gain:.2e}",
                spread(table.values()),
                describe(&verdict),
                descent.final_hv - descent.initial_hv
            ),
        ));
    }
    Ok(checks)
}

/// The three-point Type II set at `r = -1/2` and its middle point moved
/// from `(0.5, 0.5, 0.5)` to `(0.6, 0.6, 0.4)`.
pub fn type2_sets() -> (
    Vec<Point<Rational64, 3>>,
    Vec<Point<Rational64, 3>>,
    Point<Rational64, 3>,
) {
    let q = |n: i64| Rational64::new(n, 10);
    let uniform = vec![
        Point::new([q(0), q(0), q(10)]),
        Point::new([q(5), q(5), q(5)]),
        Point::new([q(10), q(10), q(0)]),
    ];
    let mut moved = uniform.clone();
    moved[1] = Point::new([q(6), q(6), q(4)]);
    (uniform, moved, Point::splat(q(-5)))
}

fn type2_suite(seed: u64) -> Result<Vec<Check>> {
    let (uniform, moved, r) = type2_sets();
    let before = hvc(1, &uniform, &r)?;
    let after = hvc(1, &moved, &r)?;
    let hv_before = hv3(&uniform, &r)?;
    let hv_after = hv3(&moved, &r)?;
    let mut checks = vec![Check::new(
        "TypeII move",
        before == Rational64::new(3, 8)
            && after == Rational64::new(48, 125)
            && hv_after > hv_before,
        format!("middle hvc {before} -> {after}; total hv {hv_before} -> {hv_after}"),
    )];

    let pts = uniform_line_set::<f64>(FrontKind::TypeII, &[3])?;
    let set = SolutionSet::from_points(pts, Point::splat(-0.5))?;
    let descent = seeded_descent(&set, FrontKind::TypeII, DESCENT_ITERATIONS, seed)?;
    checks.push(Check::new(
        "TypeII descent",
        descent.improved(),
        format!(
            "uniform hv {:.6} improved to {:.6}",
            descent.initial_hv, descent.final_hv
        ),
    ));
    Ok(checks)
}

/// Every owned split `[mu1, mu - mu1]` of a Type III set with its hypervolume.
fn type3_splits(mu: usize, r: f64) -> Result<Vec<(Vec<usize>, f64)>> {
    (2..mu)
        .map(|mu1| {
            let parts = vec![mu1, mu - mu1];
            let counts = owned_to_segment_counts(FrontKind::TypeIII, &parts)?;
            let pts = uniform_line_set::<f64>(FrontKind::TypeIII, &counts)?;
            Ok((parts, hv3(&pts, &Point::splat(r))?))
        })
        .collect()
}

fn split_verdict(splits: &[(Vec<usize>, f64)], optimal: &[Vec<usize>]) -> (bool, String) {
    let max = splits.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
    let best_opt = splits
        .iter()
        .filter(|s| optimal.contains(&s.0))
        .map(|s| s.1)
        .collect::<Vec<_>>();
    let runner_up = splits
        .iter()
        .filter(|s| !optimal.contains(&s.0))
        .max_by(|a, b| a.1.total_cmp(&b.1));
    let opt_at_max =
        best_opt.len() == optimal.len() && best_opt.iter().all(|&v| (v - max).abs() <= FORMULA_TOL);
    let margin = runner_up.map_or(f64::INFINITY, |s| max - s.1);
    let detail = match runner_up {
        Some(s) => format!(
            "optimum {max:.8} at {optimal:?}; runner-up {:?} at {:.8} (margin {margin:.2e})",
            s.0, s.1
        ),
        None => format!("optimum {max:.8} at {optimal:?}; no other split"),
    };
    (opt_at_max && margin > STRICT_TOL, detail)
}

fn type3_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for mu in 4..=13usize {
        let plans = type3_split(mu)?;
        let optimal: Vec<Vec<usize>> = plans.iter().map(|p| p.parts.clone()).collect();
        let threshold = plans[0].reference_threshold;
        for r in [threshold, threshold - 0.5] {
            let splits = type3_splits(mu, r)?;
            let formula_err = splits
                .iter()
                .map(|(parts, v)| {
                    Ok((type3_component_hv(parts[0], parts[1], r)?.volume(r) - v).abs())
                })
                .collect::<Result<Vec<f64>>>()?
                .into_iter()
                .fold(0.0, f64::max);
            let (ok, detail) = split_verdict(&splits, &optimal);
            checks.push(Check::new(
                format!("T1 mu={mu} r={r:.4}"),
                ok && formula_err <= FORMULA_TOL,
                format!("{detail}; component formula error {formula_err:.1e}"),
            ));
        }
    }
    Ok(checks)
}

/// Hypervolume change from moving `a_i` of a Type IV set with `mu_prime`
/// points per line by `alpha` of a spacing towards `a_{i+1}`.
pub fn type4_engine_delta(mu_prime: usize, i: usize, alpha: f64, r: f64) -> Result<f64> {
    let pts = uniform_line_set::<f64>(FrontKind::TypeIV, &[mu_prime, mu_prime])?;
    let line = FrontKind::TypeIV.segments::<f64>()[1];
    let step = 1.0 / (mu_prime as f64 - 1.0);
    let from = line.at(step * (i as f64 - 1.0));
    let index = pts
        .iter()
        .position(|p| p.approx_eq(&from, FORMULA_TOL))
        .ok_or_else(|| {
            ExperimentError::Inconsistent(format!("a_{i} missing from the Type IV set"))
        })?;
    let mut moved = pts.clone();
    moved[index] = line.at(step * (i as f64 - 1.0 + alpha));
    let reference = Point::splat(r);
    Ok(hv3(&moved, &reference)? - hv3(&pts, &reference)?)
}

fn type4_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for r in [-1.0, -0.5, -0.1] {
        let mut worst: f64 = 0.0;
        let mut sign_errors = Vec::new();
        let mut cases = 0;
        for mu_prime in 4..=8usize {
            for i in 2..mu_prime {
                for k in 0..=10 {
                    let alpha = k as f64 / 10.0;
                    let engine = type4_engine_delta(mu_prime, i, alpha, r)?;
                    let formula = type4_move_delta(mu_prime, i, alpha)?;
                    worst = worst.max((engine - formula).abs());
                    let expect_gain = alpha > 0.0 && alpha < 1.0 / i as f64 - FORMULA_TOL;
                    if (engine > FORMULA_TOL) != expect_gain {
                        sign_errors.push((mu_prime, i, alpha));
                    }
                    cases += 1;
                }
            }
        }
        checks.push(Check::new(
            format!("T2 r={r}"),
            worst <= FORMULA_TOL && sign_errors.is_empty(),
            format!("{cases} moves; max |engine - formula| {worst:.1e}; sign mismatches {sign_errors:?}"),
        ));
    }
    let best = type4_engine_delta(5, 2, type4_best_alpha(2), -1.0)?;
    checks.push(Check::new(
        "T2 best move",
        (best - type4_move_delta(5, 2, 0.25)?).abs() <= FORMULA_TOL && best > 0.0,
        format!("mu'=5, i=2, alpha=1/4 gains {best:.6e}"),
    ));
    Ok(checks)
}

/// Every interior split `(n1, n2, n3)` of a Type V set with its hypervolume.
fn type5_splits(mu: usize, r: f64) -> Result<Vec<(Vec<usize>, f64)>> {
    let interior = mu - 3;
    let mut out = Vec::new();
    for n1 in 0..=interior {
        for n2 in 0..=interior - n1 {
            let n3 = interior - n1 - n2;
            let parts = vec![n1 + 2, n2 + 1, n3];
            let counts = owned_to_segment_counts(FrontKind::TypeV, &parts)?;
            let pts = uniform_line_set::<f64>(FrontKind::TypeV, &counts)?;
            out.push((parts, hv3(&pts, &Point::splat(r))?));
        }
    }
    Ok(out)
}

fn type5_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for mu in 4..=30usize {
        let plans = type5_split(mu)?;
        let optimal: Vec<Vec<usize>> = plans.iter().map(|p| p.parts.clone()).collect();
        let r = plans[0].reference_threshold;
        let splits = type5_splits(mu, r)?;
        let (ok, detail) = split_verdict(&splits, &optimal);
        checks.push(Check::new(format!("T3 mu={mu} r={r:.4}"), ok, detail));
    }
    Ok(checks)
}

fn type6_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let r = -1.0;
    for per_line in 2..=8usize {
        let pts = uniform_line_set::<f64>(FrontKind::TypeVI, &[per_line; 3])?;
        let mu = pts.len();
        let best = best_single_move(FrontKind::TypeVI, &pts, r)?;
        let gain = best.as_ref().map_or(0.0, |b| b.gain);
        let (ok, claim) = if mu > 6 {
            (gain > STRICT_TOL, "improvable")
        } else {
            (gain <= FORMULA_TOL, "no improving single move")
        };
        let detail = match &best {
            Some(b) => format!(
                "{claim}: best move #{} {} -> {} changes hv by {:+.6e}",
                b.index,
                fmt_point(&b.from),
                fmt_point(&b.to),
                b.gain
            ),
            None => format!("{claim}: no movable point"),
        };
        checks.push(Check::new(format!("T4 mu={mu}"), ok, detail));
    }
    Ok(checks)
}

/// Uniform barycentric sample.
fn simplex_sample(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let (a, b): (f64, f64) = (rng.random(), rng.random());
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    [lo, hi - lo, 1.0 - hi]
}

/// Engine contributions of a random point added to each lattice cell against
/// the per-region closed forms; returns the largest discrepancy.
pub fn region_formula_error(h: u32, samples_per_cell: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lattice = lattice_set::<f64>(FrontKind::TypeVII, h)?;
    let reference = Point::splat(-1.0 / f64::from(h));
    let mut worst: f64 = 0.0;
    for cell in LatticeCell::all(h) {
        for _ in 0..samples_per_cell {
            let s = simplex_sample(&mut rng);
            let unit = match cell.region {
                CellRegion::Triangular => s,
                CellRegion::Inverted => s.map(|c| 1.0 - c),
            };
            let formula = type78_region_hvc(cell.region, unit)?;
            let mut pts = lattice.clone();
            pts.push(cell.to_front(unit));
            let table = contributions(&pts, &reference)?;
            let scale = cell.volume_scale();
            worst = worst.max((table.values()[pts.len() - 1] - formula.added * scale).abs());
            for (nb, value) in &formula.neighbors {
                let q = cell.to_front(*nb);
                if let Some(j) = lattice.iter().position(|p| p.approx_eq(&q, FORMULA_TOL)) {
                    worst = worst.max((table.values()[j] - value * scale).abs());
                }
            }
        }
    }
    Ok(worst)
}

fn lattice_suite(front: FrontKind, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let tag = if front == FrontKind::TypeVII {
        "T5"
    } else {
        "T6"
    };
    let mut checks = Vec::new();
    for h in 1..=6u32 {
        let r = -1.0 / f64::from(h);
        let pts = lattice_set::<f64>(front, h)?;
        let table = contributions(&pts, &Point::splat(r))?;
        let set = SolutionSet::from_points(pts, Point::splat(r))?;
        let verdict = local_opt_check(&set, front, trials, seed.wrapping_add(u64::from(h)))?;
        checks.push(Check::new(
            format!("{tag} H={h}"),
            verdict.passed() && spread(table.values()) <= FORMULA_TOL,
            format!(
                "{}; contribution spread {:.1e}",
                describe(&verdict),
                spread(table.values())
            ),
        ));
    }
    if front == FrontKind::TypeVII {
        for h in 2..=4u32 {
            let err = region_formula_error(h, 8, seed)?;
            checks.push(Check::new(
                format!("{tag} regions H={h}"),
                err <= FORMULA_TOL,
                format!(
                    "max |engine - region formula| {err:.1e} over {} cells",
                    h * h
                ),
            ));
        }
    }
    Ok(checks)
}

fn summary_suite(options: &SuiteOptions, manifest: &Manifest) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let trials = options.trials.min(2_000);
    let seed = options.budget.seed;
    for entry in &manifest.summary {
        let front = entry.front;
        let expect_uniform = entry.optimal == Distribution::Uniform;
        let label = if expect_uniform {
            "uniform"
        } else {
            "nonuniform"
        };
        match front {
            FrontKind::TypeI => {
                let mu = 5;
                let r = reference_threshold(front, mu).expect("type I has a threshold");
                let set = SolutionSet::from_points(
                    uniform_line_set::<f64>(front, &[mu])?,
                    Point::splat(r),
                )?;
                let v = local_opt_check(&set, front, trials, seed)?;
                let d = seeded_descent(&set, front, DESCENT_ITERATIONS, seed)?;
                checks.push(Check::new(
                    format!("table4 {front} {label}"),
                    v.passed() && !d.improved(),
                    format!("mu={mu}, r={r}: {}; descent found no gain", describe(&v)),
                ));
            }
            FrontKind::TypeII => {
                let (uniform, moved, r) = type2_sets();
                let before = hv3(&uniform, &r)?;
                let after = hv3(&moved, &r)?;
                checks.push(Check::new(
                    format!("table4 {front} {label}"),
                    after > before,
                    format!("moving (0.5,0.5,0.5) to (0.6,0.6,0.4) at r=-0.5 raises hv {before} -> {after}"),
                ));
            }
            FrontKind::TypeIII | FrontKind::TypeV => {
                let mu = if front == FrontKind::TypeIII { 7 } else { 9 };
                let plans = if front == FrontKind::TypeIII {
                    type3_split(mu)?
                } else {
                    type5_split(mu)?
                };
                let r = plans[0].reference_threshold;
                let optimal: Vec<Vec<usize>> = plans.iter().map(|p| p.parts.clone()).collect();
                let splits = if front == FrontKind::TypeIII {
                    type3_splits(mu, r)?
                } else {
                    type5_splits(mu, r)?
                };
                let (split_ok, detail) = split_verdict(&splits, &optimal);
                let pts = plans[0].uniform_set::<f64>()?;
                let gain = best_single_move(front, &pts, r)?.map_or(0.0, |b| b.gain);
                checks.push(Check::new(
                    format!("table4 {front} {label}"),
                    split_ok && gain <= FORMULA_TOL,
                    format!("mu={mu}, r={r:.4}: {detail}; best single move {gain:+.1e}"),
                ));
            }
            FrontKind::TypeIV => {
                let gain = type4_engine_delta(5, 2, type4_best_alpha(2), -1.0)?;
                checks.push(Check::new(
                    format!("table4 {front} {label}"),
                    gain > STRICT_TOL,
                    format!("5 points per line, r=-1: moving a_2 by 1/4 spacing gains {gain:.6e}"),
                ));
            }
            FrontKind::TypeVI => {
                let pts = uniform_line_set::<f64>(front, &[4; 3])?;
                let best = best_single_move(front, &pts, -1.0)?;
                let gain = best.as_ref().map_or(0.0, |b| b.gain);
                checks.push(Check::new(
                    format!("table4 {front} {label}"),
                    gain > STRICT_TOL,
                    match best {
                        Some(b) => format!(
                            "mu={}, r=-1: moving {} -> {} gains {:.6e}",
                            pts.len(),
                            fmt_point(&b.from),
                            fmt_point(&b.to),
                            b.gain
                        ),
                        None => "no movable point".into(),
                    },
                ));
            }
            FrontKind::TypeVII | FrontKind::TypeVIII => {
                for &h in &entry.h {
                    let r = -1.0 / f64::from(h);
                    let pts = lattice_set::<f64>(front, h)?;
                    let uniform_hv = hv3(&pts, &Point::splat(r))?;
                    let found = run_search(front, pts.len(), r, &options.budget)?;
                    let gain = found.best_hv - uniform_hv;
                    let (ok, extra) = if expect_uniform {
                        let table = contributions(&pts, &Point::splat(r))?;
                        let set = SolutionSet::from_points(pts, Point::splat(r))?;
                        let v = local_opt_check(&set, front, trials, seed)?;
                        (
                            v.passed()
                                && spread(table.values()) <= FORMULA_TOL
                                && gain >= -STRICT_TOL,
                            format!("; locally optimal: {}", describe(&v)),
                        )
                    } else {
                        let improving = SolutionSet::from_points(
                            found.best_set.points().to_vec(),
                            Point::splat(r),
                        )?;
                        let recomputed = hv3(improving.points(), improving.reference())?;
                        let ok = improving.points().iter().all(|p| front.contains(p))
                            && recomputed > uniform_hv + manifest.tolerances.strict_gain;
                        (ok, "; improving set exhibited".to_string())
                    };
                    checks.push(Check::new(
                        format!("table4 {front} H={h} {label}"),
                        ok,
                        format!(
                            "uniform hv {uniform_hv:.6}, best searched {:.6} (gain {gain:+.2e}){extra}",
                            found.best_hv
                        ),
                    ));
                }
            }
        }
    }
    Ok(checks)
}
