//! Closed-form optimal distributions, reference-point conditions and
//! contribution formulas for the line- and plane-based fronts.
//!
//! The Type V/VI results are encoded as statements only (splits and
//! thresholds); their correctness is checked empirically against the engine.

use crate::error::{Error, Result};
use crate::geometry::{uniform_line_set, FrontKind, Point};
use crate::scalar::Scalar;

/// Parameters of the optimal distribution on the 2D front `f(x) = 1 - x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma1Params {
    mu: usize,
    r1: f64,
    r2: f64,
}

impl Lemma1Params {
    pub fn new(mu: usize, r1: f64, r2: f64) -> Result<Self> {
        if mu < 2 {
            return Err(Error::InvalidParameter(format!(
                "mu must be >= 2, got {mu}"
            )));
        }
        if !(r1 < 0.0 && r2 < 0.0) {
            return Err(Error::InvalidParameter(
                "reference coordinates must be negative".into(),
            ));
        }
        Ok(Self { mu, r1, r2 })
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// `(F_l, F_r)`.
    pub fn bounds(&self) -> (f64, f64) {
        let mu = self.mu as f64;
        let f = |x: f64| 1.0 - x;
        let f_inv = |y: f64| 1.0 - y;
        let left = (1.0 - self.r1)
            .min((mu + 1.0) / mu - f(1.0 - self.r2) / mu)
            .min(mu / (mu - 1.0));
        let right = (1.0 - self.r2)
            .min((mu + 1.0) / mu - f_inv(1.0 - self.r1) / mu)
            .min(mu / (mu - 1.0));
        (left, right)
    }
}

/// The `mu` optimal positions `x_1 < ... < x_mu` on `f(x) = 1 - x`.
pub fn lemma1_positions(p: &Lemma1Params) -> Vec<f64> {
    let (left, right) = p.bounds();
    let start = 1.0 - left;
    let span = right - start;
    let mu = p.mu as f64;
    (1..=p.mu)
        .map(|i| start + (i as f64 / (mu + 1.0)) * span)
        .collect()
}

/// Front points `(x, 1 - x)` of [`lemma1_positions`].
pub fn lemma1_front_points(p: &Lemma1Params) -> Vec<Point<f64, 2>> {
    lemma1_positions(p)
        .into_iter()
        .map(|x| Point::new([x, 1.0 - x]))
        .collect()
}

/// How many solutions each line owns, with shared corners counted on the
/// lowest-indexed line, plus the reference threshold under which the plan is
/// optimal.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitPlan {
    pub kind: FrontKind,
    pub parts: Vec<usize>,
    pub reference_threshold: f64,
}

impl SplitPlan {
    pub fn mu(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Per-segment point counts (endpoints included) for [`uniform_line_set`].
    pub fn segment_counts(&self) -> Result<Vec<usize>> {
        owned_to_segment_counts(self.kind, &self.parts)
    }

    pub fn uniform_set<T: Scalar>(&self) -> Result<Vec<Point<T, 3>>> {
        uniform_line_set(self.kind, &self.segment_counts()?)
    }
}

/// Converts owned counts to per-segment counts with both endpoints.
pub fn owned_to_segment_counts(kind: FrontKind, parts: &[usize]) -> Result<Vec<usize>> {
    // Number of endpoints of each segment owned by an earlier segment.
    let borrowed: &[usize] = match kind {
        FrontKind::TypeI | FrontKind::TypeII => &[0],
        FrontKind::TypeIII | FrontKind::TypeIV => &[0, 1],
        FrontKind::TypeV | FrontKind::TypeVI => &[0, 1, 2],
        FrontKind::TypeVII | FrontKind::TypeVIII => {
            return Err(Error::WrongFrontKind {
                kind: kind.name(),
                expected: "line",
            })
        }
    };
    if parts.len() != borrowed.len() {
        return Err(Error::SegmentCountMismatch {
            expected: borrowed.len(),
            found: parts.len(),
        });
    }
    Ok(parts.iter().zip(borrowed).map(|(p, b)| p + b).collect())
}

/// Optimal Type III split(s) for `mu > 3`: `((mu+1)/2, (mu-1)/2)` for odd
/// `mu`, the two floor/ceil splits for even `mu`.
pub fn type3_split(mu: usize) -> Result<Vec<SplitPlan>> {
    if mu <= 3 {
        return Err(Error::InvalidParameter(format!(
            "Type III split needs mu > 3, got {mu}"
        )));
    }
    let plan = |mu1: usize, threshold: f64| SplitPlan {
        kind: FrontKind::TypeIII,
        parts: vec![mu1, mu - mu1],
        reference_threshold: threshold,
    };
    if mu % 2 == 1 {
        Ok(vec![plan(mu.div_ceil(2), -2.0 / (mu as f64 - 1.0))])
    } else {
        let threshold = -1.0 / ((mu - 1) / 2) as f64;
        // ceil((mu+1)/2) and floor((mu+1)/2).
        Ok(vec![plan(mu / 2 + 1, threshold), plan(mu / 2, threshold)])
    }
}

/// Optimal Type V split(s) for `mu > 3`: the `mu - 3` interior points are
/// spread as evenly as possible over the three lines.
pub fn type5_split(mu: usize) -> Result<Vec<SplitPlan>> {
    if mu <= 3 {
        return Err(Error::InvalidParameter(format!(
            "Type V split needs mu > 3, got {mu}"
        )));
    }
    let interior = mu - 3;
    let (q, rem) = (interior / 3, interior % 3);
    let threshold = if mu.is_multiple_of(3) {
        -3.0 / mu as f64
    } else {
        -1.0 / (mu / 3) as f64
    };
    let mut patterns: Vec<[usize; 3]> = Vec::new();
    for extra in 0..8u8 {
        if extra.count_ones() as usize != rem {
            continue;
        }
        let n: [usize; 3] = std::array::from_fn(|k| q + usize::from(extra >> k & 1 == 1));
        if !patterns.contains(&n) {
            patterns.push(n);
        }
    }
    patterns.sort_by(|a, b| b.cmp(a));
    Ok(patterns
        .into_iter()
        .map(|n| SplitPlan {
            kind: FrontKind::TypeV,
            // Line 0 owns both of its corners, line 1 owns one, line 2 none.
            parts: vec![n[0] + 2, n[1] + 1, n[2]],
            reference_threshold: threshold,
        })
        .collect())
}

/// The two 2D hypervolumes whose sum (times `|r|`) is the Type III
/// hypervolume of a uniform split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Type3Components {
    /// Line 1 in the `f1-f3` plane against `(r, r)`.
    pub hv1_2d: f64,
    /// Line 2 in the `f1-f2` plane against `(r, 0)`.
    pub hv2_2d: f64,
    pub total: f64,
}

impl Type3Components {
    /// The 3D hypervolume: each 2D part is extruded over a slab of depth `|r|`.
    pub fn volume(&self, r: f64) -> f64 {
        self.total * r.abs()
    }
}

pub fn type3_component_hv(mu1: usize, mu2: usize, r: f64) -> Result<Type3Components> {
    if mu1 < 2 || mu2 < 1 || r.is_nan() || r >= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "need mu1 >= 2, mu2 >= 1, r < 0 (got {mu1}, {mu2}, {r})"
        )));
    }
    let m1 = mu1 as f64 - 1.0;
    let m2 = mu2 as f64;
    let hv1_2d = 0.5 + r * (r - 2.0) - 1.0 / (2.0 * m1);
    let hv2_2d = 0.5 - r - 1.0 / (2.0 * m2);
    let total = 1.0 - 1.0 / (2.0 * m1) - 1.0 / (2.0 * m2) + r * (r - 3.0);
    Ok(Type3Components {
        hv1_2d,
        hv2_2d,
        total,
    })
}

/// Contribution of the `i`-th uniform point on the moved Type IV line,
/// `(i - 1) / (mu' - 1)^3`.
pub fn type4_uniform_hvc(mu_prime: usize, i: usize) -> Result<f64> {
    check_type4_index(mu_prime, i)?;
    Ok((i as f64 - 1.0) / ((mu_prime as f64 - 1.0).powi(3)))
}

/// Change in hypervolume when the Type IV point `a_i` moves to
/// `a_i + alpha (a_{i+1} - a_i)`: `(-i alpha^2 + alpha) / (mu' - 1)^3`.
pub fn type4_move_delta(mu_prime: usize, i: usize, alpha: f64) -> Result<f64> {
    check_type4_index(mu_prime, i)?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let step = 1.0 / (mu_prime as f64 - 1.0);
    Ok((-(i as f64) * alpha * alpha + alpha) * step.powi(3))
}

/// The move that maximizes [`type4_move_delta`]: `alpha = 1 / (2i)`.
pub fn type4_best_alpha(i: usize) -> f64 {
    1.0 / (2.0 * i as f64)
}

fn check_type4_index(mu_prime: usize, i: usize) -> Result<()> {
    if i < 2 || i + 1 > mu_prime {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= i <= mu' - 1 (got i = {i}, mu' = {mu_prime})"
        )));
    }
    Ok(())
}

/// The two kinds of lattice cells a simplex-lattice set cuts the triangle into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellRegion {
    /// Corners `(1,0,1)`, `(0,1,1)`, `(1,1,0)`; points satisfy `x + y + z = 2`.
    Inverted,
    /// Corners `(0,0,1)`, `(1,0,0)`, `(0,1,0)`; points satisfy `x + y + z = 1`.
    Triangular,
}

/// Contributions after adding `p` to a cell, in unit-cell coordinates
/// (multiply by `1/H^3` for a lattice of spacing `1/H` at `r = -1/H`).
#[derive(Debug, Clone, PartialEq)]
pub struct RegionContributions {
    pub added: f64,
    /// Affected lattice points (unit coordinates) with their contributions.
    pub neighbors: Vec<([f64; 3], f64)>,
}

impl RegionContributions {
    pub fn strictly_least(&self) -> bool {
        self.neighbors.iter().all(|&(_, v)| self.added < v)
    }
}

const REGION_TOL: f64 = 1e-12;

pub fn type78_region_hvc(region: CellRegion, p: [f64; 3]) -> Result<RegionContributions> {
    let [x, y, z] = p;
    let (sum, lo, hi) = match region {
        CellRegion::Inverted => (2.0, 0.0, 1.0),
        CellRegion::Triangular => (1.0, 0.0, 1.0),
    };
    let inside = ((x + y + z) - sum).abs() <= REGION_TOL
        && p.iter()
            .all(|&c| c >= lo - REGION_TOL && c <= hi + REGION_TOL);
    if !inside {
        return Err(Error::InvalidParameter(format!(
            "{p:?} is outside the {region:?} cell"
        )));
    }
    Ok(match region {
        CellRegion::Inverted => RegionContributions {
            added: x * y * z,
            neighbors: vec![
                ([1.0, 0.0, 1.0], 1.0 - x * z),
                ([0.0, 1.0, 1.0], 1.0 - y * z),
                ([1.0, 1.0, 0.0], 1.0 - x * y),
            ],
        },
        CellRegion::Triangular => RegionContributions {
            added: x * y * z + x * y + x * z + y * z,
            neighbors: vec![
                ([0.0, 0.0, 1.0], 1.0 - z),
                ([1.0, 0.0, 0.0], 1.0 - x),
                ([0.0, 1.0, 0.0], 1.0 - y),
                ([1.0, -1.0, 1.0], 1.0 - x * z),
                ([-1.0, 1.0, 1.0], 1.0 - y * z),
                ([1.0, 1.0, -1.0], 1.0 - x * y),
            ],
        },
    })
}

/// One cell of the simplex lattice with spacing `1/H`: front point
/// `(origin + unit) / H` for unit-cell coordinates `unit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCell {
    pub h: u32,
    pub origin: [i64; 3],
    pub region: CellRegion,
}

impl LatticeCell {
    /// Every cell of the lattice: `H^2` in total.
    pub fn all(h: u32) -> Vec<LatticeCell> {
        let hi = i64::from(h);
        let mut cells = Vec::new();
        for (region, level) in [
            (CellRegion::Triangular, hi - 1),
            (CellRegion::Inverted, hi - 2),
        ] {
            if level < 0 {
                continue;
            }
            for a in (0..=level).rev() {
                for b in (0..=level - a).rev() {
                    cells.push(LatticeCell {
                        h,
                        origin: [a, b, level - a - b],
                        region,
                    });
                }
            }
        }
        cells
    }

    pub fn to_front(&self, unit: [f64; 3]) -> Point<f64, 3> {
        let h = f64::from(self.h);
        Point::new(std::array::from_fn(|k| {
            (self.origin[k] as f64 + unit[k]) / h
        }))
    }

    pub fn from_front(&self, p: &Point<f64, 3>) -> [f64; 3] {
        let h = f64::from(self.h);
        std::array::from_fn(|k| p[k] * h - self.origin[k] as f64)
    }

    /// Scale from unit-cell contributions to front contributions.
    pub fn volume_scale(&self) -> f64 {
        f64::from(self.h).powi(-3)
    }
}

/// Reference-point condition from the summary table: `None` where the
/// optimal distribution is nonuniform and no condition is stated.
/// `n` is `mu` for line-based kinds and `H` for plane-based kinds.
pub fn reference_threshold(kind: FrontKind, n: usize) -> Option<f64> {
    let n = n as f64;
    match kind {
        FrontKind::TypeI => Some(-1.0 / (n - 1.0)),
        FrontKind::TypeIII => Some(-2.0 / (n - 1.0)),
        FrontKind::TypeV => Some(-3.0 / n),
        FrontKind::TypeVII | FrontKind::TypeVIII => Some(-1.0 / n),
        FrontKind::TypeII | FrontKind::TypeIV | FrontKind::TypeVI => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypervolume::{contributions, hv2, hv3};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn lemma1_four_points_include_extremes() {
        let p = Lemma1Params::new(4, -1.0 / 3.0, -1.0 / 3.0).unwrap();
        let x = lemma1_positions(&p);
        for (got, want) in x.iter().zip([0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0]) {
            assert!(close(*got, want, 1e-12), "{x:?}");
        }
    }

    #[test]
    fn lemma1_two_points() {
        let p = Lemma1Params::new(2, -1.0, -1.0).unwrap();
        let pts = lemma1_front_points(&p);
        assert!(pts[0].approx_eq(&Point::new([0.0, 1.0]), 1e-12));
        assert!(pts[1].approx_eq(&Point::new([1.0, 0.0]), 1e-12));
    }

    #[test]
    fn lemma1_close_reference_beats_random_sets() {
        let p = Lemma1Params::new(5, -0.1, -0.1).unwrap();
        let x = lemma1_positions(&p);
        for w in x.windows(3) {
            assert!(close(w[1] - w[0], w[2] - w[1], 1e-12));
        }
        let r = Point::splat(-0.1);
        let best = hv2(&lemma1_front_points(&p), &r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let pts: Vec<Point<f64, 2>> = (0..5)
                .map(|_| {
                    let x: f64 = rng.random_range(0.0..=1.0);
                    Point::new([x, 1.0 - x])
                })
                .collect();
            assert!(hv2(&pts, &r).unwrap() <= best + 1e-12);
        }
    }

    #[test]
    fn lemma1_rejects_bad_params() {
        assert!(Lemma1Params::new(1, -1.0, -1.0).is_err());
        assert!(Lemma1Params::new(3, 0.0, -1.0).is_err());
    }

    #[test]
    fn type3_split_examples() {
        let five = type3_split(5).unwrap();
        assert_eq!(five.len(), 1);
        assert_eq!(five[0].parts, vec![3, 2]);
        assert_eq!(five[0].reference_threshold, -0.5);

        let six = type3_split(6).unwrap();
        assert_eq!(
            six.iter().map(|s| s.parts.clone()).collect::<Vec<_>>(),
            vec![vec![4, 2], vec![3, 3]]
        );
        assert!(six.iter().all(|s| s.reference_threshold == -0.5));

        assert_eq!(type3_split(7).unwrap()[0].parts, vec![4, 3]);
        assert!(type3_split(3).is_err());
    }

    #[test]
    fn type3_split_beats_every_other_split_for_mu7() {
        let plan = &type3_split(7).unwrap()[0];
        let r = Point::splat(plan.reference_threshold);
        let best = hv3(&plan.uniform_set::<f64>().unwrap(), &r).unwrap();
        for mu1 in 2..7 {
            if mu1 == plan.parts[0] {
                continue;
            }
            let other = SplitPlan {
                parts: vec![mu1, 7 - mu1],
                ..plan.clone()
            };
            let pts = other.uniform_set::<f64>().unwrap();
            assert_eq!(pts.len(), 7);
            assert!(hv3(&pts, &r).unwrap() < best);
        }
    }

    #[test]
    fn type5_split_examples() {
        let nine = type5_split(9).unwrap();
        assert_eq!(nine.len(), 1);
        assert_eq!(nine[0].segment_counts().unwrap(), vec![4, 4, 4]);
        assert!(close(nine[0].reference_threshold, -1.0 / 3.0, 1e-15));
        let ten = type5_split(10).unwrap();
        assert_eq!(ten.len(), 3);
        for plan in &ten {
            assert_eq!(plan.mu(), 10);
            assert_eq!(plan.uniform_set::<f64>().unwrap().len(), 10);
        }
        assert_eq!(ten[0].reference_threshold, -1.0 / 3.0);
    }

    #[test]
    fn type3_components_examples() {
        let c = type3_component_hv(3, 2, -0.5).unwrap();
        assert!(close(c.hv1_2d, 1.5, 1e-15));
        assert!(close(c.hv2_2d, 0.75, 1e-15));
        assert!(close(c.total, c.hv1_2d + c.hv2_2d, 1e-15));
        let limit = type3_component_hv(1_000_000, 1_000_000, -1e-9).unwrap();
        assert!(close(limit.total, 1.0, 1e-5));
        assert!(type3_component_hv(1, 2, -0.5).is_err());
    }

    #[test]
    fn type3_components_match_2d_sweeps() {
        let (mu1, mu2, r) = (3usize, 2usize, -0.5);
        let line1: Vec<Point<f64, 2>> = (0..mu1)
            .map(|i| {
                let t = i as f64 / (mu1 - 1) as f64;
                Point::new([1.0 - t, t])
            })
            .collect();
        let line2: Vec<Point<f64, 2>> = (1..=mu2)
            .map(|i| {
                let t = i as f64 / mu2 as f64;
                Point::new([1.0 - t, t])
            })
            .collect();
        let c = type3_component_hv(mu1, mu2, r).unwrap();
        assert!(close(
            hv2(&line1, &Point::new([r, r])).unwrap(),
            c.hv1_2d,
            1e-12
        ));
        assert!(close(
            hv2(&line2, &Point::new([r, 0.0])).unwrap(),
            c.hv2_2d,
            1e-12
        ));

        let plan = SplitPlan {
            kind: FrontKind::TypeIII,
            parts: vec![mu1, mu2],
            reference_threshold: r,
        };
        let v = hv3(&plan.uniform_set::<f64>().unwrap(), &Point::splat(r)).unwrap();
        assert!(close(v, c.volume(r), 1e-12));
    }

    #[test]
    fn type4_delta_examples() {
        assert!(close(
            type4_move_delta(5, 2, 0.25).unwrap(),
            0.125 / 64.0,
            1e-15
        ));
        assert_eq!(type4_move_delta(5, 2, 0.0).unwrap(), 0.0);
        assert!(close(type4_move_delta(5, 2, 0.5).unwrap(), 0.0, 1e-15));
        assert!(type4_move_delta(5, 1, 0.1).is_err());
        assert!(type4_move_delta(5, 5, 0.1).is_err());
        assert!(type4_move_delta(5, 2, 1.5).is_err());
        assert!(close(type4_uniform_hvc(5, 3).unwrap(), 2.0 / 64.0, 1e-15));
        let best = type4_best_alpha(3);
        for k in 0..=100 {
            let a = k as f64 / 100.0;
            assert!(
                type4_move_delta(6, 3, a).unwrap() <= type4_move_delta(6, 3, best).unwrap() + 1e-18
            );
        }
    }

    #[test]
    fn region_formula_examples() {
        let inv = type78_region_hvc(CellRegion::Inverted, [2.0 / 3.0; 3]).unwrap();
        assert!(close(inv.added, 8.0 / 27.0, 1e-15));
        assert!(inv
            .neighbors
            .iter()
            .all(|&(_, v)| close(v, 5.0 / 9.0, 1e-15)));
        assert!(inv.strictly_least());

        let tri = type78_region_hvc(CellRegion::Triangular, [1.0 / 3.0; 3]).unwrap();
        assert!(close(tri.added, 10.0 / 27.0, 1e-15));
        assert!(close(tri.neighbors[0].1, 2.0 / 3.0, 1e-15));
        assert!(tri.strictly_least());

        let vertex = type78_region_hvc(CellRegion::Inverted, [1.0, 1.0, 0.0]).unwrap();
        assert_eq!(vertex.added, 0.0);
        assert!(!vertex.strictly_least());

        assert!(type78_region_hvc(CellRegion::Inverted, [0.2, 0.3, 0.5]).is_err());
        assert!(type78_region_hvc(CellRegion::Triangular, [1.2, -0.1, -0.1]).is_err());
    }

    #[test]
    fn lattice_cells_tile_the_triangle() {
        for h in 1..=6u32 {
            let cells = LatticeCell::all(h);
            assert_eq!(cells.len() as u32, h * h);
        }
        let cell = LatticeCell::all(3)[0];
        let p = cell.to_front([1.0 / 3.0; 3]);
        assert!(FrontKind::TypeVII.contains(&p));
        let back = cell.from_front(&p);
        assert!(back.iter().all(|&c| close(c, 1.0 / 3.0, 1e-12)));
    }

    #[test]
    fn thresholds_from_the_summary_table() {
        assert!(close(
            reference_threshold(FrontKind::TypeV, 9).unwrap(),
            -1.0 / 3.0,
            1e-15
        ));
        assert!(close(
            reference_threshold(FrontKind::TypeVII, 3).unwrap(),
            -1.0 / 3.0,
            1e-15
        ));
        assert_eq!(reference_threshold(FrontKind::TypeI, 5), Some(-0.25));
        assert_eq!(reference_threshold(FrontKind::TypeIII, 5), Some(-0.5));
        assert_eq!(reference_threshold(FrontKind::TypeII, 5), None);
        assert_eq!(reference_threshold(FrontKind::TypeIV, 5), None);
        assert_eq!(reference_threshold(FrontKind::TypeVI, 5), None);
    }

    #[test]
    fn type_i_uniform_set_has_equal_contributions() {
        for mu in 3..=9usize {
            let r = reference_threshold(FrontKind::TypeI, mu).unwrap();
            let pts = uniform_line_set::<f64>(FrontKind::TypeI, &[mu]).unwrap();
            let table = contributions(&pts, &Point::splat(r)).unwrap();
            let first = table.values()[0];
            assert!(
                table.values().iter().all(|&v| close(v, first, 1e-12)),
                "{mu}: {table:?}"
            );
        }
    }
}
