//! Independent reference computations used to validate the sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::point::{validate, Point};
use crate::scalar::Scalar;

pub const IE_MAX_POINTS: usize = 20;
pub const MC_MIN_SAMPLES: usize = 10_000;

/// Inclusion-exclusion over every nonempty subset: each subset contributes
/// `(-1)^(|S|+1)` times the box volume of its componentwise minimum.
pub fn hv_oracle_ie<T: Scalar, const D: usize>(
    points: &[Point<T, D>],
    reference: &Point<T, D>,
) -> Result<T> {
    if points.len() > IE_MAX_POINTS {
        return Err(Error::SetTooLarge {
            max: IE_MAX_POINTS,
            found: points.len(),
        });
    }
    validate(points, reference)?;
    let mut total = T::zero();
    for (i, p) in points.iter().enumerate() {
        accumulate(points, reference, i + 1, *p, true, &mut total);
    }
    Ok(total)
}

fn accumulate<T: Scalar, const D: usize>(
    points: &[Point<T, D>],
    reference: &Point<T, D>,
    next: usize,
    corner: Point<T, D>,
    odd: bool,
    total: &mut T,
) {
    let v = corner.box_volume(reference);
    *total = if odd { *total + v } else { *total - v };
    for j in next..points.len() {
        accumulate(
            points,
            reference,
            j + 1,
            corner.meet(&points[j]),
            !odd,
            total,
        );
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

/// Monte-Carlo estimate over the box `[reference, join(points)]`.
pub fn hv_oracle_mc<const D: usize>(
    points: &[Point<f64, D>],
    reference: &Point<f64, D>,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if samples < MC_MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MC_MIN_SAMPLES,
            found: samples,
        });
    }
    validate(points, reference)?;
    let Some(first) = points.first() else {
        return Ok(McEstimate {
            estimate: 0.0,
            stderr: 0.0,
        });
    };
    let upper = points.iter().fold(*first, |acc, p| acc.join(p));
    let volume = upper.box_volume(reference);
    if volume.is_nan() || volume <= 0.0 || !volume.is_finite() {
        return Err(Error::DegenerateBox);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..samples {
        let x: [f64; D] = std::array::from_fn(|k| rng.random_range(reference[k]..upper[k]));
        let x = Point::new(x);
        if points.iter().any(|p| p.weakly_dominates(&x)) {
            hits += 1;
        }
    }
    let n = samples as f64;
    let frac = hits as f64 / n;
    Ok(McEstimate {
        estimate: volume * frac,
        stderr: volume * (frac * (1.0 - frac) / n).sqrt(),
    })
}
