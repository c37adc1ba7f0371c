//! Uniform point sets: the simplex lattice (DAS), its inversion, and
//! equispaced points along line-based fronts.
//!
//! Lattice coordinates are built from integer numerators divided by `H` once,
//! so every point is the correctly rounded image of an exact rational.

use crate::error::{Error, Result};
use crate::geometry::front::FrontKind;
use crate::geometry::point::Point;
use crate::scalar::Scalar;

/// `binom(n, k)`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All `w` with `w_i` in `{0, 1/H, ..., 1}` and `sum(w) = 1`, in descending
/// lexicographic order. `D` must be 2 or 3.
pub fn das_weights<T: Scalar, const D: usize>(h: u32) -> Result<Vec<Point<T, D>>> {
    if h == 0 {
        return Err(Error::ZeroLatticeParameter);
    }
    let den = i64::from(h);
    let to_point = |ks: [i64; D]| Point::new(ks.map(|k| T::from_ratio(k, den)));
    match D {
        2 => Ok((0..=den)
            .rev()
            .map(|k1| {
                let mut ks = [0i64; D];
                ks[0] = k1;
                ks[1] = den - k1;
                to_point(ks)
            })
            .collect()),
        3 => {
            let mut out = Vec::with_capacity(binomial(u64::from(h) + 2, 2) as usize);
            for k1 in (0..=den).rev() {
                for k2 in (0..=den - k1).rev() {
                    let mut ks = [0i64; D];
                    ks[0] = k1;
                    ks[1] = k2;
                    ks[2] = den - k1 - k2;
                    out.push(to_point(ks));
                }
            }
            Ok(out)
        }
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// `{(1,1,1) - w : w in das_weights(H, 3)}`, a uniform set on the inverted
/// triangle `f1 + f2 + f3 = 2`.
pub fn inverted_das_weights<T: Scalar>(h: u32) -> Result<Vec<Point<T, 3>>> {
    if h == 0 {
        return Err(Error::ZeroLatticeParameter);
    }
    let den = i64::from(h);
    let mut out = Vec::with_capacity(binomial(u64::from(h) + 2, 2) as usize);
    for k1 in (0..=den).rev() {
        for k2 in (0..=den - k1).rev() {
            let k3 = den - k1 - k2;
            out.push(Point::new(
                [k1, k2, k3].map(|k| T::from_ratio(den - k, den)),
            ));
        }
    }
    Ok(out)
}

/// Equispaced points on each segment of a line-based front, endpoints
/// included. `counts[s]` is the number of points on segment `s` counting both
/// of its endpoints; shared corners appear once, owned by the lowest segment.
pub fn uniform_line_set<T: Scalar>(kind: FrontKind, counts: &[usize]) -> Result<Vec<Point<T, 3>>> {
    if kind.is_plane_based() {
        return Err(Error::WrongFrontKind {
            kind: kind.name(),
            expected: "line",
        });
    }
    let segments = kind.segments::<T>();
    if counts.len() != segments.len() {
        return Err(Error::SegmentCountMismatch {
            expected: segments.len(),
            found: counts.len(),
        });
    }
    let mut out: Vec<Point<T, 3>> = Vec::new();
    for (s, (segment, &count)) in segments.iter().zip(counts).enumerate() {
        if count < 2 {
            return Err(Error::TooFewOnSegment {
                segment: s,
                min: 2,
                found: count,
            });
        }
        let den = count as i64 - 1;
        for i in 0..count as i64 {
            let p = segment.lerp_ratio(i, den);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}
