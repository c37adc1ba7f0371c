use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An objective vector. All objectives are maximized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T, const D: usize> {
    coords: [T; D],
}

impl<T: Scalar, const D: usize> Point<T, D> {
    pub const fn new(coords: [T; D]) -> Self {
        Self { coords }
    }

    /// The point `(v, v, ..., v)`, e.g. the diagonal reference point `(r, r, r)`.
    pub fn splat(v: T) -> Self {
        Self { coords: [v; D] }
    }

    pub fn coords(&self) -> &[T; D] {
        &self.coords
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    /// Pareto dominance under maximization: `>=` everywhere, `>` somewhere.
    pub fn dominates(&self, other: &Self) -> bool {
        let mut strictly = false;
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            if a < b {
                return false;
            }
            if a > b {
                strictly = true;
            }
        }
        strictly
    }

    /// `>=` in every coordinate (a point weakly dominates itself).
    pub fn weakly_dominates(&self, other: &Self) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| a >= b)
    }

    /// `>` in every coordinate.
    pub fn strictly_dominates(&self, other: &Self) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| a > b)
    }

    /// Componentwise minimum: the upper corner of the intersection of two
    /// dominated boxes.
    pub fn meet(&self, other: &Self) -> Self {
        let mut coords = self.coords;
        for (c, o) in coords.iter_mut().zip(other.coords.iter()) {
            *c = c.min_of(*o);
        }
        Self { coords }
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut coords = self.coords;
        for (c, o) in coords.iter_mut().zip(other.coords.iter()) {
            *c = c.max_of(*o);
        }
        Self { coords }
    }

    /// Volume of the box spanned between `reference` and `self`.
    pub fn box_volume(&self, reference: &Self) -> T {
        self.coords
            .iter()
            .zip(reference.coords.iter())
            .fold(T::one(), |acc, (&p, &r)| acc * (p - r))
    }

    pub fn to_f64(&self) -> Point<f64, D> {
        Point::new(self.coords.map(Scalar::to_f64))
    }

    /// Applies a permutation of the axes: output axis `k` takes input axis `perm[k]`.
    pub fn permuted(&self, perm: [usize; D]) -> Self {
        Self {
            coords: perm.map(|k| self.coords[k]),
        }
    }
}

impl<const D: usize> Point<f64, D> {
    pub fn distance(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| (a - b).abs() <= tol)
    }
}

impl<T, const D: usize> Index<usize> for Point<T, D> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

impl<T: Scalar, const D: usize> From<[T; D]> for Point<T, D> {
    fn from(coords: [T; D]) -> Self {
        Self::new(coords)
    }
}

/// Checks the shared preconditions of the hypervolume routines: finite
/// coordinates and strict dominance of the reference point.
pub(crate) fn validate<T: Scalar, const D: usize>(
    points: &[Point<T, D>],
    reference: &Point<T, D>,
) -> Result<()> {
    if !reference.is_finite() {
        return Err(Error::NonFinite { index: usize::MAX });
    }
    for (index, p) in points.iter().enumerate() {
        if !p.is_finite() {
            return Err(Error::NonFinite { index });
        }
        if !p.strictly_dominates(reference) {
            return Err(Error::NotDominatingReference { index });
        }
    }
    Ok(())
}

/// A set of mutually distinct points measured against one reference point.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet<T, const D: usize> {
    points: Vec<Point<T, D>>,
    reference: Point<T, D>,
}

impl<T: Scalar, const D: usize> SolutionSet<T, D> {
    pub fn new(reference: Point<T, D>) -> Self {
        Self {
            points: Vec::new(),
            reference,
        }
    }

    /// Builds a set, collapsing coordinate-identical duplicates (first copy wins).
    pub fn from_points(
        points: impl IntoIterator<Item = Point<T, D>>,
        reference: Point<T, D>,
    ) -> Result<Self> {
        let mut set = Self::new(reference);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    /// Inserts `p` unless an identical point is already present. Returns
    /// whether the set grew.
    pub fn insert(&mut self, p: Point<T, D>) -> Result<bool> {
        if !p.is_finite() {
            return Err(Error::NonFinite {
                index: self.points.len(),
            });
        }
        if !p.strictly_dominates(&self.reference) {
            return Err(Error::NotDominatingReference {
                index: self.points.len(),
            });
        }
        if self.points.contains(&p) {
            return Ok(false);
        }
        self.points.push(p);
        Ok(true)
    }

    pub fn remove(&mut self, index: usize) -> Result<Point<T, D>> {
        if index >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.points.len(),
            });
        }
        Ok(self.points.remove(index))
    }

    pub fn points(&self) -> &[Point<T, D>] {
        &self.points
    }

    pub fn reference(&self) -> &Point<T, D> {
        &self.reference
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P3 = Point<f64, 3>;

    #[test]
    fn dominance_relations() {
        let a = P3::new([1.0, 1.0, 0.0]);
        let b = P3::new([1.0, 0.5, 0.0]);
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
        assert!(!a.dominates(&a));
        assert!(a.weakly_dominates(&a));
        assert!(a.strictly_dominates(&P3::splat(-1.0)));
        assert!(!a.strictly_dominates(&P3::splat(0.0)));
    }

    #[test]
    fn meet_and_box_volume() {
        let a = P3::new([1.0, 0.0, 1.0]);
        let b = P3::new([0.0, 1.0, 1.0]);
        assert_eq!(a.meet(&b), P3::new([0.0, 0.0, 1.0]));
        assert_eq!(a.join(&b), P3::new([1.0, 1.0, 1.0]));
        assert_eq!(a.box_volume(&P3::splat(-1.0)), 2.0 * 1.0 * 2.0);
    }

    #[test]
    fn set_collapses_duplicates_and_rejects_bad_points() {
        let mut set = SolutionSet::new(P3::splat(-1.0));
        assert!(set.insert(P3::new([1.0, 0.0, 0.0])).unwrap());
        assert!(!set.insert(P3::new([1.0, 0.0, 0.0])).unwrap());
        assert_eq!(set.len(), 1);
        assert_eq!(
            set.insert(P3::new([1.0, -1.0, 0.0])),
            Err(Error::NotDominatingReference { index: 1 })
        );
        assert!(matches!(
            set.insert(P3::new([f64::NAN, 0.0, 0.0])),
            Err(Error::NonFinite { .. })
        ));
        assert!(set.remove(3).is_err());
        assert_eq!(set.remove(0).unwrap(), P3::new([1.0, 0.0, 0.0]));
        assert!(set.is_empty());
    }

    #[test]
    fn permutation_moves_axes() {
        let p = P3::new([1.0, 2.0, 3.0]);
        assert_eq!(p.permuted([2, 0, 1]), P3::new([3.0, 1.0, 2.0]));
    }
}
