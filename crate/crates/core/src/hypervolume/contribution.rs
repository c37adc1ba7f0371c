use crate::error::{Error, Result};
use crate::geometry::point::{validate, Point};
use crate::hypervolume::sweep::{hv2_unchecked, hv3_unchecked};
use crate::scalar::Scalar;

/// Per-point exclusive hypervolume, aligned with the input order.
#[derive(Debug, Clone, PartialEq)]
pub struct ContributionTable<T> {
    values: Vec<T>,
}

impl<T: Scalar> ContributionTable<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the smallest entry; ties go to the lowest index.
    pub fn least(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, v) in self.values.iter().enumerate() {
            match best {
                Some(b) if *v >= self.values[b] => {}
                _ => best = Some(i),
            }
        }
        best
    }

    pub fn total(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &v| acc + v)
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

fn lift<T: Scalar, const D: usize, const E: usize>(p: &Point<T, D>) -> Point<T, E> {
    Point::new(std::array::from_fn(|k| p[k]))
}

/// Exact hypervolume for `D` in {2, 3} on already-validated input.
pub(crate) fn hv_unchecked<T: Scalar, const D: usize>(
    points: &[Point<T, D>],
    reference: &Point<T, D>,
) -> Result<T> {
    match D {
        2 => {
            let pts: Vec<Point<T, 2>> = points.iter().map(lift).collect();
            Ok(hv2_unchecked(&pts, &lift(reference)))
        }
        3 => {
            let pts: Vec<Point<T, 3>> = points.iter().map(lift).collect();
            Ok(hv3_unchecked(&pts, &lift(reference)))
        }
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// `HV(A) - HV(A \ {A[index]})`, straight from the definition.
pub fn hvc<T: Scalar, const D: usize>(
    index: usize,
    points: &[Point<T, D>],
    reference: &Point<T, D>,
) -> Result<T> {
    if index >= points.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: points.len(),
        });
    }
    validate(points, reference)?;
    let mut rest = points.to_vec();
    rest.remove(index);
    Ok(hv_unchecked(points, reference)? - hv_unchecked(&rest, reference)?)
}

/// Contributions of every point.
///
/// The exclusive region of `p` is its box minus the union of the boxes of
/// `meet(p, q)` over the other points `q`, so each entry is one box volume
/// minus one small sweep.
pub fn contributions<T: Scalar, const D: usize>(
    points: &[Point<T, D>],
    reference: &Point<T, D>,
) -> Result<ContributionTable<T>> {
    validate(points, reference)?;
    if D != 2 && D != 3 {
        return Err(Error::UnsupportedDimension(D));
    }
    let mut values = Vec::with_capacity(points.len());
    let mut meets: Vec<Point<T, D>> = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        meets.clear();
        let mut covered = false;
        for (j, q) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            if q.weakly_dominates(p) {
                covered = true;
                break;
            }
            meets.push(p.meet(q));
        }
        let value = if covered {
            T::zero()
        } else {
            let exclusive = p.box_volume(reference) - hv_unchecked(&meets, reference)?;
            if exclusive < T::zero() {
                T::zero()
            } else {
                exclusive
            }
        };
        values.push(value);
    }
    Ok(ContributionTable { values })
}

/// Index of the point with the smallest contribution (lowest index on ties).
pub fn least_contributor<T: Scalar, const D: usize>(
    points: &[Point<T, D>],
    reference: &Point<T, D>,
) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let table = contributions(points, reference)?;
    table.least().ok_or(Error::EmptySet)
}
