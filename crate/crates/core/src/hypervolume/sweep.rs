//! Exact dimension-sweep hypervolume for two and three objectives.

use std::cmp::Ordering;

use crate::error::Result;
use crate::geometry::point::{validate, Point};
use crate::scalar::Scalar;

fn desc<T: Scalar>(a: T, b: T) -> Ordering {
    b.partial_cmp(&a).unwrap_or(Ordering::Equal)
}

/// Area dominated by `points` above `reference` (maximization).
pub fn hv2<T: Scalar>(points: &[Point<T, 2>], reference: &Point<T, 2>) -> Result<T> {
    validate(points, reference)?;
    Ok(hv2_unchecked(points, reference))
}

/// Volume dominated by `points` above `reference` (maximization).
pub fn hv3<T: Scalar>(points: &[Point<T, 3>], reference: &Point<T, 3>) -> Result<T> {
    validate(points, reference)?;
    Ok(hv3_unchecked(points, reference))
}

pub(crate) fn hv2_unchecked<T: Scalar>(points: &[Point<T, 2>], reference: &Point<T, 2>) -> T {
    let mut sorted: Vec<[T; 2]> = points.iter().map(|p| *p.coords()).collect();
    sorted.sort_by(|a, b| desc(a[0], b[0]).then(desc(a[1], b[1])));
    let mut area = T::zero();
    let mut height = reference[1];
    for [x, y] in sorted {
        if y > height {
            area = area + (x - reference[0]) * (y - height);
            height = y;
        }
    }
    area
}

/// Nondominated 2D front kept sorted by `x` descending (so `y` ascending).
struct Staircase<T> {
    steps: Vec<[T; 2]>,
}

impl<T: Scalar> Staircase<T> {
    fn new() -> Self {
        Self { steps: Vec::new() }
    }

    fn insert(&mut self, q: [T; 2]) {
        // First step with x <= q.x; everything before it has larger x.
        let pos = self.steps.partition_point(|s| s[0] > q[0]);
        // A step with x >= q.x and y >= q.y hides q. Among steps with larger
        // or equal x the best y is the one just before `pos`, or the step at
        // `pos` if it has the same x.
        if pos > 0 && self.steps[pos - 1][1] >= q[1] {
            return;
        }
        if pos < self.steps.len() && self.steps[pos][0] == q[0] && self.steps[pos][1] >= q[1] {
            return;
        }
        // Steps from `pos` on have x <= q.x; drop those with y <= q.y.
        let mut end = pos;
        while end < self.steps.len() && self.steps[end][1] <= q[1] {
            end += 1;
        }
        self.steps.splice(pos..end, std::iter::once(q));
    }

    fn area(&self, reference: [T; 2]) -> T {
        let mut area = T::zero();
        let mut below = reference[1];
        for s in &self.steps {
            area = area + (s[0] - reference[0]) * (s[1] - below);
            below = s[1];
        }
        area
    }
}

pub(crate) fn hv3_unchecked<T: Scalar>(points: &[Point<T, 3>], reference: &Point<T, 3>) -> T {
    if points.is_empty() {
        return T::zero();
    }
    let mut order: Vec<&Point<T, 3>> = points.iter().collect();
    order.sort_by(|a, b| desc(a[2], b[2]));

    let base = [reference[0], reference[1]];
    let mut stairs = Staircase::new();
    let mut volume = T::zero();
    let mut i = 0;
    while i < order.len() {
        let level = order[i][2];
        while i < order.len() && order[i][2] == level {
            stairs.insert([order[i][0], order[i][1]]);
            i += 1;
        }
        let next = if i < order.len() {
            order[i][2]
        } else {
            reference[2]
        };
        volume = volume + stairs.area(base) * (level - next);
    }
    volume
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn two_unit_boxes() {
        let pts = [Point::new([1.0, 0.0]), Point::new([0.0, 1.0])];
        assert_eq!(hv2(&pts, &Point::splat(-1.0)).unwrap(), 3.0);
    }

    #[test]
    fn single_box_3d() {
        let pts = [Point::new([1.0, 1.0, 0.0])];
        assert_eq!(hv3(&pts, &Point::splat(-1.0)).unwrap(), 4.0);
    }

    #[test]
    fn empty_set_is_zero() {
        assert_eq!(hv3::<f64>(&[], &Point::splat(-1.0)).unwrap(), 0.0);
        assert_eq!(hv2::<f64>(&[], &Point::splat(-1.0)).unwrap(), 0.0);
    }

    #[test]
    fn rejects_points_not_above_reference() {
        let pts = [Point::new([1.0, 1.0, 0.0]), Point::new([0.5, 0.5, -1.0])];
        assert_eq!(
            hv3(&pts, &Point::splat(-1.0)),
            Err(Error::NotDominatingReference { index: 1 })
        );
    }

    #[test]
    fn dominated_and_duplicate_points_change_nothing() {
        let r = Point::splat(-1.0);
        let base = [Point::new([1.0, 0.0, 0.0]), Point::new([0.0, 1.0, 0.0])];
        let v = hv3(&base, &r).unwrap();
        let mut more = base.to_vec();
        more.push(Point::new([0.5, 0.0, -0.5]));
        more.push(base[0]);
        assert_eq!(hv3(&more, &r).unwrap(), v);
    }

    #[test]
    fn staircase_keeps_only_nondominated_steps() {
        let mut s = Staircase::new();
        for q in [
            [1.0, 0.0],
            [0.0, 1.0],
            [0.5, 0.5],
            [0.5, 0.2],
            [0.5, 0.7],
            [1.0, 0.1],
        ] {
            s.insert(q);
        }
        assert_eq!(s.steps, vec![[1.0, 0.1], [0.5, 0.7], [0.0, 1.0]]);
    }
}
