//! The eight front families and their intrinsic parametrizations.
//!
//! Line-based kinds are unions of unit-length-in-each-axis segments; the
//! segment order is fixed per kind and a corner shared by several segments
//! belongs to the lowest-indexed one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::scalar::Scalar;

/// Membership tolerance for [`FrontKind::contains`].
pub const CONTAINS_TOL: f64 = 1e-12;

/// Furthest distance [`FrontKind::project`] accepts before reporting an error.
pub const PROJECT_LIMIT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrontKind {
    /// `f1 + f3 = 1`, `f2 = 0`.
    #[serde(rename = "type_i")]
    TypeI,
    /// `f1 + f3 = 1`, `f1 = f2`.
    #[serde(rename = "type_ii")]
    TypeII,
    /// Two edges of the triangle `f1 + f2 + f3 = 1` meeting at `(1,0,0)`.
    #[serde(rename = "type_iii")]
    TypeIII,
    /// Two edges of the inverted triangle `f1 + f2 + f3 = 2` meeting at `(0,1,1)`.
    #[serde(rename = "type_iv")]
    TypeIV,
    /// All three edges of the triangle.
    #[serde(rename = "type_v")]
    TypeV,
    /// All three edges of the inverted triangle.
    #[serde(rename = "type_vi")]
    TypeVI,
    /// The triangle `f1 + f2 + f3 = 1`, `fi >= 0`.
    #[serde(rename = "type_vii")]
    TypeVII,
    /// The inverted triangle `f1 + f2 + f3 = 2`, `0 <= fi <= 1`.
    #[serde(rename = "type_viii")]
    TypeVIII,
}

/// A straight piece of a line-based front, oriented `start -> end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<T> {
    pub start: Point<T, 3>,
    pub end: Point<T, 3>,
}

impl<T: Scalar> Segment<T> {
    /// `start + (num/den) (end - start)`.
    pub fn lerp_ratio(&self, num: i64, den: i64) -> Point<T, 3> {
        let t = T::from_ratio(num, den);
        let (a, b) = (self.start.coords(), self.end.coords());
        Point::new([0, 1, 2].map(|k| a[k] + t * (b[k] - a[k])))
    }
}

impl Segment<f64> {
    pub fn at(&self, t: f64) -> Point<f64, 3> {
        let (a, b) = (self.start.coords(), self.end.coords());
        Point::new([0, 1, 2].map(|k| a[k] + t * (b[k] - a[k])))
    }

    /// Parameter of the closest point, clamped to `[0, 1]`.
    pub fn closest_t(&self, p: &Point<f64, 3>) -> f64 {
        let (a, b) = (self.start.coords(), self.end.coords());
        let mut num = 0.0;
        let mut den = 0.0;
        for k in 0..3 {
            let d = b[k] - a[k];
            num += (p[k] - a[k]) * d;
            den += d * d;
        }
        (num / den).clamp(0.0, 1.0)
    }
}

/// Intrinsic coordinate on a front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ManifoldCoord {
    /// Position `t` in `[0, 1]` along segment `segment`.
    Line { segment: usize, t: f64 },
    /// Barycentric pair, `u, v >= 0`, `u + v <= 1`.
    Plane { u: f64, v: f64 },
}

fn pt<T: Scalar>(c: [i64; 3]) -> Point<T, 3> {
    Point::new(c.map(|v| T::from_ratio(v, 1)))
}

fn seg<T: Scalar>(a: [i64; 3], b: [i64; 3]) -> Segment<T> {
    Segment {
        start: pt(a),
        end: pt(b),
    }
}

impl FrontKind {
    pub const ALL: [FrontKind; 8] = [
        FrontKind::TypeI,
        FrontKind::TypeII,
        FrontKind::TypeIII,
        FrontKind::TypeIV,
        FrontKind::TypeV,
        FrontKind::TypeVI,
        FrontKind::TypeVII,
        FrontKind::TypeVIII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrontKind::TypeI => "type_i",
            FrontKind::TypeII => "type_ii",
            FrontKind::TypeIII => "type_iii",
            FrontKind::TypeIV => "type_iv",
            FrontKind::TypeV => "type_v",
            FrontKind::TypeVI => "type_vi",
            FrontKind::TypeVII => "type_vii",
            FrontKind::TypeVIII => "type_viii",
        }
    }

    pub fn is_line_based(self) -> bool {
        !self.is_plane_based()
    }

    pub fn is_plane_based(self) -> bool {
        matches!(self, FrontKind::TypeVII | FrontKind::TypeVIII)
    }

    /// Segments in their fixed order; empty for plane-based kinds.
    pub fn segments<T: Scalar>(self) -> Vec<Segment<T>> {
        match self {
            FrontKind::TypeI => vec![seg([0, 0, 1], [1, 0, 0])],
            FrontKind::TypeII => vec![seg([0, 0, 1], [1, 1, 0])],
            FrontKind::TypeIII => vec![seg([1, 0, 0], [0, 0, 1]), seg([1, 0, 0], [0, 1, 0])],
            FrontKind::TypeIV => vec![seg([0, 1, 1], [1, 0, 1]), seg([0, 1, 1], [1, 1, 0])],
            FrontKind::TypeV => vec![
                seg([1, 0, 0], [0, 0, 1]),
                seg([1, 0, 0], [0, 1, 0]),
                seg([0, 0, 1], [0, 1, 0]),
            ],
            FrontKind::TypeVI => vec![
                seg([0, 1, 1], [1, 0, 1]),
                seg([0, 1, 1], [1, 1, 0]),
                seg([1, 0, 1], [1, 1, 0]),
            ],
            FrontKind::TypeVII | FrontKind::TypeVIII => Vec::new(),
        }
    }

    /// Extreme points of the front (segment endpoints or triangle vertices),
    /// each listed once in order of first appearance.
    pub fn extreme_points<T: Scalar>(self) -> Vec<Point<T, 3>> {
        match self {
            FrontKind::TypeVII => vec![pt([1, 0, 0]), pt([0, 1, 0]), pt([0, 0, 1])],
            FrontKind::TypeVIII => vec![pt([0, 1, 1]), pt([1, 0, 1]), pt([1, 1, 0])],
            _ => {
                let mut out: Vec<Point<T, 3>> = Vec::new();
                for s in self.segments::<T>() {
                    for p in [s.start, s.end] {
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
                out
            }
        }
    }

    /// Whether `p` lies on the front to within [`CONTAINS_TOL`].
    pub fn contains(self, p: &Point<f64, 3>) -> bool {
        let tol = CONTAINS_TOL;
        match self {
            FrontKind::TypeVII => {
                let s: f64 = p.coords().iter().sum();
                (s - 1.0).abs() <= tol && p.coords().iter().all(|&c| c >= -tol)
            }
            FrontKind::TypeVIII => {
                let s: f64 = p.coords().iter().sum();
                (s - 2.0).abs() <= tol && p.coords().iter().all(|&c| c >= -tol && c <= 1.0 + tol)
            }
            _ => self
                .segments::<f64>()
                .iter()
                .any(|s| s.at(s.closest_t(p)).distance(p) <= tol),
        }
    }

    /// Maps an intrinsic coordinate onto the front.
    pub fn embed(self, c: ManifoldCoord) -> Result<Point<f64, 3>> {
        match (self.is_plane_based(), c) {
            (false, ManifoldCoord::Line { segment, t }) => {
                let segs = self.segments::<f64>();
                if segment >= segs.len() || !(0.0..=1.0).contains(&t) {
                    return Err(Error::CoordOutOfRange);
                }
                Ok(segs[segment].at(t))
            }
            (true, ManifoldCoord::Plane { u, v }) => {
                if !(u >= 0.0 && v >= 0.0 && u + v <= 1.0 + CONTAINS_TOL) {
                    return Err(Error::CoordOutOfRange);
                }
                let w = (1.0 - u - v).max(0.0);
                Ok(match self {
                    FrontKind::TypeVII => Point::new([u, v, w]),
                    _ => Point::new([1.0 - u, 1.0 - v, 1.0 - w]),
                })
            }
            (false, _) => Err(Error::WrongFrontKind {
                kind: self.name(),
                expected: "plane",
            }),
            (true, _) => Err(Error::WrongFrontKind {
                kind: self.name(),
                expected: "line",
            }),
        }
    }

    /// Intrinsic coordinate of the front point nearest to `p` (Euclidean).
    pub fn project(self, p: &Point<f64, 3>) -> Result<ManifoldCoord> {
        if !p.is_finite() {
            return Err(Error::NonFinite { index: 0 });
        }
        let (coord, distance) = match self {
            FrontKind::TypeVII => {
                let q = project_onto_simplex(*p.coords());
                (
                    ManifoldCoord::Plane { u: q[0], v: q[1] },
                    Point::new(q).distance(p),
                )
            }
            FrontKind::TypeVIII => {
                // x -> (1,1,1) - x is an isometry taking the inverted triangle
                // onto the unit simplex.
                let flipped = p.coords().map(|c| 1.0 - c);
                let q = project_onto_simplex(flipped);
                let back = Point::new(q.map(|c| 1.0 - c));
                (ManifoldCoord::Plane { u: q[0], v: q[1] }, back.distance(p))
            }
            _ => {
                let mut best = (ManifoldCoord::Line { segment: 0, t: 0.0 }, f64::INFINITY);
                for (i, s) in self.segments::<f64>().iter().enumerate() {
                    let t = s.closest_t(p);
                    let d = s.at(t).distance(p);
                    if d < best.1 {
                        best = (ManifoldCoord::Line { segment: i, t }, d);
                    }
                }
                best
            }
        };
        if distance > PROJECT_LIMIT {
            return Err(Error::FarFromFront { distance });
        }
        Ok(coord)
    }
}

/// Euclidean projection of `x` onto `{y : y >= 0, sum(y) = 1}`.
fn project_onto_simplex(x: [f64; 3]) -> [f64; 3] {
    let mut sorted = x;
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &v) in sorted.iter().enumerate() {
        cumulative += v;
        let candidate = (cumulative - 1.0) / (k as f64 + 1.0);
        if v - candidate > 0.0 {
            theta = candidate;
        }
    }
    let mut y = x.map(|v| (v - theta).max(0.0));
    // Keep the sum at exactly 1 so embed(project(p)) stays on the plane.
    let s: f64 = y.iter().sum();
    if s > 0.0 {
        y = y.map(|v| v / s);
    }
    y
}

impl fmt::Display for FrontKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrontKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        let bare = normalized.strip_prefix("type_").unwrap_or(&normalized);
        let kind = match bare {
            "i" | "1" => FrontKind::TypeI,
            "ii" | "2" => FrontKind::TypeII,
            "iii" | "3" => FrontKind::TypeIII,
            "iv" | "4" => FrontKind::TypeIV,
            "v" | "5" => FrontKind::TypeV,
            "vi" | "6" => FrontKind::TypeVI,
            "vii" | "7" => FrontKind::TypeVII,
            "viii" | "8" => FrontKind::TypeVIII,
            _ => return Err(Error::UnknownFront(s.to_string())),
        };
        Ok(kind)
    }
}
