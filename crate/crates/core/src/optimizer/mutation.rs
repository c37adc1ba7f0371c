use rand::Rng;
use rand_distr::StandardNormal;

use crate::geometry::{FrontKind, ManifoldCoord};

/// Uniform sample on the front's parameter domain.
pub fn sample_uniform<R: Rng + ?Sized>(front: FrontKind, rng: &mut R) -> ManifoldCoord {
    if front.is_plane_based() {
        let (mut u, mut v): (f64, f64) = (rng.random(), rng.random());
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        ManifoldCoord::Plane { u, v }
    } else {
        let segments = front.segments::<f64>().len();
        ManifoldCoord::Line {
            segment: rng.random_range(0..segments),
            t: rng.random(),
        }
    }
}

/// Gaussian step of scale `sigma` in parameter space, clamped back onto the
/// domain. On line-based fronts a step is replaced by a hop to a random
/// segment (same `t`) with probability `hop_probability`.
pub fn mutate<R: Rng + ?Sized>(
    front: FrontKind,
    parent: ManifoldCoord,
    sigma: f64,
    hop_probability: f64,
    rng: &mut R,
) -> ManifoldCoord {
    match parent {
        ManifoldCoord::Plane { u, v } => {
            let du: f64 = rng.sample(StandardNormal);
            let dv: f64 = rng.sample(StandardNormal);
            clamp_barycentric(u + sigma * du, v + sigma * dv)
        }
        ManifoldCoord::Line { segment, t } => {
            let segments = front.segments::<f64>().len();
            if segments > 1 && rng.random::<f64>() < hop_probability {
                return ManifoldCoord::Line {
                    segment: rng.random_range(0..segments),
                    t,
                };
            }
            let dt: f64 = rng.sample(StandardNormal);
            ManifoldCoord::Line {
                segment,
                t: (t + sigma * dt).clamp(0.0, 1.0),
            }
        }
    }
}

/// Nearest point of `{u, v >= 0, u + v <= 1}` in barycentric `(u, v, w)` space.
fn clamp_barycentric(u: f64, v: f64) -> ManifoldCoord {
    let bary = [u, v, 1.0 - u - v];
    let mut sorted = bary;
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &x) in sorted.iter().enumerate() {
        cumulative += x;
        let candidate = (cumulative - 1.0) / (k as f64 + 1.0);
        if x - candidate > 0.0 {
            theta = candidate;
        }
    }
    let u = (bary[0] - theta).max(0.0);
    let v = (bary[1] - theta).max(0.0);
    let s = u + v;
    if s > 1.0 {
        ManifoldCoord::Plane { u: u / s, v: v / s }
    } else {
        ManifoldCoord::Plane { u, v }
    }
}
