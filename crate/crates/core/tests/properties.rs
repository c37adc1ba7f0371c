use hvmu::geometry::Point;
use hvmu::hypervolume::{contributions, hv3};
use hvmu::optimizer::sample_uniform;
use hvmu::{ExactPoint3, FrontKind, Rational64};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn point3() -> impl Strategy<Value = Point<f64, 3>> {
    prop::array::uniform3(0.0..1.0f64).prop_map(Point::new)
}

fn set3(max: usize) -> impl Strategy<Value = Vec<Point<f64, 3>>> {
    prop::collection::vec(point3(), 1..=max)
}

fn reference() -> Point<f64, 3> {
    Point::splat(-0.25)
}

proptest! {
    #[test]
    fn adding_a_point_never_decreases_hv(pts in set3(15), p in point3()) {
        let before = hv3(&pts, &reference()).unwrap();
        let mut more = pts.clone();
        more.push(p);
        prop_assert!(hv3(&more, &reference()).unwrap() >= before - 1e-12);
    }

    #[test]
    fn dominated_points_change_nothing(pts in set3(15), k in 0usize..15, shrink in prop::array::uniform3(0.0..1.0f64)) {
        let base = pts[k % pts.len()];
        let r = reference();
        let dominated = Point::new(std::array::from_fn(|i| r[i] + (base[i] - r[i]) * (0.01 + 0.99 * shrink[i])));
        let mut more = pts.clone();
        more.push(dominated);
        prop_assert!((hv3(&more, &r).unwrap() - hv3(&pts, &r).unwrap()).abs() <= 1e-12);
        let table = contributions(&more, &r).unwrap();
        prop_assert_eq!(table.values()[more.len() - 1], 0.0);
    }

    #[test]
    fn objective_order_is_irrelevant(pts in set3(15)) {
        let r = reference();
        let v = hv3(&pts, &r).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let permuted: Vec<_> = pts.iter().map(|p| p.permuted(perm)).collect();
            prop_assert!((hv3(&permuted, &r.permuted(perm)).unwrap() - v).abs() <= 1e-12);
        }
    }

    #[test]
    fn scaling_one_objective_scales_hv(pts in set3(12), c in 0.1..4.0f64) {
        let r = reference();
        let scaled: Vec<_> = pts
            .iter()
            .map(|p| Point::new([r[0] + c * (p[0] - r[0]), p[1], p[2]]))
            .collect();
        let expect = c * hv3(&pts, &r).unwrap();
        prop_assert!((hv3(&scaled, &r).unwrap() - expect).abs() <= 1e-12 * expect.max(1.0));
    }

    #[test]
    fn hv_is_bracketed_by_boxes(pts in set3(15)) {
        let r = reference();
        let v = hv3(&pts, &r).unwrap();
        let largest = pts.iter().map(|p| p.box_volume(&r)).fold(0.0, f64::max);
        let join = pts.iter().skip(1).fold(pts[0], |acc, p| acc.join(p));
        prop_assert!(v >= largest - 1e-12);
        prop_assert!(v <= join.box_volume(&r) + 1e-12);
    }

    #[test]
    fn contributions_are_nonnegative_and_bounded(pts in set3(12)) {
        let r = reference();
        let table = contributions(&pts, &r).unwrap();
        prop_assert!(table.values().iter().all(|&c| c >= 0.0));
        prop_assert!(table.total() <= hv3(&pts, &r).unwrap() + 1e-12);
    }

    #[test]
    fn exact_and_float_engines_agree(raw in prop::collection::vec(prop::array::uniform3(0i64..=8), 1..10)) {
        let exact: Vec<ExactPoint3> = raw.iter().map(|c| Point::new(c.map(|v| Rational64::new(v, 8)))).collect();
        let float: Vec<Point<f64, 3>> = raw.iter().map(|c| Point::new(c.map(|v| v as f64 / 8.0))).collect();
        let r = Rational64::new(-1, 3);
        let e = hv3(&exact, &Point::splat(r)).unwrap();
        let f = hv3(&float, &Point::splat(-1.0 / 3.0)).unwrap();
        prop_assert!((*e.numer() as f64 / *e.denom() as f64 - f).abs() <= 1e-12);
    }
}

#[test]
fn embed_project_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for front in FrontKind::ALL {
        for _ in 0..1000 {
            let c = sample_uniform(front, &mut rng);
            let p = front.embed(c).unwrap();
            assert!(front.contains(&p), "{front}: {p:?}");
            let back = front.embed(front.project(&p).unwrap()).unwrap();
            assert!(back.approx_eq(&p, 1e-12), "{front}: {p:?} -> {back:?}");
        }
    }
}

#[test]
fn projection_clamps_to_the_nearest_front_point() {
    let p = Point::new([0.6, 0.6, 0.2]);
    let q = FrontKind::TypeVII
        .embed(FrontKind::TypeVII.project(&p).unwrap())
        .unwrap();
    assert!(q.approx_eq(&Point::new([7.0 / 15.0, 7.0 / 15.0, 1.0 / 15.0]), 1e-12));
    let far = Point::new([3.0, 3.0, 3.0]);
    assert!(FrontKind::TypeVII.project(&far).is_err());
}
