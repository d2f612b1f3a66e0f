use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use thrackle::sphere::{arc_arc_meetings, angle_between, GeodesicArc, MeetingKind, UnitVec3, Vec3};
use thrackle::Tolerances;

fn unit() -> impl Strategy<Value = UnitVec3> {
    (0.0..TAU, -1.0f64..1.0).prop_map(|(lon, z)| {
        let r = (1.0 - z * z).sqrt();
        UnitVec3::from_xyz(r * lon.cos(), r * lon.sin(), z).unwrap()
    })
}

fn arc_with(lengths: std::ops::Range<f64>) -> impl Strategy<Value = GeodesicArc> {
    (unit(), unit(), lengths).prop_filter_map("direction parallel to start", |(s, d, len)| {
        GeodesicArc::from_direction(s, d.vec(), len, &Tolerances::default()).ok()
    })
}

fn arc() -> impl Strategy<Value = GeodesicArc> {
    arc_with(0.05..TAU - 0.05)
}

/// Meetings counted by sampling: sign changes of a against C(b), kept
/// when the crossing point lies on the sampled b.
fn sampled_meeting_count(a: &GeodesicArc, b: &GeodesicArc) -> usize {
    const N: usize = 10_000;
    let pole = b.pole().vec();
    let pa: Vec<Vec3> = (0..=N).map(|k| a.point_at(k as f64 / N as f64).vec()).collect();
    let pb: Vec<Vec3> = (0..=N).map(|k| b.point_at(k as f64 / N as f64).vec()).collect();
    let reach = 2.0 * b.length() / N as f64 + 2.0 * a.length() / N as f64;
    let mut count = 0;
    for k in 0..N {
        let (s0, s1) = (pole.dot(pa[k]), pole.dot(pa[k + 1]));
        if (s0 > 0.0) == (s1 > 0.0) {
            continue;
        }
        let x = pa[k] * (s1 / (s1 - s0)) + pa[k + 1] * (-s0 / (s1 - s0));
        let x = x * (1.0 / x.norm());
        if pb.iter().any(|q| (x - *q).norm() < reach) {
            count += 1;
        }
    }
    count
}

/// Angular distance from the candidate meeting points of the two circles
/// to the nearest arc endpoint.
fn endpoint_clearance(a: &GeodesicArc, b: &GeodesicArc) -> f64 {
    let c = a.pole().vec().cross(b.pole().vec());
    let c = UnitVec3::from_xyz(c.x, c.y, c.z).unwrap();
    let ends = [a.start(), a.end(), b.start(), b.end()];
    [c, -c]
        .iter()
        .flat_map(|&p| ends.iter().map(move |&e| angle_between(p, e)))
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arc_points_lie_on_circle(a in arc(), t in 0.0f64..=1.0) {
        let p = a.point_at(t);
        prop_assert!(a.pole().dot(p).abs() < 1e-12);
        prop_assert!((p.vec().norm() - 1.0).abs() < 1e-12);
        prop_assert!((angle_between(a.start(), p) - (t * a.length()).min(TAU - t * a.length())).abs() < 1e-9);
    }

    #[test]
    fn reversal_swaps_ends(a in arc()) {
        let r = a.reversed();
        prop_assert!(angle_between(r.start(), a.end()) < 1e-12);
        prop_assert!(angle_between(r.end(), a.start()) < 1e-12);
        prop_assert!((r.length() - a.length()).abs() < 1e-15);
    }

    #[test]
    fn meetings_are_symmetric(a in arc(), b in arc()) {
        let tol = Tolerances::default();
        let ab = arc_arc_meetings(&a, &b, &tol);
        let ba = arc_arc_meetings(&b, &a, &tol);
        prop_assert_eq!(ab.len(), ba.len());
        for m in &ab {
            prop_assert!(ba.iter().any(|n| n.kind == m.kind && angle_between(n.point, m.point) < 1e-9));
        }
    }

    #[test]
    fn full_circles_meet_at_antipodes(pa in unit(), pb in unit()) {
        let tol = Tolerances::default();
        let c = pa.cross(pb);
        prop_assume!(c.norm() > 1e-3);
        let c = c * (1.0 / c.norm());
        // start each circle a quarter turn away from the shared points
        let quarter = |pole: UnitVec3| {
            let s = pole.vec().cross(c);
            UnitVec3::from_xyz(s.x, s.y, s.z).unwrap()
        };
        let (sa, sb) = (quarter(pa), quarter(pb));
        let a = GeodesicArc::new(sa, pa, TAU - 0.1, &tol).unwrap();
        let b = GeodesicArc::new(sb, pb, TAU - 0.1, &tol).unwrap();
        let m = arc_arc_meetings(&a, &b, &tol);
        prop_assert_eq!(m.len(), 2);
        prop_assert!(m.iter().all(|m| m.kind == MeetingKind::TransversalCrossing));
        prop_assert!((angle_between(m[0].point, m[1].point) - PI).abs() < 1e-9);
    }

    #[test]
    fn long_arcs_from_one_point_meet_twice(s in unit(), d1 in unit(), d2 in unit(), l1 in PI + 0.05..TAU - 0.05, l2 in PI + 0.05..TAU - 0.05) {
        let tol = Tolerances::default();
        let (Ok(a), Ok(b)) = (
            GeodesicArc::from_direction(s, d1.vec(), l1, &tol),
            GeodesicArc::from_direction(s, d2.vec(), l2, &tol),
        ) else { return Ok(()); };
        prop_assume!(a.pole().cross(b.pole()).norm() > 1e-6);
        prop_assert!(arc_arc_meetings(&a, &b, &tol).len() >= 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn meeting_count_matches_dense_sampling(a in arc(), b in arc()) {
        prop_assume!(a.pole().cross(b.pole()).norm() > 1e-2);
        prop_assume!(endpoint_clearance(&a, &b) > 1e-2);
        let tol = Tolerances::default();
        let exact = arc_arc_meetings(&a, &b, &tol);
        prop_assert!(exact.iter().all(|m| m.kind == MeetingKind::TransversalCrossing));
        prop_assert_eq!(exact.len(), sampled_meeting_count(&a, &b));
    }
}

#[test]
fn shared_endpoint_is_classified() {
    let tol = Tolerances::default();
    let p = UnitVec3::from_xyz(1.0, 0.0, 0.0).unwrap();
    let q = UnitVec3::from_xyz(0.0, 1.0, 0.0).unwrap();
    let r = UnitVec3::from_xyz(0.0, 0.0, 1.0).unwrap();
    let a = GeodesicArc::between(p, q, false, &tol).unwrap();
    let b = GeodesicArc::between(q, r, false, &tol).unwrap();
    let m = arc_arc_meetings(&a, &b, &tol);
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].kind, MeetingKind::SharedEndpoint);
    assert!(angle_between(m[0].point, q) < 1e-12);
}
