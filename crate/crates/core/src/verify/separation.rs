use std::f64::consts::{PI, TAU};

use super::VerifyError;
use crate::drawing::SphericalDrawing;
use crate::sphere::{GreatCircle, Side, UnitVec3, Vec3};
use crate::tolerance::Tolerances;

/// Unit tangent of edge `e` as it leaves `v`.
pub fn tangent_at(d: &SphericalDrawing, e: usize, v: usize) -> Result<Vec3, VerifyError> {
    d.arc_from(e, v)
        .map(|a| a.start_tangent())
        .ok_or(VerifyError::NotIncident { edge: e, vertex: v })
}

/// Side of `c` through which `e` reaches `v`. When `v` lies on `c` this is
/// decided by the initial tangent of `e` at `v`.
pub fn reaches_side(
    d: &SphericalDrawing,
    e: usize,
    v: usize,
    c: &GreatCircle,
    tol: &Tolerances,
) -> Result<Side, VerifyError> {
    let t = tangent_at(d, e, v)?;
    let at_v = c.side(d.position(v), tol);
    if at_v != Side::On {
        return Ok(at_v);
    }
    Ok(Side::from_signed(c.pole.vec().dot(t), tol.side))
}

fn check_degree(d: &SphericalDrawing, v: usize) -> Result<(), VerifyError> {
    let degree = d.graph().degree(v);
    if degree < 3 {
        Err(VerifyError::DegreeTooLow { vertex: v, degree })
    } else {
        Ok(())
    }
}

/// Whether two other edges at `v` reach it through opposite open sides of C(e).
pub fn edge_separates_at(
    d: &SphericalDrawing,
    e: usize,
    v: usize,
    tol: &Tolerances,
) -> Result<bool, VerifyError> {
    check_degree(d, v)?;
    let c = d.arc_from(e, v).ok_or(VerifyError::NotIncident { edge: e, vertex: v })?.circle();
    let (mut plus, mut minus) = (false, false);
    for &(_, f) in d.graph().incident(v) {
        if f == e {
            continue;
        }
        match reaches_side(d, f, v, &c, tol)? {
            Side::Plus => plus = true,
            Side::Minus => minus = true,
            Side::On => {}
        }
    }
    Ok(plus && minus)
}

/// Edges at `v` that separate at `v`, in incidence order.
pub fn separating_edges(
    d: &SphericalDrawing,
    v: usize,
    tol: &Tolerances,
) -> Result<Vec<usize>, VerifyError> {
    let mut out = Vec::new();
    for &(_, e) in d.graph().incident(v) {
        if edge_separates_at(d, e, v, tol)? {
            out.push(e);
        }
    }
    Ok(out)
}

/// The edge of `path` that ends at `v`, if `path` is a path with endpoint `v`.
fn end_edge_at(d: &SphericalDrawing, path: &[usize], v: usize) -> Option<usize> {
    let g = d.graph();
    let &first = path.first()?;
    if path.iter().any(|&e| e >= g.edge_count()) {
        return None;
    }
    if path.len() == 1 {
        return g.other_end(first, v).map(|_| first);
    }
    // walk the path from the end that is not shared with its neighbour
    let (a, b) = g.edge(first);
    let start = if g.other_end(path[1], a).is_some() { b } else { a };
    let mut seen = vec![start];
    let mut cur = start;
    for &e in path {
        cur = g.other_end(e, cur)?;
        if seen.contains(&cur) {
            return None;
        }
        seen.push(cur);
    }
    if start == v {
        Some(first)
    } else if cur == v {
        Some(*path.last().expect("nonempty"))
    } else {
        None
    }
}

/// Whether the path's end edge at `v` separates at `v`.
pub fn path_separates_at(
    d: &SphericalDrawing,
    path: &[usize],
    v: usize,
    tol: &Tolerances,
) -> Result<bool, VerifyError> {
    let e = end_edge_at(d, path, v).ok_or(VerifyError::NotAPathAtV { vertex: v })?;
    edge_separates_at(d, e, v, tol)
}

fn tangent_basis(v: UnitVec3) -> (Vec3, Vec3) {
    let axis = if v.x().abs() < 0.9 { UnitVec3::X } else { UnitVec3::Y };
    let a = v.cross(axis).normalized(0.0).expect("axis not parallel to v").vec();
    let b = v.vec().cross(a);
    (a, b)
}

/// Whether all edges at `v` leave it within one open half of its tangent
/// plane, i.e. reach `v` through a single open hemisphere bounded by a
/// great circle through `v`.
pub fn is_pointed(d: &SphericalDrawing, v: usize, tol: &Tolerances) -> bool {
    let (a, b) = tangent_basis(d.position(v));
    let mut angles: Vec<f64> = d
        .graph()
        .incident(v)
        .iter()
        .map(|&(_, e)| {
            let t = tangent_at(d, e, v).expect("incident");
            t.dot(b).atan2(t.dot(a)).rem_euclid(TAU)
        })
        .collect();
    if angles.len() <= 1 {
        return true;
    }
    angles.sort_by(f64::total_cmp);
    let wrap = angles[0] + TAU - angles[angles.len() - 1];
    let max_gap = angles
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(wrap, f64::max);
    max_gap > PI + tol.side
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::build_spherical_drawing;
    use crate::graph::Graph;

    /// Star with center at the north pole and leaves at the given bearings.
    fn star(bearings: &[f64]) -> SphericalDrawing {
        let mut pos = vec![UnitVec3::Z];
        pos.extend(bearings.iter().map(|&b| UnitVec3::from_lon_lat(b, 0.5)));
        let g = Graph::spider(&vec![1; bearings.len()]);
        build_spherical_drawing(g, pos, vec![false; bearings.len()], &Tolerances::default()).unwrap()
    }

    #[test]
    fn reaches_by_tangent_and_sampling() {
        let tol = Tolerances::default();
        let d = star(&[0.0, 2.0, 4.0]);
        let c = GreatCircle::from_pole(UnitVec3::X);
        assert_eq!(reaches_side(&d, 0, 0, &c, &tol).unwrap(), Side::Plus);
        // sampling oracle a short way along the edge
        let q = d.arc_from(0, 0).unwrap().point_at_angle(1e-3);
        assert!(q.x() > 0.0);
        let on = GreatCircle::from_pole(UnitVec3::Y);
        assert_eq!(reaches_side(&d, 0, 0, &on, &tol).unwrap(), Side::On);
        assert!(matches!(
            reaches_side(&d, 1, 1, &c, &tol),
            Err(VerifyError::NotIncident { edge: 1, vertex: 1 })
        ));
    }

    #[test]
    fn separation_in_fans() {
        let tol = Tolerances::default();
        // spread: every edge has the other two on opposite sides
        let d = star(&[0.0, 2.0, 4.0]);
        assert_eq!(separating_edges(&d, 0, &tol).unwrap(), vec![0, 1, 2]);
        assert!(!is_pointed(&d, 0, &tol));
        // pointed fan: only the middle edge separates
        let d = star(&[0.0, 0.5, 1.0]);
        assert_eq!(separating_edges(&d, 0, &tol).unwrap(), vec![1]);
        assert!(!edge_separates_at(&d, 0, 0, &tol).unwrap());
        assert!(!edge_separates_at(&d, 2, 0, &tol).unwrap());
        assert!(is_pointed(&d, 0, &tol));
        assert!(matches!(
            edge_separates_at(&d, 0, 1, &tol),
            Err(VerifyError::DegreeTooLow { vertex: 1, degree: 1 })
        ));
    }

    #[test]
    fn pointedness() {
        let tol = Tolerances::default();
        let q = std::f64::consts::FRAC_PI_2;
        assert!(!is_pointed(&star(&[0.0, q, 2.0 * q, 3.0 * q]), 0, &tol));
        assert!(is_pointed(&star(&[0.0, 0.3, 0.6, 0.9]), 0, &tol));
        assert!(is_pointed(&star(&[1.0]), 0, &tol));
        assert!(is_pointed(&star(&[1.0]), 1, &tol));
        // opposite pair is not strictly within an open half-plane
        assert!(!is_pointed(&star(&[0.0, PI]), 0, &tol));
    }

    #[test]
    fn paths_at_vertex() {
        let tol = Tolerances::default();
        // spider: center 0 with legs 0-1-2, 0-3-4, 0-5-6
        let mut pos = vec![UnitVec3::Z];
        for b in [0.0, 2.0, 4.0] {
            pos.push(UnitVec3::from_lon_lat(b, 0.6));
            pos.push(UnitVec3::from_lon_lat(b + 0.4, 0.1));
        }
        let d = build_spherical_drawing(Graph::spider(&[2, 2, 2]), pos, vec![false; 6], &tol).unwrap();
        assert!(path_separates_at(&d, &[1, 0], 0, &tol).unwrap());
        assert!(path_separates_at(&d, &[0, 1], 0, &tol).unwrap());
        assert!(matches!(
            path_separates_at(&d, &[0, 1], 1, &tol),
            Err(VerifyError::NotAPathAtV { vertex: 1 })
        ));
        assert!(matches!(
            path_separates_at(&d, &[0, 3], 0, &tol),
            Err(VerifyError::NotAPathAtV { .. })
        ));
        let fan = star(&[0.0, 0.5, 1.0]);
        assert!(!path_separates_at(&fan, &[0], 0, &tol).unwrap());
    }
}
