use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use super::ConstructError;
use crate::drawing::{build_spherical_drawing, SphericalDrawing};
use crate::graph::Graph;
use crate::sphere::{GeodesicArc, UnitVec3, Vec3};
use crate::tolerance::Tolerances;

/// Free parameters of the great-circle drawing of the spider with three
/// legs of length two.
///
/// The center `v` sits at the north pole. Bearings are measured at `v`
/// from the first leg edge `e1` toward the side of `g1`; a bearing `φ`
/// is the tangent direction `(sin φ, cos φ, 0)`. The hemisphere `S` holds
/// every edge at `v`; its boundary passes through `v` at bearing
/// `hemisphere_bearing` and it contains bearings in
/// `(hemisphere_bearing, hemisphere_bearing + π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpiderConstructionParams {
    pub l_e1: f64,
    /// Length of the long edge `e2` at the far end of `e1`.
    pub l_e2: f64,
    /// Turn of `e2` away from the continuation of `e1`, toward the pole of `e1`.
    pub e2_turn: f64,
    pub f1_bearing: f64,
    pub g1_bearing: f64,
    pub l_f1: f64,
    pub l_g1: f64,
    /// Distance from `v` along `f1` of the point `p_f` that `g2` passes through.
    pub pf_distance: f64,
    pub pg_distance: f64,
    /// How far `f2` runs past `p_g`.
    pub f2_overshoot: f64,
    pub g2_overshoot: f64,
    pub hemisphere_bearing: f64,
}

impl Default for SpiderConstructionParams {
    fn default() -> Self {
        Self {
            l_e1: 0.6 * PI,
            l_e2: 1.3 * PI,
            e2_turn: 1.33,
            f1_bearing: -0.24,
            g1_bearing: 2.53,
            l_f1: 2.15,
            l_g1: 2.32,
            pf_distance: 0.28,
            pg_distance: 0.34,
            f2_overshoot: 0.30,
            g2_overshoot: 0.32,
            hemisphere_bearing: -0.43,
        }
    }
}

fn bearing(phi: f64) -> Vec3 {
    Vec3::new(phi.sin(), phi.cos(), 0.0)
}

struct Skeleton {
    e1: GeodesicArc,
    e2: GeodesicArc,
    f1: GeodesicArc,
    g1: GeodesicArc,
}

impl SpiderConstructionParams {
    fn skeleton(&self, tol: &Tolerances) -> Result<Skeleton, ConstructError> {
        let bad = |e: crate::sphere::GeomError| ConstructError::ParamsViolateInequalities(e.to_string());
        let v = UnitVec3::Z;
        let e1 = GeodesicArc::from_direction(v, bearing(0.0), self.l_e1, tol).map_err(bad)?;
        let v1 = e1.end();
        let pole = e1.pole().vec();
        let forward = pole.cross(v1.vec());
        let dir = forward * self.e2_turn.cos() + pole * self.e2_turn.sin();
        let e2 = GeodesicArc::from_direction(v1, dir, self.l_e2, tol).map_err(bad)?;
        let f1 = GeodesicArc::from_direction(v, bearing(self.f1_bearing), self.l_f1, tol).map_err(bad)?;
        let g1 = GeodesicArc::from_direction(v, bearing(self.g1_bearing), self.l_g1, tol).map_err(bad)?;
        Ok(Skeleton { e1, e2, f1, g1 })
    }

    /// `(min_e2, max_e2)`: extreme distances from `v` to points of the
    /// circle of `e2` inside the hemisphere `S` (taken over its closure).
    pub fn e2_distance_range(&self) -> Result<(f64, f64), ConstructError> {
        let sk = self.skeleton(&Tolerances::default())?;
        let s = sk.e2.start().vec();
        let q = sk.e2.pole().vec().cross(s);
        let v = Vec3::new(0.0, 0.0, 1.0);
        let n_s = bearing(self.hemisphere_bearing + FRAC_PI_2);
        // along the circle p(t) = cos t s + sin t q:
        // p·v = r cos(t - t0), and p ∈ S iff cos(t - t1) > 0
        let t0 = q.dot(v).atan2(s.dot(v));
        let t1 = q.dot(n_s).atan2(s.dot(n_s));
        let r = s.dot(v).hypot(q.dot(v));
        let inside = |t: f64| (t - t1 + PI).rem_euclid(TAU) - PI;
        let mut ts = vec![t1 - FRAC_PI_2, t1 + FRAC_PI_2];
        for t in [t0, t0 + PI] {
            if inside(t).abs() < FRAC_PI_2 {
                ts.push(t);
            }
        }
        let cosines: Vec<f64> = ts.iter().map(|&t| r * (t - t0).cos()).collect();
        let hi = cosines.iter().copied().fold(f64::MIN, f64::max);
        let lo = cosines.iter().copied().fold(f64::MAX, f64::min);
        Ok((hi.clamp(-1.0, 1.0).acos(), lo.clamp(-1.0, 1.0).acos()))
    }

    /// Checks every inequality the construction relies on.
    pub fn validate(&self) -> Result<(), ConstructError> {
        let fail = |msg: String| Err(ConstructError::ParamsViolateInequalities(msg));
        if !(self.l_e1 > 0.0 && self.l_e1 < PI) {
            return fail(format!("l_e1 = {} must be short", self.l_e1));
        }
        if !(self.l_e2 > PI && self.l_e2 < TAU) {
            return fail(format!("l_e2 = {} must be long", self.l_e2));
        }
        if !(-PI < self.f1_bearing && self.f1_bearing < 0.0 && 0.0 < self.g1_bearing && self.g1_bearing < PI) {
            return fail("f1 and g1 must leave v on opposite sides of e1".into());
        }
        let b = self.hemisphere_bearing;
        if !(b < self.f1_bearing.min(0.0) && self.g1_bearing < b + PI) {
            return fail("hemisphere S must contain e1, f1 and g1 at v".into());
        }
        let (min_e2, max_e2) = self.e2_distance_range()?;
        for (name, l) in [("l_f1", self.l_f1), ("l_g1", self.l_g1)] {
            if !(l > max_e2 && l < PI) {
                return fail(format!("{name} = {l} must lie in (max_e2 = {max_e2}, π)"));
            }
        }
        for (name, p, l) in [
            ("pf_distance", self.pf_distance, self.l_f1),
            ("pg_distance", self.pg_distance, self.l_g1),
        ] {
            if !(p > 0.0 && p < min_e2 && p < l) {
                return fail(format!("{name} = {p} must lie in (0, min_e2 = {min_e2})"));
            }
        }
        if !(self.f2_overshoot > 0.0 && self.g2_overshoot > 0.0) {
            return fail("overshoots must be positive".into());
        }
        Ok(())
    }
}

/// Extends the short arc from `w` through `p` by `overshoot` past `p`.
fn arc_through(w: UnitVec3, p: UnitVec3, overshoot: f64, tol: &Tolerances) -> Result<GeodesicArc, ConstructError> {
    let bad = |e: crate::sphere::GeomError| ConstructError::ParamsViolateInequalities(e.to_string());
    let a = GeodesicArc::between(w, p, false, tol).map_err(bad)?;
    let length = a.length() + overshoot;
    if length >= PI {
        return Err(ConstructError::ParamsViolateInequalities(format!(
            "second leg edge of length {length} is not short"
        )));
    }
    GeodesicArc::new(w, a.pole(), length, tol).map_err(bad)
}

/// Great-circle thrackle of the spider with three legs of length two.
///
/// Vertex `0` is the center; legs are `0-1-2` (`e1`, long `e2`),
/// `0-3-4` (`f1`, `f2`) and `0-5-6` (`g1`, `g2`). `f2` runs from the end of
/// `f1` through a point of `g1` near `v`, and `g2` symmetrically.
pub fn construct_spider_3_2_gc(params: &SpiderConstructionParams) -> Result<SphericalDrawing, ConstructError> {
    params.validate()?;
    let tol = Tolerances::default();
    let sk = params.skeleton(&tol)?;
    let (w_f, w_g) = (sk.f1.end(), sk.g1.end());
    let p_f = sk.f1.point_at_angle(params.pf_distance);
    let p_g = sk.g1.point_at_angle(params.pg_distance);
    let f2 = arc_through(w_f, p_g, params.f2_overshoot, &tol)?;
    let g2 = arc_through(w_g, p_f, params.g2_overshoot, &tol)?;
    let positions = vec![
        UnitVec3::Z,
        sk.e1.end(),
        sk.e2.end(),
        w_f,
        f2.end(),
        w_g,
        g2.end(),
    ];
    let flags = vec![false, true, false, false, false, false];
    build_spherical_drawing(Graph::spider(&[2, 2, 2]), positions, flags, &tol)
        .map_err(|e| ConstructError::ParamsViolateInequalities(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{lemma_audit, spherical_report, AuditMode};

    #[test]
    fn default_construction_verifies() {
        let tol = Tolerances::default();
        let d = construct_spider_3_2_gc(&SpiderConstructionParams::default()).unwrap();
        let r = spherical_report(&d, &tol);
        assert!(r.is_thrackle, "{:?}", r.violations);
        assert!(r.is_general_position);
        assert_eq!(r.pairs.len(), 15);
        assert_eq!(d.long_edges(), vec![1]);
        assert!(lemma_audit(&d, &tol, AuditMode::Strict).unwrap().all_hold());
    }

    #[test]
    fn e2_range_matches_sampling() {
        let p = SpiderConstructionParams::default();
        let (lo, hi) = p.e2_distance_range().unwrap();
        let sk = p.skeleton(&Tolerances::default()).unwrap();
        let n_s = bearing(p.hemisphere_bearing + FRAC_PI_2);
        let (mut slo, mut shi) = (f64::MAX, f64::MIN);
        for k in 0..100_000 {
            let q = sk.e2.point_at_angle(TAU * k as f64 / 100_000.0);
            if q.vec().dot(n_s) > 0.0 {
                let dist = q.z().clamp(-1.0, 1.0).acos();
                slo = slo.min(dist);
                shi = shi.max(dist);
            }
        }
        assert!((lo - slo).abs() < 1e-4 && (hi - shi).abs() < 1e-4, "{lo} {slo} {hi} {shi}");
        assert!(p.l_f1 - hi > 0.05 && p.l_g1 - hi > 0.05);
        assert!(lo - p.pf_distance > 0.05 && lo - p.pg_distance > 0.05);
    }

    #[test]
    fn short_f1_rejected() {
        let p = SpiderConstructionParams {
            l_f1: 1.5,
            ..SpiderConstructionParams::default()
        };
        assert!(matches!(
            construct_spider_3_2_gc(&p),
            Err(ConstructError::ParamsViolateInequalities(_))
        ));
    }
}
