//! Spherical geometry on the unit sphere: points, great circles, directed
//! geodesic arcs and the classification of the points where two arcs meet.
//!
//! Arcs carry their pole explicitly. Two endpoints alone cannot tell the
//! short way round from the long way round, and long arcs (length > π) are
//! first-class citizens here.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GeomError {
    #[error("vector ({0}, {1}, {2}) is not unit length")]
    NotUnit(f64, f64, f64),
    #[error("points are coincident or antipodal; no unique great circle")]
    DegeneratePair,
    #[error("arc start is not perpendicular to its pole")]
    StartNotOnCircle,
    #[error("arc length {0} outside (0, 2π)")]
    BadLength(f64),
    #[error("arc length is π; neither short nor long")]
    ExactlyPi,
}

/// Plain 3-vector used for intermediate results such as cross products.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Unit vector in the same direction, or `None` when the norm is below `min_norm`.
    pub fn normalized(self, min_norm: f64) -> Option<UnitVec3> {
        let n = self.norm();
        if n <= min_norm || !n.is_finite() {
            return None;
        }
        Some(UnitVec3(Vec3::new(self.x / n, self.y / n, self.z / n)))
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// A point on the unit sphere.
///
/// Serialized as a `[x, y, z]` array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct UnitVec3(Vec3);

impl UnitVec3 {
    pub const X: UnitVec3 = UnitVec3(Vec3::new(1.0, 0.0, 0.0));
    pub const Y: UnitVec3 = UnitVec3(Vec3::new(0.0, 1.0, 0.0));
    pub const Z: UnitVec3 = UnitVec3(Vec3::new(0.0, 0.0, 1.0));

    /// Accepts `(x, y, z)` as-is when its squared norm is within `eps_norm` of one.
    pub fn new(x: f64, y: f64, z: f64, eps_norm: f64) -> Result<Self, GeomError> {
        let v = Vec3::new(x, y, z);
        let sq = v.dot(v);
        if (sq - 1.0).abs() <= eps_norm {
            Ok(UnitVec3(v))
        } else {
            Err(GeomError::NotUnit(x, y, z))
        }
    }

    /// Normalizes an arbitrary non-zero vector.
    pub fn from_xyz(x: f64, y: f64, z: f64) -> Option<Self> {
        Vec3::new(x, y, z).normalized(0.0)
    }

    /// Point at longitude/latitude (radians), longitude measured from +x toward +y.
    pub fn from_lon_lat(lon: f64, lat: f64) -> Self {
        UnitVec3(Vec3::new(lat.cos() * lon.cos(), lat.cos() * lon.sin(), lat.sin()))
    }

    pub fn x(self) -> f64 {
        self.0.x
    }
    pub fn y(self) -> f64 {
        self.0.y
    }
    pub fn z(self) -> f64 {
        self.0.z
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }

    pub fn dot(self, o: UnitVec3) -> f64 {
        self.0.dot(o.0)
    }

    pub fn cross(self, o: UnitVec3) -> Vec3 {
        self.0.cross(o.0)
    }

    pub fn to_array(self) -> [f64; 3] {
        self.0.to_array()
    }

    /// Rotation of `self` by `angle` about the unit axis `axis` (Rodrigues).
    pub fn rotate_about(self, axis: UnitVec3, angle: f64) -> UnitVec3 {
        let (s, c) = angle.sin_cos();
        let v = self.0;
        let k = axis.0;
        let r = v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c));
        // keep unit length
        r.normalized(0.0).unwrap_or(self)
    }
}

impl Neg for UnitVec3 {
    type Output = UnitVec3;
    fn neg(self) -> UnitVec3 {
        UnitVec3(-self.0)
    }
}

impl TryFrom<[f64; 3]> for UnitVec3 {
    type Error = GeomError;
    fn try_from(a: [f64; 3]) -> Result<Self, GeomError> {
        UnitVec3::new(a[0], a[1], a[2], Tolerances::default().norm)
    }
}

impl From<UnitVec3> for [f64; 3] {
    fn from(u: UnitVec3) -> [f64; 3] {
        u.to_array()
    }
}

impl fmt::Display for UnitVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0.x, self.0.y, self.0.z)
    }
}

pub fn antipode(p: UnitVec3) -> UnitVec3 {
    -p
}

/// Angular distance in `[0, π]`.
pub fn angle_between(p: UnitVec3, q: UnitVec3) -> f64 {
    let s = p.cross(q).norm();
    let c = p.dot(q).clamp(-1.0, 1.0);
    s.atan2(c).clamp(0.0, PI)
}

/// Side of a point relative to an oriented great circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
    On,
}

impl Side {
    pub fn from_signed(value: f64, eps: f64) -> Side {
        if value > eps {
            Side::Plus
        } else if value < -eps {
            Side::Minus
        } else {
            Side::On
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
            Side::On => Side::On,
        }
    }
}

/// A great circle with an orientation. `pole` and `-pole` describe the same
/// set of points but swap the `Plus` and `Minus` hemispheres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreatCircle {
    pub pole: UnitVec3,
}

impl GreatCircle {
    pub fn from_pole(pole: UnitVec3) -> Self {
        Self { pole }
    }

    pub fn side(&self, p: UnitVec3, tol: &Tolerances) -> Side {
        Side::from_signed(self.pole.dot(p), tol.side)
    }

    pub fn contains(&self, p: UnitVec3, tol: &Tolerances) -> bool {
        self.side(p, tol) == Side::On
    }

    pub fn flipped(&self) -> GreatCircle {
        GreatCircle { pole: -self.pole }
    }
}

/// The great circle through `p` and `q` oriented by `p × q`.
pub fn great_circle_through(
    p: UnitVec3,
    q: UnitVec3,
    tol: &Tolerances,
) -> Result<GreatCircle, GeomError> {
    p.cross(q)
        .normalized(tol.degenerate)
        .map(GreatCircle::from_pole)
        .ok_or(GeomError::DegeneratePair)
}

pub fn side(c: &GreatCircle, p: UnitVec3, tol: &Tolerances) -> Side {
    c.side(p, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Short,
    Long,
}

/// A directed arc of a great circle: starts at `start` and sweeps `length`
/// radians counter-clockwise about `pole`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeodesicArc {
    start: UnitVec3,
    pole: UnitVec3,
    length: f64,
}

impl GeodesicArc {
    pub fn new(
        start: UnitVec3,
        pole: UnitVec3,
        length: f64,
        tol: &Tolerances,
    ) -> Result<Self, GeomError> {
        if start.dot(pole).abs() > tol.side {
            return Err(GeomError::StartNotOnCircle);
        }
        if !(length > 0.0 && length < TAU) {
            return Err(GeomError::BadLength(length));
        }
        Ok(Self {
            start,
            pole,
            length,
        })
    }

    /// The shorter arc from `p` to `q`, or the complementary long arc.
    pub fn between(
        p: UnitVec3,
        q: UnitVec3,
        long: bool,
        tol: &Tolerances,
    ) -> Result<Self, GeomError> {
        let circle = great_circle_through(p, q, tol)?;
        let short = angle_between(p, q);
        let (pole, length) = if long {
            (-circle.pole, TAU - short)
        } else {
            (circle.pole, short)
        };
        Ok(Self {
            start: p,
            pole,
            length,
        })
    }

    /// Arc leaving `start` in the tangent direction `dir` (need not be unit
    /// or exactly tangent; the normal component is discarded).
    pub fn from_direction(
        start: UnitVec3,
        dir: Vec3,
        length: f64,
        tol: &Tolerances,
    ) -> Result<Self, GeomError> {
        let pole = start
            .vec()
            .cross(dir)
            .normalized(tol.degenerate)
            .ok_or(GeomError::DegeneratePair)?;
        Self::new(start, pole, length, tol)
    }

    pub fn start(&self) -> UnitVec3 {
        self.start
    }

    pub fn pole(&self) -> UnitVec3 {
        self.pole
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn circle(&self) -> GreatCircle {
        GreatCircle::from_pole(self.pole)
    }

    /// Point at angular offset `theta` from the start along the arc's circle.
    pub fn point_at_angle(&self, theta: f64) -> UnitVec3 {
        let (s, c) = theta.sin_cos();
        let q = self.pole.cross(self.start);
        let v = self.start.vec() * c + q * s;
        v.normalized(0.0).unwrap_or(self.start)
    }

    /// `t = 0` is the start, `t = 1` the end.
    pub fn point_at(&self, t: f64) -> UnitVec3 {
        self.point_at_angle(t * self.length)
    }

    pub fn end(&self) -> UnitVec3 {
        self.point_at(1.0)
    }

    pub fn midpoint(&self) -> UnitVec3 {
        self.point_at(0.5)
    }

    /// Unit tangent at the start, pointing into the arc.
    pub fn start_tangent(&self) -> Vec3 {
        self.pole.cross(self.start)
    }

    /// Unit tangent at the end, pointing back into the arc.
    pub fn end_tangent(&self) -> Vec3 {
        -self.pole.cross(self.end())
    }

    /// The same point set traversed from the other end.
    pub fn reversed(&self) -> GeodesicArc {
        GeodesicArc {
            start: self.end(),
            pole: -self.pole,
            length: self.length,
        }
    }

    /// Angular position of the projection of `p` onto the arc's circle, in `[0, 2π)`.
    pub fn parameter_of(&self, p: UnitVec3) -> f64 {
        let q = self.pole.cross(self.start);
        let a = p.vec().dot(q).atan2(p.dot(self.start));
        if a < 0.0 {
            a + TAU
        } else {
            a
        }
    }

    /// Signed angular distance from the arc's boundary along its circle:
    /// positive inside the arc (distance to the nearer endpoint), negative
    /// outside (minus the distance to the nearer endpoint). Continuous in `p`
    /// away from the circle's poles.
    pub fn containment_margin(&self, p: UnitVec3) -> f64 {
        let theta = self.parameter_of(p);
        if theta <= self.length {
            theta.min(self.length - theta)
        } else {
            -(theta - self.length).min(TAU - theta)
        }
    }

    pub fn contains(&self, p: UnitVec3, include_endpoints: bool, tol: &Tolerances) -> bool {
        if !self.circle().contains(p, tol) {
            return false;
        }
        let m = self.containment_margin(p);
        if include_endpoints {
            m >= -tol.side
        } else {
            m > tol.side
        }
    }

    pub fn length_class(&self, tol: &Tolerances) -> Result<LengthClass, GeomError> {
        if (self.length - PI).abs() <= tol.degenerate {
            Err(GeomError::ExactlyPi)
        } else if self.length < PI {
            Ok(LengthClass::Short)
        } else {
            Ok(LengthClass::Long)
        }
    }
}

pub fn arc_point_at(a: &GeodesicArc, t: f64) -> UnitVec3 {
    a.point_at(t)
}

pub fn arc_contains(a: &GeodesicArc, p: UnitVec3, include_endpoints: bool, tol: &Tolerances) -> bool {
    a.contains(p, include_endpoints, tol)
}

pub fn edge_length_class(a: &GeodesicArc, tol: &Tolerances) -> Result<LengthClass, GeomError> {
    a.length_class(tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeetingKind {
    /// The point is an endpoint of both arcs.
    SharedEndpoint,
    /// The point is interior to both arcs; distinct great circles always cross transversally.
    TransversalCrossing,
    /// Endpoint of one arc touching the interior of the other, or an overlap
    /// of two arcs lying on the same circle.
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Meeting {
    pub point: UnitVec3,
    pub kind: MeetingKind,
}

#[derive(Clone, Copy, PartialEq)]
enum Placement {
    Interior,
    Endpoint,
}

fn placement(margin: f64, eps: f64) -> Option<Placement> {
    if margin > eps {
        Some(Placement::Interior)
    } else if margin >= -eps {
        Some(Placement::Endpoint)
    } else {
        None
    }
}

/// True when the two arcs lie on one great circle (poles parallel or anti-parallel).
pub fn cocircular(a: &GeodesicArc, b: &GeodesicArc, tol: &Tolerances) -> bool {
    a.pole.cross(b.pole).norm() <= tol.degenerate
}

/// All points where two arcs meet, each classified.
///
/// For distinct circles the two antipodal candidates `±(pole_a × pole_b)`
/// are tested against both arcs. For arcs on the same circle the overlap of
/// their parameter intervals is reported: an overlap of positive length is a
/// single `Degenerate` meeting, touching ends are `SharedEndpoint`s.
pub fn arc_arc_meetings(a: &GeodesicArc, b: &GeodesicArc, tol: &Tolerances) -> Vec<Meeting> {
    let eps = tol.side;
    let Some(c) = a.pole.cross(b.pole).normalized(tol.degenerate) else {
        return same_circle_meetings(a, b, eps);
    };
    let mut out = Vec::with_capacity(2);
    for cand in [c, -c] {
        let (Some(pa), Some(pb)) = (
            placement(a.containment_margin(cand), eps),
            placement(b.containment_margin(cand), eps),
        ) else {
            continue;
        };
        let kind = match (pa, pb) {
            (Placement::Interior, Placement::Interior) => MeetingKind::TransversalCrossing,
            (Placement::Endpoint, Placement::Endpoint) => MeetingKind::SharedEndpoint,
            _ => MeetingKind::Degenerate,
        };
        out.push(Meeting { point: cand, kind });
    }
    out
}

fn same_circle_meetings(a: &GeodesicArc, b: &GeodesicArc, eps: f64) -> Vec<Meeting> {
    // express b as an interval [lo, lo + len] in a's parameter
    let same_orientation = a.pole.dot(b.pole) > 0.0;
    let lo = if same_orientation {
        a.parameter_of(b.start)
    } else {
        a.parameter_of(b.end())
    };
    let mut out: Vec<Meeting> = Vec::new();
    for shift in [-TAU, 0.0, TAU] {
        let blo = lo + shift;
        let bhi = blo + b.length;
        let from = blo.max(0.0);
        let to = bhi.min(a.length);
        if to < from - eps {
            continue;
        }
        let (point, kind) = if to - from > eps {
            (a.point_at_angle(0.5 * (from + to)), MeetingKind::Degenerate)
        } else {
            (a.point_at_angle(0.5 * (from + to)), MeetingKind::SharedEndpoint)
        };
        if out
            .iter()
            .any(|m| angle_between(m.point, point) <= eps && m.kind == kind)
        {
            continue;
        }
        out.push(Meeting { point, kind });
    }
    out
}
