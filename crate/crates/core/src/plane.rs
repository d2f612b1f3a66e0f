//! Straight segments in the plane and the classification of where two of
//! them meet. Mirrors the spherical meeting classification so that planar
//! and spherical drawings share one verifier.

use serde::{Deserialize, Serialize};

use crate::sphere::MeetingKind;

/// A point in the plane, serialized as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }

    pub fn add_scaled(self, d: Point2, t: f64) -> Point2 {
        Point2::new(self.x + t * d.x, self.y + t * d.y)
    }

    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(self, o: Point2) -> f64 {
        self.sub(o).norm()
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(a: [f64; 2]) -> Self {
        Point2::new(a[0], a[1])
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> [f64; 2] {
        [p.x, p.y]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }

    /// Signed distance of `p` from the supporting line, positive to the left.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        let d = self.b.sub(self.a);
        d.cross(p.sub(self.a)) / d.norm()
    }

    /// Signed distance from the segment's boundary along its line for the
    /// point at line parameter `t` (0 at `a`, 1 at `b`): positive inside.
    fn margin(&self, t: f64) -> f64 {
        t.min(1.0 - t) * self.length()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarMeeting {
    pub point: Point2,
    pub kind: MeetingKind,
}

/// Whether the two segments lie on one line within `eps`.
pub fn collinear(s: &Segment, r: &Segment, eps: f64) -> bool {
    s.signed_distance(r.a).abs() <= eps
        && s.signed_distance(r.b).abs() <= eps
        && r.signed_distance(s.a).abs() <= eps
        && r.signed_distance(s.b).abs() <= eps
}

fn kind_for(ma: f64, mb: f64, eps: f64) -> Option<MeetingKind> {
    if ma < -eps || mb < -eps {
        return None;
    }
    Some(match (ma > eps, mb > eps) {
        (true, true) => MeetingKind::TransversalCrossing,
        (false, false) => MeetingKind::SharedEndpoint,
        _ => MeetingKind::Degenerate,
    })
}

/// All meeting points of two segments. Collinear segments overlapping in
/// more than a point give one `Degenerate` meeting.
pub fn segment_meetings(s: &Segment, r: &Segment, eps: f64) -> Vec<PlanarMeeting> {
    let d = s.b.sub(s.a);
    let e = r.b.sub(r.a);
    if collinear(s, r, eps) {
        let len = d.norm();
        let unit = Point2::new(d.x / len, d.y / len);
        let t0 = r.a.sub(s.a).dot(unit);
        let t1 = r.b.sub(s.a).dot(unit);
        let lo = t0.min(t1).max(0.0);
        let hi = t0.max(t1).min(len);
        if hi < lo - eps {
            return Vec::new();
        }
        let point = s.a.add_scaled(unit, 0.5 * (lo + hi));
        let kind = if hi - lo > eps {
            MeetingKind::Degenerate
        } else {
            MeetingKind::SharedEndpoint
        };
        return vec![PlanarMeeting { point, kind }];
    }
    let denom = d.cross(e);
    if denom.abs() <= f64::EPSILON * d.norm() * e.norm() {
        // parallel, distinct lines
        return Vec::new();
    }
    let w = r.a.sub(s.a);
    let t = w.cross(e) / denom;
    let u = w.cross(d) / denom;
    match kind_for(s.margin(t), r.margin(u), eps) {
        Some(kind) => vec![PlanarMeeting {
            point: s.a.add_scaled(d, t),
            kind,
        }],
        None => Vec::new(),
    }
}
