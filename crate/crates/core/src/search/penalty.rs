use serde::{Deserialize, Serialize};

use crate::drawing::{build_spherical_drawing, DrawingError, SphericalDrawing};
use crate::graph::Graph;
use crate::sphere::{GeodesicArc, UnitVec3};
use crate::tolerance::Tolerances;

/// Degrees of freedom of a great-circle drawing of a fixed graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub positions: Vec<UnitVec3>,
    pub long_flags: Vec<bool>,
}

impl Candidate {
    pub fn from_drawing(d: &SphericalDrawing) -> Self {
        Self {
            positions: d.positions().to_vec(),
            long_flags: d.long_flags().to_vec(),
        }
    }

    pub fn to_drawing(&self, g: &Graph, tol: &Tolerances) -> Result<SphericalDrawing, DrawingError> {
        build_spherical_drawing(g.clone(), self.positions.clone(), self.long_flags.clone(), tol)
    }
}

fn hinge(x: f64) -> f64 {
    x.max(0.0)
}

/// Penalty of an unconstructible edge (coincident or antipodal endpoints).
const DEGENERATE_EDGE: f64 = 1.0;

fn arcs(c: &Candidate, g: &Graph) -> Vec<Option<GeodesicArc>> {
    let tol = Tolerances {
        degenerate: 1e-12,
        ..Tolerances::default()
    };
    g.edges()
        .iter()
        .zip(&c.long_flags)
        .map(|(&(u, v), &long)| GeodesicArc::between(c.positions[u], c.positions[v], long, &tol).ok())
        .collect()
}

fn pair_penalty(a: &GeodesicArc, b: &GeodesicArc, shared: Option<UnitVec3>, delta: f64) -> f64 {
    let cross = a.pole().cross(b.pole());
    let s = cross.norm();
    let mut p = hinge(delta - s);
    let Some(c) = cross.normalized(1e-12) else {
        return p + DEGENERATE_EDGE;
    };
    let score = |x: UnitVec3| a.containment_margin(x).min(b.containment_margin(x));
    match shared {
        Some(v) => {
            // the candidate nearer the shared vertex is the vertex itself
            let other = if c.dot(v) < 0.0 { c } else { -c };
            p += hinge(score(other) + delta);
        }
        None => {
            let (s1, s2) = (score(c), score(-c));
            let (best, rest) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
            p += hinge(delta - best) + hinge(rest + delta);
        }
    }
    p
}

/// Sum of hinge terms with margin `delta`; zero exactly when the induced
/// drawing is a general-position thrackle whose meetings all clear the
/// classification bands by `delta`.
///
/// * vertex pairs: `|p × q| ≥ delta` (neither coincident nor antipodal)
/// * vertex triples: `|det(p, q, r)| ≥ delta`
/// * edge pairs: circles at least `delta` apart; for disjoint edges one
///   candidate point interior to both arcs by `delta` and the other outside
///   one of them by `delta`; for adjacent edges the point opposite the
///   shared vertex outside one of them by `delta`.
pub fn penalty(c: &Candidate, g: &Graph, delta: f64) -> f64 {
    let p = &c.positions;
    let n = p.len();
    let mut total = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            let cr = p[u].cross(p[v]);
            total += hinge(delta - cr.norm());
            for w in v + 1..n {
                total += hinge(delta - cr.dot(p[w].vec()).abs());
            }
        }
    }
    let arcs = arcs(c, g);
    for i in 0..arcs.len() {
        let Some(a) = &arcs[i] else {
            total += DEGENERATE_EDGE;
            continue;
        };
        for j in i + 1..arcs.len() {
            let Some(b) = &arcs[j] else { continue };
            let shared = g.adjacent_edges(i, j).map(|s| p[s]);
            total += pair_penalty(a, b, shared, delta);
        }
    }
    total
}
