//! Concrete drawings: great-circle drawings on the unit sphere and
//! straight-line drawings in the plane, with the gnomonic lift between
//! them, a JSON document format and an SVG renderer.

mod document;
pub mod fixtures;
mod svg;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::plane::{Point2, Segment};
use crate::sphere::{GeodesicArc, GeomError, LengthClass, UnitVec3};
use crate::tolerance::Tolerances;

pub use document::{deserialize, serialize, Drawing, DrawingDocument, DocumentError, Meta};
pub use svg::{render_svg, Projection};

#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum DrawingError {
    #[error("vertices {u} and {v} are coincident or antipodal")]
    DegenerateVertexPair { u: usize, v: usize },
    #[error("vertices {u} and {v} coincide")]
    CoincidentVertices { u: usize, v: usize },
    #[error("expected {expected} positions, found {found}")]
    PositionCount { expected: usize, found: usize },
    #[error("position of vertex {vertex} is not finite")]
    NonFinite { vertex: usize },
    #[error("expected {expected} long flags, found {found}")]
    FlagCount { expected: usize, found: usize },
}

/// A great-circle drawing: one unit vector per vertex and one geodesic arc
/// per edge, running from the edge's first vertex to its second.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalDrawing {
    graph: Graph,
    positions: Vec<UnitVec3>,
    long_flags: Vec<bool>,
    arcs: Vec<GeodesicArc>,
}

impl SphericalDrawing {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[UnitVec3] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> UnitVec3 {
        self.positions[v]
    }

    pub fn long_flags(&self) -> &[bool] {
        &self.long_flags
    }

    pub fn arcs(&self) -> &[GeodesicArc] {
        &self.arcs
    }

    pub fn arc(&self, e: usize) -> &GeodesicArc {
        &self.arcs[e]
    }

    /// Arc of edge `e` oriented to leave `v`; `None` if `e` is not incident to `v`.
    pub fn arc_from(&self, e: usize, v: usize) -> Option<GeodesicArc> {
        let (a, b) = self.graph.edge(e);
        if a == v {
            Some(self.arcs[e])
        } else if b == v {
            Some(self.arcs[e].reversed())
        } else {
            None
        }
    }

    pub fn long_edges(&self) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&e| self.long_flags[e]).collect()
    }
}

/// Realizes each edge as the short arc between its endpoints, or as the
/// complementary long arc when its flag is set. Fails when the endpoints of
/// an edge are coincident or antipodal.
pub fn build_spherical_drawing(
    g: Graph,
    positions: Vec<UnitVec3>,
    long_flags: Vec<bool>,
    tol: &Tolerances,
) -> Result<SphericalDrawing, DrawingError> {
    if positions.len() != g.n() {
        return Err(DrawingError::PositionCount {
            expected: g.n(),
            found: positions.len(),
        });
    }
    if long_flags.len() != g.edge_count() {
        return Err(DrawingError::FlagCount {
            expected: g.edge_count(),
            found: long_flags.len(),
        });
    }
    // other vertex pairs are the business of the general-position check
    for &(u, v) in g.edges() {
        if positions[u].cross(positions[v]).norm() <= tol.degenerate {
            return Err(DrawingError::DegenerateVertexPair { u, v });
        }
    }
    let arcs = g
        .edges()
        .iter()
        .zip(&long_flags)
        .map(|(&(u, v), &long)| {
            GeodesicArc::between(positions[u], positions[v], long, tol).map_err(|e| match e {
                GeomError::DegeneratePair => DrawingError::DegenerateVertexPair { u, v },
                other => unreachable!("unexpected arc error {other}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SphericalDrawing {
        graph: g,
        positions,
        long_flags,
        arcs,
    })
}

/// A straight-line drawing in the plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarDrawing {
    graph: Graph,
    positions: Vec<Point2>,
}

impl PlanarDrawing {
    pub fn new(g: Graph, positions: Vec<Point2>, tol: &Tolerances) -> Result<Self, DrawingError> {
        if positions.len() != g.n() {
            return Err(DrawingError::PositionCount {
                expected: g.n(),
                found: positions.len(),
            });
        }
        if let Some(vertex) = positions.iter().position(|p| !(p.x.is_finite() && p.y.is_finite())) {
            return Err(DrawingError::NonFinite { vertex });
        }
        for u in 0..positions.len() {
            for v in u + 1..positions.len() {
                if positions[u].distance(positions[v]) <= tol.degenerate {
                    return Err(DrawingError::CoincidentVertices { u, v });
                }
            }
        }
        Ok(Self {
            graph: g,
            positions,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[Point2] {
        &self.positions
    }

    pub fn segment(&self, e: usize) -> Segment {
        let (u, v) = self.graph.edge(e);
        Segment::new(self.positions[u], self.positions[v])
    }
}

/// Gnomonic lift onto the open upper hemisphere. Coordinates are first
/// scaled into the disk of radius 1/2 so that every arc stays well away
/// from the equator.
pub fn lift_planar_to_sphere(d: &PlanarDrawing) -> SphericalDrawing {
    let max_norm = d.positions.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let scale = if max_norm > 0.0 { 2.0 * max_norm } else { 1.0 };
    let positions: Vec<UnitVec3> = d
        .positions
        .iter()
        .map(|p| UnitVec3::from_xyz(p.x / scale, p.y / scale, 1.0).expect("nonzero"))
        .collect();
    let flags = vec![false; d.graph.edge_count()];
    // distinct planar points lift to distinct, non-antipodal points
    build_spherical_drawing(d.graph.clone(), positions, flags, &Tolerances::default())
        .expect("lift of a valid planar drawing is valid")
}

/// Length class of every edge; arcs of length π never arise from
/// [`build_spherical_drawing`].
pub fn length_classes(d: &SphericalDrawing, tol: &Tolerances) -> Vec<Result<LengthClass, GeomError>> {
    d.arcs.iter().map(|a| a.length_class(tol)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn triangle_on_axes() {
        let g = Graph::cycle(3);
        let d = build_spherical_drawing(
            g,
            vec![UnitVec3::X, UnitVec3::Y, UnitVec3::Z],
            vec![false; 3],
            &Tolerances::default(),
        )
        .unwrap();
        for a in d.arcs() {
            assert!((a.length() - FRAC_PI_2).abs() < 1e-12);
        }
    }

    #[test]
    fn long_flag_takes_complement() {
        let d = build_spherical_drawing(
            Graph::path(2),
            vec![UnitVec3::X, UnitVec3::Y],
            vec![true],
            &Tolerances::default(),
        )
        .unwrap();
        assert!((d.arc(0).length() - 1.5 * PI).abs() < 1e-12);
        let end = d.arc(0).end();
        assert!(end.cross(UnitVec3::Y).norm() < 1e-12 && end.dot(UnitVec3::Y) > 0.0);
    }

    #[test]
    fn antipodal_endpoints_rejected() {
        let err = build_spherical_drawing(
            Graph::path(2),
            vec![UnitVec3::Z, -UnitVec3::Z],
            vec![false],
            &Tolerances::default(),
        )
        .unwrap_err();
        assert_eq!(err, DrawingError::DegenerateVertexPair { u: 0, v: 1 });
    }

    #[test]
    fn count_mismatches() {
        let tol = Tolerances::default();
        assert!(matches!(
            build_spherical_drawing(Graph::path(2), vec![UnitVec3::Z], vec![false], &tol),
            Err(DrawingError::PositionCount { .. })
        ));
        assert!(matches!(
            build_spherical_drawing(Graph::path(2), vec![UnitVec3::Z, UnitVec3::X], vec![], &tol),
            Err(DrawingError::FlagCount { .. })
        ));
        assert!(matches!(
            PlanarDrawing::new(Graph::path(2), vec![Point2::new(1.0, 1.0); 2], &tol),
            Err(DrawingError::CoincidentVertices { u: 0, v: 1 })
        ));
    }

    #[test]
    fn lift_single_edge_is_short_and_upper() {
        let p = PlanarDrawing::new(
            Graph::path(2),
            vec![Point2::new(-3.0, 1.0), Point2::new(4.0, 2.0)],
            &Tolerances::default(),
        )
        .unwrap();
        let s = lift_planar_to_sphere(&p);
        assert!(s.arc(0).length() < PI);
        for q in s.positions() {
            assert!(q.z() > 0.8);
        }
        assert!(s.arc(0).midpoint().z() > 0.0);
    }
}
