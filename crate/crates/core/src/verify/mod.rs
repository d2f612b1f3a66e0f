//! Thrackle and general-position verification, local separation
//! predicates at vertices, and the structural audits built on them.

mod audit;
mod separation;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::{Drawing, DrawingDocument, PlanarDrawing, SphericalDrawing};
use crate::plane::{collinear, segment_meetings};
use crate::sphere::{arc_arc_meetings, cocircular, MeetingKind, UnitVec3};
use crate::tolerance::Tolerances;

pub use audit::{
    conjecture3_audit, lemma_audit, AuditMode, Conjecture3Report, LemmaAuditReport, LemmaResult,
    SpinePairAudit, VertexAudit, Witness,
};
pub use separation::{
    edge_separates_at, is_pointed, path_separates_at, reaches_side, separating_edges, tangent_at,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("drawing contains degenerate geometry ({} violations)", .0.violations.len())]
    DegenerateGeometry(Box<VerificationReport>),
    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { edge: usize, vertex: usize },
    #[error("vertex {vertex} has degree {degree}; at least 3 required")]
    DegreeTooLow { vertex: usize, degree: usize },
    #[error("edge sequence is not a path ending at vertex {vertex}")]
    NotAPathAtV { vertex: usize },
    #[error("drawing is not a general-position thrackle")]
    NotAThrackle,
    #[error("spine is not a path of the graph")]
    InvalidSpine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Thrackle,
    NotThrackle,
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub edges: [usize; 2],
    /// Shared vertex of an adjacent pair.
    pub shared_vertex: Option<usize>,
    pub meeting_count: usize,
    pub kinds: Vec<MeetingKind>,
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    NoMeeting { edges: [usize; 2] },
    MultipleMeetings { edges: [usize; 2], count: usize },
    /// Adjacent edges meeting somewhere other than their shared vertex.
    AdjacentMeetsElsewhere { edges: [usize; 2], vertex: usize },
    DegenerateMeeting { edges: [usize; 2], point: Vec<f64> },
    /// Both edges lie on one great circle (or one line).
    CommonSupport { edges: [usize; 2] },
}

impl Violation {
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Violation::DegenerateMeeting { .. } | Violation::CommonSupport { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum PositionViolation {
    Coincident { vertices: [usize; 2] },
    Antipodal { vertices: [usize; 2] },
    /// Three vertices on one great circle (or one line in the plane).
    Cocircular { vertices: [usize; 3] },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralPositionReport {
    pub is_general_position: bool,
    pub violations: Vec<PositionViolation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: String,
    pub status: Verdict,
    pub is_thrackle: bool,
    pub is_general_position: bool,
    pub edge_count: usize,
    pub pairs: Vec<PairRecord>,
    pub violations: Vec<Violation>,
    pub position_violations: Vec<PositionViolation>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    /// Meeting counts in pair order.
    pub fn meeting_counts(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.meeting_count).collect()
    }
}

/// No two vertices coincident or antipodal, no three on a great circle.
pub fn verify_general_position(d: &SphericalDrawing, tol: &Tolerances) -> GeneralPositionReport {
    let p = d.positions();
    let mut violations = Vec::new();
    for u in 0..p.len() {
        for v in u + 1..p.len() {
            if p[u].cross(p[v]).norm() <= tol.degenerate {
                violations.push(if p[u].dot(p[v]) > 0.0 {
                    PositionViolation::Coincident { vertices: [u, v] }
                } else {
                    PositionViolation::Antipodal { vertices: [u, v] }
                });
            }
        }
    }
    for u in 0..p.len() {
        for v in u + 1..p.len() {
            let n = p[u].cross(p[v]);
            for w in v + 1..p.len() {
                if n.dot(p[w].vec()).abs() <= tol.side {
                    violations.push(PositionViolation::Cocircular { vertices: [u, v, w] });
                }
            }
        }
    }
    GeneralPositionReport {
        is_general_position: violations.is_empty(),
        violations,
    }
}

/// Planar analogue: no two vertices coincide, no three on a line.
pub fn verify_planar_general_position(d: &PlanarDrawing, tol: &Tolerances) -> GeneralPositionReport {
    let p = d.positions();
    let mut violations = Vec::new();
    for u in 0..p.len() {
        for v in u + 1..p.len() {
            if p[u].distance(p[v]) <= tol.degenerate {
                violations.push(PositionViolation::Coincident { vertices: [u, v] });
                continue;
            }
            let seg = crate::plane::Segment::new(p[u], p[v]);
            for w in v + 1..p.len() {
                if seg.signed_distance(p[w]).abs() <= tol.side {
                    violations.push(PositionViolation::Cocircular { vertices: [u, v, w] });
                }
            }
        }
    }
    GeneralPositionReport {
        is_general_position: violations.is_empty(),
        violations,
    }
}

struct RawMeeting {
    point: Vec<f64>,
    kind: MeetingKind,
    at_vertex: bool,
}

fn edge_pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect()
}

fn judge(
    i: usize,
    j: usize,
    shared: Option<usize>,
    common_support: bool,
    meetings: Vec<RawMeeting>,
) -> (PairRecord, Vec<Violation>) {
    let edges = [i, j];
    let mut violations = Vec::new();
    if common_support {
        violations.push(Violation::CommonSupport { edges });
    }
    for m in &meetings {
        if m.kind == MeetingKind::Degenerate {
            violations.push(Violation::DegenerateMeeting {
                edges,
                point: m.point.clone(),
            });
        }
    }
    match (meetings.len(), shared) {
        (0, _) => violations.push(Violation::NoMeeting { edges }),
        (1, None) => {}
        (1, Some(vertex)) => {
            if !meetings[0].at_vertex {
                violations.push(Violation::AdjacentMeetsElsewhere { edges, vertex });
            }
        }
        (count, Some(vertex)) => {
            violations.push(Violation::MultipleMeetings { edges, count });
            violations.push(Violation::AdjacentMeetsElsewhere { edges, vertex });
        }
        (count, None) => violations.push(Violation::MultipleMeetings { edges, count }),
    }
    let record = PairRecord {
        edges,
        shared_vertex: shared,
        meeting_count: meetings.len(),
        kinds: meetings.iter().map(|m| m.kind).collect(),
        points: meetings.into_iter().map(|m| m.point).collect(),
    };
    (record, violations)
}

fn assemble(
    kind: &str,
    edge_count: usize,
    results: Vec<(PairRecord, Vec<Violation>)>,
    gp: GeneralPositionReport,
) -> VerificationReport {
    let mut pairs = Vec::with_capacity(results.len());
    let mut violations = Vec::new();
    for (r, v) in results {
        pairs.push(r);
        violations.extend(v);
    }
    let status = if violations.iter().any(Violation::is_degenerate) {
        Verdict::Degenerate
    } else if violations.is_empty() {
        Verdict::Thrackle
    } else {
        Verdict::NotThrackle
    };
    VerificationReport {
        kind: kind.to_string(),
        status,
        is_thrackle: status == Verdict::Thrackle,
        is_general_position: gp.is_general_position,
        edge_count,
        pairs,
        violations,
        position_violations: gp.violations,
    }
}

pub fn spherical_report(d: &SphericalDrawing, tol: &Tolerances) -> VerificationReport {
    let g = d.graph();
    let results = edge_pairs(g.edge_count())
        .into_par_iter()
        .map(|(i, j)| {
            let (a, b) = (d.arc(i), d.arc(j));
            let shared = g.adjacent_edges(i, j);
            let meetings = arc_arc_meetings(a, b, tol)
                .into_iter()
                .map(|m| RawMeeting {
                    point: m.point.to_array().to_vec(),
                    kind: m.kind,
                    at_vertex: shared.is_some_and(|s| near(m.point, d.position(s), tol)),
                })
                .collect();
            judge(i, j, shared, cocircular(a, b, tol), meetings)
        })
        .collect();
    assemble("spherical", g.edge_count(), results, verify_general_position(d, tol))
}

fn near(p: UnitVec3, q: UnitVec3, tol: &Tolerances) -> bool {
    p.dot(q) > 0.0 && p.cross(q).norm() <= tol.side
}

pub fn planar_report(d: &PlanarDrawing, tol: &Tolerances) -> VerificationReport {
    let g = d.graph();
    let results = edge_pairs(g.edge_count())
        .into_par_iter()
        .map(|(i, j)| {
            let (s, r) = (d.segment(i), d.segment(j));
            let shared = g.adjacent_edges(i, j);
            let meetings = segment_meetings(&s, &r, tol.side)
                .into_iter()
                .map(|m| RawMeeting {
                    point: vec![m.point.x, m.point.y],
                    kind: m.kind,
                    at_vertex: shared
                        .is_some_and(|v| m.point.distance(d.positions()[v]) <= tol.side),
                })
                .collect();
            judge(i, j, shared, collinear(&s, &r, tol.side), meetings)
        })
        .collect();
    assemble("planar", g.edge_count(), results, verify_planar_general_position(d, tol))
}

/// Full report for a document, whatever its verdict.
pub fn thrackle_report(doc: &DrawingDocument) -> VerificationReport {
    match &doc.drawing {
        Drawing::Spherical(d) => spherical_report(d, doc.tolerances()),
        Drawing::Planar(d) => planar_report(d, doc.tolerances()),
    }
}

/// Report for a document; degenerate geometry is an error carrying the report.
pub fn verify_thrackle(doc: &DrawingDocument) -> Result<VerificationReport, VerifyError> {
    let report = thrackle_report(doc);
    if report.status == Verdict::Degenerate {
        Err(VerifyError::DegenerateGeometry(Box::new(report)))
    } else {
        Ok(report)
    }
}

/// Whether `d` is a thrackle in general position under `tol`.
pub fn is_general_position_thrackle(d: &SphericalDrawing, tol: &Tolerances) -> bool {
    let r = spherical_report(d, tol);
    r.is_thrackle && r.is_general_position
}
