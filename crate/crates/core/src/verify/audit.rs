use serde::{Deserialize, Serialize};

use super::separation::{edge_separates_at, is_pointed, separating_edges};
use super::{is_general_position_thrackle, VerifyError};
use crate::drawing::SphericalDrawing;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditMode {
    /// Require a general-position thrackle first.
    Strict,
    /// Evaluate the predicates on any drawing.
    Forced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "witness", rename_all = "snake_case")]
pub enum Witness {
    AdjacentLongEdges { vertex: usize, edges: [usize; 2] },
    TooFewSeparating { vertex: usize, degree: usize, separating: usize },
    PointedSeparationMismatch { vertex: usize, degree: usize, separating: usize },
    LongSeparatingEdgeNotTerminal { vertex: usize, edge: usize, far_end: usize },
    LongSeparatingPath { vertex: usize, path: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl LemmaResult {
    fn from(witnesses: Vec<Witness>) -> Self {
        Self {
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexAudit {
    pub vertex: usize,
    pub degree: usize,
    pub pointed: bool,
    pub all_short: bool,
    /// Empty below degree three, where separation is undefined.
    pub separating_edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaAuditReport {
    pub forced: bool,
    /// No two long edges share a vertex.
    pub no_adjacent_long: LemmaResult,
    /// At least k-2 separating edges at a degree-k vertex, exactly k-2 when pointed.
    pub separation_count: LemmaResult,
    /// A long edge separating at a vertex ends at a leaf.
    pub long_separating_terminal: LemmaResult,
    /// At a vertex whose edges are all short, separating paths have at most two edges.
    pub short_vertex_paths: LemmaResult,
    pub vertices: Vec<VertexAudit>,
}

impl LemmaAuditReport {
    pub fn violation_count(&self) -> usize {
        self.lemmas().iter().map(|l| l.witnesses.len()).sum()
    }

    pub fn all_hold(&self) -> bool {
        self.violation_count() == 0
    }

    pub fn lemmas(&self) -> [&LemmaResult; 4] {
        [
            &self.no_adjacent_long,
            &self.separation_count,
            &self.long_separating_terminal,
            &self.short_vertex_paths,
        ]
    }
}

/// Simple paths of exactly three edges starting at `v` with first edge `e`.
fn three_paths_from(d: &SphericalDrawing, v: usize, e: usize) -> Vec<Vec<usize>> {
    let g = d.graph();
    let mut out = Vec::new();
    let x = g.other_end(e, v).expect("incident");
    for &(y, f) in g.incident(x) {
        if y == v {
            continue;
        }
        for &(z, h) in g.incident(y) {
            if z != x && z != v {
                out.push(vec![e, f, h]);
            }
        }
    }
    out
}

pub fn lemma_audit(
    d: &SphericalDrawing,
    tol: &Tolerances,
    mode: AuditMode,
) -> Result<LemmaAuditReport, VerifyError> {
    if mode == AuditMode::Strict && !is_general_position_thrackle(d, tol) {
        return Err(VerifyError::NotAThrackle);
    }
    let g = d.graph();
    let flags = d.long_flags();
    let mut vertices = Vec::with_capacity(g.n());
    let (mut l1, mut l2, mut l3, mut l4) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());

    for v in 0..g.n() {
        let inc = g.incident(v);
        let degree = inc.len();
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                if flags[e] && flags[f] {
                    l1.push(Witness::AdjacentLongEdges {
                        vertex: v,
                        edges: [e.min(f), e.max(f)],
                    });
                }
            }
        }
        let pointed = is_pointed(d, v, tol);
        let all_short = inc.iter().all(|&(_, e)| !flags[e]);
        let separating = if degree >= 3 {
            separating_edges(d, v, tol)?
        } else {
            Vec::new()
        };
        if degree >= 3 {
            let count = separating.len();
            if count < degree - 2 {
                l2.push(Witness::TooFewSeparating {
                    vertex: v,
                    degree,
                    separating: count,
                });
            } else if pointed && count != degree - 2 {
                l2.push(Witness::PointedSeparationMismatch {
                    vertex: v,
                    degree,
                    separating: count,
                });
            }
            for &e in &separating {
                let far = g.other_end(e, v).expect("incident");
                if flags[e] && !g.is_leaf(far) {
                    l3.push(Witness::LongSeparatingEdgeNotTerminal {
                        vertex: v,
                        edge: e,
                        far_end: far,
                    });
                }
                if all_short {
                    for path in three_paths_from(d, v, e) {
                        l4.push(Witness::LongSeparatingPath { vertex: v, path });
                    }
                }
            }
        }
        vertices.push(VertexAudit {
            vertex: v,
            degree,
            pointed,
            all_short,
            separating_edges: separating,
        });
    }
    Ok(LemmaAuditReport {
        forced: mode == AuditMode::Forced,
        no_adjacent_long: LemmaResult::from(l1),
        separation_count: LemmaResult::from(l2),
        long_separating_terminal: LemmaResult::from(l3),
        short_vertex_paths: LemmaResult::from(l4),
        vertices,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinePairAudit {
    pub v: usize,
    pub w: usize,
    /// Two-edge paths `[e, f]` whose end edge `e` separates at `v`.
    pub separating_at_v: Vec<[usize; 2]>,
    pub separating_at_w: Vec<[usize; 2]>,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjecture3Report {
    pub spine: Vec<usize>,
    pub pairs: Vec<SpinePairAudit>,
    pub holds: bool,
}

fn separating_two_paths(
    d: &SphericalDrawing,
    v: usize,
    tol: &Tolerances,
) -> Result<Vec<[usize; 2]>, VerifyError> {
    let g = d.graph();
    let mut out = Vec::new();
    if g.degree(v) < 3 {
        return Ok(out);
    }
    for &(x, e) in g.incident(v) {
        if !edge_separates_at(d, e, v, tol)? {
            continue;
        }
        for &(y, f) in g.incident(x) {
            if y != v {
                out.push([e, f]);
            }
        }
    }
    Ok(out)
}

/// For consecutive internal spine vertices, whether two-edge paths
/// separate at both of them.
pub fn conjecture3_audit(
    d: &SphericalDrawing,
    spine: &[usize],
    tol: &Tolerances,
) -> Result<Conjecture3Report, VerifyError> {
    let g = d.graph();
    if spine.iter().any(|&v| v >= g.n())
        || spine.windows(2).any(|w| g.edge_between(w[0], w[1]).is_none())
    {
        return Err(VerifyError::InvalidSpine);
    }
    let internal = if spine.len() > 2 {
        &spine[1..spine.len() - 1]
    } else {
        &[][..]
    };
    let mut pairs = Vec::new();
    for w in internal.windows(2) {
        let at_v = separating_two_paths(d, w[0], tol)?;
        let at_w = separating_two_paths(d, w[1], tol)?;
        let violation = !at_v.is_empty() && !at_w.is_empty();
        pairs.push(SpinePairAudit {
            v: w[0],
            w: w[1],
            separating_at_v: at_v,
            separating_at_w: at_w,
            violation,
        });
    }
    let holds = pairs.iter().all(|p| !p.violation);
    Ok(Conjecture3Report {
        spine: spine.to_vec(),
        pairs,
        holds,
    })
}
