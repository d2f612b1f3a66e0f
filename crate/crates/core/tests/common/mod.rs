#![allow(dead_code)]

use proptest::prelude::*;
use thrackle::drawing::{DrawingDocument, Meta, PlanarDrawing};
use thrackle::graph::Graph;
use thrackle::plane::Point2;
use thrackle::sphere::UnitVec3;
use thrackle::Tolerances;

/// Caterpillar with the given spine length and leaf counts per spine vertex.
pub fn caterpillar(leaves: &[usize]) -> Graph {
    let s = leaves.len();
    let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
    let mut next = s;
    for (i, &k) in leaves.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, edges).unwrap()
}

pub fn caterpillar_strategy() -> impl Strategy<Value = Graph> {
    prop::collection::vec(0usize..4, 1..6)
        .prop_map(|l| caterpillar(&l))
        .prop_filter("at least one edge", |g| g.edge_count() >= 1)
}

/// Tree decoded from a Prüfer sequence over `0..n`.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

pub fn tree_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| prop::collection::vec(0..n, n - 2)).prop_map(|s| prufer_tree(&s))
}

/// Nonsingular affine map as `(a, b, c, d, tx, ty)`.
pub fn affine_strategy() -> impl Strategy<Value = [f64; 6]> {
    (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -5.0..5.0f64, -5.0..5.0f64)
        .prop_map(|(a, b, c, d, x, y)| [a, b, c, d, x, y])
        .prop_filter("well conditioned", |m| {
            let det = m[0] * m[3] - m[1] * m[2];
            let frob = m[..4].iter().map(|v| v * v).sum::<f64>();
            det.abs() > 0.2 * frob
        })
}

pub fn apply_affine(d: &PlanarDrawing, m: &[f64; 6]) -> PlanarDrawing {
    let pts = d
        .positions()
        .iter()
        .map(|p| Point2::new(m[0] * p.x + m[1] * p.y + m[4], m[2] * p.x + m[3] * p.y + m[5]))
        .collect();
    PlanarDrawing::new(d.graph().clone(), pts, &Tolerances::default()).unwrap()
}

pub fn point2() -> impl Strategy<Value = Point2> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

pub fn unit() -> impl Strategy<Value = UnitVec3> {
    (0.0..std::f64::consts::TAU, -1.0f64..1.0).prop_map(|(lon, z)| {
        let r = (1.0 - z * z).sqrt();
        UnitVec3::from_xyz(r * lon.cos(), r * lon.sin(), z).unwrap()
    })
}

pub fn planar_doc(d: PlanarDrawing) -> DrawingDocument {
    DrawingDocument::planar(d, Meta::default())
}
