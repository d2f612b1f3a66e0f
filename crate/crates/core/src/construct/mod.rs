//! Explicit thrackle drawings: odd star polygons and caterpillars as
//! straight-line thrackles, and a great-circle thrackle of the spider with
//! three legs of length two.

mod spider;

use std::f64::consts::TAU;

use thiserror::Error;

use crate::drawing::PlanarDrawing;
use crate::graph::{is_caterpillar, Graph};
use crate::plane::Point2;
use crate::tolerance::Tolerances;

pub use spider::{construct_spider_3_2_gc, SpiderConstructionParams};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructError {
    #[error("star polygon cycle needs an odd number of vertices, got {0}")]
    EvenN(usize),
    #[error("cycle needs at least three vertices, got {0}")]
    TooSmall(usize),
    #[error("graph is not a caterpillar")]
    NotACaterpillar,
    #[error("parameters violate the construction's inequalities: {0}")]
    ParamsViolateInequalities(String),
}

/// Odd cycle on the unit circle, vertex `k` at angle `2πk(n-1)/(2n)`.
pub fn construct_star_polygon_cycle(n: usize) -> Result<PlanarDrawing, ConstructError> {
    if n.is_multiple_of(2) {
        return Err(ConstructError::EvenN(n));
    }
    if n < 3 {
        return Err(ConstructError::TooSmall(n));
    }
    let step = (n - 1) / 2;
    let positions = (0..n)
        .map(|k| {
            let a = TAU * ((k * step) % n) as f64 / n as f64;
            Point2::new(a.cos(), a.sin())
        })
        .collect();
    Ok(PlanarDrawing::new(Graph::cycle(n), positions, &Tolerances::default())
        .expect("distinct points on the circle"))
}

/// Two-layer order of a caterpillar: each layer is one side of the
/// bipartition, listed so that the edges between the layers do not cross.
fn two_layer_order(t: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = t.n();
    if n <= 2 {
        return ((0..n.min(1)).collect(), (1..n).collect());
    }
    let interior: Vec<usize> = (0..n).filter(|&v| !t.is_leaf(v)).collect();
    let inner_deg = |v: usize| t.neighbors(v).filter(|&w| !t.is_leaf(w)).count();
    let start = *interior
        .iter()
        .find(|&&v| inner_deg(v) <= 1)
        .expect("a path has an end");
    let mut spine = vec![start];
    loop {
        let cur = *spine.last().expect("nonempty");
        let prev = spine.len().checked_sub(2).map(|i| spine[i]);
        match t
            .neighbors(cur)
            .find(|&w| !t.is_leaf(w) && Some(w) != prev)
        {
            Some(w) => spine.push(w),
            None => break,
        }
    }
    let mut layers = [vec![spine[0]], Vec::new()];
    for (i, &s) in spine.iter().enumerate() {
        let other = &mut layers[1 - i % 2];
        other.extend(t.neighbors(s).filter(|&w| t.is_leaf(w)));
        if let Some(&next) = spine.get(i + 1) {
            other.push(next);
        }
    }
    let [a, b] = layers;
    (a, b)
}

/// Straight-line thrackle of a caterpillar: one layer after the other
/// around the unit circle, so any two disjoint edges interleave and cross.
pub fn construct_caterpillar_straight_line(t: &Graph) -> Result<PlanarDrawing, ConstructError> {
    if !is_caterpillar(t).unwrap_or(false) {
        return Err(ConstructError::NotACaterpillar);
    }
    let (a, b) = two_layer_order(t);
    let n = t.n();
    let mut positions = vec![Point2::new(0.0, 0.0); n];
    for (k, &v) in a.iter().chain(&b).enumerate() {
        let angle = TAU * k as f64 / n as f64;
        positions[v] = Point2::new(angle.cos(), angle.sin());
    }
    Ok(PlanarDrawing::new(t.clone(), positions, &Tolerances::default())
        .expect("distinct points on the circle"))
}
