//! Small planar drawings used in tests, examples and the CLI.

use super::PlanarDrawing;
use crate::graph::Graph;
use crate::plane::Point2;
use crate::tolerance::Tolerances;

fn planar(n: usize, edges: Vec<(usize, usize)>, pts: &[(f64, f64)]) -> PlanarDrawing {
    let g = Graph::new(n, edges).expect("fixture graph is simple");
    let pts = pts.iter().map(|&(x, y)| Point2::new(x, y)).collect();
    PlanarDrawing::new(g, pts, &Tolerances::default()).expect("fixture positions are distinct")
}

/// Path v3-v2-v1-v0 drawn as a thrackle; the two end edges cross at (5.5, 0.5).
pub fn three_path_thrackle() -> PlanarDrawing {
    planar(
        4,
        vec![(3, 2), (2, 1), (1, 0)],
        &[(6.0, 1.0), (5.0, 0.0), (6.0, 0.0), (5.0, 1.0)],
    )
}

/// The same path drawn along a line.
pub fn collinear_three_path() -> PlanarDrawing {
    planar(
        4,
        vec![(3, 2), (2, 1), (1, 0)],
        &[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0), (2.0, 0.0)],
    )
}

/// Five-cycle drawn as a pentagram with three-decimal coordinates.
pub fn pentagram() -> PlanarDrawing {
    planar(
        5,
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        &[
            (2.0, -1.0),
            (2.588, 0.809),
            (1.049, -0.309),
            (2.951, -0.309),
            (1.412, 0.809),
        ],
    )
}
