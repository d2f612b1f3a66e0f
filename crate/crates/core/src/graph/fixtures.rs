//! Small named trees used throughout the tests and the CLI examples.

use super::Graph;

/// Caterpillar with spine 0-5-9 and leaves 1, 2, 3, 4 at 0; 7, 8 at 5;
/// 11, 12, 13 at 9. Labels 6 and 10 are unused, so vertices are
/// relabelled densely in label order.
pub fn caterpillar_12() -> Graph {
    let labels = [0, 1, 2, 3, 4, 5, 7, 8, 9, 11, 12, 13];
    let edges = [
        (0, 1),
        (0, 2),
        (0, 4),
        (0, 3),
        (5, 7),
        (5, 8),
        (9, 11),
        (9, 12),
        (9, 13),
        (0, 5),
        (5, 9),
    ];
    relabel(&labels, &edges)
}

/// Spider with three legs of length two, center 0: 0-1-2, 0-3-4, 0-5-6.
pub fn spider_222() -> Graph {
    Graph::new(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).expect("simple")
}

/// Augmented caterpillar on 20 vertices with spine 13-12-0-16-18-9-10-11
/// and legs of length one and two at 0, 16 and 18.
pub fn augmented_caterpillar_20() -> Graph {
    Graph::new(
        20,
        vec![
            (0, 1),
            (1, 2),
            (0, 3),
            (3, 4),
            (0, 14),
            (0, 15),
            (16, 5),
            (5, 6),
            (16, 17),
            (18, 7),
            (7, 8),
            (18, 9),
            (9, 10),
            (10, 11),
            (18, 19),
            (0, 16),
            (16, 18),
            (0, 12),
            (12, 13),
        ],
    )
    .expect("simple")
}

/// Spider with three legs of length three. Returns the graph and its
/// center. Vertices: z = 0, w1..w3 = 1..3, v1..v3 = 4..6, u1..u3 = 7..9.
pub fn spider_333() -> (Graph, usize) {
    let g = Graph::new(
        10,
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 4),
            (4, 5),
            (5, 6),
            (0, 7),
            (7, 8),
            (8, 9),
        ],
    )
    .expect("simple");
    (g, 0)
}

fn relabel(labels: &[usize], edges: &[(usize, usize)]) -> Graph {
    let idx = |l: usize| labels.iter().position(|&x| x == l).expect("known label");
    Graph::new(
        labels.len(),
        edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect(),
    )
    .expect("simple")
}
