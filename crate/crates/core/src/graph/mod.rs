//! Simple undirected graphs, tree utilities and the tree-class recognizers:
//! caterpillars, spiders, augmented caterpillars and the spider on three
//! legs of length three as a forbidden subtree.

mod classify;
pub mod fixtures;
pub mod enumerate;
mod text;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use classify::{
    classify_spider, contains_spider_3_3, diameter_paths, edge_bound_holds,
    is_augmented_caterpillar, is_caterpillar, is_straight_line_thrackleable, spine_decomposition,
    SpiderShape, SpineDecomposition,
};
pub use text::{parse_graph_text, write_graph_text};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum GraphIssue {
    Loop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph: {0:?}")]
    Invalid(Vec<GraphIssue>),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph text parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Checks simplicity: no loops, no repeated edges, indices below `n`.
pub fn validate(n: usize, edges: &[(usize, usize)]) -> Result<(), Vec<GraphIssue>> {
    let mut issues = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                issues.push(GraphIssue::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            issues.push(GraphIssue::Loop { vertex: u });
        } else if !seen.insert((u.min(v), u.max(v))) {
            issues.push(GraphIssue::DuplicateEdge { u, v });
        }
    }
    if issues.is_empty() {
        Ok(())
    } else {
        Err(issues)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edge order is preserved; edge `i` of a drawing is edge `i` here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index) per vertex
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        validate(n, &edges).map_err(GraphError::Invalid)?;
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        Ok(Self { n, edges, adj })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, edges).expect("complete graph is simple")
    }

    /// Spider with center `0`; leg `i` is a path of `legs[i]` edges.
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::new(next, edges).expect("spider is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge index)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Endpoint of edge `e` other than `v`, if `e` is incident to `v`.
    pub fn other_end(&self, e: usize, v: usize) -> Option<usize> {
        let (a, b) = self.edges[e];
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// Whether edges `i` and `j` share an endpoint.
    pub fn adjacent_edges(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = self.edges[i];
        let (c, d) = self.edges[j];
        if a == c || a == d {
            Some(a)
        } else if b == c || b == d {
            Some(b)
        } else {
            None
        }
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(u) = stack.pop() {
                members.push(u);
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// The graph with edge `e` deleted (vertex set unchanged).
    pub fn without_edge(&self, e: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &uv)| uv)
            .collect();
        Graph::new(self.n, edges).expect("subgraph of a simple graph is simple")
    }
}

pub fn is_tree(g: &Graph) -> bool {
    g.is_tree()
}

pub(crate) fn require_tree(g: &Graph) -> Result<(), GraphError> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(GraphError::NotATree)
    }
}
