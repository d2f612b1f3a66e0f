//! Exhaustive enumeration of free (unrooted, unlabelled) trees.
//!
//! Rooted trees are generated as canonical level sequences (Beyer and
//! Hedetniemi), converted to parent arrays and deduplicated by a
//! center-rooted canonical encoding.

use std::collections::BTreeMap;

use super::Graph;

/// Successive canonical level sequences of rooted trees on `n` vertices.
struct LevelSequences {
    levels: Vec<usize>,
    done: bool,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        Self {
            levels: (1..=n).collect(),
            done: n == 0,
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.levels.clone();
        let n = self.levels.len();
        match (1..n).rev().find(|&i| self.levels[i] > 2) {
            None => self.done = true,
            Some(p) => {
                let q = (0..p)
                    .rev()
                    .find(|&i| self.levels[i] == self.levels[p] - 1)
                    .expect("a parent level precedes every node");
                for i in p..n {
                    self.levels[i] = self.levels[i - (p - q)];
                }
            }
        }
        Some(current)
    }
}

fn parents_from_levels(levels: &[usize]) -> Vec<Option<usize>> {
    let mut last_at_level: Vec<usize> = vec![0; levels.len() + 2];
    levels
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            last_at_level[l] = i;
            (l > 1).then(|| last_at_level[l - 1])
        })
        .collect()
}

/// All rooted trees on `n` vertices as parent arrays (root has `None`).
pub fn rooted_trees(n: usize) -> Vec<Vec<Option<usize>>> {
    LevelSequences::new(n)
        .map(|l| parents_from_levels(&l))
        .collect()
}

/// Vertices of the center (one or two) found by repeated leaf removal.
pub fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in t.neighbors(v) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(t, w, Some(v)))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

/// Isomorphism-invariant encoding of a tree: the smallest parenthesis
/// code over its center vertices.
pub fn canonical_form(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .unwrap_or_default()
}

/// Every free tree on `n` vertices exactly once, sorted by canonical form.
pub fn free_trees(n: usize) -> Vec<Graph> {
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    for parents in rooted_trees(n) {
        let edges = parents
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i)))
            .collect();
        let g = Graph::new(n, edges).expect("parent arrays are simple");
        seen.entry(canonical_form(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

/// Every free tree with between one and `max_n` vertices.
pub fn free_trees_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(free_trees).collect()
}
