//! Plain-text graph format: the vertex count on the first line, then one
//! `u v` edge per line. Blank lines and `#` comments are ignored.

use super::{Graph, GraphError};

pub fn parse_graph_text(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("expected a non-negative integer, found {s:?}")))
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (None, _) => return Err(err("first line must hold the vertex count".into())),
            (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
            (Some(_), _) => return Err(err(format!("expected `u v`, found {line:?}"))),
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 0,
        message: "empty graph file".into(),
    })?;
    Graph::new(n, edges)
}

pub fn write_graph_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
