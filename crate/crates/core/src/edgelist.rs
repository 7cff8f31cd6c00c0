//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! <vertex_count> <edge_count>
//! <u> <v>
//! ...
//! ```
//!
//! Ids are 0-based and separated by a single space. Emitted text always ends
//! with a newline; a missing final newline is accepted when parsing.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let mut fields = line.split(' ');
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(err(format!(
            "expected two space-separated integers, found {line:?}"
        )));
    };
    let a = a.parse::<usize>().map_err(|e| err(format!("{a:?}: {e}")))?;
    let b = b.parse::<usize>().map_err(|e| err(format!("{b:?}: {e}")))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.starts_with('#') {
            continue;
        }
        match header {
            None => header = Some(parse_pair(line_no, line)?),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("header declares {m} edges, found more"),
                    });
                }
                let (u, v) = parse_pair(line_no, line)?;
                if u >= n || v >= n {
                    return Err(Error::OutOfRange {
                        vertex: u.max(v),
                        vertex_count: n,
                    });
                }
                if u == v {
                    return Err(Error::SelfLoop { vertex: u });
                }
                edges.push((u, v));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: last_line + 1,
            message: "missing header line".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
