//! Text formats for graphs and flows.
//!
//! Graph: a header line `zs <n> <m>` followed by `m` lines `<u> <v>`. Edge
//! ids follow line order. Flow: a header line `flow <k> <branch>` followed
//! by one signed value per edge, in edge-id order. Blank lines and text
//! after `#` are ignored. Output uses LF endings and single spaces.

use thiserror::Error;

use crate::graph::Multigraph;
use crate::labeling::EdgeLabeling;
use crate::solver::{Branch, FlowCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header, expected `{expected}`")]
    Header { line: usize, expected: &'static str },
    #[error("line {line}: cannot parse `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("expected {expected} entries, found {found}")]
    Count { expected: usize, found: usize },
    #[error("line {line}: zero value")]
    Zero { line: usize },
    #[error("missing header")]
    Empty,
}

/// Non-empty lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T, FormatError> {
    token.parse().map_err(|_| FormatError::Syntax {
        line,
        text: token.to_string(),
    })
}

pub fn parse_graph(text: &str) -> Result<Multigraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::Empty)?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let bad_header = FormatError::Header {
        line: hl,
        expected: "zs <n> <m>",
    };
    if head.len() != 3 || head[0] != "zs" {
        return Err(bad_header);
    }
    let n: usize = number(hl, head[1])?;
    let m: usize = number(hl, head[2])?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(FormatError::Syntax {
                line,
                text: body.to_string(),
            });
        }
        let u: usize = number(line, tokens[0])?;
        let v: usize = number(line, tokens[1])?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(FormatError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(FormatError::Loop { line, vertex: u });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::Count {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Multigraph::new(n, edges).expect("endpoints checked above"))
}

pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = format!("zs {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A parsed flow file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowFile {
    pub bound: i32,
    pub branch: Branch,
    pub labeling: EdgeLabeling,
}

pub fn serialize_flow(c: &FlowCertificate) -> String {
    let mut out = format!("flow {} {}\n", c.bound, c.branch);
    for x in c.labeling.values() {
        out.push_str(&format!("{x}\n"));
    }
    out
}

/// Parses a flow file for a graph with `edge_count` edges.
pub fn parse_flow(text: &str, edge_count: usize) -> Result<FlowFile, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::Empty)?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let bad_header = || FormatError::Header {
        line: hl,
        expected: "flow <k> <branch>",
    };
    if head.len() != 3 || head[0] != "flow" {
        return Err(bad_header());
    }
    let bound: i32 = number(hl, head[1])?;
    let branch = Branch::from_name(head[2]).ok_or_else(bad_header)?;
    let mut values = Vec::with_capacity(edge_count);
    for (line, body) in lines {
        let x: i32 = number(line, body)?;
        if x == 0 {
            return Err(FormatError::Zero { line });
        }
        values.push(x);
    }
    if values.len() != edge_count {
        return Err(FormatError::Count {
            expected: edge_count,
            found: values.len(),
        });
    }
    Ok(FlowFile {
        bound,
        branch,
        labeling: EdgeLabeling::new(values).expect("zeros rejected above"),
    })
}
