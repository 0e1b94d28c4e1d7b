//! Edge-disjoint paths pairing up an even set of vertices.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, SpanningTree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("odd number ({0}) of vertices to pair")]
    OddCount(usize),
    #[error("vertex {0} listed twice")]
    Duplicate(VertexId),
    #[error("vertex {0} out of range")]
    OutOfRange(VertexId),
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    /// `vertices[0]` and `vertices[len]` are the ends; `edges[i]` joins
    /// `vertices[i]` and `vertices[i + 1]`.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPairing {
    pub paths: Vec<Path>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingViolation {
    #[error("path {path} does not follow the graph's edges")]
    Broken { path: usize },
    #[error("path {path} repeats a vertex")]
    NotSimple { path: usize },
    #[error("edge {edge} is used by two paths")]
    SharedEdge { edge: EdgeId },
    #[error("path ends do not match the requested vertex set")]
    Endpoints,
}

impl PathPairing {
    /// Checks edge-disjointness, simplicity and the endpoint set.
    pub fn validate(&self, g: &Multigraph, u_set: &[VertexId]) -> Result<(), PairingViolation> {
        let mut used = vec![false; g.edge_count()];
        let mut ends = Vec::new();
        for (i, p) in self.paths.iter().enumerate() {
            if p.vertices.len() != p.edges.len() + 1 || p.edges.is_empty() {
                return Err(PairingViolation::Broken { path: i });
            }
            for (k, &e) in p.edges.iter().enumerate() {
                if e >= g.edge_count() {
                    return Err(PairingViolation::Broken { path: i });
                }
                let (a, b) = g.endpoints(e);
                let (x, y) = (p.vertices[k], p.vertices[k + 1]);
                if !((a, b) == (x, y) || (a, b) == (y, x)) {
                    return Err(PairingViolation::Broken { path: i });
                }
                if used[e] {
                    return Err(PairingViolation::SharedEdge { edge: e });
                }
                used[e] = true;
            }
            let mut vs = p.vertices.clone();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != p.vertices.len() {
                return Err(PairingViolation::NotSimple { path: i });
            }
            ends.push(p.start());
            ends.push(p.end());
        }
        ends.sort_unstable();
        let mut want = u_set.to_vec();
        want.sort_unstable();
        if ends != want {
            return Err(PairingViolation::Endpoints);
        }
        Ok(())
    }
}

/// Pairs the vertices of `u_set` by edge-disjoint, vertex-simple paths.
///
/// The sorted vertices are paired consecutively and the fundamental paths
/// of a breadth-first spanning tree are added modulo 2. The resulting
/// forest has odd-degree set exactly `u_set`; paths are then peeled off it
/// from a leaf to the nearest other vertex of odd degree, which keeps the
/// remaining odd set equal to the still unpaired vertices. The pairing is
/// whatever this peeling produces.
pub fn pair_paths(g: &Multigraph, u_set: &[VertexId]) -> Result<PathPairing, PairingError> {
    let mut sorted = u_set.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(PairingError::Duplicate(w[0]));
        }
    }
    if let Some(&v) = sorted.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(PairingError::OutOfRange(v));
    }
    if sorted.len() % 2 == 1 {
        return Err(PairingError::OddCount(sorted.len()));
    }
    if sorted.is_empty() {
        return Ok(PathPairing { paths: Vec::new() });
    }
    let tree = SpanningTree::bfs(g, 0).map_err(|_| PairingError::Disconnected)?;

    let mut in_forest = vec![false; g.edge_count()];
    for pair in sorted.chunks(2) {
        for e in tree.path_edges(pair[0], pair[1]) {
            in_forest[e] ^= true;
        }
    }
    let mut degree = vec![0usize; g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if in_forest[e] {
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    let mut unpaired = vec![false; g.vertex_count()];
    for &v in &sorted {
        unpaired[v] = true;
    }
    debug_assert!((0..g.vertex_count()).all(|v| unpaired[v] == (degree[v] % 2 == 1)));

    let mut paths = Vec::with_capacity(sorted.len() / 2);
    while let Some(leaf) = sorted.iter().copied().find(|&v| unpaired[v] && degree[v] == 1) {
        let path = nearest_odd(g, &in_forest, &unpaired, leaf);
        for &e in &path.edges {
            in_forest[e] = false;
            let (a, b) = g.endpoints(e);
            degree[a] -= 1;
            degree[b] -= 1;
        }
        unpaired[path.start()] = false;
        unpaired[path.end()] = false;
        paths.push(path);
    }
    debug_assert!(!unpaired.iter().any(|&u| u));
    Ok(PathPairing { paths })
}

fn nearest_odd(g: &Multigraph, in_forest: &[bool], unpaired: &[bool], from: VertexId) -> Path {
    let mut via: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    let mut target = None;
    while let Some(v) = queue.pop_front() {
        if v != from && unpaired[v] {
            target = Some(v);
            break;
        }
        for &e in g.incident(v) {
            if !in_forest[e] {
                continue;
            }
            let w = g.opposite(e, v);
            if !seen[w] {
                seen[w] = true;
                via[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    let target = target.expect("every forest component has an even number of odd vertices");
    let mut vertices = vec![target];
    let mut edges = Vec::new();
    let mut v = target;
    while let Some(e) = via[v] {
        edges.push(e);
        v = g.opposite(e, v);
        vertices.push(v);
    }
    vertices.reverse();
    edges.reverse();
    Path { vertices, edges }
}
