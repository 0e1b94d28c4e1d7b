//! The quotient `G/H` and acyclic T-joins in it.

use thiserror::Error;

use crate::factor::FactorDecomposition;
use crate::graph::{EdgeId, GraphError, Multigraph, SpanningTree, VertexId, VertexPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TJoinError {
    #[error("factor does not span the graph: {0}")]
    NotSpanning(GraphError),
    #[error("terminal set has odd size {0}")]
    OddTerminalCount(usize),
    #[error("terminal {0} is not a vertex of the quotient")]
    TerminalOutOfRange(VertexId),
    #[error("quotient graph is not connected")]
    Disconnected,
}

/// `G/H` together with the source edge of every quotient edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Multigraph,
    /// Block `i` is the `i`-th component of `H` in smallest-vertex order.
    pub partition: VertexPartition,
    pub edge_origin: Vec<EdgeId>,
}

impl Quotient {
    pub fn lift(&self, join: &TJoinResult) -> Vec<EdgeId> {
        let mut lifted: Vec<EdgeId> = join.join_edges.iter().map(|&e| self.edge_origin[e]).collect();
        lifted.sort_unstable();
        lifted
    }
}

pub fn build_quotient(g: &Multigraph, h: &FactorDecomposition) -> Result<Quotient, TJoinError> {
    let blocks: Vec<Vec<VertexId>> = h.components().iter().map(|c| c.vertices().to_vec()).collect();
    let partition =
        VertexPartition::from_blocks(g.vertex_count(), &blocks).map_err(TJoinError::NotSpanning)?;
    let contraction = g.contract(&partition).map_err(TJoinError::NotSpanning)?;
    Ok(Quotient {
        graph: contraction.graph,
        partition,
        edge_origin: contraction.edge_origin,
    })
}

/// A T-join: terminals and the quotient edges of the join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TJoinResult {
    pub terminals: Vec<VertexId>,
    pub join_edges: Vec<EdgeId>,
}

/// A T-join of `q` that is a forest.
///
/// Terminals are paired in sorted order and the fundamental paths of the
/// pairs in a breadth-first spanning tree (rooted at vertex 0) are added
/// modulo 2. The result lies inside the tree, so it is acyclic.
pub fn acyclic_tjoin(q: &Multigraph, terminals: &[VertexId]) -> Result<TJoinResult, TJoinError> {
    let mut sorted = terminals.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&t) = sorted.iter().find(|&&t| t >= q.vertex_count()) {
        return Err(TJoinError::TerminalOutOfRange(t));
    }
    if sorted.len() % 2 == 1 {
        return Err(TJoinError::OddTerminalCount(sorted.len()));
    }
    if sorted.is_empty() {
        return Ok(TJoinResult {
            terminals: sorted,
            join_edges: Vec::new(),
        });
    }
    let tree = SpanningTree::bfs(q, 0).map_err(|_| TJoinError::Disconnected)?;
    let mut in_join = vec![false; q.edge_count()];
    for pair in sorted.chunks(2) {
        for e in tree.path_edges(pair[0], pair[1]) {
            in_join[e] ^= true;
        }
    }
    Ok(TJoinResult {
        terminals: sorted,
        join_edges: (0..q.edge_count()).filter(|&e| in_join[e]).collect(),
    })
}
