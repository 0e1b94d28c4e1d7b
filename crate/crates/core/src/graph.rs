//! Loopless undirected multigraphs with stable edge identities.
//!
//! An edge is identified by its position in the edge list, so two parallel
//! edges between the same endpoints are distinct and can carry different
//! flow values. Loops are rejected by the public constructor; the labeling
//! recursion builds looped intermediate graphs through a crate-private
//! constructor.

use std::collections::VecDeque;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("partition covers {covered} vertices, graph has {vertex_count}")]
    PartitionSize { covered: usize, vertex_count: usize },
    #[error("block id {block} out of range (partition has {block_count} blocks)")]
    BlockOutOfRange { block: usize, block_count: usize },
    #[error("vertex {vertex} lies in both sides of the cut")]
    OverlappingSides { vertex: VertexId },
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    // A loop appears twice in the incidence list of its vertex.
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    /// Builds a loopless multigraph. Edge `i` of the result is `edges[i]`.
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        if let Some(edge) = edges.iter().position(|&(a, b)| a == b) {
            return Err(GraphError::Loop {
                edge,
                vertex: edges[edge].0,
            });
        }
        Self::with_loops(vertex_count, edges)
    }

    pub(crate) fn with_loops(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
            incidence[a].push(id);
            incidence[b].push(id);
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            incidence,
        })
    }

    /// Graph with no vertices and no edges.
    pub fn empty() -> Self {
        Multigraph {
            vertex_count: 0,
            edges: Vec::new(),
            incidence: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Edge endpoints at `v`, in increasing edge id. Loops occur twice.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.incidence.iter().all(|inc| inc.len() == d)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_of_edges(|_| true)
    }

    /// Components of the spanning subgraph whose edge set is `keep`.
    pub fn components_of_edges(&self, keep: impl Fn(EdgeId) -> bool) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &e in &self.incidence[v] {
                    if !keep(e) {
                        continue;
                    }
                    let w = self.opposite(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Contracts every block of `partition` to a single vertex.
    ///
    /// Edges inside a block become loops and are dropped; the count of
    /// dropped edges is part of the result. Surviving edges keep their
    /// relative order, so quotient edge `i` comes from `edge_origin[i]`.
    pub fn contract(&self, partition: &VertexPartition) -> Result<Contraction, GraphError> {
        if partition.block_of.len() != self.vertex_count {
            return Err(GraphError::PartitionSize {
                covered: partition.block_of.len(),
                vertex_count: self.vertex_count,
            });
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        let mut dropped_loops = 0;
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            let (ba, bb) = (partition.block_of[a], partition.block_of[b]);
            if ba == bb {
                dropped_loops += 1;
            } else {
                edges.push((ba, bb));
                edge_origin.push(id);
            }
        }
        let graph = Multigraph::new(partition.block_count, edges)?;
        Ok(Contraction {
            graph,
            edge_origin,
            dropped_loops,
        })
    }

    /// `E(X, Y)`: edges with one endpoint in each of two disjoint sets.
    pub fn edge_cut(&self, xs: &[VertexId], ys: &[VertexId]) -> Result<Vec<EdgeId>, GraphError> {
        let mut side = vec![0u8; self.vertex_count];
        for &x in xs {
            self.check_vertex(x)?;
            side[x] = 1;
        }
        for &y in ys {
            self.check_vertex(y)?;
            if side[y] == 1 {
                return Err(GraphError::OverlappingSides { vertex: y });
            }
            side[y] = 2;
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| side[a] != 0 && side[b] != 0 && side[a] != side[b])
            .map(|(id, _)| id)
            .collect())
    }

    /// Subgraph induced by `vertices` (in the given order) together with
    /// the original id of every kept edge.
    pub fn induced(&self, vertices: &[VertexId]) -> Subgraph {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                edges.push((local[a], local[b]));
                edge_origin.push(id);
            }
        }
        let graph = Multigraph::with_loops(vertices.len(), edges)
            .expect("induced subgraph endpoints are in range");
        Subgraph {
            graph,
            vertex_origin: vertices.to_vec(),
            edge_origin,
        }
    }

    /// Spanning subgraph on the listed edges (vertex ids unchanged).
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Subgraph {
        let graph = Multigraph::with_loops(
            self.vertex_count,
            edges.iter().map(|&e| self.edges[e]).collect(),
        )
        .expect("edge subgraph endpoints are in range");
        Subgraph {
            graph,
            vertex_origin: (0..self.vertex_count).collect(),
            edge_origin: edges.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Multigraph,
    pub vertex_origin: Vec<VertexId>,
    pub edge_origin: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Multigraph,
    /// Source edge of each quotient edge.
    pub edge_origin: Vec<EdgeId>,
    /// Number of source edges that fell inside a block.
    pub dropped_loops: usize,
}

/// Assignment of every vertex to one of `block_count` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    block_of: Vec<usize>,
    block_count: usize,
}

impl VertexPartition {
    pub fn new(block_of: Vec<usize>, block_count: usize) -> Result<Self, GraphError> {
        if let Some(&block) = block_of.iter().find(|&&b| b >= block_count) {
            return Err(GraphError::BlockOutOfRange { block, block_count });
        }
        Ok(VertexPartition {
            block_of,
            block_count,
        })
    }

    /// One block per listed vertex set; block `i` is `blocks[i]`.
    pub fn from_blocks(vertex_count: usize, blocks: &[Vec<VertexId>]) -> Result<Self, GraphError> {
        let mut block_of = vec![usize::MAX; vertex_count];
        let mut covered = 0;
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count });
                }
                if block_of[v] == usize::MAX {
                    covered += 1;
                }
                block_of[v] = i;
            }
        }
        if covered != vertex_count {
            return Err(GraphError::PartitionSize {
                covered,
                vertex_count,
            });
        }
        Ok(VertexPartition {
            block_of,
            block_count: blocks.len(),
        })
    }

    pub fn identity(vertex_count: usize) -> Self {
        VertexPartition {
            block_of: (0..vertex_count).collect(),
            block_count: vertex_count,
        }
    }

    pub fn block_of(&self, v: VertexId) -> usize {
        self.block_of[v]
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }
}

/// Breadth-first spanning tree of a connected graph.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    parent_edge: Vec<Option<EdgeId>>,
    parent: Vec<Option<VertexId>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    /// BFS from `root`, scanning incidences in edge-id order.
    pub fn bfs(g: &Multigraph, root: VertexId) -> Result<Self, GraphError> {
        let n = g.vertex_count();
        let mut parent_edge = vec![None; n];
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        if n == 0 {
            return Ok(SpanningTree {
                parent_edge,
                parent,
                depth,
            });
        }
        g.check_vertex(root)?;
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &e in g.incident(v) {
                let w = g.opposite(e, v);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    parent_edge[w] = Some(e);
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            return Err(GraphError::Disconnected);
        }
        Ok(SpanningTree {
            parent_edge,
            parent,
            depth,
        })
    }

    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.parent_edge.iter().flatten().copied()
    }

    /// Edges of the unique tree path between `u` and `v`.
    pub fn path_edges(&self, mut u: VertexId, mut v: VertexId) -> Vec<EdgeId> {
        let mut from_u = Vec::new();
        let mut from_v = Vec::new();
        while self.depth[u] > self.depth[v] {
            from_u.push(self.parent_edge[u].unwrap());
            u = self.parent[u].unwrap();
        }
        while self.depth[v] > self.depth[u] {
            from_v.push(self.parent_edge[v].unwrap());
            v = self.parent[v].unwrap();
        }
        while u != v {
            from_u.push(self.parent_edge[u].unwrap());
            u = self.parent[u].unwrap();
            from_v.push(self.parent_edge[v].unwrap());
            v = self.parent[v].unwrap();
        }
        from_v.reverse();
        from_u.extend(from_v);
        from_u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn two_triangles(joins: &[(VertexId, VertexId)]) -> Multigraph {
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        edges.extend_from_slice(joins);
        Multigraph::new(6, edges).unwrap()
    }

    #[test]
    fn degrees() {
        let g = triangle();
        assert!((0..3).all(|v| g.degree(v) == Ok(2)));
        let dumbbell = Multigraph::new(2, vec![(0, 1); 5]).unwrap();
        assert_eq!(dumbbell.degree(0), Ok(5));
        assert_eq!(dumbbell.degree(1), Ok(5));
        let looped = Multigraph::with_loops(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(looped.degree(0), Ok(3));
        assert!(matches!(g.degree(3), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(
            Multigraph::new(2, vec![(0, 1), (1, 1)]),
            Err(GraphError::Loop { edge: 1, vertex: 1 })
        );
    }

    #[test]
    fn component_listing() {
        assert_eq!(triangle().components(), vec![vec![0, 1, 2]]);
        assert_eq!(two_triangles(&[]).components().len(), 2);
        let empty = Multigraph::new(4, vec![]).unwrap();
        assert_eq!(empty.components(), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn contraction() {
        let blocks = [vec![0, 1, 2], vec![3, 4, 5]];
        let g = two_triangles(&[(2, 3)]);
        let p = VertexPartition::from_blocks(6, &blocks).unwrap();
        let c = g.contract(&p).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.graph.edges(), &[(0, 1)]);
        assert_eq!(c.edge_origin, vec![6]);
        assert_eq!(c.dropped_loops, 6);

        let g = two_triangles(&[(0, 3), (1, 4), (2, 5)]);
        let c = g.contract(&p).unwrap();
        assert_eq!(c.graph.edge_count(), 3);
        assert_eq!(c.graph.degree(0), Ok(3));
        assert_eq!(c.edge_origin, vec![6, 7, 8]);

        let c = g.contract(&VertexPartition::identity(6)).unwrap();
        assert_eq!(c.graph, g);
        assert_eq!(c.edge_origin, (0..9).collect::<Vec<_>>());
        assert_eq!(c.dropped_loops, 0);

        let short = VertexPartition::identity(5);
        assert!(matches!(g.contract(&short), Err(GraphError::PartitionSize { .. })));
        assert!(VertexPartition::from_blocks(6, &[vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn cuts() {
        let g = two_triangles(&[(2, 3)]);
        assert_eq!(g.edge_cut(&[0, 1, 2], &[3, 4, 5]), Ok(vec![6]));
        let c4 = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_cut(&[0, 1], &[2, 3]).unwrap().len(), 2);
        let apart = two_triangles(&[]);
        assert_eq!(apart.edge_cut(&[0, 1], &[3, 4]), Ok(vec![]));
        assert_eq!(
            c4.edge_cut(&[0, 1], &[1, 2]),
            Err(GraphError::OverlappingSides { vertex: 1 })
        );
    }

    #[test]
    fn tree_paths() {
        let path = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let tree = SpanningTree::bfs(&path, 0).unwrap();
        assert_eq!(tree.tree_edges().count(), 3);
        assert_eq!(tree.path_edges(1, 3), vec![0, 3]);
        assert_eq!(tree.path_edges(2, 2), Vec::<EdgeId>::new());
        assert!(SpanningTree::bfs(&two_triangles(&[]), 0).is_err());
    }
}
