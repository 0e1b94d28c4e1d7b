//! Cycle-cubic trees: vertex-disjoint cycles and cubic graphs joined by
//! connector edges into a tree, where a member has odd tree degree exactly
//! when it is an odd cycle.

use std::fmt;

use thiserror::Error;

use crate::factor::{CycleWalk, FactorComponent, FactorDecomposition, Parity};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::tjoin::{Quotient, TJoinResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MemberKind {
    OddCycle,
    EvenCycle,
    Cubic,
}

impl MemberKind {
    pub fn is_cycle(self) -> bool {
        self != MemberKind::Cubic
    }

    pub fn cycle_of_len(len: usize) -> Self {
        match Parity::of_len(len) {
            Parity::Odd => MemberKind::OddCycle,
            Parity::Even => MemberKind::EvenCycle,
        }
    }
}

/// One member of a cycle-cubic tree. For cycles, `vertices` and `edges`
/// follow the cycle (`edges[i]` joins `vertices[i]` and the next vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub kind: MemberKind,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Member {
    pub fn cycle(walk: CycleWalk) -> Self {
        Member {
            kind: MemberKind::cycle_of_len(walk.len()),
            vertices: walk.vertices,
            edges: walk.edges,
        }
    }

    pub fn cubic(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        Member {
            kind: MemberKind::Cubic,
            vertices,
            edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCubicTree {
    /// The tree as a graph of its own; members and connectors use its ids.
    pub graph: Multigraph,
    pub members: Vec<Member>,
    pub connectors: Vec<EdgeId>,
    /// Member indices joined by each connector, aligned with `connectors`.
    /// `usize::MAX` marks an endpoint outside every member.
    pub quotient_tree: Vec<(usize, usize)>,
    /// Host vertex and edge of every local vertex and edge.
    pub vertex_origin: Vec<VertexId>,
    pub edge_origin: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeViolation {
    #[error("(a) vertex {vertex} lies in member {member} and an earlier member")]
    MembersOverlap { member: usize, vertex: VertexId },
    #[error("(a) vertex {vertex} is in no member")]
    Uncovered { vertex: VertexId },
    #[error("(a) member {member} is not a {kind:?}")]
    MemberShape { member: usize, kind: MemberKind },
    #[error("(a) edge {edge} is neither a member edge nor a connector between members")]
    StrayEdge { edge: EdgeId },
    #[error("(b) contracting the members does not give a tree")]
    NotATree,
    #[error("(c) member {member} ({kind:?}) has tree degree {degree}")]
    DegreeParity {
        member: usize,
        kind: MemberKind,
        degree: usize,
    },
    #[error("vertex {vertex} has degree {degree} > 5")]
    MaxDegree { vertex: VertexId, degree: usize },
}

/// Which condition of the cycle-cubic tree definition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    Partition,
    Tree,
    Parity,
    MaxDegree,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::Partition => "a",
            Clause::Tree => "b",
            Clause::Parity => "c",
            Clause::MaxDegree => "max-degree",
        };
        f.write_str(s)
    }
}

impl TreeViolation {
    pub fn clause(&self) -> Clause {
        match self {
            TreeViolation::MembersOverlap { .. }
            | TreeViolation::Uncovered { .. }
            | TreeViolation::MemberShape { .. }
            | TreeViolation::StrayEdge { .. } => Clause::Partition,
            TreeViolation::NotATree => Clause::Tree,
            TreeViolation::DegreeParity { .. } => Clause::Parity,
            TreeViolation::MaxDegree { .. } => Clause::MaxDegree,
        }
    }
}

impl CycleCubicTree {
    /// A tree whose connectors are all edges outside the members, with
    /// identity origin maps.
    pub fn new(graph: Multigraph, members: Vec<Member>) -> Self {
        let mut in_member = vec![false; graph.edge_count()];
        for m in &members {
            for &e in &m.edges {
                if e < in_member.len() {
                    in_member[e] = true;
                }
            }
        }
        let connectors = (0..graph.edge_count()).filter(|&e| !in_member[e]).collect();
        let vertex_origin = (0..graph.vertex_count()).collect();
        let edge_origin = (0..graph.edge_count()).collect();
        Self::with_origins(graph, members, connectors, vertex_origin, edge_origin)
    }

    fn with_origins(
        graph: Multigraph,
        members: Vec<Member>,
        connectors: Vec<EdgeId>,
        vertex_origin: Vec<VertexId>,
        edge_origin: Vec<EdgeId>,
    ) -> Self {
        let mut member_of = vec![usize::MAX; graph.vertex_count()];
        for (i, m) in members.iter().enumerate() {
            for &v in &m.vertices {
                if v < member_of.len() && member_of[v] == usize::MAX {
                    member_of[v] = i;
                }
            }
        }
        let quotient_tree = connectors
            .iter()
            .map(|&e| {
                let (a, b) = graph.endpoints(e);
                (member_of[a], member_of[b])
            })
            .collect();
        CycleCubicTree {
            graph,
            members,
            connectors,
            quotient_tree,
            vertex_origin,
            edge_origin,
        }
    }

    pub fn member_count(&self) -> usize {
        self.members.len()
    }

    /// Degree of every member in the quotient tree.
    pub fn member_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.members.len()];
        for &(a, b) in &self.quotient_tree {
            for m in [a, b] {
                if m < deg.len() {
                    deg[m] += 1;
                }
            }
        }
        deg
    }

    pub fn validate(&self) -> Result<(), TreeViolation> {
        let g = &self.graph;
        let n = g.vertex_count();

        // (a) members partition the vertices and have the claimed shape
        let mut member_of = vec![usize::MAX; n];
        for (i, m) in self.members.iter().enumerate() {
            for &v in &m.vertices {
                if v >= n {
                    return Err(TreeViolation::MemberShape {
                        member: i,
                        kind: m.kind,
                    });
                }
                if member_of[v] != usize::MAX {
                    return Err(TreeViolation::MembersOverlap { member: i, vertex: v });
                }
                member_of[v] = i;
            }
        }
        if let Some(vertex) = member_of.iter().position(|&m| m == usize::MAX) {
            return Err(TreeViolation::Uncovered { vertex });
        }
        let mut owner = vec![None; g.edge_count()];
        for (i, m) in self.members.iter().enumerate() {
            for &e in &m.edges {
                if e >= g.edge_count() || owner[e].is_some() {
                    return Err(TreeViolation::MemberShape {
                        member: i,
                        kind: m.kind,
                    });
                }
                owner[e] = Some(i);
            }
            if !self.member_has_shape(m, &member_of, i) {
                return Err(TreeViolation::MemberShape {
                    member: i,
                    kind: m.kind,
                });
            }
        }
        let mut is_connector = vec![false; g.edge_count()];
        for &e in &self.connectors {
            if e >= g.edge_count() || owner[e].is_some() || is_connector[e] {
                return Err(TreeViolation::StrayEdge { edge: e });
            }
            let (a, b) = g.endpoints(e);
            if member_of[a] == member_of[b] {
                return Err(TreeViolation::StrayEdge { edge: e });
            }
            is_connector[e] = true;
        }
        if let Some(edge) = (0..g.edge_count()).find(|&e| owner[e].is_none() && !is_connector[e]) {
            return Err(TreeViolation::StrayEdge { edge });
        }

        // (b) the quotient is a tree
        let t = self.members.len();
        if self.connectors.len() + 1 != t {
            return Err(TreeViolation::NotATree);
        }
        let quotient = Multigraph::new(
            t,
            self.connectors
                .iter()
                .map(|&e| {
                    let (a, b) = g.endpoints(e);
                    (member_of[a], member_of[b])
                })
                .collect(),
        )
        .map_err(|_| TreeViolation::NotATree)?;
        if !quotient.is_connected() {
            return Err(TreeViolation::NotATree);
        }

        // (c) tree degree parity matches the member kind
        for (i, m) in self.members.iter().enumerate() {
            let degree = quotient.incident(i).len();
            let odd_kind = m.kind == MemberKind::OddCycle;
            if (degree % 2 == 1) != odd_kind {
                return Err(TreeViolation::DegreeParity {
                    member: i,
                    kind: m.kind,
                    degree,
                });
            }
        }

        for v in 0..n {
            let degree = g.incident(v).len();
            if degree > 5 {
                return Err(TreeViolation::MaxDegree { vertex: v, degree });
            }
        }
        Ok(())
    }

    fn member_has_shape(&self, m: &Member, member_of: &[usize], index: usize) -> bool {
        let g = &self.graph;
        if m.vertices.is_empty()
            || m.edges.iter().any(|&e| {
                let (a, b) = g.endpoints(e);
                member_of[a] != index || member_of[b] != index
            })
        {
            return false;
        }
        match m.kind {
            MemberKind::OddCycle | MemberKind::EvenCycle => {
                let walk = CycleWalk {
                    vertices: m.vertices.clone(),
                    edges: m.edges.clone(),
                };
                walk.is_cycle_in(g) && MemberKind::cycle_of_len(walk.len()) == m.kind
            }
            MemberKind::Cubic => {
                let sub = g.edge_subgraph(&m.edges);
                let regular = m.vertices.iter().all(|&v| sub.graph.incident(v).len() == 3);
                let mut local = m.vertices.clone();
                local.sort_unstable();
                let induced = sub.graph.induced(&local);
                regular && induced.graph.edge_count() == m.edges.len() && induced.graph.is_connected()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssembleError {
    #[error("assembled tree {tree} is invalid: {violation}")]
    InvalidTree { tree: usize, violation: TreeViolation },
}

/// Groups the factor components along the lifted T-join into cycle-cubic
/// trees. Components the join does not touch become single-member trees.
/// Trees are ordered by their smallest factor component.
pub fn assemble(
    g: &Multigraph,
    h: &FactorDecomposition,
    quotient: &Quotient,
    join: &TJoinResult,
) -> Result<Vec<CycleCubicTree>, AssembleError> {
    let comps = h.components();
    let lifted = quotient.lift(join);
    let block_of = |v: VertexId| quotient.partition.block_of(v);

    let forest = Multigraph::new(
        comps.len(),
        lifted
            .iter()
            .map(|&e| {
                let (a, b) = g.endpoints(e);
                (block_of(a), block_of(b))
            })
            .filter(|&(a, b)| a != b)
            .collect(),
    )
    .expect("blocks are distinct");
    let groups = forest.components();

    let mut trees = Vec::with_capacity(groups.len());
    for (index, group) in groups.iter().enumerate() {
        let mut vertex_origin = Vec::new();
        let mut edge_origin = Vec::new();
        let mut local_vertex = vec![usize::MAX; g.vertex_count()];
        for &b in group {
            for &v in comps[b].vertices() {
                local_vertex[v] = vertex_origin.len();
                vertex_origin.push(v);
            }
        }
        let mut local_edges = Vec::new();
        let mut members = Vec::with_capacity(group.len());
        for &b in group {
            let mut member_edges = Vec::new();
            for &e in comps[b].edges() {
                let (x, y) = g.endpoints(e);
                member_edges.push(local_edges.len());
                local_edges.push((local_vertex[x], local_vertex[y]));
                edge_origin.push(e);
            }
            let vertices = comps[b].vertices().iter().map(|&v| local_vertex[v]).collect();
            members.push(match comps[b] {
                FactorComponent::Cycle(_) => Member::cycle(CycleWalk {
                    vertices,
                    edges: member_edges,
                }),
                FactorComponent::Cubic(_) => Member::cubic(vertices, member_edges),
            });
        }
        let mut connectors = Vec::new();
        for &e in &lifted {
            let (x, y) = g.endpoints(e);
            if local_vertex[x] != usize::MAX && local_vertex[y] != usize::MAX {
                connectors.push(local_edges.len());
                local_edges.push((local_vertex[x], local_vertex[y]));
                edge_origin.push(e);
            }
        }
        let graph = Multigraph::new(vertex_origin.len(), local_edges)
            .expect("host graph is loopless");
        let tree =
            CycleCubicTree::with_origins(graph, members, connectors, vertex_origin, edge_origin);
        tree.validate()
            .map_err(|violation| AssembleError::InvalidTree { tree: index, violation })?;
        trees.push(tree);
    }
    Ok(trees)
}
