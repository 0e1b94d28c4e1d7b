//! The recursive labeler for unions of cycle-cubic trees.
//!
//! A `Piece` is the working form of a (union of) cycle-cubic trees inside
//! the recursion. Unlike the public tree type it may contain loops: a loop
//! is a cycle of length one, counts twice toward the degree of its vertex
//! and contributes twice its value to the vertex sum.
//!
//! Every reduction builds one smaller piece, labels it recursively and
//! translates the labels back:
//!
//! * shrink: an odd leaf cycle hangs off a degree-3 vertex of a cycle;
//!   that vertex is cut out of its cycle and its two neighbours joined.
//! * cubic gadget: an odd leaf cycle hangs off a cubic member with one
//!   external edge at the attachment vertex; the cubic member is replaced
//!   by one even cycle per path of a pairing of its single-external
//!   vertices and one 4-cycle per double-external vertex.
//! * cut vertex: the attachment vertex has two or more external edges; the
//!   leaf side is split off and, after the forced shrink at the 4-cycle
//!   replacing the attachment vertex, is represented by a fresh triangle.

use super::paths::pair_paths;
use super::{LabelError, LabelStats, CYCLE_VALUES};
use crate::graph::{EdgeId, Multigraph, VertexId};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Shape {
    Cycle,
    Cubic,
}

#[derive(Debug, Clone)]
pub(crate) struct PieceMember {
    pub(crate) shape: Shape,
    pub(crate) vertices: Vec<VertexId>,
}

#[derive(Debug, Clone)]
pub(crate) struct Piece {
    pub(crate) vertex_count: usize,
    pub(crate) edges: Vec<(VertexId, VertexId)>,
    /// Owning member of each edge; `None` for connectors.
    pub(crate) owner: Vec<Option<usize>>,
    pub(crate) members: Vec<PieceMember>,
}

struct View<'p> {
    piece: &'p Piece,
    incidence: Vec<Vec<EdgeId>>,
    member_of: Vec<usize>,
}

impl<'p> View<'p> {
    fn new(piece: &'p Piece) -> Self {
        let mut incidence = vec![Vec::new(); piece.vertex_count];
        for (e, &(a, b)) in piece.edges.iter().enumerate() {
            incidence[a].push(e);
            incidence[b].push(e);
        }
        let mut member_of = vec![NONE; piece.vertex_count];
        for (i, m) in piece.members.iter().enumerate() {
            for &v in &m.vertices {
                member_of[v] = i;
            }
        }
        View {
            piece,
            incidence,
            member_of,
        }
    }

    fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.piece.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn connectors_at(&self, v: VertexId) -> Vec<EdgeId> {
        self.incidence[v]
            .iter()
            .copied()
            .filter(|&e| self.piece.owner[e].is_none())
            .collect()
    }

    fn member_edges_at(&self, v: VertexId) -> Vec<EdgeId> {
        self.incidence[v]
            .iter()
            .copied()
            .filter(|&e| self.piece.owner[e].is_some())
            .collect()
    }

    fn member_edges(&self, m: usize) -> Vec<EdgeId> {
        (0..self.piece.edges.len())
            .filter(|&e| self.piece.owner[e] == Some(m))
            .collect()
    }

    /// Edges of cycle member `m` in walking order, starting at `start`
    /// along its smallest member edge.
    fn walk_cycle(&self, m: usize, start: VertexId) -> Vec<EdgeId> {
        let len = self.piece.members[m].vertices.len();
        let mut out = Vec::with_capacity(len);
        let mut v = start;
        let mut e = *self.member_edges_at(start).iter().min().expect("cycle vertex");
        for _ in 0..len {
            out.push(e);
            let w = self.opposite(e, v);
            let at = self.member_edges_at(w);
            let next = if at[0] == e { at[1] } else { at[0] };
            v = w;
            e = next;
        }
        out
    }

    fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.piece.vertex_count;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &e in &self.incidence[v] {
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

    fn member_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.piece.members.len()];
        for (e, &(a, b)) in self.piece.edges.iter().enumerate() {
            if self.piece.owner[e].is_none() {
                deg[self.member_of[a]] += 1;
                deg[self.member_of[b]] += 1;
            }
        }
        deg
    }
}

/// Builds a child piece out of parts of a parent piece.
struct Child {
    piece: Piece,
    vertex_map: Vec<usize>,
    edge_map: Vec<usize>,
}

impl Child {
    /// Copies the kept vertices, edges and members. A kept member keeps only
    /// its kept vertices; a kept edge must have kept endpoints.
    fn restrict(
        parent: &Piece,
        keep_vertex: impl Fn(VertexId) -> bool,
        keep_edge: impl Fn(EdgeId) -> bool,
        keep_member: impl Fn(usize) -> bool,
    ) -> Self {
        let mut vertex_map = vec![NONE; parent.vertex_count];
        let mut count = 0;
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            if keep_vertex(v) {
                *slot = count;
                count += 1;
            }
        }
        let mut member_map = vec![NONE; parent.members.len()];
        let mut members = Vec::new();
        for (i, m) in parent.members.iter().enumerate() {
            if keep_member(i) {
                member_map[i] = members.len();
                members.push(PieceMember {
                    shape: m.shape,
                    vertices: m
                        .vertices
                        .iter()
                        .filter(|&&v| vertex_map[v] != NONE)
                        .map(|&v| vertex_map[v])
                        .collect(),
                });
            }
        }
        let mut edge_map = vec![NONE; parent.edges.len()];
        let mut edges = Vec::new();
        let mut owner = Vec::new();
        for (e, &(a, b)) in parent.edges.iter().enumerate() {
            if keep_edge(e) {
                debug_assert!(vertex_map[a] != NONE && vertex_map[b] != NONE);
                edge_map[e] = edges.len();
                edges.push((vertex_map[a], vertex_map[b]));
                owner.push(parent.owner[e].map(|m| member_map[m]));
            }
        }
        Child {
            piece: Piece {
                vertex_count: count,
                edges,
                owner,
                members,
            },
            vertex_map,
            edge_map,
        }
    }

    fn add_vertex(&mut self) -> VertexId {
        self.piece.vertex_count += 1;
        self.piece.vertex_count - 1
    }

    fn add_edge(&mut self, a: VertexId, b: VertexId, owner: Option<usize>) -> EdgeId {
        self.piece.edges.push((a, b));
        self.piece.owner.push(owner);
        self.piece.edges.len() - 1
    }

    /// Adds an edge at child index `slot`, shifting later edges up by one.
    fn insert_edge(&mut self, slot: usize, a: VertexId, b: VertexId, owner: Option<usize>) -> EdgeId {
        self.piece.edges.insert(slot, (a, b));
        self.piece.owner.insert(slot, owner);
        for c in self.edge_map.iter_mut() {
            if *c != NONE && *c >= slot {
                *c += 1;
            }
        }
        slot
    }

    /// Adds a cycle member through `vertices` (in order) and returns its
    /// edges in the same order.
    fn add_cycle(&mut self, vertices: &[VertexId]) -> Vec<EdgeId> {
        let m = self.piece.members.len();
        self.piece.members.push(PieceMember {
            shape: Shape::Cycle,
            vertices: vertices.to_vec(),
        });
        (0..vertices.len())
            .map(|i| self.add_edge(vertices[i], vertices[(i + 1) % vertices.len()], Some(m)))
            .collect()
    }

    /// Copies every mapped edge value of the labeled child into `values`.
    fn pull_back(&self, child_values: &[i32], values: &mut [i32]) {
        for (e, &c) in self.edge_map.iter().enumerate() {
            if c != NONE {
                values[e] = child_values[c];
            }
        }
    }
}

pub(crate) struct Labeler {
    pub(crate) stats: LabelStats,
    depth_limit: usize,
}

impl Labeler {
    pub(crate) fn new(depth_limit: usize) -> Self {
        Labeler {
            stats: LabelStats::default(),
            depth_limit,
        }
    }

    pub(crate) fn label(&mut self, piece: &Piece, depth: usize) -> Result<Vec<i32>, LabelError> {
        if depth > self.depth_limit {
            return Err(LabelError::RecursionLimit {
                limit: self.depth_limit,
            });
        }
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let view = View::new(piece);
        if piece.members.is_empty() {
            return Ok(Vec::new());
        }
        let comps = view.components();
        if comps.len() > 1 {
            return self.label_components(piece, &comps, depth);
        }
        if piece.members.len() == 1 {
            return self.label_base(&view);
        }

        let degrees = view.member_degrees();
        let leaf = (0..piece.members.len())
            .find(|&m| degrees[m] == 1)
            .ok_or(LabelError::Malformed("no leaf member"))?;
        if piece.members[leaf].shape != Shape::Cycle || piece.members[leaf].vertices.len() % 2 == 0 {
            return Err(LabelError::Malformed("leaf member is not an odd cycle"));
        }
        let leaf_connector = piece.members[leaf]
            .vertices
            .iter()
            .flat_map(|&v| view.connectors_at(v))
            .next()
            .expect("leaf has one connector");
        let (a, b) = piece.edges[leaf_connector];
        let (v1, u1) = if view.member_of[a] == leaf { (a, b) } else { (b, a) };
        let host = view.member_of[u1];
        let external = view.connectors_at(u1).len();

        match (external, piece.members[host].shape) {
            (1, Shape::Cycle) => self.shrink_cycle(&view, leaf, leaf_connector, v1, u1, host, depth),
            (1, Shape::Cubic) => self.cubic_gadget(&view, host, depth),
            _ => self.split_cut_vertex(&view, leaf, leaf_connector, v1, u1, depth),
        }
    }

    fn label_components(
        &mut self,
        piece: &Piece,
        comps: &[Vec<VertexId>],
        depth: usize,
    ) -> Result<Vec<i32>, LabelError> {
        let mut values = vec![0; piece.edges.len()];
        let mut comp_of = vec![NONE; piece.vertex_count];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        for i in 0..comps.len() {
            let child = Child::restrict(
                piece,
                |v| comp_of[v] == i,
                |e| comp_of[piece.edges[e].0] == i,
                |m| comp_of[piece.members[m].vertices[0]] == i,
            );
            let child_values = self.label(&child.piece, depth + 1)?;
            child.pull_back(&child_values, &mut values);
        }
        Ok(values)
    }

    fn label_base(&mut self, view: &View<'_>) -> Result<Vec<i32>, LabelError> {
        let piece = view.piece;
        let member = &piece.members[0];
        let mut values = vec![0; piece.edges.len()];
        match member.shape {
            Shape::Cubic => {
                self.stats.base_cubic += 1;
                values.iter_mut().for_each(|x| *x = 2);
            }
            Shape::Cycle => {
                if member.vertices.len() % 2 == 1 {
                    return Err(LabelError::Malformed("single member is an odd cycle"));
                }
                self.stats.base_even_cycle += 1;
                let lowest = view.member_edges(0)[0];
                let (start, _) = piece.edges[lowest];
                let walk = view.walk_cycle(0, start);
                debug_assert_eq!(walk[0], lowest);
                for (e, x) in walk.into_iter().zip(alternate(CYCLE_VALUES[0])) {
                    values[e] = x;
                }
            }
        }
        Ok(values)
    }

    /// Odd leaf cycle `leaf` hangs at `v1` off vertex `u1` of cycle `host`,
    /// and `u1` has no other external edge.
    #[allow(clippy::too_many_arguments)]
    fn shrink_cycle(
        &mut self,
        view: &View<'_>,
        leaf: usize,
        leaf_connector: EdgeId,
        v1: VertexId,
        u1: VertexId,
        host: usize,
        depth: usize,
    ) -> Result<Vec<i32>, LabelError> {
        let piece = view.piece;
        let mut values = vec![0; piece.edges.len()];
        let at_u1 = view.member_edges_at(u1);

        let a = if piece.members[host].vertices.len() == 1 {
            // host is a loop whose only connector is this one: nothing is left
            // after removing both members, so the loop value is free.
            self.stats.loop_pair += 1;
            CYCLE_VALUES[0]
        } else {
            self.stats.shrink_cycle += 1;
            let u11 = view.opposite(at_u1[0], u1);
            let u12 = view.opposite(at_u1[1], u1);
            let dropped = |v: VertexId| v == u1 || view.member_of[v] == leaf;
            let mut child = Child::restrict(
                piece,
                |v| !dropped(v),
                |e| {
                    let (x, y) = piece.edges[e];
                    !dropped(x) && !dropped(y)
                },
                |m| m != leaf,
            );
            let host_child = child.piece.members.iter().position(|m| {
                m.vertices.contains(&child.vertex_map[u11])
            });
            // the joined edge takes the place of the lower of the two edges it
            // replaces, so base-case alternation stays anchored the same way
            let slot = (0..*at_u1.iter().min().unwrap())
                .filter(|&e| child.edge_map[e] != NONE)
                .count();
            let joined = child.insert_edge(slot, child.vertex_map[u11], child.vertex_map[u12], host_child);
            let child_values = self.label(&child.piece, depth + 1)?;
            child.pull_back(&child_values, &mut values);
            child_values[joined]
        };

        for &e in &at_u1 {
            values[e] = a;
        }
        values[leaf_connector] = 6 - 2 * a;
        self.label_anchored(view, leaf, v1, a, &mut values);
        Ok(values)
    }

    /// Odd leaf cycle hangs off cubic member `host` at a vertex with one
    /// external edge.
    fn cubic_gadget(
        &mut self,
        view: &View<'_>,
        host: usize,
        depth: usize,
    ) -> Result<Vec<i32>, LabelError> {
        self.stats.cubic_gadget += 1;
        let piece = view.piece;
        let host_vertices = &piece.members[host].vertices;
        let host_edges = view.member_edges(host);

        let mut singles = Vec::new();
        let mut doubles = Vec::new();
        for &u in host_vertices {
            match view.connectors_at(u).len() {
                0 => {}
                1 => singles.push(u),
                2 => doubles.push(u),
                _ => return Err(LabelError::Malformed("cubic vertex with three external edges")),
            }
        }

        // the cubic member as a graph of its own
        let mut local = vec![NONE; piece.vertex_count];
        for (i, &v) in host_vertices.iter().enumerate() {
            local[v] = i;
        }
        let cubic = Multigraph::new(
            host_vertices.len(),
            host_edges
                .iter()
                .map(|&e| (local[piece.edges[e].0], local[piece.edges[e].1]))
                .collect(),
        )
        .map_err(|_| LabelError::Malformed("cubic member has a loop"))?;
        let local_singles: Vec<VertexId> = singles.iter().map(|&v| local[v]).collect();
        let pairing = pair_paths(&cubic, &local_singles)
            .map_err(|_| LabelError::Malformed("cubic member cannot pair its external vertices"))?;

        let keep: Vec<bool> = (0..piece.vertex_count)
            .map(|v| view.member_of[v] != host || !view.connectors_at(v).is_empty())
            .collect();
        let mut child = Child::restrict(
            piece,
            |v| keep[v],
            |e| piece.owner[e] != Some(host),
            |m| m != host,
        );

        // pair gadgets: an even cycle per path, with parity matching the path
        for path in &pairing.paths {
            let s = child.vertex_map[host_vertices[path.start()]];
            let t = child.vertex_map[host_vertices[path.end()]];
            if path.len() % 2 == 1 {
                child.add_cycle(&[s, t]);
            } else {
                let x = child.add_vertex();
                let y = child.add_vertex();
                child.add_cycle(&[s, x, t, y]);
            }
        }
        // split gadgets: the second external edge moves to a new vertex and
        // the two halves are joined by a 4-cycle
        for &u in &doubles {
            let moved = view.connectors_at(u)[1];
            let w = child.vertex_map[u];
            let z = child.add_vertex();
            let ce = child.edge_map[moved];
            let (a, b) = child.piece.edges[ce];
            child.piece.edges[ce] = if a == w { (z, b) } else { (a, z) };
            let x = child.add_vertex();
            let y = child.add_vertex();
            child.add_cycle(&[w, x, z, y]);
        }

        let child_values = self.label(&child.piece, depth + 1)?;
        let mut values = vec![0; piece.edges.len()];
        child.pull_back(&child_values, &mut values);

        for &e in &host_edges {
            values[e] = 2;
        }
        for path in &pairing.paths {
            let s = host_vertices[path.start()];
            let t = host_vertices[path.end()];
            let cs = values[view.connectors_at(s)[0]];
            let ct = values[view.connectors_at(t)[0]];
            if (path.len() % 2 == 1) != (cs == ct) {
                return Err(LabelError::Invariant("pair gadget parity link"));
            }
            let first = match cs {
                -2 => 1,
                -4 => 3,
                _ => return Err(LabelError::Invariant("connector value outside {-2,-4}")),
            };
            let mut x = first;
            for &le in &path.edges {
                values[host_edges[le]] = x;
                x = 4 - x;
            }
        }
        for &u in &doubles {
            let c = view.connectors_at(u);
            if values[c[0]] + values[c[1]] != -6 {
                return Err(LabelError::Invariant("split gadget connectors not -2 and -4"));
            }
        }
        Ok(values)
    }

    /// The attachment vertex `u1` of the odd leaf cycle has at least two
    /// external edges, so it separates the leaf and one further branch from
    /// the rest.
    fn split_cut_vertex(
        &mut self,
        view: &View<'_>,
        leaf: usize,
        leaf_connector: EdgeId,
        v1: VertexId,
        u1: VertexId,
        depth: usize,
    ) -> Result<Vec<i32>, LabelError> {
        self.stats.cut_vertex += 1;
        let piece = view.piece;
        let other = view
            .connectors_at(u1)
            .into_iter()
            .find(|&e| e != leaf_connector)
            .expect("at least two external edges");

        let mut child = Child::restrict(
            piece,
            |v| view.member_of[v] != leaf,
            |e| e != leaf_connector && piece.owner[e] != Some(leaf),
            |m| m != leaf,
        );
        // the branch through `other` is re-attached to a fresh triangle
        // z-y-w; y-w is the edge that replaced the shrunken 4-cycle vertex.
        let z = child.add_vertex();
        let y = child.add_vertex();
        let w = child.add_vertex();
        let triangle = child.add_cycle(&[z, y, w]);
        let joined = triangle[1];
        let ce = child.edge_map[other];
        let (a, b) = child.piece.edges[ce];
        let u1c = child.vertex_map[u1];
        child.piece.edges[ce] = if a == u1c { (z, b) } else { (a, z) };

        let child_values = self.label(&child.piece, depth + 1)?;
        let mut values = vec![0; piece.edges.len()];
        child.pull_back(&child_values, &mut values);

        let a = child_values[joined];
        values[leaf_connector] = 6 - 2 * a;
        if values[leaf_connector] + values[other] != -6 {
            return Err(LabelError::Invariant("cut vertex connectors not -2 and -4"));
        }
        self.label_anchored(view, leaf, v1, a, &mut values);
        Ok(values)
    }

    /// Alternating 4/5 labels around odd cycle `m`, both edges at `anchor`
    /// taking `a`.
    fn label_anchored(&self, view: &View<'_>, m: usize, anchor: VertexId, a: i32, values: &mut [i32]) {
        for (e, x) in view.walk_cycle(m, anchor).into_iter().zip(alternate(a)) {
            values[e] = x;
        }
    }
}

/// `first, 9 - first, first, ...`: alternation between 4 and 5.
pub(crate) fn alternate(first: i32) -> impl Iterator<Item = i32> {
    std::iter::successors(Some(first), |&x| Some(9 - x))
}

impl Piece {
    pub(crate) fn edge_count(&self) -> usize {
        self.edges.len()
    }
}
