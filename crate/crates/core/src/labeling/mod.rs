//! Edge labelings of cycle-cubic trees.
//!
//! The target of the labeler is the table in [`LabelTarget`]: cycle edges
//! take 4 or 5, cubic edges 1, 2 or 3, connectors -2 or -4, and the sum at
//! a vertex of degree `d` is `3 * (5 - d)`. Once every edge of a 5-regular
//! host outside the trees is given -3, every host vertex sums to zero.

mod paths;
mod piece;

use thiserror::Error;

use crate::cyclecubic::{CycleCubicTree, MemberKind, TreeViolation};
use crate::factor::CycleWalk;
use crate::graph::{EdgeId, Multigraph, VertexId};

pub use paths::{pair_paths, PairingError, PairingViolation, Path, PathPairing};
use piece::{alternate, Labeler, Piece, PieceMember, Shape};

pub(crate) const CYCLE_VALUES: [i32; 2] = [4, 5];
pub(crate) const CUBIC_VALUES: [i32; 3] = [1, 2, 3];
pub(crate) const CONNECTOR_VALUES: [i32; 2] = [-2, -4];

/// A value for every edge, none of them zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    values: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge {edge} has value 0")]
pub struct ZeroValue {
    pub edge: EdgeId,
}

impl EdgeLabeling {
    pub fn new(values: Vec<i32>) -> Result<Self, ZeroValue> {
        match values.iter().position(|&x| x == 0) {
            Some(edge) => Err(ZeroValue { edge }),
            None => Ok(EdgeLabeling { values }),
        }
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn get(&self, e: EdgeId) -> i32 {
        self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<i32> {
        self.values
    }
}

/// The value classes and vertex sums a cycle-cubic tree labeling must meet.
pub struct LabelTarget;

impl LabelTarget {
    pub const CYCLE: [i32; 2] = CYCLE_VALUES;
    pub const CUBIC: [i32; 3] = CUBIC_VALUES;
    pub const CONNECTOR: [i32; 2] = CONNECTOR_VALUES;

    /// Required sum at a vertex of degree 2..=5 (loops counted twice).
    pub fn vertex_sum(degree: usize) -> Option<i32> {
        (2..=5).contains(&degree).then(|| 3 * (5 - degree as i32))
    }

    pub fn allowed(kind: Option<MemberKind>) -> &'static [i32] {
        match kind {
            None => &CONNECTOR_VALUES,
            Some(MemberKind::Cubic) => &CUBIC_VALUES,
            Some(_) => &CYCLE_VALUES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelViolation {
    #[error("labeling has {got} values for {want} edges")]
    Length { got: usize, want: usize },
    #[error("edge {edge} has value {value} outside its class")]
    Value { edge: EdgeId, value: i32 },
    #[error("vertex {vertex} of degree {degree} sums to {sum}")]
    Sum {
        vertex: VertexId,
        degree: usize,
        sum: i32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("invalid cycle-cubic tree: {0}")]
    InvalidTree(#[from] TreeViolation),
    #[error("malformed piece: {0}")]
    Malformed(&'static str),
    #[error("identity failed while translating labels back: {0}")]
    Invariant(&'static str),
    #[error("recursion deeper than {limit}")]
    RecursionLimit { limit: usize },
    #[error("cycle of length {0} has the wrong parity")]
    CycleParity(usize),
    #[error("graph is not 3-regular")]
    NotCubic,
    #[error("produced labeling is wrong: {0}")]
    Check(#[from] LabelViolation),
}

/// How often each step of the recursion ran.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelStats {
    pub base_even_cycle: usize,
    pub base_cubic: usize,
    /// Odd leaf at a cycle vertex with one external edge.
    pub shrink_cycle: usize,
    /// Shrink where the host cycle had already become a loop.
    pub loop_pair: usize,
    /// Odd leaf at a cubic vertex with one external edge.
    pub cubic_gadget: usize,
    /// Attachment vertex with two or more external edges.
    pub cut_vertex: usize,
    pub max_depth: usize,
}

impl LabelStats {
    pub fn absorb(&mut self, other: &LabelStats) {
        self.base_even_cycle += other.base_even_cycle;
        self.base_cubic += other.base_cubic;
        self.shrink_cycle += other.shrink_cycle;
        self.loop_pair += other.loop_pair;
        self.cubic_gadget += other.cubic_gadget;
        self.cut_vertex += other.cut_vertex;
        self.max_depth = self.max_depth.max(other.max_depth);
    }
}

/// Alternating 4/5 labels along an even cycle, starting at its first edge.
/// Values are aligned with `c.edges`.
pub fn label_even_cycle(c: &CycleWalk, start_value: i32) -> Result<Vec<i32>, LabelError> {
    if c.is_empty() || c.len() % 2 == 1 {
        return Err(LabelError::CycleParity(c.len()));
    }
    if !CYCLE_VALUES.contains(&start_value) {
        return Err(LabelError::Malformed("start value must be 4 or 5"));
    }
    Ok(alternate(start_value).take(c.len()).collect())
}

/// Every edge of a cubic graph gets 2.
pub fn label_cubic(r: &Multigraph) -> Result<EdgeLabeling, LabelError> {
    if r.vertex_count() == 0 || !r.is_regular(3) {
        return Err(LabelError::NotCubic);
    }
    Ok(EdgeLabeling {
        values: vec![2; r.edge_count()],
    })
}

/// Alternating 4/5 labels around an odd cycle such that both edges at
/// `anchor` carry `anchor_value`. Values are aligned with `c.edges`.
pub fn label_odd_cycle_from_anchor(
    c: &CycleWalk,
    anchor: VertexId,
    anchor_value: i32,
) -> Result<Vec<i32>, LabelError> {
    if c.len() % 2 == 0 {
        return Err(LabelError::CycleParity(c.len()));
    }
    if !CYCLE_VALUES.contains(&anchor_value) {
        return Err(LabelError::Malformed("anchor value must be 4 or 5"));
    }
    let at = c
        .vertices
        .iter()
        .position(|&v| v == anchor)
        .ok_or(LabelError::Malformed("anchor is not on the cycle"))?;
    let len = c.len();
    let mut out = vec![0; len];
    for (step, x) in alternate(anchor_value).take(len).enumerate() {
        out[(at + step) % len] = x;
    }
    Ok(out)
}

/// Sum at `v` over the edges of `g`, loops counted twice.
fn vertex_sum(g: &Multigraph, values: &[i32], v: VertexId) -> i32 {
    g.incident(v).iter().map(|&e| values[e]).sum()
}

/// Checks the value classes and vertex sums of a tree labeling.
pub fn check_tree_labeling(t: &CycleCubicTree, f: &EdgeLabeling) -> Result<(), LabelViolation> {
    let g = &t.graph;
    if f.len() != g.edge_count() {
        return Err(LabelViolation::Length {
            got: f.len(),
            want: g.edge_count(),
        });
    }
    let mut kind = vec![None; g.edge_count()];
    for m in &t.members {
        for &e in &m.edges {
            kind[e] = Some(m.kind);
        }
    }
    for (e, &k) in kind.iter().enumerate() {
        if !LabelTarget::allowed(k).contains(&f.get(e)) {
            return Err(LabelViolation::Value {
                edge: e,
                value: f.get(e),
            });
        }
    }
    for v in 0..g.vertex_count() {
        let degree = g.incident(v).len();
        let sum = vertex_sum(g, f.values(), v);
        if LabelTarget::vertex_sum(degree) != Some(sum) {
            return Err(LabelViolation::Sum { vertex: v, degree, sum });
        }
    }
    Ok(())
}

pub fn label_cycle_cubic_tree(t: &CycleCubicTree) -> Result<EdgeLabeling, LabelError> {
    label_cycle_cubic_tree_with_stats(t).map(|(f, _)| f)
}

/// Labels a validated cycle-cubic tree and reports which recursion steps
/// were used. The result is checked against [`LabelTarget`] before it is
/// returned.
pub fn label_cycle_cubic_tree_with_stats(
    t: &CycleCubicTree,
) -> Result<(EdgeLabeling, LabelStats), LabelError> {
    t.validate()?;
    let piece = to_piece(t);
    let mut labeler = Labeler::new(4 * piece.edge_count() + 4);
    let values = labeler.label(&piece, 0)?;
    let f = EdgeLabeling::new(values).map_err(|_| LabelError::Invariant("edge left unlabeled"))?;
    check_tree_labeling(t, &f)?;
    Ok((f, labeler.stats))
}

fn to_piece(t: &CycleCubicTree) -> Piece {
    let mut owner = vec![None; t.graph.edge_count()];
    for (i, m) in t.members.iter().enumerate() {
        for &e in &m.edges {
            owner[e] = Some(i);
        }
    }
    Piece {
        vertex_count: t.graph.vertex_count(),
        edges: t.graph.edges().to_vec(),
        owner,
        members: t
            .members
            .iter()
            .map(|m| PieceMember {
                shape: if m.kind == MemberKind::Cubic {
                    Shape::Cubic
                } else {
                    Shape::Cycle
                },
                vertices: m.vertices.clone(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclecubic::Member;

    fn walk(vertices: Vec<usize>, edges: Vec<usize>) -> CycleWalk {
        CycleWalk { vertices, edges }
    }

    fn tree(n: usize, edges: Vec<(usize, usize)>, members: Vec<Member>) -> CycleCubicTree {
        CycleCubicTree::new(Multigraph::new(n, edges).unwrap(), members)
    }

    #[test]
    fn even_cycles() {
        let two = walk(vec![0, 1], vec![0, 1]);
        assert_eq!(label_even_cycle(&two, 4).unwrap(), vec![4, 5]);
        let c4 = walk(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
        assert_eq!(label_even_cycle(&c4, 4).unwrap(), vec![4, 5, 4, 5]);
        let c6 = walk((0..6).collect(), (0..6).collect());
        assert_eq!(label_even_cycle(&c6, 5).unwrap(), vec![5, 4, 5, 4, 5, 4]);
        let c3 = walk(vec![0, 1, 2], vec![0, 1, 2]);
        assert_eq!(label_even_cycle(&c3, 4), Err(LabelError::CycleParity(3)));
    }

    #[test]
    fn cubic_graphs() {
        let k4 = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(label_cubic(&k4).unwrap().values().iter().all(|&x| x == 2));
        let mut k33 = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                k33.push((a, b));
            }
        }
        let k33 = Multigraph::new(6, k33).unwrap();
        assert_eq!(label_cubic(&k33).unwrap().len(), 9);
        let prism = Multigraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        for v in 0..6 {
            assert_eq!(vertex_sum(&prism, label_cubic(&prism).unwrap().values(), v), 6);
        }
        let c4 = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(label_cubic(&c4), Err(LabelError::NotCubic));
    }

    #[test]
    fn anchored_odd_cycles() {
        let c3 = walk(vec![0, 1, 2], vec![0, 1, 2]);
        // edge 0 = 01, edge 1 = 12, edge 2 = 20; anchor 0 touches edges 0 and 2
        assert_eq!(label_odd_cycle_from_anchor(&c3, 0, 4).unwrap(), vec![4, 5, 4]);
        assert_eq!(label_odd_cycle_from_anchor(&c3, 1, 4).unwrap(), vec![4, 4, 5]);
        let c5 = walk((0..5).collect(), (0..5).collect());
        assert_eq!(label_odd_cycle_from_anchor(&c5, 0, 5).unwrap(), vec![5, 4, 5, 4, 5]);
        let looped = walk(vec![7], vec![0]);
        assert_eq!(label_odd_cycle_from_anchor(&looped, 7, 4).unwrap(), vec![4]);
        let c4 = walk(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
        assert_eq!(label_odd_cycle_from_anchor(&c4, 0, 4), Err(LabelError::CycleParity(4)));
    }

    #[test]
    fn bowtie_with_bridge() {
        let t = tree(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
            vec![
                Member::cycle(walk(vec![0, 1, 2], vec![0, 1, 2])),
                Member::cycle(walk(vec![3, 4, 5], vec![3, 4, 5])),
            ],
        );
        let (f, stats) = label_cycle_cubic_tree_with_stats(&t).unwrap();
        assert_eq!(f.get(6), -2);
        assert_eq!(f.values(), &[5, 4, 4, 4, 5, 4, -2]);
        assert_eq!(stats.shrink_cycle, 1);
        assert_eq!(stats.base_even_cycle, 1);
        assert_eq!(check_tree_labeling(&t, &f), Ok(()));
    }

    #[test]
    fn single_members() {
        let two = tree(2, vec![(0, 1), (0, 1)], vec![Member::cycle(walk(vec![0, 1], vec![0, 1]))]);
        assert_eq!(label_cycle_cubic_tree(&two).unwrap().values(), &[4, 5]);
        let k4 = tree(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            vec![Member::cubic(vec![0, 1, 2, 3], (0..6).collect())],
        );
        assert_eq!(label_cycle_cubic_tree(&k4).unwrap().values(), &[2; 6]);
    }

    #[test]
    fn triangle_on_two_cycle_uses_loop() {
        // triangle 0-1-2, bridge 2-3, 2-cycle 3-4, bridge 4-5, triangle 5-6-7
        let t = tree(
            8,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (3, 4), (5, 6), (6, 7), (7, 5), (2, 3), (4, 5)],
            vec![
                Member::cycle(walk(vec![0, 1, 2], vec![0, 1, 2])),
                Member::cycle(walk(vec![5, 6, 7], vec![5, 6, 7])),
                Member::cycle(walk(vec![3, 4], vec![3, 4])),
            ],
        );
        let (f, stats) = label_cycle_cubic_tree_with_stats(&t).unwrap();
        assert_eq!(check_tree_labeling(&t, &f), Ok(()));
        assert_eq!((stats.shrink_cycle, stats.loop_pair), (1, 1));
    }

    #[test]
    fn cubic_host_and_cut_vertex() {
        // K4 on 0..4 with triangles hanging off vertices 0 and 1
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(4, 5), (5, 6), (6, 4), (7, 8), (8, 9), (9, 7), (0, 4), (1, 7)]);
        let t = tree(
            10,
            edges.clone(),
            vec![
                Member::cubic(vec![0, 1, 2, 3], (0..6).collect()),
                Member::cycle(walk(vec![4, 5, 6], vec![6, 7, 8])),
                Member::cycle(walk(vec![7, 8, 9], vec![9, 10, 11])),
            ],
        );
        let (f, stats) = label_cycle_cubic_tree_with_stats(&t).unwrap();
        assert_eq!(check_tree_labeling(&t, &f), Ok(()));
        assert_eq!(stats.cubic_gadget, 1);

        // both triangles at vertex 0 of the K4
        let mut edges2 = edges;
        edges2[13] = (0, 7);
        let t = tree(
            10,
            edges2,
            vec![
                Member::cubic(vec![0, 1, 2, 3], (0..6).collect()),
                Member::cycle(walk(vec![4, 5, 6], vec![6, 7, 8])),
                Member::cycle(walk(vec![7, 8, 9], vec![9, 10, 11])),
            ],
        );
        let (f, stats) = label_cycle_cubic_tree_with_stats(&t).unwrap();
        assert_eq!(check_tree_labeling(&t, &f), Ok(()));
        assert_eq!(stats.cut_vertex, 1);
    }

    #[test]
    fn invalid_tree_rejected() {
        let t = tree(3, vec![(0, 1), (1, 2), (2, 0)], vec![Member::cycle(walk(vec![0, 1, 2], vec![0, 1, 2]))]);
        assert!(matches!(label_cycle_cubic_tree(&t), Err(LabelError::InvalidTree(_))));
    }

    #[test]
    fn checker_rejects_bad_labels() {
        let t = tree(2, vec![(0, 1), (0, 1)], vec![Member::cycle(walk(vec![0, 1], vec![0, 1]))]);
        let bad = EdgeLabeling::new(vec![4, 4]).unwrap();
        assert_eq!(
            check_tree_labeling(&t, &bad),
            Err(LabelViolation::Sum { vertex: 0, degree: 2, sum: 8 })
        );
        let bad = EdgeLabeling::new(vec![3, 6]).unwrap();
        assert_eq!(check_tree_labeling(&t, &bad), Err(LabelViolation::Value { edge: 0, value: 3 }));
        assert_eq!(EdgeLabeling::new(vec![1, 0]), Err(ZeroValue { edge: 1 }));
    }
}
