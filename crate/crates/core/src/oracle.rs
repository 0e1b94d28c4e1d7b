//! Exhaustive search for zero-sum k-flows on small graphs.
//!
//! Shares nothing with the constructive solver, so agreement between the
//! two is meaningful.

use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::labeling::EdgeLabeling;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Found(EdgeLabeling),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub result: OracleResult,
    pub nodes_explored: u64,
    /// Set when the search stopped early; `result` is then `None` without
    /// proving that no flow exists.
    pub budget_exhausted: bool,
}

impl OracleOutcome {
    pub fn found(&self) -> Option<&EdgeLabeling> {
        match &self.result {
            OracleResult::Found(f) => Some(f),
            OracleResult::None => None,
        }
    }

    /// True only when the search finished and found nothing.
    pub fn proved_none(&self) -> bool {
        self.result == OracleResult::None && !self.budget_exhausted
    }
}

/// Depth-first search over values in `±1..±(k-1)`.
///
/// Edges are ordered once, greedily preferring edges whose endpoints have
/// the fewest edges left to order, so vertices complete early. The last
/// edge at a vertex has its value forced. A vertex with partial sum `s`
/// and `r` open edges is abandoned once `|s| > r * (k - 1)`.
pub fn brute_force_flow(g: &Multigraph, k: i32, node_budget: u64) -> OracleOutcome {
    assert!(k >= 2, "k must be at least 2");
    let mut search = Search {
        g,
        max: k - 1,
        order: edge_order(g),
        values: vec![0; g.edge_count()],
        sum: vec![0; g.vertex_count()],
        open: (0..g.vertex_count()).map(|v| g.incident(v).len()).collect(),
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    let ok = search.descend(0);
    OracleOutcome {
        result: if ok {
            OracleResult::Found(EdgeLabeling::new(search.values).expect("search assigns nonzero values"))
        } else {
            OracleResult::None
        },
        nodes_explored: search.nodes,
        budget_exhausted: search.exhausted,
    }
}

fn edge_order(g: &Multigraph) -> Vec<EdgeId> {
    let mut left: Vec<usize> = (0..g.vertex_count()).map(|v| g.incident(v).len()).collect();
    let mut used = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for _ in 0..g.edge_count() {
        let e = (0..g.edge_count())
            .filter(|&e| !used[e])
            .min_by_key(|&e| {
                let (a, b) = g.endpoints(e);
                (left[a].min(left[b]), left[a].max(left[b]), e)
            })
            .unwrap();
        used[e] = true;
        let (a, b) = g.endpoints(e);
        left[a] -= 1;
        left[b] -= 1;
        order.push(e);
    }
    order
}

struct Search<'g> {
    g: &'g Multigraph,
    max: i32,
    order: Vec<EdgeId>,
    values: Vec<i32>,
    sum: Vec<i32>,
    open: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let e = self.order[depth];
        let (a, b) = self.g.endpoints(e);
        for x in self.candidates(a, b) {
            if self.nodes >= self.budget {
                self.exhausted = true;
                return false;
            }
            self.nodes += 1;
            self.assign(e, a, b, x);
            if self.feasible(a) && self.feasible(b) && self.descend(depth + 1) {
                return true;
            }
            self.unassign(e, a, b, x);
            if self.exhausted {
                return false;
            }
        }
        false
    }

    /// Values worth trying on an edge between `a` and `b`.
    fn candidates(&self, a: VertexId, b: VertexId) -> Vec<i32> {
        let closes = |v: VertexId| {
            let mult: usize = if a == b { 2 } else { 1 };
            (self.open[v] == mult).then_some((self.sum[v], mult as i32))
        };
        let forced = closes(a).or_else(|| closes(b)).map(|(s, mult)| {
            if s % mult != 0 {
                None
            } else {
                Some(-s / mult)
            }
        });
        match forced {
            Some(Some(x)) if x != 0 && x.abs() <= self.max => vec![x],
            Some(_) => Vec::new(),
            None => (1..=self.max).flat_map(|x| [x, -x]).collect(),
        }
    }

    fn assign(&mut self, e: EdgeId, a: VertexId, b: VertexId, x: i32) {
        self.values[e] = x;
        self.sum[a] += x;
        self.sum[b] += x;
        self.open[a] -= 1;
        self.open[b] -= 1;
    }

    fn unassign(&mut self, e: EdgeId, a: VertexId, b: VertexId, x: i32) {
        self.values[e] = 0;
        self.sum[a] -= x;
        self.sum[b] -= x;
        self.open[a] += 1;
        self.open[b] += 1;
    }

    fn feasible(&self, v: VertexId) -> bool {
        self.sum[v].abs() <= self.open[v] as i32 * self.max
    }
}
