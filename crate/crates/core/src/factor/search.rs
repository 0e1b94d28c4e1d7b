//! Exact search for a [2,3]-factor whose components are regular.
//!
//! Such a factor is the same thing as a split of the vertices into a class
//! of degree-2 vertices and a class of degree-3 vertices, together with a
//! 2-factor of the first class and a 3-factor of the second; factor edges
//! never join the two classes. The search enumerates classes vertex by
//! vertex and settles the edges with the matching-based f-factor test
//! whenever a same-class region is closed off by assigned neighbours.

use std::collections::VecDeque;

use super::ffactor::f_factor;
use crate::graph::{EdgeId, Multigraph, VertexId};

const UNSET: u8 = 0;

pub(crate) struct ClassSearch<'g> {
    g: &'g Multigraph,
    class: Vec<u8>,
    order: Vec<VertexId>,
    pub(crate) nodes: u64,
}

impl<'g> ClassSearch<'g> {
    pub(crate) fn new(g: &'g Multigraph) -> Self {
        ClassSearch {
            g,
            class: vec![UNSET; g.vertex_count()],
            order: bfs_order(g),
            nodes: 0,
        }
    }

    /// Factor edges of the first valid class assignment (degree 2 tried
    /// before degree 3 at every vertex), or `None` if there is none.
    pub(crate) fn run(&mut self) -> Option<Vec<EdgeId>> {
        if self.descend(0) {
            let mut edges = Vec::new();
            for (class, region) in self.regions() {
                edges.extend(self.settle(class, &region).expect("leaf regions were checked"));
            }
            edges.sort_unstable();
            Some(edges)
        } else {
            None
        }
    }

    fn descend(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for class in [2, 3] {
            self.nodes += 1;
            self.class[v] = class;
            if self.consistent_around(v) && self.descend(idx + 1) {
                return true;
            }
        }
        self.class[v] = UNSET;
        false
    }

    /// Edge endpoints at `u` whose other end could still share class `c`.
    fn capacity(&self, u: VertexId, c: u8) -> usize {
        self.g
            .incident(u)
            .iter()
            .filter(|&&e| {
                let w = self.g.opposite(e, u);
                w != u && (self.class[w] == c || self.class[w] == UNSET)
            })
            .count()
    }

    fn feasible_at(&self, u: VertexId) -> bool {
        match self.class[u] {
            UNSET => self.capacity(u, 2) >= 2 || self.capacity(u, 3) >= 3,
            c => self.capacity(u, c) >= c as usize,
        }
    }

    fn consistent_around(&self, v: VertexId) -> bool {
        if !self.feasible_at(v) {
            return false;
        }
        let g = self.g;
        if !g.incident(v).iter().all(|&e| self.feasible_at(g.opposite(e, v))) {
            return false;
        }
        let mut checked: Vec<VertexId> = Vec::new();
        let mut probe = vec![v];
        probe.extend(g.incident(v).iter().map(|&e| g.opposite(e, v)));
        for start in probe {
            if self.class[start] == UNSET || checked.contains(&start) {
                continue;
            }
            let Some(region) = self.closed_region(start) else {
                continue;
            };
            checked.extend(region.iter().copied());
            let class = self.class[start];
            if class == 3 && region.len() % 2 == 1 {
                return false;
            }
            if self.settle(class, &region).is_none() {
                return false;
            }
        }
        true
    }

    /// Same-class component of `start`, if none of its neighbours is unset.
    fn closed_region(&self, start: VertexId) -> Option<Vec<VertexId>> {
        let c = self.class[start];
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &e in self.g.incident(u) {
                let w = self.g.opposite(e, u);
                match self.class[w] {
                    UNSET => return None,
                    cw if cw == c && !seen.contains(&w) => {
                        seen.push(w);
                        stack.push(w);
                    }
                    _ => {}
                }
            }
        }
        seen.sort_unstable();
        Some(seen)
    }

    fn regions(&self) -> Vec<(u8, Vec<VertexId>)> {
        let class = &self.class;
        let g = self.g;
        g.components_of_edges(|e| {
            let (a, b) = g.endpoints(e);
            class[a] == class[b]
        })
        .into_iter()
        .map(|r| (class[r[0]], r))
        .collect()
    }

    fn settle(&self, class: u8, region: &[VertexId]) -> Option<Vec<EdgeId>> {
        let sub = self.g.induced(region);
        let target = vec![class as usize; region.len()];
        f_factor(&sub.graph, &target).map(|edges| edges.into_iter().map(|e| sub.edge_origin[e]).collect())
    }
}

fn bfs_order(g: &Multigraph) -> Vec<VertexId> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &e in g.incident(v) {
                let w = g.opposite(e, v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}
