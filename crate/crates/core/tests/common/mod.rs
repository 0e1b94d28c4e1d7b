//! Independent checkers shared by the integration tests. None of them call
//! into the code paths they check.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zsflow::factor::FactorDecomposition;
use zsflow::graph::{EdgeId, Multigraph};
use zsflow::tjoin::TJoinResult;

/// Does `g` have a spanning 2-regular subgraph? Plain backtracking over
/// the edges.
pub fn two_factor_exists(g: &Multigraph) -> bool {
    fn go(g: &Multigraph, e: usize, deg: &mut [usize], left: &mut [usize]) -> bool {
        if e == g.edge_count() {
            return deg.iter().all(|&d| d == 2);
        }
        let (a, b) = g.endpoints(e);
        left[a] -= 1;
        left[b] -= 1;
        let mut found = false;
        if deg[a] < 2 && deg[b] < 2 {
            deg[a] += 1;
            deg[b] += 1;
            found = go(g, e + 1, deg, left);
            deg[a] -= 1;
            deg[b] -= 1;
        }
        if !found && deg[a] + left[a] >= 2 && deg[b] + left[b] >= 2 {
            found = go(g, e + 1, deg, left);
        }
        left[a] += 1;
        left[b] += 1;
        found
    }
    let mut deg = vec![0; g.vertex_count()];
    let mut left: Vec<usize> = (0..g.vertex_count()).map(|v| g.incident(v).len()).collect();
    go(g, 0, &mut deg, &mut left)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    /// False if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
        a != b
    }
}

/// Components of the subgraph formed by `edges`, as a label per vertex.
fn component_labels(g: &Multigraph, edges: &[EdgeId]) -> Vec<usize> {
    let mut d = Dsu::new(g.vertex_count());
    for &e in edges {
        let (a, b) = g.endpoints(e);
        d.union(a, b);
    }
    (0..g.vertex_count()).map(|v| d.find(v)).collect()
}

/// Spanning, degrees in {2,3}, every component 2- or 3-regular, an even
/// number of odd cycles, and the reported cycles/cubics match the edges.
pub fn check_23_factor(g: &Multigraph, h: &FactorDecomposition) -> Result<(), String> {
    let mut deg = vec![0; g.vertex_count()];
    let mut seen = vec![false; g.edge_count()];
    for &e in &h.factor_edges {
        if seen[e] {
            return Err(format!("edge {e} listed twice"));
        }
        seen[e] = true;
        let (a, b) = g.endpoints(e);
        deg[a] += 1;
        deg[b] += 1;
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| !(2..=3).contains(&deg[v])) {
        return Err(format!("vertex {v} has factor degree {}", deg[v]));
    }
    let label = component_labels(g, &h.factor_edges);
    for v in 0..g.vertex_count() {
        for w in 0..g.vertex_count() {
            if label[v] == label[w] && deg[v] != deg[w] {
                return Err(format!("component of {v} is not regular"));
            }
        }
    }
    let mut odd = 0;
    let mut covered = vec![0; g.vertex_count()];
    for c in &h.cycles {
        let w = &c.walk;
        for (i, &e) in w.edges.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            let (x, y) = (w.vertices[i], w.vertices[(i + 1) % w.len()]);
            if !seen[e] || !((a, b) == (x, y) || (a, b) == (y, x)) {
                return Err(format!("cycle walk breaks at edge {e}"));
            }
        }
        for &v in &w.vertices {
            covered[v] += 1;
            if deg[v] != 2 {
                return Err(format!("cycle vertex {v} has factor degree {}", deg[v]));
            }
        }
        odd += w.len() % 2;
    }
    for r in &h.cubics {
        for &v in &r.vertices {
            covered[v] += 1;
            if deg[v] != 3 {
                return Err(format!("cubic vertex {v} has factor degree {}", deg[v]));
            }
        }
        if r.vertices.iter().any(|&v| label[v] != label[r.vertices[0]]) {
            return Err("cubic component is disconnected".into());
        }
    }
    if covered.iter().any(|&c| c != 1) {
        return Err("components do not partition the vertices".into());
    }
    if odd % 2 == 1 {
        return Err(format!("{odd} odd cycles"));
    }
    Ok(())
}

/// The join is a forest and its odd-degree vertices are exactly the
/// terminals.
pub fn check_tjoin(q: &Multigraph, join: &TJoinResult) -> Result<(), String> {
    let mut d = Dsu::new(q.vertex_count());
    let mut deg = vec![0; q.vertex_count()];
    for &e in &join.join_edges {
        let (a, b) = q.endpoints(e);
        if !d.union(a, b) {
            return Err(format!("edge {e} closes a cycle"));
        }
        deg[a] += 1;
        deg[b] += 1;
    }
    let odd: Vec<usize> = (0..q.vertex_count()).filter(|&v| deg[v] % 2 == 1).collect();
    let mut want = join.terminals.clone();
    want.sort_unstable();
    if odd != want {
        return Err(format!("odd set {odd:?} differs from terminals {want:?}"));
    }
    Ok(())
}

/// A random connected loopless multigraph: a random tree plus `extra`
/// random edges.
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    if n >= 2 {
        for _ in 0..extra {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            edges.push((a, b));
        }
    }
    Multigraph::new(n, edges).unwrap()
}

/// A random even-size subset of `0..n`.
pub fn random_even_subset(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    if s.len() % 2 == 1 {
        s.pop();
    }
    s
}
