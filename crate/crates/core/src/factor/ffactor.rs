//! Exact f-factor test through Tutte's gadget and a general perfect matching.
//!
//! Every edge `e = ab` becomes two adjacent nodes `e_a`, `e_b`; every vertex
//! `v` gets `deg(v) - f(v)` core nodes joined to all its edge nodes. A perfect
//! matching of the gadget uses exactly `f(v)` gadget edges `e_a e_b` at each
//! `v`, and those edges form the f-factor.

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::graph::{EdgeId, Multigraph};

/// Edge set of an f-factor of `g` with `f = target`, or `None` if none exists.
///
/// Loops in `g` are never selected.
pub(crate) fn f_factor(g: &Multigraph, target: &[usize]) -> Option<Vec<EdgeId>> {
    debug_assert_eq!(target.len(), g.vertex_count());
    let usable = |e: EdgeId| {
        let (a, b) = g.endpoints(e);
        a != b
    };
    let mut degree = vec![0usize; g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if usable(e) {
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    if degree.iter().zip(target).any(|(d, f)| f > d) {
        return None;
    }
    if target.iter().sum::<usize>() % 2 == 1 {
        return None;
    }

    let mut gadget: UnGraph<(), ()> = UnGraph::default();
    // edge_nodes[e] = (node at first endpoint, node at second endpoint)
    let mut edge_nodes: Vec<Option<(NodeIndex, NodeIndex)>> = vec![None; g.edge_count()];
    let mut at_vertex: Vec<Vec<NodeIndex>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if !usable(e) {
            continue;
        }
        let na = gadget.add_node(());
        let nb = gadget.add_node(());
        gadget.add_edge(na, nb, ());
        at_vertex[a].push(na);
        at_vertex[b].push(nb);
        edge_nodes[e] = Some((na, nb));
    }
    for (v, nodes) in at_vertex.iter().enumerate() {
        for _ in 0..degree[v] - target[v] {
            let core = gadget.add_node(());
            for &n in nodes {
                gadget.add_edge(core, n, ());
            }
        }
    }

    let matching = maximum_matching(&gadget);
    if !matching.is_perfect() {
        return None;
    }
    Some(
        edge_nodes
            .iter()
            .enumerate()
            .filter_map(|(e, nodes)| {
                let (na, nb) = (*nodes)?;
                (matching.mate(na) == Some(nb)).then_some(e)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Multigraph, target: &[usize], edges: &[EdgeId]) {
        let mut deg = vec![0; g.vertex_count()];
        for &e in edges {
            let (a, b) = g.endpoints(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        assert_eq!(deg, target);
    }

    #[test]
    fn perfect_matching_of_k4() {
        let k4 = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = f_factor(&k4, &[1; 4]).unwrap();
        check(&k4, &[1; 4], &m);
        let all = f_factor(&k4, &[3; 4]).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn infeasible_targets() {
        let triangle = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(f_factor(&triangle, &[1; 3]).is_none());
        assert!(f_factor(&triangle, &[3; 3]).is_none());
        assert_eq!(f_factor(&triangle, &[2; 3]).map(|e| e.len()), Some(3));
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(f_factor(&star, &[1; 4]).is_none());
        assert!(f_factor(&star, &[3, 1, 1, 1]).is_some());
    }

    #[test]
    fn parallel_edges() {
        let dumbbell = Multigraph::new(2, vec![(0, 1); 5]).unwrap();
        let two = f_factor(&dumbbell, &[2, 2]).unwrap();
        check(&dumbbell, &[2, 2], &two);
        assert!(f_factor(&dumbbell, &[2, 3]).is_none());
    }
}
