//! Instance generators: named graphs, random 5-regular multigraphs, graphs
//! without a 2-factor, and random cycle-cubic trees.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cyclecubic::{CycleCubicTree, Member};
use crate::factor::CycleWalk;
use crate::graph::{Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub vertex_count: usize,
    pub seed: u64,
    pub max_resamples: usize,
}

impl GeneratorConfig {
    pub fn new(vertex_count: usize, seed: u64) -> Self {
        GeneratorConfig {
            vertex_count,
            seed,
            max_resamples: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("5 * {0} stubs cannot be paired: vertex count must be even and positive")]
    VertexCount(usize),
    #[error("resample bound must be positive")]
    NoResamples,
    #[error("no loopless connected pairing within {0} resamples")]
    ResamplesExceeded(usize),
}

/// A random connected, loopless 5-regular multigraph from the configuration
/// model. Pairings with a loop or more than one component are discarded
/// and redrawn; parallel edges are kept. Edges are sorted.
pub fn gen_random_5regular(cfg: &GeneratorConfig) -> Result<Multigraph, GenError> {
    let n = cfg.vertex_count;
    if n == 0 || n % 2 == 1 {
        return Err(GenError::VertexCount(n));
    }
    if cfg.max_resamples == 0 {
        return Err(GenError::NoResamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let degrees = vec![5; n];
    for _ in 0..cfg.max_resamples {
        if let Some(g) = pair_stubs(&degrees, &mut rng) {
            return Ok(g);
        }
    }
    Err(GenError::ResamplesExceeded(cfg.max_resamples))
}

/// One configuration-model draw; `None` on a loop or a disconnected result.
fn pair_stubs(degrees: &[usize], rng: &mut ChaCha8Rng) -> Option<Multigraph> {
    let mut stubs: Vec<VertexId> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    stubs.shuffle(rng);
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks(2) {
        if pair[0] == pair[1] {
            return None;
        }
        edges.push((pair[0].min(pair[1]), pair[0].max(pair[1])));
    }
    edges.sort_unstable();
    let g = Multigraph::new(degrees.len(), edges).ok()?;
    g.is_connected().then_some(g)
}

/// A random connected 5-regular multigraph with no 2-factor: a hub joined
/// by single edges to five blobs of odd order. Every hub edge has an odd
/// side, so any 3-factor contains all five of them, which is impossible.
pub fn gen_without_two_factor(seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..5 {
        let size = *[3usize, 5, 7].choose(&mut rng).unwrap();
        let mut degrees = vec![5; size];
        degrees[0] = 4;
        let blob = loop {
            if let Some(b) = pair_stubs(&degrees, &mut rng) {
                break b;
            }
        };
        edges.push((0, next));
        edges.extend(blob.edges().iter().map(|&(a, b)| (a + next, b + next)));
        next += size;
    }
    Multigraph::new(next, edges).expect("blobs are loopless")
}

pub fn dumbbell() -> Multigraph {
    Multigraph::new(2, vec![(0, 1); 5]).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Multigraph::new(n, edges).unwrap()
}

pub fn complete_bipartite(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in n..2 * n {
            edges.push((a, b));
        }
    }
    Multigraph::new(2 * n, edges).unwrap()
}

pub fn icosahedron() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (a, b) = (1 + i, 1 + (i + 1) % 5);
        let (c, d) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, a), (a, b), (a, c), (b, c), (c, d), (c, 11)]);
    }
    Multigraph::new(12, edges).unwrap()
}

/// A hub joined by bridges to five triangles whose edges have
/// multiplicities 2, 2, 3. No 2-factor exists.
pub fn hub_of_triangles() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let o = 1 + 3 * i;
        edges.extend([(0, o), (o, o + 1), (o, o + 1), (o, o + 2), (o, o + 2)]);
        edges.extend([(o + 1, o + 2); 3]);
    }
    Multigraph::new(16, edges).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    OddCycle,
    EvenCycle,
    Cubic,
}

/// A random valid cycle-cubic tree with `members` members and maximum
/// degree at most 5. Member order and edge ids are shuffled.
pub fn random_cycle_cubic_tree(members: usize, seed: u64) -> CycleCubicTree {
    assert!(members >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // tree shape with member degree at most 6
    let mut links = Vec::new();
    let mut degree = vec![0usize; members];
    for i in 1..members {
        let j = loop {
            let j = rng.gen_range(0..i);
            if degree[j] < 6 {
                break j;
            }
        };
        links.push((i, j));
        degree[i] += 1;
        degree[j] += 1;
    }
    let kinds: Vec<Kind> = degree
        .iter()
        .map(|&d| match (d % 2 == 1, rng.gen_bool(0.5)) {
            (true, _) => Kind::OddCycle,
            (false, true) => Kind::EvenCycle,
            (false, false) => Kind::Cubic,
        })
        .collect();

    // members as local graphs, with room for their connectors
    let mut order: Vec<usize> = (0..members).collect();
    order.shuffle(&mut rng);
    let mut offset = vec![0; members];
    let mut size = vec![0; members];
    let mut edges = Vec::new();
    let mut member_edges: Vec<Vec<usize>> = vec![Vec::new(); members];
    let mut next = 0;
    for &m in &order {
        let (n, local) = match kinds[m] {
            Kind::OddCycle => {
                let min = degree[m].div_ceil(3).max(3);
                let n = 2 * rng.gen_range(min / 2..=min / 2 + 3) + 1;
                (n, (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
            }
            Kind::EvenCycle => {
                let min = degree[m].div_ceil(3).max(2);
                let n = 2 * rng.gen_range(min.div_ceil(2)..=min.div_ceil(2) + 3);
                (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
            }
            Kind::Cubic => {
                let min = degree[m].div_ceil(2).max(2);
                let n = 2 * rng.gen_range(min.div_ceil(2)..=min.div_ceil(2) + 3);
                let g = loop {
                    if let Some(g) = pair_stubs(&vec![3; n], &mut rng) {
                        break g;
                    }
                };
                (n, g.edges().to_vec())
            }
        };
        offset[m] = next;
        size[m] = n;
        for (a, b) in local {
            member_edges[m].push(edges.len());
            edges.push((a + next, b + next));
        }
        next += n;
    }

    // connectors, each at a vertex with spare capacity
    let mut load = vec![0usize; next];
    let cap = |m: usize| if kinds[m] == Kind::Cubic { 2 } else { 3 };
    let pick = |m: usize, rng: &mut ChaCha8Rng, load: &mut Vec<usize>| loop {
        let v = offset[m] + rng.gen_range(0..size[m]);
        if load[v] < cap(m) {
            load[v] += 1;
            break v;
        }
    };
    for &(i, j) in &links {
        let a = pick(i, &mut rng, &mut load);
        let b = pick(j, &mut rng, &mut load);
        edges.push((a, b));
    }

    // shuffle edge ids
    let mut perm: Vec<usize> = (0..edges.len()).collect();
    perm.shuffle(&mut rng);
    let mut shuffled = vec![(0, 0); edges.len()];
    for (old, &new) in perm.iter().enumerate() {
        shuffled[new] = edges[old];
    }
    let graph = Multigraph::new(next, shuffled).expect("members are loopless");
    let tree_members = order
        .iter()
        .map(|&m| {
            let vertices: Vec<VertexId> = (offset[m]..offset[m] + size[m]).collect();
            let ids: Vec<usize> = member_edges[m].iter().map(|&e| perm[e]).collect();
            match kinds[m] {
                Kind::Cubic => Member::cubic(vertices, ids),
                _ => Member::cycle(CycleWalk { vertices, edges: ids }),
            }
        })
        .collect();
    CycleCubicTree::new(graph, tree_members)
}
