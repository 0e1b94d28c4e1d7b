//! 2-factors and regular-component [2,3]-factors of 5-regular multigraphs.

mod ffactor;
mod search;

use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, VertexId};

pub(crate) use ffactor::f_factor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("vertex {vertex} has degree {degree}, expected 5")]
    NotFiveRegular { vertex: VertexId, degree: usize },
    #[error("input graph is not connected")]
    Disconnected,
    #[error("edge {edge} out of range")]
    EdgeOutOfRange { edge: EdgeId },
    #[error("vertex {vertex} has factor degree {degree}, expected 2 or 3")]
    FactorDegree { vertex: VertexId, degree: usize },
    #[error("factor component containing vertex {vertex} is not regular")]
    Irregular { vertex: VertexId },
    #[error("no regular-component [2,3]-factor found after {nodes} search nodes")]
    SearchExhausted { nodes: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of_len(len: usize) -> Self {
        if len % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A closed walk through a cycle: `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`. A 2-cycle is two parallel edges; a 1-cycle
/// (a loop) only occurs inside the labeling recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWalk {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl CycleWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_len(self.len())
    }

    /// Checks that the walk is a closed cycle in `g`.
    pub fn is_cycle_in(&self, g: &Multigraph) -> bool {
        let len = self.len();
        if len == 0 || self.vertices.len() != len {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != len || es.len() != len {
            return false;
        }
        (0..len).all(|i| {
            let e = self.edges[i];
            if e >= g.edge_count() {
                return false;
            }
            let (a, b) = g.endpoints(e);
            let (x, y) = (self.vertices[i], self.vertices[(i + 1) % len]);
            (a, b) == (x, y) || (a, b) == (y, x)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCycle {
    pub walk: CycleWalk,
    pub parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicComponent {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// A spanning [2,3]-factor split into its cycles and cubic components.
/// Both lists are ordered by smallest contained vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorDecomposition {
    pub factor_edges: Vec<EdgeId>,
    pub cycles: Vec<FactorCycle>,
    pub cubics: Vec<CubicComponent>,
}

/// Borrowed view of one factor component.
#[derive(Debug, Clone, Copy)]
pub enum FactorComponent<'a> {
    Cycle(&'a FactorCycle),
    Cubic(&'a CubicComponent),
}

impl FactorComponent<'_> {
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            FactorComponent::Cycle(c) => &c.walk.vertices,
            FactorComponent::Cubic(c) => &c.vertices,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        match self {
            FactorComponent::Cycle(c) => &c.walk.edges,
            FactorComponent::Cubic(c) => &c.edges,
        }
    }
}

impl FactorDecomposition {
    pub fn odd_cycle_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.parity == Parity::Odd).count()
    }

    pub fn is_two_factor(&self) -> bool {
        self.cubics.is_empty()
    }

    /// All components, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<FactorComponent<'_>> {
        let mut all: Vec<FactorComponent<'_>> = self
            .cycles
            .iter()
            .map(FactorComponent::Cycle)
            .chain(self.cubics.iter().map(FactorComponent::Cubic))
            .collect();
        all.sort_by_key(|c| c.vertices().iter().min().copied());
        all
    }
}

fn check_five_regular(g: &Multigraph) -> Result<(), FactorError> {
    for v in 0..g.vertex_count() {
        let degree = g.incident(v).len();
        if degree != 5 {
            return Err(FactorError::NotFiveRegular { vertex: v, degree });
        }
    }
    Ok(())
}

/// A 2-factor of a 5-regular multigraph, if one exists.
///
/// Existence is decided exactly by a perfect matching in Tutte's gadget,
/// so `None` means no 2-factor exists.
pub fn find_two_factor(g: &Multigraph) -> Result<Option<FactorDecomposition>, FactorError> {
    check_five_regular(g)?;
    match f_factor(g, &vec![2; g.vertex_count()]) {
        Some(edges) => classify_components(g, &edges).map(Some),
        None => Ok(None),
    }
}

/// A spanning [2,3]-factor of a connected 5-regular multigraph in which
/// every component is a cycle or a connected cubic graph. A 2-factor is
/// returned whenever one exists.
pub fn find_23_factor_regular(g: &Multigraph) -> Result<FactorDecomposition, FactorError> {
    if let Some(two) = find_two_factor(g)? {
        return Ok(two);
    }
    if !g.is_connected() {
        return Err(FactorError::Disconnected);
    }
    search_23_factor(g)
}

/// The class search alone, without the 2-factor shortcut.
pub(crate) fn search_23_factor(g: &Multigraph) -> Result<FactorDecomposition, FactorError> {
    let mut search = search::ClassSearch::new(g);
    match search.run() {
        Some(edges) => classify_components(g, &edges),
        None => Err(FactorError::SearchExhausted {
            nodes: search.nodes,
        }),
    }
}

/// Splits a spanning [2,3]-factor into cycles (walked from their smallest
/// vertex along its smallest factor edge) and cubic components.
pub fn classify_components(
    g: &Multigraph,
    factor_edges: &[EdgeId],
) -> Result<FactorDecomposition, FactorError> {
    let mut in_factor = vec![false; g.edge_count()];
    for &e in factor_edges {
        if e >= g.edge_count() {
            return Err(FactorError::EdgeOutOfRange { edge: e });
        }
        in_factor[e] = true;
    }
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if in_factor[e] {
            at[a].push(e);
            at[b].push(e);
        }
    }
    for (v, inc) in at.iter().enumerate() {
        if !(2..=3).contains(&inc.len()) {
            return Err(FactorError::FactorDegree {
                vertex: v,
                degree: inc.len(),
            });
        }
    }

    let mut cycles = Vec::new();
    let mut cubics = Vec::new();
    for comp in g.components_of_edges(|e| in_factor[e]) {
        let degree = at[comp[0]].len();
        if comp.iter().any(|&v| at[v].len() != degree) {
            return Err(FactorError::Irregular { vertex: comp[0] });
        }
        if degree == 2 {
            let walk = walk_cycle(g, &at, comp[0]);
            let parity = walk.parity();
            cycles.push(FactorCycle { walk, parity });
        } else {
            let mut edges: Vec<EdgeId> = comp.iter().flat_map(|&v| at[v].iter().copied()).collect();
            edges.sort_unstable();
            edges.dedup();
            cubics.push(CubicComponent {
                vertices: comp,
                edges,
            });
        }
    }
    let mut factor_edges: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| in_factor[e]).collect();
    factor_edges.sort_unstable();
    Ok(FactorDecomposition {
        factor_edges,
        cycles,
        cubics,
    })
}

fn walk_cycle(g: &Multigraph, at: &[Vec<EdgeId>], start: VertexId) -> CycleWalk {
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut v = start;
    let mut e = *at[start].iter().min().unwrap();
    loop {
        edges.push(e);
        let w = g.opposite(e, v);
        if w == start {
            break;
        }
        vertices.push(w);
        e = if at[w][0] == e { at[w][1] } else { at[w][0] };
        v = w;
    }
    CycleWalk { vertices, edges }
}
