//! Zero-sum 6-flows on 5-regular multigraphs and the flow verifier.

use std::fmt;

use thiserror::Error;

use crate::cyclecubic::{assemble, AssembleError};
use crate::factor::{find_23_factor_regular, find_two_factor, FactorComponent, FactorError, Parity};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::labeling::{label_cycle_cubic_tree_with_stats, label_even_cycle, EdgeLabeling, LabelError, LabelStats};
use crate::tjoin::{acyclic_tjoin, build_quotient, TJoinError};

/// Value on edges outside the [2,3]-factor (or outside the trees).
const OUTSIDE: i32 = -3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    TwoFactor,
    NoOddCycles,
    General,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::TwoFactor => "two-factor",
            Branch::NoOddCycles => "no-odd-cycles",
            Branch::General => "general",
        }
    }

    pub fn from_name(s: &str) -> Option<Branch> {
        [Branch::TwoFactor, Branch::NoOddCycles, Branch::General]
            .into_iter()
            .find(|b| b.name() == s)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Shape of one labeled cycle-cubic tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSummary {
    pub members: usize,
    pub odd_cycles: usize,
    pub cubic_members: usize,
    pub connectors: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Smallest `k` the construction guarantees for this branch (4 on the
    /// 2-factor branch, 6 otherwise).
    pub tight_bound: i32,
    pub components: usize,
    pub factor_cycles: usize,
    pub odd_cycles: usize,
    pub cubic_components: usize,
    pub terminals: usize,
    pub join_edges: usize,
    pub trees: Vec<TreeSummary>,
    pub labeling: LabelStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowCertificate {
    pub labeling: EdgeLabeling,
    pub bound: i32,
    /// The most general branch used over all components.
    pub branch: Branch,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Take the 2-factor branch when a 2-factor exists. Turning this off
    /// forces the other branches, which is useful for exercising them.
    pub use_two_factor_fast_path: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_two_factor_fast_path: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowViolation {
    #[error("labeling has {got} values for {want} edges")]
    NotTotal { got: usize, want: usize },
    #[error("edge {edge} has value 0")]
    Zero { edge: EdgeId },
    #[error("edge {edge} has value {value}, outside ±1..±{max}")]
    OutOfRange { edge: EdgeId, value: i32, max: i32 },
    #[error("vertex {vertex} sums to {sum}")]
    NonZeroSum { vertex: VertexId, sum: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("factor stage: {0}")]
    Factor(#[from] FactorError),
    #[error("t-join stage: {0}")]
    TJoin(#[from] TJoinError),
    #[error("assembly stage: {0}")]
    Assemble(#[from] AssembleError),
    #[error("labeling stage: {0}")]
    Label(#[from] LabelError),
    #[error("vertex {vertex} sums to {sum} inside the trees, expected {want}")]
    Interface { vertex: VertexId, sum: i32, want: i32 },
    #[error("final check: {0}")]
    Verify(#[from] FlowViolation),
}

/// Sum of the values at the ends of edges incident with `v`; a loop counts
/// twice.
pub fn sum_at_vertex(g: &Multigraph, f: &[i32], v: VertexId) -> i32 {
    g.incident(v).iter().map(|&e| f[e]).sum()
}

/// Checks that `f` is a zero-sum `k`-flow on `g`.
pub fn verify(g: &Multigraph, f: &EdgeLabeling, k: i32) -> Result<(), FlowViolation> {
    verify_values(g, f.values(), k)
}

/// As [`verify`], for raw values that may contain zeros.
pub fn verify_values(g: &Multigraph, f: &[i32], k: i32) -> Result<(), FlowViolation> {
    if f.len() != g.edge_count() {
        return Err(FlowViolation::NotTotal {
            got: f.len(),
            want: g.edge_count(),
        });
    }
    for (edge, &value) in f.iter().enumerate() {
        if value == 0 {
            return Err(FlowViolation::Zero { edge });
        }
        if value.abs() > k - 1 {
            return Err(FlowViolation::OutOfRange {
                edge,
                value,
                max: k - 1,
            });
        }
    }
    for vertex in 0..g.vertex_count() {
        let sum = sum_at_vertex(g, f, vertex);
        if sum != 0 {
            return Err(FlowViolation::NonZeroSum { vertex, sum });
        }
    }
    Ok(())
}

pub fn solve(g: &Multigraph) -> Result<FlowCertificate, SolveError> {
    solve_with(g, SolveOptions::default())
}

/// A zero-sum 6-flow on a 5-regular multigraph. Disconnected inputs are
/// solved component by component.
pub fn solve_with(g: &Multigraph, options: SolveOptions) -> Result<FlowCertificate, SolveError> {
    for v in 0..g.vertex_count() {
        let degree = g.incident(v).len();
        if degree != 5 {
            return Err(FactorError::NotFiveRegular { vertex: v, degree }.into());
        }
    }
    let mut values = vec![0; g.edge_count()];
    let mut branch = Branch::TwoFactor;
    let mut diagnostics = Diagnostics::default();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let part = solve_connected(&sub.graph, options)?;
        for (local, &e) in sub.edge_origin.iter().enumerate() {
            values[e] = part.labeling.get(local);
        }
        branch = branch.max(part.branch);
        merge(&mut diagnostics, part.diagnostics);
    }
    diagnostics.tight_bound = if branch == Branch::TwoFactor { 4 } else { 6 };
    let labeling = EdgeLabeling::new(values)
        .map_err(|z| SolveError::Verify(FlowViolation::Zero { edge: z.edge }))?;
    verify(g, &labeling, 6)?;
    Ok(FlowCertificate {
        labeling,
        bound: 6,
        branch,
        diagnostics,
    })
}

fn merge(into: &mut Diagnostics, part: Diagnostics) {
    into.components += 1;
    into.factor_cycles += part.factor_cycles;
    into.odd_cycles += part.odd_cycles;
    into.cubic_components += part.cubic_components;
    into.terminals += part.terminals;
    into.join_edges += part.join_edges;
    into.trees.extend(part.trees);
    into.labeling.absorb(&part.labeling);
}

fn solve_connected(g: &Multigraph, options: SolveOptions) -> Result<FlowCertificate, SolveError> {
    let mut diagnostics = Diagnostics::default();

    if options.use_two_factor_fast_path {
        if let Some(two) = find_two_factor(g)? {
            let mut values = vec![-2; g.edge_count()];
            for &e in &two.factor_edges {
                values[e] = 3;
            }
            diagnostics.factor_cycles = two.cycles.len();
            diagnostics.odd_cycles = two.odd_cycle_count();
            return finish(values, Branch::TwoFactor, diagnostics);
        }
    }

    let h = find_23_factor_regular(g)?;
    diagnostics.factor_cycles = h.cycles.len();
    diagnostics.odd_cycles = h.odd_cycle_count();
    diagnostics.cubic_components = h.cubics.len();
    let mut values = vec![OUTSIDE; g.edge_count()];

    if h.odd_cycle_count() == 0 {
        for c in &h.cycles {
            let labels = label_even_cycle(&c.walk, 4)?;
            for (&e, x) in c.walk.edges.iter().zip(labels) {
                values[e] = x;
            }
        }
        for r in &h.cubics {
            for &e in &r.edges {
                values[e] = 2;
            }
        }
        return finish(values, Branch::NoOddCycles, diagnostics);
    }

    let quotient = build_quotient(g, &h)?;
    let terminals: Vec<usize> = h
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, FactorComponent::Cycle(fc) if fc.parity == Parity::Odd))
        .map(|(i, _)| i)
        .collect();
    let join = acyclic_tjoin(&quotient.graph, &terminals)?;
    diagnostics.terminals = join.terminals.len();
    diagnostics.join_edges = join.join_edges.len();
    let trees = assemble(g, &h, &quotient, &join)?;

    let mut in_trees = vec![0i32; g.vertex_count()];
    let mut tree_degree = vec![0i32; g.vertex_count()];
    for t in &trees {
        let (f, stats) = label_cycle_cubic_tree_with_stats(t)?;
        diagnostics.labeling.absorb(&stats);
        diagnostics.trees.push(TreeSummary {
            members: t.member_count(),
            odd_cycles: t.members.iter().filter(|m| m.kind == crate::cyclecubic::MemberKind::OddCycle).count(),
            cubic_members: t.members.iter().filter(|m| m.kind == crate::cyclecubic::MemberKind::Cubic).count(),
            connectors: t.connectors.len(),
        });
        for (local, &e) in t.edge_origin.iter().enumerate() {
            values[e] = f.get(local);
            let (a, b) = g.endpoints(e);
            in_trees[a] += f.get(local);
            in_trees[b] += f.get(local);
            tree_degree[a] += 1;
            tree_degree[b] += 1;
        }
    }
    // each vertex is short of zero by exactly its external -3 edges
    for v in 0..g.vertex_count() {
        let want = 3 * (5 - tree_degree[v]);
        if in_trees[v] != want {
            return Err(SolveError::Interface {
                vertex: v,
                sum: in_trees[v],
                want,
            });
        }
    }
    finish(values, Branch::General, diagnostics)
}

fn finish(values: Vec<i32>, branch: Branch, diagnostics: Diagnostics) -> Result<FlowCertificate, SolveError> {
    let labeling = EdgeLabeling::new(values)
        .map_err(|z| SolveError::Verify(FlowViolation::Zero { edge: z.edge }))?;
    Ok(FlowCertificate {
        labeling,
        bound: 6,
        branch,
        diagnostics,
    })
}
