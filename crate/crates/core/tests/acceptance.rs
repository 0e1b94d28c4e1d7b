//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use zsflow::cyclecubic::assemble;
use zsflow::factor::{find_23_factor_regular, FactorComponent, Parity};
use zsflow::format::{parse_graph, serialize_flow};
use zsflow::generate::{
    complete, complete_bipartite, dumbbell, gen_random_5regular, gen_without_two_factor,
    random_cycle_cubic_tree, GeneratorConfig,
};
use zsflow::graph::Multigraph;
use zsflow::labeling::{check_tree_labeling, label_cycle_cubic_tree_with_stats, pair_paths, LabelStats};
use zsflow::oracle::brute_force_flow;
use zsflow::solver::{solve, verify, verify_values, Branch};
use zsflow::tjoin::{acyclic_tjoin, build_quotient};

use common::{check_23_factor, check_tjoin, random_connected_graph, random_even_subset};

const ORACLE_BUDGET: u64 = 200_000_000;

/// Seeds 1..=300 with n cycling through 2, 4, ..., 40.
fn corpus() -> Vec<(u64, Multigraph)> {
    (1..=300u64)
        .map(|seed| {
            let n = 2 + 2 * ((seed as usize - 1) % 20);
            (seed, gen_random_5regular(&GeneratorConfig::new(n, seed)).expect("generator"))
        })
        .collect()
}

/// Graphs whose [2,3]-factor has cubic components.
fn hub_graphs() -> Vec<Multigraph> {
    (0..50).map(gen_without_two_factor).collect()
}

fn report(name: &str, result: Result<String, String>, failures: &mut usize) {
    match result {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(detail) => {
            *failures += 1;
            println!("FAIL {name}: {detail}");
        }
    }
}

fn headline(corpus: &[(u64, Multigraph)]) -> Result<String, String> {
    let start = Instant::now();
    let mut slowest = Duration::ZERO;
    let mut branches = [0usize; 3];
    for (seed, g) in corpus {
        let t = Instant::now();
        let c = solve(g).map_err(|e| format!("seed {seed}: {e}"))?;
        verify(g, &c.labeling, 6).map_err(|e| format!("seed {seed}: {e}"))?;
        if c.labeling.values().iter().any(|x| !(1..=5).contains(&x.abs())) {
            return Err(format!("seed {seed}: value outside ±1..±5"));
        }
        slowest = slowest.max(t.elapsed());
        branches[c.branch as usize] += 1;
    }
    let total = start.elapsed();
    if slowest >= Duration::from_secs(1) {
        return Err(format!("slowest instance took {slowest:?}"));
    }
    if total >= Duration::from_secs(120) {
        return Err(format!("total time {total:?}"));
    }
    Ok(format!(
        "{} instances (branches two-factor/no-odd-cycles/general: {}/{}/{}), slowest {slowest:?}, total {total:?}",
        corpus.len(),
        branches[0],
        branches[1],
        branches[2]
    ))
}

fn oracle_agreement(corpus: &[(u64, Multigraph)]) -> Result<String, String> {
    let mut cases: Vec<(String, Multigraph)> = corpus
        .iter()
        .filter(|(_, g)| g.vertex_count() <= 8)
        .map(|(s, g)| (format!("seed {s}"), g.clone()))
        .collect();
    cases.push(("K6".into(), complete(6)));
    cases.push(("dumbbell".into(), dumbbell()));
    let mut nodes = 0;
    for (name, g) in &cases {
        let solved = solve(g).map_err(|e| format!("{name}: solve failed: {e}"))?;
        verify(g, &solved.labeling, 6).map_err(|e| format!("{name}: {e}"))?;
        let out = brute_force_flow(g, 6, ORACLE_BUDGET);
        nodes += out.nodes_explored;
        match out.found() {
            Some(f) => verify(g, f, 6).map_err(|e| format!("{name}: oracle flow rejected: {e}"))?,
            None if out.budget_exhausted => return Err(format!("{name}: oracle budget exhausted")),
            None => return Err(format!("{name}: oracle proved no 6-flow exists")),
        }
    }
    Ok(format!("{} instances, 0 discrepancies, {nodes} oracle nodes", cases.len()))
}

fn fast_path() -> Result<String, String> {
    for (name, g) in [("K6", complete(6)), ("K5,5", complete_bipartite(5)), ("dumbbell", dumbbell())] {
        let c = solve(&g).map_err(|e| format!("{name}: {e}"))?;
        if c.branch != Branch::TwoFactor {
            return Err(format!("{name}: branch {}", c.branch));
        }
        if c.labeling.values().iter().any(|&x| x != 3 && x != -2) {
            return Err(format!("{name}: values outside {{3, -2}}"));
        }
        verify(&g, &c.labeling, 4).map_err(|e| format!("{name}: not a 4-flow: {e}"))?;
    }
    Ok("K6, K5,5 and the dumbbell use only 3 and -2".into())
}

fn tree_labeling(corpus: &[(u64, Multigraph)], hubs: &[Multigraph]) -> Result<String, String> {
    let mut stats = LabelStats::default();
    let mut pipeline_trees = 0;
    for (i, g) in corpus.iter().map(|(_, g)| g).chain(hubs).enumerate() {
        let h = find_23_factor_regular(g).map_err(|e| format!("graph {i}: {e}"))?;
        let q = build_quotient(g, &h).map_err(|e| format!("graph {i}: {e}"))?;
        let t = odd_cycle_blocks(&h);
        let j = acyclic_tjoin(&q.graph, &t).map_err(|e| format!("graph {i}: {e}"))?;
        let trees = assemble(g, &h, &q, &j).map_err(|e| format!("graph {i}: {e}"))?;
        for tree in &trees {
            let (f, s) = label_cycle_cubic_tree_with_stats(tree).map_err(|e| format!("graph {i}: {e}"))?;
            check_tree_labeling(tree, &f).map_err(|e| format!("graph {i}: {e}"))?;
            stats.absorb(&s);
            pipeline_trees += 1;
        }
    }
    for seed in 0..200u64 {
        let tree = random_cycle_cubic_tree(1 + (seed as usize % 12), seed);
        tree.validate().map_err(|e| format!("synthetic {seed}: {e}"))?;
        if tree.graph.max_degree() > 5 {
            return Err(format!("synthetic {seed}: degree above 5"));
        }
        let (f, s) = label_cycle_cubic_tree_with_stats(&tree).map_err(|e| format!("synthetic {seed}: {e}"))?;
        check_tree_labeling(&tree, &f).map_err(|e| format!("synthetic {seed}: {e}"))?;
        stats.absorb(&s);
    }
    Ok(format!(
        "{pipeline_trees} pipeline trees + 200 synthetic; steps: shrink {}, loop {}, cubic gadget {}, cut vertex {}",
        stats.shrink_cycle, stats.loop_pair, stats.cubic_gadget, stats.cut_vertex
    ))
}

fn odd_cycle_blocks(h: &zsflow::factor::FactorDecomposition) -> Vec<usize> {
    h.components()
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, FactorComponent::Cycle(fc) if fc.parity == Parity::Odd))
        .map(|(i, _)| i)
        .collect()
}

fn path_pairing() -> Result<String, String> {
    let mut paths = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed as usize % 30);
        let g = random_connected_graph(n, (seed as usize * 7) % 45, seed);
        let u = random_even_subset(n, seed);
        let p = pair_paths(&g, &u).map_err(|e| format!("seed {seed}: {e}"))?;
        p.validate(&g, &u).map_err(|e| format!("seed {seed}: {e}"))?;
        paths += p.paths.len();
    }
    Ok(format!("500 graphs, {paths} paths"))
}

fn factor_suite(corpus: &[(u64, Multigraph)], hubs: &[Multigraph]) -> Result<String, String> {
    let mut count = 0;
    for (i, g) in corpus.iter().map(|(_, g)| g).chain(hubs).enumerate() {
        let h = find_23_factor_regular(g).map_err(|e| format!("graph {i}: {e}"))?;
        check_23_factor(g, &h).map_err(|e| format!("graph {i}: {e}"))?;
        count += 1;
    }
    Ok(format!("{count} factors valid"))
}

fn tjoin_suite(corpus: &[(u64, Multigraph)], hubs: &[Multigraph]) -> Result<String, String> {
    let mut count = 0;
    for (i, g) in corpus.iter().map(|(_, g)| g).chain(hubs).enumerate() {
        let h = find_23_factor_regular(g).map_err(|e| format!("graph {i}: {e}"))?;
        let q = build_quotient(g, &h).map_err(|e| format!("graph {i}: {e}"))?;
        let j = acyclic_tjoin(&q.graph, &odd_cycle_blocks(&h)).map_err(|e| format!("graph {i}: {e}"))?;
        check_tjoin(&q.graph, &j).map_err(|e| format!("graph {i}: {e}"))?;
        count += 1;
    }
    for seed in 0..300u64 {
        let n = 1 + (seed as usize % 25);
        let q = random_connected_graph(n, seed as usize % 30, seed);
        let j = acyclic_tjoin(&q, &random_even_subset(n, seed)).map_err(|e| format!("random {seed}: {e}"))?;
        check_tjoin(&q, &j).map_err(|e| format!("random {seed}: {e}"))?;
        count += 1;
    }
    Ok(format!("{count} joins are forests with exact odd sets"))
}

fn negative_controls() -> Result<String, String> {
    let triangle = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    if verify_values(&triangle, &[1, 1, 1], 6).is_ok() {
        return Err("all-1 triangle accepted".into());
    }
    if !brute_force_flow(&triangle, 6, u64::MAX).proved_none() {
        return Err("oracle did not prove none on the triangle".into());
    }
    if parse_graph("zs 4 1\n3 3\n").is_ok() {
        return Err("loop accepted by the parser".into());
    }
    Ok("all-1 triangle rejected, oracle none on triangle, loop rejected".into())
}

fn determinism(corpus: &[(u64, Multigraph)]) -> Result<String, String> {
    let run = || -> Result<Vec<String>, String> {
        corpus
            .iter()
            .map(|(_, g)| solve(g).map(|c| serialize_flow(&c)).map_err(|e| e.to_string()))
            .collect()
    };
    let again: Vec<(u64, Multigraph)> = (1..=300u64)
        .map(|seed| {
            let n = 2 + 2 * ((seed as usize - 1) % 20);
            (seed, gen_random_5regular(&GeneratorConfig::new(n, seed)).unwrap())
        })
        .collect();
    if again != corpus {
        return Err("generator output differs between runs".into());
    }
    let (a, b) = (run()?, run()?);
    match a.iter().zip(&b).position(|(x, y)| x != y) {
        Some(i) => Err(format!("certificate {} differs", i + 1)),
        None => Ok(format!("{} certificates byte-identical", a.len())),
    }
}

fn main() {
    let corpus = corpus();
    let hubs = hub_graphs();
    let mut failures = 0;
    report("random corpus solved", headline(&corpus), &mut failures);
    report("oracle agreement", oracle_agreement(&corpus), &mut failures);
    report("fast path", fast_path(), &mut failures);
    report("tree labeling", tree_labeling(&corpus, &hubs), &mut failures);
    report("path pairing", path_pairing(), &mut failures);
    report("factor suite", factor_suite(&corpus, &hubs), &mut failures);
    report("t-join suite", tjoin_suite(&corpus, &hubs), &mut failures);
    report("negative controls", negative_controls(), &mut failures);
    report("determinism", determinism(&corpus), &mut failures);
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
