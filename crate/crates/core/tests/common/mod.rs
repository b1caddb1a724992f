//! Property suites shared by the `properties` and `acceptance` targets.
//!
//! Each suite drives its own proptest runner and reports the first
//! (shrunk) counterexample as an error string.

#![allow(dead_code)]

use std::collections::VecDeque;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use womlab_core::io::{read_graphml, read_records_csv, records_csv, to_graphml_string};
use womlab_core::metrics::{average_path_length, density, diameter, global_clustering, is_connected, triangle_count};
use womlab_core::model::{run, World};
use womlab_core::{
    generate, run_sweep, AwarenessState, ExpertiseState, FfParams, Graph, NetworkModel, RngSeed, SiiParams, SimConfig,
    SweepGrid, WsParams,
};

pub type SuiteResult = Result<(), String>;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

pub fn arb_graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
    (2..=max_nodes).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let count = pairs.len();
        prop::collection::vec(any::<bool>(), count).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn brute_triangles(g: &Graph) -> (u64, u64) {
    let n = g.node_count();
    let mut triangles = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    triangles += 1;
                }
            }
        }
    }
    let triples = (0..n).map(|v| {
        let d = g.degree(v) as u64;
        d * d.saturating_sub(1) / 2
    });
    (triangles, triples.sum())
}

pub fn small_model() -> impl Strategy<Value = NetworkModel> {
    prop_oneof![
        (12usize..60, 1usize..4, 0.0..0.3f64).prop_map(|(n, nei, p)| NetworkModel::Ws(WsParams {
            n,
            nei,
            p_rewire: p
        })),
        (2usize..60, 0.0..0.45f64, 0.0..1.0f64, 1usize..3).prop_map(|(n, fw, bw, ambs)| NetworkModel::Ff(FfParams {
            n,
            fw_prob: fw,
            bw_factor: bw,
            ambs
        })),
        (1usize..6, 2usize..10, 0.0..1.0f64, 1usize..3).prop_map(|(islands, size, p, inter)| {
            NetworkModel::Sii(SiiParams { n_islands: islands, island_size: size, p_in: p, n_inter: inter })
        }),
    ]
}

pub fn arb_config() -> impl Strategy<Value = SimConfig> {
    (
        (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64),
        any::<u64>(),
        (1u32..6, 0.0..=0.2f64, 1u32..15, any::<bool>()),
    )
        .prop_map(|((k, c, e, s), seed, (ad_rounds, ad_share, t_promote, gives_up))| {
            let mut cfg = SimConfig::new(k, c, e, s, RngSeed(seed));
            cfg.ad_rounds = ad_rounds;
            cfg.ad_share = ad_share;
            cfg.t_promote = t_promote;
            cfg.seeker_gives_up = gives_up;
            cfg.max_rounds = 400;
            cfg
        })
}

fn reachable_from(g: &Graph, sources: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    let mut queue: VecDeque<usize> = sources.iter().copied().collect();
    for &s in sources {
        seen[s] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// BFS metrics against Floyd–Warshall distances and brute-force triangle counts.
pub fn metric_oracle(cases: u32) -> SuiteResult {
    runner(cases)
        .run(&arb_graph(12), |g| {
            let d = floyd_warshall(&g);
            let n = g.node_count();
            let connected = d.iter().flatten().all(Option::is_some);
            prop_assert_eq!(is_connected(&g), connected);

            let expected_density = 2.0 * g.edge_count() as f64 / (n * (n - 1)) as f64;
            prop_assert!((density(&g).unwrap() - expected_density).abs() < 1e-12);

            if connected {
                let total: usize = d.iter().flatten().map(|x| x.unwrap()).sum();
                let apl = total as f64 / (n * (n - 1)) as f64;
                prop_assert!((average_path_length(&g).unwrap() - apl).abs() < 1e-12);
                prop_assert_eq!(diameter(&g), d.iter().flatten().map(|x| x.unwrap()).max());
            } else {
                prop_assert_eq!(average_path_length(&g), None);
                prop_assert_eq!(diameter(&g), None);
            }

            let (triangles, triples) = brute_triangles(&g);
            prop_assert_eq!(triangle_count(&g), triangles);
            let expected_c = if triples == 0 { 0.0 } else { 3.0 * triangles as f64 / triples as f64 };
            prop_assert!((global_clustering(&g) - expected_c).abs() < 1e-12);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn generator_determinism(cases: u32) -> SuiteResult {
    runner(cases)
        .run(&(small_model(), any::<u64>()), |(model, seed)| {
            let a = generate(&model, RngSeed(seed)).unwrap();
            let b = generate(&model, RngSeed(seed)).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.node_count(), model.node_count());
            prop_assert!(a.check_invariants().is_ok());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn graphml_round_trip(cases: u32) -> SuiteResult {
    runner(cases)
        .run(&(small_model(), any::<u64>()), |(model, seed)| {
            let g = generate(&model, RngSeed(seed)).unwrap();
            let text = to_graphml_string(&g);
            let parsed = read_graphml(&text).unwrap();
            prop_assert!(!parsed.remapped);
            prop_assert_eq!(&parsed.graph, &g);
            prop_assert_eq!(to_graphml_string(&parsed.graph), text);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Monotonicity, legality, expertise reachability, quiescence stability and
/// determinism of the dynamics on 50-node small worlds.
pub fn state_machine(cases: u32) -> SuiteResult {
    let strategy = (any::<u64>(), 0.0..0.3f64, arb_config());
    runner(cases)
        .run(&strategy, |(graph_seed, p, cfg)| {
            let g = generate(&NetworkModel::Ws(WsParams { n: 50, nei: 2, p_rewire: p }), RngSeed(graph_seed)).unwrap();
            let mut world = World::new(&g, cfg).unwrap();
            let initial_experts: Vec<usize> = (0..50).filter(|&i| world.agents()[i].holds_expertise()).collect();
            let expert_reach = reachable_from(&g, &initial_experts);

            while !world.is_quiescent() && world.round() < cfg.max_rounds {
                let before: Vec<_> = world.agents().iter().map(|a| (a.is_aware(), a.holds_expertise())).collect();
                world.step();
                for (a, (was_aware, was_expert)) in world.agents().iter().zip(before) {
                    prop_assert!(!was_aware || a.is_aware());
                    prop_assert!(!was_expert || a.holds_expertise());
                    if a.awareness == AwarenessState::Seeking {
                        prop_assert!(a.traits.curious && !a.holds_expertise());
                    }
                    if a.expertise == ExpertiseState::Proactive {
                        prop_assert!(a.is_aware());
                    }
                }
            }
            for (i, a) in world.agents().iter().enumerate() {
                prop_assert!(!a.holds_expertise() || expert_reach[i]);
            }

            if world.is_quiescent() {
                let frozen: Vec<_> = world.agents().iter().map(|a| (a.awareness, a.expertise)).collect();
                world.step();
                let after: Vec<_> = world.agents().iter().map(|a| (a.awareness, a.expertise)).collect();
                prop_assert_eq!(frozen, after);
            }

            let first = run(&g, cfg).unwrap();
            let second = run(&g, cfg).unwrap();
            prop_assert_eq!(&first, &second);
            prop_assert!(first.final_both_fraction <= first.final_aware_fraction);
            prop_assert!(first.hit_max_rounds || first.rounds_to_quiescence >= cfg.ad_rounds);
            for pair in first.time_series.windows(2) {
                prop_assert!(pair[1].aware() >= pair[0].aware());
                prop_assert!(pair[1].experts() >= pair[0].experts());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Records survive a CSV write/read cycle within the six-decimal format.
pub fn records_round_trip(cases: u32) -> SuiteResult {
    runner(cases)
        .run(&(any::<u32>(), 1u32..3), |(seed, reps)| {
            let grid = SweepGrid {
                network: NetworkModel::Sii(SiiParams { n_islands: 3, island_size: 6, p_in: 0.5, n_inter: 2 }),
                k_values: vec![0.1, 0.5],
                supporter_values: vec![0.0, 1.0 / 3.0],
                curious_values: vec![0.25],
                enthusiastic_values: vec![0.7],
                replications: reps,
                base_seed: seed as u64,
                sim: SimConfig::default(),
                max_retries: 50,
            };
            let out = run_sweep(&grid, 1).unwrap();
            let text = records_csv(&out.records);
            let back = read_records_csv(text.as_bytes()).unwrap();
            prop_assert_eq!(back.len(), out.records.len());
            for (a, b) in out.records.iter().zip(&back) {
                prop_assert_eq!(&a.network_model, &b.network_model);
                prop_assert_eq!(a.network_seed, b.network_seed);
                prop_assert_eq!(a.sim_seed, b.sim_seed);
                prop_assert_eq!(a.rounds, b.rounds);
                prop_assert_eq!(a.hit_max_rounds, b.hit_max_rounds);
                for (x, y) in [
                    (a.k, b.k),
                    (a.supporters, b.supporters),
                    (a.curious, b.curious),
                    (a.enthusiastic, b.enthusiastic),
                    (a.final_aware, b.final_aware),
                    (a.final_both, b.final_both),
                    (a.metrics.density, b.metrics.density),
                    (a.metrics.global_clustering, b.metrics.global_clustering),
                ] {
                    prop_assert!((x - y).abs() <= 1e-6);
                }
            }
            prop_assert_eq!(records_csv(&back), text);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// A four-cell grid gives byte-identical records for one and for `jobs` workers.
pub fn scheduling_invariance(jobs: usize) -> SuiteResult {
    let grid = SweepGrid {
        network: NetworkModel::Ws(WsParams { n: 120, nei: 3, p_rewire: 0.1 }),
        k_values: vec![0.05, 0.2],
        supporter_values: vec![0.0, 0.5],
        curious_values: vec![0.3],
        enthusiastic_values: vec![0.3],
        replications: 3,
        base_seed: 99,
        sim: SimConfig::default(),
        max_retries: 10,
    };
    let sweep = |workers| run_sweep(&grid, workers).map(|o| records_csv(&o.records)).map_err(|e| e.to_string());
    let one = sweep(1)?;
    let many = sweep(jobs)?;
    if one != many {
        return Err(format!("records differ between 1 and {jobs} workers"));
    }
    if one.lines().count() != grid.run_count() + 1 {
        return Err("missing records".into());
    }
    Ok(())
}
