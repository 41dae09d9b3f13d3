use std::collections::BTreeSet;

use blocker_core::generate::{random_bipartite, random_graph, seeded};
use blocker_core::oracle::{oracle_decide_with, verify_witness, OracleConfig};
use blocker_core::params::{omega, omega_with_limit};
use blocker_core::recognize::{girth, is_bipartite, is_chordal, split_partition, SplitFlavor};
use blocker_core::reductions::*;
use blocker_core::{BlockerInstance, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

const CFG: OracleConfig = OracleConfig {
    contraction_guard: 40,
    deletion_guard: 40,
};

fn decide(inst: &BlockerInstance) -> bool {
    oracle_decide_with(&CFG, inst).unwrap().0
}

fn random_rbds<R: Rng>(rng: &mut R) -> RbdsInstance {
    let b = rng.gen_range(1..=4);
    let r = rng.gen_range(1..=4);
    let blue: BTreeSet<_> = (0..b).collect();
    let red: BTreeSet<_> = (b..b + r).collect();
    let mut edges: Vec<_> = (0..b).map(|y| (y, rng.gen_range(b..b + r))).collect();
    for x in b..b + r {
        edges.push((rng.gen_range(0..b), x));
        for y in 0..b {
            if rng.gen_bool(0.3) {
                edges.push((y, x));
            }
        }
    }
    RbdsInstance::new(blue, red, edges, rng.gen_range(0..=b)).unwrap()
}

#[test]
fn rbds_to_split() {
    let mut rng = seeded(21);
    for _ in 0..30 {
        let src = random_rbds(&mut rng);
        let truth = src.solve().unwrap().is_some();
        for inst in [
            reduce_rbds_to_split_alpha(&src).unwrap(),
            reduce_rbds_to_split_chi(&src).unwrap(),
        ] {
            assert!(split_partition(&inst.graph, SplitFlavor::Any).is_some());
            assert_eq!(decide(&inst), truth, "{src}");
        }
    }
}

#[test]
fn one_in_three_single_clause() {
    let mut rng = seeded(22);
    for _ in 0..10 {
        let mut vars = [1, 2, 3];
        vars.shuffle(&mut rng);
        let clause = vars.map(|v| if rng.gen_bool(0.5) { v } else { -v });
        let f = CnfFormula::new(3, vec![clause]).unwrap();
        let inst = reduce_1in3sat_to_omega(&f).unwrap();
        assert_eq!(omega(&inst.graph).unwrap(), 3);
        let truth = f.one_in_three_assignment().unwrap();
        assert_eq!(decide(&inst), truth.is_some());
        let w = assignment_witness(&f, &truth.unwrap()).unwrap();
        assert!(verify_witness(&inst, &w).unwrap());
    }
}

#[test]
fn one_in_three_unsatisfiable() {
    let f = CnfFormula::new(3, vec![[1, 2, 3], [-1, -2, -3]]).unwrap();
    assert_eq!(f.one_in_three_assignment().unwrap(), None);
    assert!(!decide(&reduce_1in3sat_to_omega(&f).unwrap()));
}

#[test]
fn vertex_cover_to_chordal() {
    let mut rng = seeded(23);
    let mut done = 0;
    while done < 25 {
        let g = random_graph(rng.gen_range(2..=4), 0.6, &mut rng);
        if g.m() == 0 {
            continue;
        }
        let k = rng.gen_range(0..=2);
        let inst = reduce_vc_to_chordal(&g, k).unwrap();
        assert!(is_chordal(&inst.graph));
        assert_eq!(omega_with_limit(&inst.graph, 64).unwrap(), g.n() + 3);
        assert_eq!(
            decide(&inst),
            vertex_cover_at_most(&g, k).unwrap(),
            "k={k}\n{}",
            g.to_edge_list()
        );
        done += 1;
    }
}

#[test]
fn clique_proof() {
    let mut rng = seeded(24);
    for _ in 0..25 {
        let g = random_graph(rng.gen_range(1..=4), 0.6, &mut rng);
        let l = rng.gen_range(1..=4);
        let inst = clique_proof_lift(&g, l).unwrap();
        assert_eq!(decide(&inst), omega(&g).unwrap() <= l);
    }
}

#[test]
fn biclique_to_cobipartite() {
    let mut rng = seeded(25);
    let mut done = 0;
    while done < 25 {
        let g = random_bipartite(rng.gen_range(6..=8), 0.5, &mut rng);
        if !g.is_connected() {
            continue;
        }
        let inst = reduce_biclique_to_cobipartite_chi(&g).unwrap();
        assert_eq!(
            decide(&inst),
            has_biclique_partition(&g, 3).unwrap(),
            "{}",
            g.to_edge_list()
        );
        done += 1;
    }
}

#[test]
fn cobipartite_subdivision_is_bipartite() {
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    for g in [Graph::complete(3), two_k2] {
        let inst = reduce_cobipartite_alpha_to_bipartite(&g, 1).unwrap();
        assert!(is_bipartite(&inst.graph));
    }
    assert!(reduce_cobipartite_alpha_to_bipartite(&Graph::empty(2), 0).is_err());
}

#[test]
fn girth_lift_keeps_forced_vertices() {
    let mut rng = seeded(26);
    for _ in 0..40 {
        let g = random_graph(rng.gen_range(1..=5), 0.5, &mut rng);
        if g.m() > 8 {
            continue;
        }
        let p = rng.gen_range(3..=5);
        let lifted = girth_lift(&g, p);
        assert!(girth(&lifted).is_none_or(|c| c > p));
        assert_eq!(
            has_forced_vertex(&lifted).unwrap(),
            has_forced_vertex(&g).unwrap(),
            "{}",
            g.to_edge_list()
        );
    }
}
