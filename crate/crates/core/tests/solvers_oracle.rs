use blocker_core::generate::*;
use blocker_core::oracle::{oracle_min_k, verify_witness};
use blocker_core::params::alpha;
use blocker_core::solvers::*;
use blocker_core::{BlockerInstance, Graph, OpKind, Parameter};

fn oracle(g: &Graph, pi: Parameter, kind: OpKind, d: usize) -> Option<usize> {
    oracle_min_k(g, pi, kind, d, None).unwrap().min_k
}

fn check_witness(g: &Graph, pi: Parameter, kind: OpKind, d: usize, k: usize, a: &SolverAnswer) {
    if let Some(w) = &a.witness {
        let inst = BlockerInstance::new(g.clone(), pi, kind, d, k);
        assert!(
            verify_witness(&inst, w).unwrap(),
            "bad witness {w} for {pi} {kind} d={d} k={k}\n{}",
            g.to_edge_list()
        );
    }
}

#[test]
fn trees_up_to_seven() {
    for n in 1..=7 {
        for t in all_trees(n) {
            for d in 0..=alpha(&t).unwrap() {
                let a = tree_contraction_blocker_alpha(&t, d, n).unwrap();
                assert_eq!(
                    a.min_k.unwrap().as_option(),
                    oracle(&t, Parameter::Alpha, OpKind::Contract, d)
                );
                check_witness(&t, Parameter::Alpha, OpKind::Contract, d, n, &a);
            }
        }
    }
}

#[test]
fn interval_omega() {
    let mut rng = seeded(4);
    for round in 0..40 {
        let n = 1 + round % 7;
        let model = random_interval_model(n, 8, &mut rng);
        let g = model.to_graph();
        let omega = Parameter::Omega.of(&g).unwrap();
        for kind in [OpKind::Contract, OpKind::Delete] {
            for d in 1..=omega {
                let a = match kind {
                    OpKind::Contract => interval_contraction_blocker(&model, Parameter::Omega, d, n),
                    OpKind::Delete => interval_deletion_blocker(&model, Parameter::Omega, d, n),
                }
                .unwrap();
                let want = oracle(&g, Parameter::Omega, kind, d);
                assert_eq!(a.min_k.unwrap().as_option(), want, "{kind} d={d} model\n{model}");
                check_witness(&g, Parameter::Omega, kind, d, n, &a);
            }
        }
    }
}

#[test]
fn split_decisions() {
    let mut rng = seeded(5);
    for round in 0..40 {
        let g = random_split(1 + round % 7, 0.5, &mut rng);
        for pi in Parameter::ALL {
            for d in 0..=2 {
                let min = oracle(&g, pi, OpKind::Contract, d);
                for k in 0..=4 {
                    let a = split_contraction_blocker(&g, pi, d, k).unwrap();
                    assert_eq!(
                        a.decision,
                        min.is_some_and(|m| m <= k),
                        "{pi} d={d} k={k}\n{}",
                        g.to_edge_list()
                    );
                    check_witness(&g, pi, OpKind::Contract, d, k, &a);
                }
            }
        }
    }
}

#[test]
fn three_p1_free_decisions() {
    let mut rng = seeded(6);
    for round in 0..30 {
        let g = random_3p1free(1 + round % 7, 0.5, &mut rng);
        for kind in [OpKind::Contract, OpKind::Delete] {
            for d in 0..=2 {
                let min = oracle(&g, Parameter::Chi, kind, d);
                for k in 0..=4 {
                    let a = match kind {
                        OpKind::Contract => contraction_blocker_chi_3p1free(&g, d, k),
                        OpKind::Delete => deletion_blocker_chi_3p1free(&g, d, k),
                    }
                    .unwrap();
                    assert_eq!(
                        a.decision,
                        min.is_some_and(|m| m <= k),
                        "{kind} d={d} k={k}\n{}",
                        g.to_edge_list()
                    );
                    check_witness(&g, Parameter::Chi, kind, d, k, &a);
                }
            }
        }
    }
}

#[test]
fn p1p3_free_decisions() {
    let mut rng = seeded(7);
    for round in 0..30 {
        let g = random_p1p3free(1 + round % 7, 0.5, &mut rng);
        for d in 0..=2 {
            let min = oracle(&g, Parameter::Chi, OpKind::Delete, d);
            for k in 0..=4 {
                let a = deletion_blocker_chi_p1p3free(&g, d, k).unwrap();
                assert_eq!(
                    a.decision,
                    min.is_some_and(|m| m <= k),
                    "d={d} k={k}\n{}",
                    g.to_edge_list()
                );
            }
        }
    }
}

#[test]
fn bipartite_and_triangle_free() {
    let mut rng = seeded(8);
    for round in 0..40 {
        let n = 1 + round % 7;
        let g = random_bipartite(n, 0.5, &mut rng);
        for pi in [Parameter::Omega, Parameter::Chi] {
            for d in 0..=3 {
                let a = bipartite_deletion_blocker(&g, pi, d, n).unwrap();
                assert_eq!(a.min_k.unwrap().as_option(), oracle(&g, pi, OpKind::Delete, d));
                check_witness(&g, pi, OpKind::Delete, d, n, &a);
            }
        }
        let co = random_cobipartite(n, 0.5, &mut rng);
        for d in 0..=3 {
            let a = cobipartite_deletion_blocker_alpha(&co, d, n).unwrap();
            assert_eq!(
                a.min_k.unwrap().as_option(),
                oracle(&co, Parameter::Alpha, OpKind::Delete, d)
            );
            check_witness(&co, Parameter::Alpha, OpKind::Delete, d, n, &a);
        }
        let tf = random_triangle_free(n, 0.5, &mut rng);
        for d in 0..=2 {
            let a = triangle_free_contraction_blocker_omega(&tf, d, n).unwrap();
            assert_eq!(
                a.min_k.unwrap().as_option(),
                oracle(&tf, Parameter::Omega, OpKind::Contract, d)
            );
            check_witness(&tf, Parameter::Omega, OpKind::Contract, d, n, &a);
        }
    }
}

#[test]
fn dispatch_agrees_with_oracle() {
    let mut rng = seeded(9);
    for round in 0..40 {
        let g = random_graph(2 + round % 6, 0.5, &mut rng);
        for pi in Parameter::ALL {
            for kind in [OpKind::Contract, OpKind::Delete] {
                let inst = BlockerInstance::new(g.clone(), pi, kind, 1, 2);
                let Some(class) = GraphClass::AUTO_ORDER
                    .into_iter()
                    .find(|c| c.supports(pi, kind) && c.contains(&inst, None).unwrap())
                else {
                    continue;
                };
                let a = solve(class, &inst, None).unwrap();
                let min = oracle(&g, pi, kind, 1);
                assert_eq!(
                    a.decision,
                    min.is_some_and(|m| m <= 2),
                    "{class} {pi} {kind}\n{}",
                    g.to_edge_list()
                );
            }
        }
    }
}
