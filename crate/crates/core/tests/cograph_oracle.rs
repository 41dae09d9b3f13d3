use blocker_core::generate::{random_cograph, seeded};
use blocker_core::oracle::{oracle_max_drop, oracle_min_k};
use blocker_core::solvers::{cograph_blocker, cograph_decide};
use blocker_core::{Graph, OpKind, Parameter};

#[test]
fn root_table_matches_oracle() {
    let mut rng = seeded(2);
    for round in 0..60 {
        let g = random_cograph(1 + round % 8, &mut rng);
        for pi in Parameter::ALL {
            let table = cograph_blocker(&g, pi, 3, 3).unwrap();
            for i in 0..=3 {
                for j in 0..=3 - i {
                    let expected = oracle_max_drop(&g, pi, i, j).unwrap();
                    assert_eq!(table.max_d(i, j), expected, "{pi} ({i},{j}) on\n{}", g.to_edge_list());
                }
            }
        }
    }
}

#[test]
fn decisions_match_oracle() {
    let mut rng = seeded(3);
    for round in 0..30 {
        let g = random_cograph(2 + round % 6, &mut rng);
        for pi in Parameter::ALL {
            for kind in [OpKind::Contract, OpKind::Delete] {
                for d in 1..=2 {
                    let want = oracle_min_k(&g, pi, kind, d, None).unwrap().min_k;
                    let got = cograph_decide(&g, pi, kind, d, g.n())
                        .unwrap()
                        .min_k
                        .unwrap()
                        .as_option();
                    assert_eq!(got, want, "{pi} {kind} d={d}");
                }
            }
        }
    }
}

#[test]
fn c4_needs_three_contractions_for_chi() {
    let c4 = Graph::cycle(4);
    assert!(
        !cograph_decide(&c4, Parameter::Chi, OpKind::Contract, 1, 2)
            .unwrap()
            .decision
    );
    assert!(
        cograph_decide(&c4, Parameter::Chi, OpKind::Contract, 1, 3)
            .unwrap()
            .decision
    );
}
