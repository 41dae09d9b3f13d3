use std::collections::{BTreeMap, BTreeSet};

use blocker_core::canon::canonical_form;
use blocker_core::dense::DenseGraph;
use blocker_core::oracle::{oracle_min_k, verify_witness};
use blocker_core::params::{alpha, chi, matching_number, omega};
use blocker_core::recognize::{
    cotree, find_interval_model, is_bipartite, is_chordal, is_induced_subgraph, split_partition, SplitFlavor,
};
use blocker_core::{BlockerInstance, Graph, OpKind, Parameter};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn subsets(g: &Graph) -> impl Iterator<Item = BTreeSet<usize>> + '_ {
    let ids: Vec<_> = g.vertices().collect();
    (0u32..1 << ids.len()).map(move |m| (0..ids.len()).filter(|i| m >> i & 1 == 1).map(|i| ids[i]).collect())
}

fn is_clique(g: &Graph, s: &BTreeSet<usize>) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
}

fn brute_chi(g: &Graph) -> usize {
    let ids: Vec<_> = g.vertices().collect();
    (0..=ids.len())
        .find(|&q| {
            let mut colour = vec![0; ids.len()];
            colourable(g, &ids, &mut colour, 0, q)
        })
        .unwrap()
}

fn colourable(g: &Graph, ids: &[usize], colour: &mut [usize], i: usize, q: usize) -> bool {
    if i == ids.len() {
        return true;
    }
    (0..q).any(|c| {
        let free = (0..i).all(|j| colour[j] != c || !g.has_edge(ids[i], ids[j]));
        colour[i] = c;
        free && colourable(g, ids, colour, i + 1, q)
    })
}

fn has_induced(g: &Graph, h: &Graph) -> bool {
    subsets(g)
        .filter(|s| s.len() == h.n())
        .any(|s| is_induced_subgraph(h, &g.induced_subgraph(&s).unwrap()))
}

fn shuffled(g: &Graph, seed: &[usize]) -> Graph {
    let ids: Vec<_> = g.vertices().collect();
    let mut targets: Vec<_> = ids.iter().map(|v| v * 3 + 7).collect();
    let len = targets.len();
    for (i, s) in seed.iter().enumerate().take(len) {
        targets.swap(i, s % len);
    }
    let map: BTreeMap<_, _> = ids.into_iter().zip(targets).collect();
    g.relabel(&map).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn parameters_match_brute_force(g in graph(8)) {
        let a = subsets(&g).filter(|s| is_clique(&g.complement(), s)).map(|s| s.len()).max().unwrap();
        let w = subsets(&g).filter(|s| is_clique(&g, s)).map(|s| s.len()).max().unwrap();
        prop_assert_eq!(alpha(&g).unwrap(), a);
        prop_assert_eq!(omega(&g).unwrap(), w);
        prop_assert_eq!(chi(&g).unwrap(), brute_chi(&g));
        prop_assert_eq!(alpha(&g).unwrap(), omega(&g.complement()).unwrap());
        let mu = matching_number(&g);
        prop_assert!(2 * mu <= g.n() && mu <= g.m());
    }

    #[test]
    fn recognizers_match_forbidden_subgraphs(g in graph(7)) {
        let p4 = Graph::path(4);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (c4, c5) = (Graph::cycle(4), Graph::cycle(5));
        prop_assert_eq!(cotree(&g).is_ok(), !has_induced(&g, &p4));
        let split = [&two_k2, &c4, &c5].iter().all(|h| !has_induced(&g, h));
        prop_assert_eq!(split_partition(&g, SplitFlavor::Any).is_some(), split);
        let chordal = (4..=g.n()).all(|l| !has_induced(&g, &Graph::cycle(l)));
        prop_assert_eq!(is_chordal(&g), chordal);
        prop_assert_eq!(is_bipartite(&g), brute_chi(&g) <= 2);
        if let Some(model) = find_interval_model(&g) {
            prop_assert!(model.validate(&g).unwrap());
            prop_assert!(chordal);
        }
        if let Ok(t) = cotree(&g) {
            prop_assert_eq!(t.evaluate(), g.clone());
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(8), seed in proptest::collection::vec(any::<usize>(), 8)) {
        let h = shuffled(&g, &seed);
        let (h, _) = h.compact();
        prop_assert_eq!(canonical_form(&DenseGraph::from_graph(&g)), canonical_form(&DenseGraph::from_graph(&h)));
    }

    #[test]
    fn oracle_invariants(g in graph(6), seed in proptest::collection::vec(any::<usize>(), 6), d in 0usize..=2) {
        let h = shuffled(&g, &seed);
        for pi in Parameter::ALL {
            for kind in [OpKind::Contract, OpKind::Delete] {
                let r = oracle_min_k(&g, pi, kind, d, None).unwrap();
                prop_assert_eq!(oracle_min_k(&h, pi, kind, d, None).unwrap().min_k, r.min_k);
                let next = oracle_min_k(&g, pi, kind, d + 1, None).unwrap().min_k;
                if let Some(m) = next {
                    prop_assert!(r.min_k.is_some_and(|k| k <= m));
                }
                if let (Some(k), Some(w)) = (r.min_k, &r.witness) {
                    prop_assert_eq!(w.len(), k);
                    let inst = BlockerInstance::new(g.clone(), pi, kind, d, k);
                    prop_assert!(verify_witness(&inst, w).unwrap());
                    if k > 0 {
                        prop_assert!(oracle_min_k(&g, pi, kind, d, Some(k - 1)).unwrap().min_k.is_none());
                    }
                }
            }
        }
    }
}

#[test]
fn contraction_keeps_second_endpoint() {
    let g = Graph::path(3);
    let h = g.contract_edge(0, 1).unwrap();
    assert_eq!(h.vertex_set(), BTreeSet::from([1, 2]));
    assert!(h.has_edge(1, 2));
    assert!(g.contract_edge(0, 2).is_err());
}
