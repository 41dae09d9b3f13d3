use std::time::Instant;

use blocker_core::generate::{random_cograph, random_interval_model, random_tree, seeded};
use blocker_core::oracle::oracle_min_k;
use blocker_core::params::matching_number;
use blocker_core::solvers::tree_contraction_blocker_alpha;
use blocker_core::solvers::{cograph_blocker, cograph_decide, interval_contraction_blocker, interval_deletion_blocker};
use blocker_core::{OpKind, Parameter};

const REPEATS: usize = 3;

/// Best of a few runs, in milliseconds.
fn time<T>(mut f: impl FnMut() -> T) -> f64 {
    (0..REPEATS)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed().as_secs_f64() * 1e3
        })
        .fold(f64::INFINITY, f64::min)
}

struct Row {
    class: &'static str,
    n: usize,
    d: usize,
    solver_ms: f64,
    oracle_ms: Option<f64>,
}

pub fn run(suite: &str) -> Result<String, String> {
    if suite != "core" {
        return Err(format!("unknown suite '{suite}' (available: core)"));
    }
    let mut rows = Vec::new();
    for n in [50, 100, 200] {
        let model = random_interval_model(n, 4 * n as i64, &mut seeded(n as u64));
        rows.push(Row {
            class: "interval-contract",
            n,
            d: 2,
            solver_ms: time(|| interval_contraction_blocker(&model, Parameter::Omega, 2, n)),
            oracle_ms: None,
        });
        rows.push(Row {
            class: "interval-delete",
            n,
            d: 2,
            solver_ms: time(|| interval_deletion_blocker(&model, Parameter::Omega, 2, n)),
            oracle_ms: None,
        });
    }
    for n in [50, 100] {
        let g = random_cograph(n, &mut seeded(n as u64));
        for (class, pi) in [("cograph-alpha", Parameter::Alpha), ("cograph-chi", Parameter::Chi)] {
            rows.push(Row {
                class,
                n,
                d: 0,
                solver_ms: time(|| cograph_blocker(&g, pi, 2, 2)),
                oracle_ms: None,
            });
        }
    }
    for n in [100, 1000] {
        let t = random_tree(n, &mut seeded(n as u64));
        let d = (n - matching_number(&t)) / 2;
        rows.push(Row {
            class: "tree",
            n,
            d,
            solver_ms: time(|| tree_contraction_blocker_alpha(&t, d, n)),
            oracle_ms: None,
        });
    }
    let g = random_cograph(8, &mut seeded(8));
    rows.push(Row {
        class: "cograph-vs-oracle",
        n: 8,
        d: 1,
        solver_ms: time(|| cograph_decide(&g, Parameter::Chi, OpKind::Contract, 1, 7)),
        oracle_ms: Some(time(|| oracle_min_k(&g, Parameter::Chi, OpKind::Contract, 1, None))),
    });
    let mut csv = String::from("class,n,d,solver_ms,oracle_ms\n");
    for r in rows {
        let oracle = r.oracle_ms.map_or(String::new(), |t| format!("{t:.3}"));
        csv.push_str(&format!("{},{},{},{:.3},{}\n", r.class, r.n, r.d, r.solver_ms, oracle));
    }
    Ok(csv)
}
