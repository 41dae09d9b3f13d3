mod bench;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use blocker_core::generate;
use blocker_core::oracle::{oracle_min_k, verify_witness};
use blocker_core::recognize::{
    classify, cotree, find_interval_model, is_3p1_free, is_bipartite, is_chordal, is_cobipartite, is_h_free, is_tree,
    is_triangle_free, probe_graph, split_partition, IntervalModel, SplitFlavor, PROBES,
};
use blocker_core::reductions::{self, CnfFormula, RbdsInstance};
use blocker_core::solvers::{solve, GraphClass, MinOps, SolverAnswer};
use blocker_core::{BlockerInstance, Graph, OpKind, Parameter, Witness};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const YES: u8 = 0;
const NO: u8 = 1;
const UNSUPPORTED: u8 = 2;
const FAILURE: u8 = 3;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] blocker_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "blocker",
    version,
    about = "Contraction and deletion blockers for alpha, omega and chi"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance with a polynomial-time solver.
    Solve {
        instance: PathBuf,
        #[arg(long, default_value = "auto")]
        class: String,
        /// Interval model of the instance graph.
        #[arg(long)]
        model: Option<PathBuf>,
        /// Fall back to exhaustive search when no solver applies.
        #[arg(long)]
        force_oracle: bool,
    },
    /// Solve an instance by exhaustive search.
    Oracle { instance: PathBuf },
    /// Check a witness against an instance.
    Verify { instance: PathBuf, witness: PathBuf },
    /// Report class membership of a graph.
    Recognize {
        graph: PathBuf,
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Complexity of the blocker problem on H-free graphs.
    Classify {
        /// Edge-list file or a probe name such as P4 or paw; omit with --table.
        h: Option<String>,
        #[arg(long)]
        pi: Option<Parameter>,
        #[arg(long)]
        kind: Option<OpKind>,
        /// Print the whole probe grid.
        #[arg(long)]
        table: bool,
    },
    /// Emit a blocker instance from a hard source problem.
    Reduce {
        #[arg(long = "from", value_enum)]
        source: Source,
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Clique bound for the clique-proof lift.
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Girth bound for the girth lift.
        #[arg(long, default_value_t = 3)]
        p: usize,
        #[arg(long, value_enum, default_value = "alpha")]
        variant: RbdsVariant,
    },
    /// Generate a random graph in a class.
    Gen {
        #[arg(long, value_enum)]
        class: GenClass,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability where the generator uses one.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Write the interval model here.
        #[arg(long)]
        model_out: Option<PathBuf>,
    },
    /// Time solvers against the oracle and print CSV.
    Bench {
        #[arg(long, default_value = "core")]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Rbds,
    #[value(name = "1in3sat")]
    OneInThreeSat,
    Vc,
    Biclique,
    Cliqueproof,
    Girth,
    C4lift,
    Cobipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum RbdsVariant {
    Alpha,
    Chi,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Tree,
    Cograph,
    Split,
    Interval,
    Bipartite,
    Cobipartite,
    Trianglefree,
    #[value(name = "3p1free")]
    ThreeP1Free,
    #[value(name = "p1p3free")]
    P1P3Free,
    C4free,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_instance(path: &Path) -> CliResult<BlockerInstance> {
    Ok(BlockerInstance::from_json(&read(path)?)?)
}

fn read_model(path: &Path) -> CliResult<IntervalModel> {
    Ok(read(path)?.parse()?)
}

/// Printed text or JSON, plus the exit code.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: YES }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { FAILURE } else { YES });
        }
    };
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("plain JSON value")
                );
            } else if !report.text.is_empty() {
                print!("{}", report.text);
                if !report.text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            let code = if matches!(e, CliError::Unsupported(_)) {
                UNSUPPORTED
            } else {
                FAILURE
            };
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "exit": code }));
            } else {
                eprintln!("blocker: {e}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> CliResult<Report> {
    match command {
        Command::Solve {
            instance,
            class,
            model,
            force_oracle,
        } => {
            let inst = read_instance(&instance)?;
            let model = model.as_deref().map(read_model).transpose()?;
            cmd_solve(&inst, &class, model.as_ref(), force_oracle)
        }
        Command::Oracle { instance } => cmd_oracle(&read_instance(&instance)?),
        Command::Verify { instance, witness } => {
            let inst = read_instance(&instance)?;
            let w: Witness = read(&witness)?.parse()?;
            cmd_verify(&inst, &w)
        }
        Command::Recognize { graph, model } => {
            let g = Graph::parse_edge_list(&read(&graph)?)?;
            let model = model.as_deref().map(read_model).transpose()?;
            cmd_recognize(&g, model.as_ref())
        }
        Command::Classify { h, pi, kind, table } => cmd_classify(h.as_deref(), pi, kind, table),
        Command::Reduce {
            source,
            input,
            k,
            l,
            p,
            variant,
        } => cmd_reduce(source, &read(&input)?, k, l, p, variant),
        Command::Gen {
            class,
            n,
            seed,
            density,
            model_out,
        } => cmd_gen(class, n, seed, density, model_out.as_deref()),
        Command::Bench { suite, out } => {
            let csv = bench::run(&suite).map_err(CliError::Usage)?;
            match out {
                Some(path) => {
                    fs::write(&path, &csv).map_err(|source| CliError::Io { path, source })?;
                    Ok(Report::ok(String::new(), json!({ "rows": csv.lines().count() - 1 })))
                }
                None => Ok(Report::ok(csv.clone(), json!({ "csv": csv }))),
            }
        }
    }
}

fn answer_report(class: &str, ans: &SolverAnswer) -> Report {
    let min_k = ans.min_k.and_then(MinOps::as_option);
    let mut text = if ans.decision {
        "yes".to_string()
    } else {
        "no".to_string()
    };
    match (ans.min_k, min_k) {
        (Some(_), Some(m)) => text.push_str(&format!(", min_k={m}")),
        (Some(MinOps::Infeasible), None) => text.push_str(", infeasible"),
        _ => {}
    }
    text.push('\n');
    if let Some(w) = &ans.witness {
        text.push_str(&w.to_string());
    }
    Report {
        text,
        json: json!({
            "decision": ans.decision,
            "class": class,
            "min_k": min_k,
            "infeasible": matches!(ans.min_k, Some(MinOps::Infeasible)),
            "witness": ans.witness.as_ref().map(|w| w.ops.iter().map(|op| op.to_string()).collect::<Vec<_>>()),
        }),
        code: if ans.decision { YES } else { NO },
    }
}

fn cmd_solve(
    inst: &BlockerInstance,
    class: &str,
    model: Option<&IntervalModel>,
    force_oracle: bool,
) -> CliResult<Report> {
    let (pi, kind) = (inst.pi, inst.kind);
    let chosen = if class == "auto" {
        let mut first_match = None;
        let mut pick = None;
        for c in GraphClass::AUTO_ORDER {
            if !c.contains(inst, model)? {
                continue;
            }
            first_match.get_or_insert(c);
            if c.supports(pi, kind) {
                pick = Some(c);
                break;
            }
        }
        match pick {
            Some(c) => Ok(c),
            None => Err(match first_match {
                Some(c) => c.unsupported_reason(pi, kind),
                None => format!("no supported class recognizes this graph for {kind} + {pi}"),
            }),
        }
    } else {
        let c: GraphClass = class.parse()?;
        if !c.supports(pi, kind) {
            Err(c.unsupported_reason(pi, kind))
        } else if !c.contains(inst, model)? {
            Err(format!("the graph is not recognized as {c}"))
        } else {
            Ok(c)
        }
    };
    match chosen {
        Ok(c) => Ok(answer_report(c.name(), &solve(c, inst, model)?)),
        Err(reason) if force_oracle => {
            let mut report = cmd_oracle(inst)?;
            report.text = format!("# {reason}; answered by exhaustive search\n{}", report.text);
            Ok(report)
        }
        Err(reason) => Err(CliError::Unsupported(reason)),
    }
}

fn cmd_oracle(inst: &BlockerInstance) -> CliResult<Report> {
    let r = oracle_min_k(&inst.graph, inst.pi, inst.kind, inst.d, None)?;
    let yes = r.min_k.is_some_and(|m| m <= inst.k);
    let ans = SolverAnswer {
        decision: yes,
        witness: if yes { r.witness } else { None },
        min_k: Some(r.min_k.map_or(MinOps::Infeasible, MinOps::Exactly)),
    };
    Ok(answer_report("oracle", &ans))
}

fn cmd_verify(inst: &BlockerInstance, w: &Witness) -> CliResult<Report> {
    let ok = verify_witness(inst, w)?;
    let end = inst.graph.apply_witness(w)?;
    let before = inst.pi.of(&inst.graph)?;
    let after = inst.pi.of(&end)?;
    Ok(Report {
        text: format!("{ok}\n{} {before} -> {after} with {} operations\n", inst.pi, w.len()),
        json: json!({ "valid": ok, "pi": inst.pi, "before": before, "after": after, "ops": w.len() }),
        code: if ok { YES } else { NO },
    })
}

fn cmd_recognize(g: &Graph, model: Option<&IntervalModel>) -> CliResult<Report> {
    let p1p3 = probe_graph("P1+P3").expect("known probe");
    let interval = match model {
        Some(m) => Some(m.validate(g)?),
        None if g.n() <= 10 => Some(find_interval_model(g).is_some()),
        None => None,
    };
    let co = cotree(g).ok();
    let split = split_partition(g, SplitFlavor::Any);
    let facts = json!({
        "tree": is_tree(g),
        "cograph": co.is_some(),
        "split": split.is_some(),
        "interval": interval,
        "chordal": is_chordal(g),
        "bipartite": is_bipartite(g),
        "cobipartite": is_cobipartite(g),
        "3p1free": is_3p1_free(g),
        "p1p3free": is_h_free(g, &p1p3)?,
        "trianglefree": is_triangle_free(g),
    });
    let mut text = String::new();
    for (name, v) in facts.as_object().expect("object literal") {
        let shown = match v {
            Value::Bool(b) => b.to_string(),
            _ => "unknown (give --model)".to_string(),
        };
        text.push_str(&format!("{name}: {shown}\n"));
    }
    let mut json = facts.clone();
    if let Some(t) = &co {
        text.push_str(&format!("cotree: {t}\n"));
        json["cotree"] = json!(t.to_string());
    }
    if let Some(p) = split_partition(g, SplitFlavor::Maximal) {
        text.push_str(&format!(
            "split clique: {:?}\nsplit independent: {:?}\n",
            p.clique, p.independent
        ));
        json["split_partition"] = json!({ "clique": p.clique, "independent": p.independent });
    }
    Ok(Report::ok(text, json))
}

fn cmd_classify(h: Option<&str>, pi: Option<Parameter>, kind: Option<OpKind>, table: bool) -> CliResult<Report> {
    if table {
        let mut text = String::from("H");
        let mut rows = Vec::new();
        let combos: Vec<_> = Parameter::ALL
            .into_iter()
            .flat_map(|p| [OpKind::Contract, OpKind::Delete].map(|k| (p, k)))
            .collect();
        for (p, k) in &combos {
            text.push_str(&format!("\t{p}/{k}"));
        }
        text.push('\n');
        for name in PROBES {
            let g = probe_graph(name).expect("known probe");
            text.push_str(name);
            let mut row = serde_json::Map::new();
            for &(p, k) in &combos {
                let v = classify(&g, p, k).verdict;
                text.push_str(&format!("\t{v}"));
                row.insert(format!("{p}/{k}"), json!(v.to_string()));
            }
            text.push('\n');
            rows.push(json!({ "h": name, "verdicts": row }));
        }
        return Ok(Report::ok(text, json!(rows)));
    }
    let h = h.ok_or_else(|| CliError::Usage("give H or --table".into()))?;
    let (pi, kind) = match (pi, kind) {
        (Some(p), Some(k)) => (p, k),
        _ => return Err(CliError::Usage("--pi and --kind are required".into())),
    };
    let g = if Path::new(h).exists() {
        Graph::parse_edge_list(&read(Path::new(h))?)?
    } else {
        probe_graph(h).ok_or_else(|| CliError::Usage(format!("'{h}' is neither a file nor a probe name")))?
    };
    let d = classify(&g, pi, kind);
    Ok(Report::ok(
        format!("{d}\n"),
        json!({ "verdict": d.verdict.to_string(), "rule": d.rule }),
    ))
}

fn instance_report(inst: &BlockerInstance) -> CliResult<Report> {
    let text = inst.to_json();
    let json: Value = serde_json::from_str(&text)?;
    Ok(Report::ok(text, json))
}

fn cmd_reduce(source: Source, input: &str, k: usize, l: usize, p: usize, variant: RbdsVariant) -> CliResult<Report> {
    let graph = || Graph::parse_edge_list(input);
    let inst = match source {
        Source::Rbds => {
            let src: RbdsInstance = input.parse()?;
            match variant {
                RbdsVariant::Alpha => reductions::reduce_rbds_to_split_alpha(&src)?,
                RbdsVariant::Chi => reductions::reduce_rbds_to_split_chi(&src)?,
            }
        }
        Source::OneInThreeSat => reductions::reduce_1in3sat_to_omega(&input.parse::<CnfFormula>()?)?,
        Source::Vc => reductions::reduce_vc_to_chordal(&graph()?, k)?,
        Source::Biclique => reductions::reduce_biclique_to_cobipartite_chi(&graph()?)?,
        Source::Cliqueproof => reductions::clique_proof_lift(&graph()?, l)?,
        Source::C4lift => reductions::lift_to_c4free_perfect(&graph()?, k)?,
        Source::Cobipartite => reductions::reduce_cobipartite_alpha_to_bipartite(&graph()?, k)?,
        Source::Girth => {
            let lifted = reductions::girth_lift(&graph()?, p);
            let text = lifted.to_edge_list();
            return Ok(Report::ok(text.clone(), json!({ "graph": text })));
        }
    };
    instance_report(&inst)
}

fn cmd_gen(class: GenClass, n: usize, seed: u64, p: f64, model_out: Option<&Path>) -> CliResult<Report> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Usage(format!("density {p} is not a probability")));
    }
    if model_out.is_some() && !matches!(class, GenClass::Interval) {
        return Err(CliError::Usage("--model-out only applies to --class interval".into()));
    }
    let rng = &mut generate::seeded(seed);
    let mut model = None;
    let g = match class {
        GenClass::Tree => generate::random_tree(n, rng),
        GenClass::Cograph => generate::random_cograph(n, rng),
        GenClass::Split => generate::random_split(n, p, rng),
        GenClass::Interval => {
            let m = generate::random_interval_model(n, 2 * n as i64, rng);
            let g = m.to_graph();
            model = Some(m);
            g
        }
        GenClass::Bipartite => generate::random_bipartite(n, p, rng),
        GenClass::Cobipartite => generate::random_cobipartite(n, p, rng),
        GenClass::Trianglefree => generate::random_triangle_free(n, p, rng),
        GenClass::ThreeP1Free => generate::random_3p1free(n, p, rng),
        GenClass::P1P3Free => generate::random_p1p3free(n, p, rng),
        GenClass::C4free => generate::random_c4free(n, p, rng),
    };
    let certified = match class {
        GenClass::Tree => n == 0 || is_tree(&g),
        GenClass::Cograph => cotree(&g).is_ok(),
        GenClass::Split => split_partition(&g, SplitFlavor::Any).is_some(),
        GenClass::Interval => model.as_ref().expect("set above").validate(&g)?,
        GenClass::Bipartite => is_bipartite(&g),
        GenClass::Cobipartite => is_cobipartite(&g),
        GenClass::Trianglefree => is_triangle_free(&g),
        GenClass::ThreeP1Free => is_3p1_free(&g),
        GenClass::P1P3Free => is_h_free(&g, &probe_graph("P1+P3").expect("known probe"))?,
        GenClass::C4free => blocker_core::recognize::is_c4_free(&g),
    };
    assert!(certified, "generator produced a graph outside its class");
    let text = g.to_edge_list();
    let mut json = json!({ "graph": text });
    if let Some(m) = &model {
        json["model"] = json!(m.to_string());
        if let Some(path) = model_out {
            fs::write(path, m.to_string()).map_err(|source| CliError::Io {
                path: path.to_owned(),
                source,
            })?;
        }
    }
    Ok(Report::ok(text, json))
}
