use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use edgedom_core::families::{
    cc_edge_set, check_min_set_structure, check_ratio, generate, s_edge_set, FamilyKind,
    LabelledTree, MinSetProperty, Ratio,
};
use edgedom_core::reduction::{build_reduction, reduction_equivalence_check};
use edgedom_core::{
    brute_min_ed, brute_min_ted, build_rooted, gamma_t_tree, gamma_tree, is_edge_dominating,
    is_total_edge_dominating, EdgeSet, Error, OracleConfig, Root, SolveResult,
};

use crate::bench::{run_bench, to_csv};
use crate::dimacs::{parse_dimacs, violations_with_lines};
use crate::format::{
    parse_graph, write_edge_labelled, write_graph, write_vertex_labelled, NamedGraph,
};
use crate::report::{digest, ext_json, RunReport};

/// Edge limit for the exact check behind `reduce --check`.
pub const REDUCE_CHECK_CAP: usize = 64;

#[derive(Parser, Debug)]
#[command(
    name = "edgedom",
    version,
    about = "Exact edge domination and total edge domination"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Vertex-labelled trees with γ'_t = 2γ'.
    #[value(name = "T", alias = "t")]
    T,
    /// Edge-labelled trees with γ'_t = γ'.
    #[value(name = "Tt", alias = "tt")]
    Tt,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// γ'_t of a tree by the linear-time program.
    Solve {
        path: PathBuf,
        /// Leaf to root the tree at.
        #[arg(long)]
        root: Option<String>,
    },
    /// Exact γ' (or γ'_t with --total) of a small graph.
    Brute {
        path: PathBuf,
        #[arg(long)]
        total: bool,
    },
    /// Build the reduction graph of a DIMACS instance.
    Reduce {
        cnf: PathBuf,
        /// Also compare exhaustive SAT with the exact γ'_t of the graph.
        #[arg(long)]
        check: bool,
        /// Write the graph here, and tags and k next to it as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a member of a tree family, or classify a tree.
    Family {
        #[arg(required_unless_present = "check")]
        kind: Option<Kind>,
        #[arg(long, conflicts_with = "check")]
        seed: Option<u64>,
        #[arg(long, conflicts_with = "check")]
        budget: Option<usize>,
        /// Tree file (labels optional) to classify instead of generating.
        #[arg(long, conflicts_with = "kind")]
        check: Option<PathBuf>,
        /// Write the generated labelled tree here.
        #[arg(long, conflicts_with = "check")]
        out: Option<PathBuf>,
    },
    /// Check an edge set against a graph.
    Verify {
        graph: PathBuf,
        /// Edge list naming the set's edges.
        set: PathBuf,
        #[arg(long)]
        total: bool,
    },
    /// Time the tree program on random trees; CSV rows of size, ns and ns per edge.
    Bench {
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl fmt::Display) -> CliError {
        CliError {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::OracleTooLarge { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Result payload plus a one-line human summary.
struct Outcome {
    result: Value,
    summary: String,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(NamedGraph, String), CliError> {
    let text = read(path)?;
    let file =
        parse_graph(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok((file.graph, text))
}

fn witness_json(g: &NamedGraph, r: &SolveResult) -> Value {
    match &r.witness {
        Some(w) => json!(g.set_names(w)),
        None => Value::Null,
    }
}

fn solve(path: &Path, root: Option<&str>) -> Result<(Outcome, String), CliError> {
    let (g, text) = load_graph(path)?;
    let root = match root {
        None => Root::Auto,
        Some(name) => Root::Vertex(
            g.id(name)
                .ok_or_else(|| CliError::input(format!("unknown root vertex {name:?}")))?,
        ),
    };
    let rt = build_rooted(&g.graph, root)?;
    let r = gamma_t_tree(&rt);
    let result = json!({
        "vertices": g.graph.vertex_count(),
        "edges": g.graph.edge_count(),
        "root": g.names[rt.root()],
        "gamma_t": ext_json(r.value),
        "witness": witness_json(&g, &r),
    });
    let summary = format!("gamma_t = {}", r.value);
    Ok((Outcome { result, summary }, text))
}

fn brute(path: &Path, total: bool) -> Result<(Outcome, String), CliError> {
    let (g, text) = load_graph(path)?;
    let r = if total {
        brute_min_ted(&g.graph)?
    } else {
        brute_min_ed(&g.graph)?
    };
    let result = json!({
        "total": total,
        "value": ext_json(r.value),
        "witness": witness_json(&g, &r),
    });
    let name = if total { "gamma_t" } else { "gamma" };
    let summary = format!("{name} = {}", r.value);
    Ok((Outcome { result, summary }, text))
}

fn reduce(path: &Path, check: bool, out: Option<&Path>) -> Result<(Outcome, String), CliError> {
    let text = read(path)?;
    let cnf =
        parse_dimacs(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let violations = violations_with_lines(&cnf);
    if !violations.is_empty() {
        return Err(CliError::input(format!(
            "{} is not a SAT-3 restricted instance:\n  {}",
            path.display(),
            violations.join("\n  ")
        )));
    }
    let red = build_reduction(&cnf.instance)?;
    let tags: Vec<String> = (0..red.graph.vertex_count()).map(|v| red.tag(v)).collect();
    let named = NamedGraph::with_names(red.graph.clone(), tags.clone());
    let edges: Vec<[&str; 2]> = (0..red.graph.edge_count())
        .map(|e| named.edge_names(e))
        .collect();
    let homogeneous: Vec<usize> = red.homogeneous_clauses.iter().map(|l| l + 1).collect();
    let mut result = json!({
        "num_vars": cnf.instance.num_vars,
        "num_clauses": cnf.instance.clauses.len(),
        "homogeneous_clauses": homogeneous,
        "vertices": red.graph.vertex_count(),
        "edges": red.graph.edge_count(),
        "k": red.k,
        "vertex_tags": tags,
        "edge_list": edges,
    });
    let mut summary = format!(
        "{} vertices, {} edges, k = {}",
        red.graph.vertex_count(),
        red.graph.edge_count(),
        red.k
    );
    if check {
        let rep =
            reduction_equivalence_check(&cnf.instance, &OracleConfig::with_cap(REDUCE_CHECK_CAP))?;
        result["check"] = json!({
            "satisfiable": rep.satisfiable,
            "gamma_t": ext_json(rep.gamma_t),
            "agree": rep.agree,
        });
        summary.push_str(&format!(
            "; satisfiable = {}, gamma_t = {}, agree = {}",
            rep.satisfiable, rep.gamma_t, rep.agree
        ));
    }
    if let Some(out) = out {
        write(out, &write_graph(&named))?;
        let side = companion_path(out);
        let meta = json!({ "k": red.k, "vertex_tags": result["vertex_tags"] });
        write(&side, &format!("{meta:#}\n"))?;
    }
    Ok((Outcome { result, summary }, text))
}

/// `graph.txt` → `graph.txt.json`.
pub fn companion_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn labelled_json(t: &LabelledTree) -> Value {
    let g = NamedGraph::numbered(t.graph().clone());
    let edges: Vec<[&str; 2]> = (0..g.graph.edge_count()).map(|e| g.edge_names(e)).collect();
    let labels: Vec<String> = match t {
        LabelledTree::Vertex(t) => t.labels().iter().map(|l| l.to_string()).collect(),
        LabelledTree::Edge(t) => t.labels().iter().map(|l| l.to_string()).collect(),
    };
    let on = match t {
        LabelledTree::Vertex(_) => "vertices",
        LabelledTree::Edge(_) => "edges",
    };
    json!({ "vertices": g.graph.vertex_count(), "edges": edges, "labels_on": on, "labels": labels })
}

fn family_generate(
    kind: Kind,
    seed: u64,
    budget: usize,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let fk = match kind {
        Kind::T => FamilyKind::T,
        Kind::Tt => FamilyKind::Tt,
    };
    let gen = generate(fk, seed, budget);
    let g = gen.tree.graph();
    let ratio = check_ratio(g)?;
    let (set, property, mode) = match &gen.tree {
        LabelledTree::Vertex(t) => (
            cc_edge_set(t),
            MinSetProperty::DisjointNeighborhoods,
            Ratio::Double,
        ),
        LabelledTree::Edge(t) => (s_edge_set(t), MinSetProperty::NontrivialStars, Ratio::Equal),
    };
    let set = set?;
    let structured = check_min_set_structure(g, &set, property).unwrap_or(false);
    let trace: Vec<Value> = gen
        .steps
        .iter()
        .map(|s| json!({ "op": s.op.name(), "site": s.site }))
        .collect();
    let ok = ratio.holds(mode) && gen.tree.satisfies_observations() && structured;
    let result = json!({
        "kind": format!("{kind:?}"),
        "seed": seed,
        "budget": budget,
        "start": labelled_json(&gen.start),
        "trace": trace,
        "tree": labelled_json(&gen.tree),
        "check": {
            "gamma": ext_json(ratio.gamma),
            "gamma_t": ext_json(ratio.gamma_t),
            "ratio": ratio.ratio.as_str(),
            "observations": gen.tree.satisfies_observations(),
            "labelled_set_size": set.len(),
            "labelled_set_is_minimum_with_shape": structured,
            "ok": ok,
        },
    });
    if let Some(out) = out {
        let text = match &gen.tree {
            LabelledTree::Vertex(t) => write_vertex_labelled(t),
            LabelledTree::Edge(t) => write_edge_labelled(t),
        };
        write(out, &text)?;
    }
    let summary = format!(
        "{} steps, {} vertices, gamma = {}, gamma_t = {}, {}",
        gen.steps.len(),
        g.vertex_count(),
        ratio.gamma,
        ratio.gamma_t,
        if ok { "verified" } else { "CHECK FAILED" }
    );
    Ok(Outcome { result, summary })
}

fn family_check(path: &Path) -> Result<(Outcome, String), CliError> {
    let text = read(path)?;
    let file =
        parse_graph(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let ratio = check_ratio(&file.graph.graph)?;
    let (labels, violation) = if !file.vertex_labels.is_empty() {
        let t = file.vertex_labelled().map_err(CliError::input)?;
        (json!("vertices"), t.observation_violation())
    } else if !file.edge_labels.is_empty() {
        let t = file.edge_labelled().map_err(CliError::input)?;
        (json!("edges"), t.observation_violation())
    } else {
        (Value::Null, None)
    };
    let observations = if labels.is_null() {
        Value::Null
    } else {
        json!(violation.is_none())
    };
    let result = json!({
        "gamma": ext_json(ratio.gamma),
        "gamma_t": ext_json(ratio.gamma_t),
        "ratio": ratio.ratio.as_str(),
        "star": ratio.star,
        "double_star": ratio.double_star,
        "labels_on": labels,
        "observations": observations,
        "violation": violation,
    });
    let summary = format!(
        "gamma = {}, gamma_t = {}: {}",
        ratio.gamma,
        ratio.gamma_t,
        ratio.ratio.as_str()
    );
    Ok((Outcome { result, summary }, text))
}

fn verify(graph: &Path, set: &Path, total: bool) -> Result<(Outcome, String), CliError> {
    let (g, mut text) = load_graph(graph)?;
    let set_text = read(set)?;
    let set_file =
        parse_graph(&set_text).map_err(|e| CliError::input(format!("{}: {e}", set.display())))?;
    let sg = &set_file.graph;
    let mut f = EdgeSet::new();
    for e in 0..sg.graph.edge_count() {
        let [a, b] = sg.edge_names(e);
        let edge = match (g.id(a), g.id(b)) {
            (Some(u), Some(v)) => g.graph.edge_between(u, v),
            _ => None,
        };
        let edge =
            edge.ok_or_else(|| CliError::input(format!("{a} {b} is not an edge of the graph")))?;
        f.insert(edge);
    }
    text.push('\0');
    text.push_str(&set_text);
    let dominating = if total {
        is_total_edge_dominating(&g.graph, &f)?
    } else {
        is_edge_dominating(&g.graph, &f)?
    };
    let optimum = if g.graph.edge_count() > 0 && g.graph.is_tree() {
        let rt = build_rooted(&g.graph, Root::Auto)?;
        Some(
            if total {
                gamma_t_tree(&rt)
            } else {
                gamma_tree(&rt)
            }
            .value,
        )
    } else {
        let r = if total {
            brute_min_ted(&g.graph)
        } else {
            brute_min_ed(&g.graph)
        };
        match r {
            Ok(r) => Some(r.value),
            Err(Error::OracleTooLarge { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    };
    let minimum = optimum.map(|o| dominating && edgedom_core::ExtNat::from_usize(f.len()) == o);
    let result = json!({
        "total": total,
        "size": f.len(),
        "dominating": dominating,
        "optimum": optimum.map(ext_json),
        "minimum": minimum,
    });
    let summary = format!(
        "{} edges, {}dominating{}",
        f.len(),
        if dominating { "" } else { "not " },
        match minimum {
            Some(true) => ", minimum",
            Some(false) => ", not minimum",
            None => ", optimum unknown (graph too large)",
        }
    );
    Ok((Outcome { result, summary }, text))
}

fn bench(sizes: &[usize], seed: u64, out: Option<&Path>) -> Result<Outcome, CliError> {
    if sizes.contains(&0) {
        return Err(CliError::input("sizes must be positive"));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::input("sizes must be strictly ascending"));
    }
    let rows = run_bench(sizes, seed);
    let csv = to_csv(&rows);
    if let Some(out) = out {
        write(out, &csv)?;
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "size": r.size, "ns": r.ns as u64, "ns_per_edge": r.ns_per_edge }))
        .collect();
    let summary = format!("{} sizes timed", rows.len());
    Ok(Outcome {
        result: json!({ "seed": seed, "rows": json_rows, "csv": csv }),
        summary,
    })
}

fn echo(cmd: &Command) -> Value {
    let p = |p: &Path| p.display().to_string();
    match cmd {
        Command::Solve { path, root } => json!({ "name": "solve", "path": p(path), "root": root }),
        Command::Brute { path, total } => {
            json!({ "name": "brute", "path": p(path), "total": total })
        }
        Command::Reduce { cnf, check, out } => {
            json!({ "name": "reduce", "path": p(cnf), "check": check, "out": out.as_deref().map(p) })
        }
        Command::Family {
            kind,
            seed,
            budget,
            check,
            out,
        } => json!({
            "name": "family",
            "kind": kind.map(|k| format!("{k:?}")),
            "seed": seed,
            "budget": budget,
            "check": check.as_deref().map(p),
            "out": out.as_deref().map(p),
        }),
        Command::Verify { graph, set, total } => {
            json!({ "name": "verify", "graph": p(graph), "set": p(set), "total": total })
        }
        Command::Bench { sizes, seed, out } => {
            json!({ "name": "bench", "sizes": sizes, "seed": seed, "out": out.as_deref().map(p) })
        }
    }
}

pub const DEFAULT_BUDGET: usize = 10;

/// Runs one parsed command.
pub fn execute(cmd: &Command) -> Result<(RunReport, String), CliError> {
    let start = Instant::now();
    let command = echo(cmd);
    let (outcome, input) = match cmd {
        Command::Solve { path, root } => solve(path, root.as_deref())?,
        Command::Brute { path, total } => brute(path, *total)?,
        Command::Reduce { cnf, check, out } => reduce(cnf, *check, out.as_deref())?,
        Command::Family {
            check: Some(path), ..
        } => family_check(path)?,
        Command::Family {
            kind,
            seed,
            budget,
            out,
            ..
        } => {
            let kind = kind.ok_or_else(|| CliError::input("family needs a kind or --check"))?;
            let o = family_generate(
                kind,
                seed.unwrap_or(0),
                budget.unwrap_or(DEFAULT_BUDGET),
                out.as_deref(),
            )?;
            (o, command.to_string())
        }
        Command::Verify { graph, set, total } => verify(graph, set, *total)?,
        Command::Bench { sizes, seed, out } => {
            (bench(sizes, *seed, out.as_deref())?, command.to_string())
        }
    };
    let report = RunReport {
        command,
        input_digest: digest(input.as_bytes()),
        result: outcome.result,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok((report, outcome.summary))
}

/// Parses arguments, runs the command, prints the JSON report to stdout and
/// a summary to stderr. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok((report, summary)) => {
            println!("{}", report.to_json());
            eprintln!("{summary} ({:.1} ms)", report.wall_ms);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}
