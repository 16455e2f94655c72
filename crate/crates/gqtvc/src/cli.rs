//! Command-line front end.
//!
//! Every subcommand produces a human-readable summary and a JSON report with
//! sorted keys and no timestamps, so the same arguments give byte-identical
//! reports whatever the thread count. Exit codes: 0 pass, 1 fail,
//! 2 inconclusive (budget), 3 usage or input error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gqtvc_core::exec::Ctx;
use gqtvc_core::formulas::{verify_on_graph, FormulaError, FormulaId, FormulaReport};
use gqtvc_core::geometry::{check_gq_axiom, point_graph, validate_pls, PartialLinearSpace};
use gqtvc_core::regularity::{check_isoregular, isoregularity_level, srg_parameters, IsoWitness};
use gqtvc_core::tvc::{
    check_tvc, count_k44_per_edge, count_type_anchored, find_distinguisher, type_census, GraphType, Mode, TvcError,
    TvcStatus, Witness,
};
use gqtvc_core::Graph;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exec::{Deadline, Pool};
use crate::{graph6, incidence, registry};

#[derive(Parser, Debug)]
#[command(name = "gqtvc", version, about = "Generalised quadrangles and the t-vertex condition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Built-in construction: w2, w3, q5_2, q5_3, t2star, payne.
    #[arg(long, alias = "gq", value_name = "NAME", group = "input")]
    pub construct: Option<String>,
    /// Graph in graph6 format (first non-empty line of the file).
    #[arg(long, value_name = "PATH", group = "input")]
    pub graph6: Option<PathBuf>,
    /// Geometry in the `p <points> l <lines>` incidence format.
    #[arg(long, value_name = "PATH", group = "input")]
    pub incidence: Option<PathBuf>,
    /// Use the dual geometry (swap points and lines).
    #[arg(long)]
    pub dual: bool,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Wall-clock budget; long scans report "inconclusive" when it runs out.
    #[arg(long, value_name = "SECONDS")]
    pub budget_seconds: Option<f64>,
    /// Write the machine-readable report here.
    #[arg(long, value_name = "PATH")]
    pub json_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exhaustive,
    Reduced,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a geometry and check the partial linear space and GQ axioms.
    Construct {
        #[command(flatten)]
        common: Common,
        /// Also write the geometry in incidence format.
        #[arg(long, value_name = "PATH")]
        incidence_out: Option<PathBuf>,
    },
    /// Strongly regular parameters of the (point) graph.
    CheckSrg {
        #[command(flatten)]
        common: Common,
    },
    /// k-isoregularity for k in 1..=3.
    CheckIsoregular {
        #[command(flatten)]
        common: Common,
        /// Subset size, 1..=3.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
    },
    /// The t-vertex condition on edges and non-edges.
    CheckTvc {
        #[command(flatten)]
        common: Common,
        /// Type order; exhaustive mode stops at 7, reduced mode at 8.
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=8))]
        t: u8,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Isoregularity level for reduced mode; defaults to the level the
        /// graph actually has (at most 3).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: Option<u8>,
    },
    /// First type of order t with additional valencies above k whose counts
    /// vary within a pair class.
    FindDistinguisher {
        #[command(flatten)]
        common: Common,
        /// Type order.
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=8))]
        t: u8,
        /// Only types whose added vertices all have valency above k; defaults
        /// to the graph's isoregularity level.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: Option<u8>,
    },
    /// Anchored count of one type (graph6, vertices 0 and 1 fixed).
    CountType {
        #[command(flatten)]
        common: Common,
        #[arg(long = "type", value_name = "GRAPH6")]
        ty: String,
        /// A single pair `x,y`; without it every pair of the type's class is
        /// counted.
        #[arg(long, value_name = "X,Y")]
        pair: Option<String>,
    },
    /// Per-edge counts of induced K4,4 with the endpoints on opposite sides.
    K44Census {
        #[command(flatten)]
        common: Common,
        /// Count every edge instead of stopping at the first difference.
        #[arg(long)]
        full: bool,
    },
    /// Write the (point) graph in graph6 format.
    ExportGraph6 {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Compare a closed-form count with brute force on a quadrangle.
    VerifyFormula {
        #[command(flatten)]
        common: Common,
        /// Formula id (e.g. type3a, complete-one-one-same/3, bridge/6) or `all`.
        #[arg(long)]
        formula: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("exactly one of --construct, --graph6, --incidence is required")]
    NoInput,
    #[error("unknown construction `{0}`; known: {}", registry::NAMES.join(", "))]
    UnknownConstruction(String),
    #[error("--dual needs a geometry input (--construct or --incidence)")]
    DualNeedsGeometry,
    #[error("this command needs a geometry input (--construct or --incidence)")]
    NeedsGeometry,
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed graph6: {0}")]
    Graph6(#[from] graph6::Graph6Error),
    #[error("malformed incidence file: {0}")]
    Incidence(#[from] incidence::IncidenceError),
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("--budget-seconds must be positive and finite")]
    Budget,
    #[error("--pair must be two distinct vertex indices `x,y` below the order")]
    Pair,
    #[error("{0}")]
    Tvc(#[from] TvcError),
    #[error("{0}")]
    Formula(#[from] FormulaError),
    #[error("cannot start thread pool: {0}")]
    Threads(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub report: Option<Value>,
}

struct Input {
    graph: Graph,
    geometry: Option<PartialLinearSpace>,
    provenance: Value,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })
}

fn load(common: &Common, ctx: Ctx<'_>) -> Result<Input, CliError> {
    if common.dual && common.graph6.is_some() {
        return Err(CliError::DualNeedsGeometry);
    }
    if let Some(name) = &common.construct {
        let c = registry::build(name, common.dual, ctx)
            .map_err(|e| CliError::Geometry(e.to_string()))?
            .ok_or_else(|| CliError::UnknownConstruction(name.clone()))?;
        let provenance = json!({ "kind": "construct", "name": c.name, "dual": c.dual, "parameters": c.parameters });
        return Ok(Input { graph: point_graph(&c.geometry), geometry: Some(c.geometry), provenance });
    }
    if let Some(path) = &common.incidence {
        let mut pls = incidence::parse(&read(path)?)?;
        pls = pls.validated().map_err(|w| CliError::Geometry(w.to_string()))?;
        if common.dual {
            pls = gqtvc_core::geometry::dualize(&pls).map_err(|w| CliError::Geometry(w.to_string()))?;
        }
        let provenance = json!({ "kind": "incidence", "path": path.display().to_string(), "dual": common.dual });
        return Ok(Input { graph: point_graph(&pls), geometry: Some(pls), provenance });
    }
    if let Some(path) = &common.graph6 {
        let text = read(path)?;
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        let graph = graph6::decode(line.trim())?;
        let provenance = json!({ "kind": "graph6", "path": path.display().to_string() });
        return Ok(Input { graph, geometry: None, provenance });
    }
    Err(CliError::NoInput)
}

fn common_of(cmd: &Command) -> &Common {
    match cmd {
        Command::Construct { common, .. }
        | Command::CheckSrg { common }
        | Command::CheckIsoregular { common, .. }
        | Command::CheckTvc { common, .. }
        | Command::FindDistinguisher { common, .. }
        | Command::CountType { common, .. }
        | Command::K44Census { common, .. }
        | Command::ExportGraph6 { common, .. }
        | Command::VerifyFormula { common, .. } => common,
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Construct { .. } => "construct",
        Command::CheckSrg { .. } => "check-srg",
        Command::CheckIsoregular { .. } => "check-isoregular",
        Command::CheckTvc { .. } => "check-tvc",
        Command::FindDistinguisher { .. } => "find-distinguisher",
        Command::CountType { .. } => "count-type",
        Command::K44Census { .. } => "k44-census",
        Command::ExportGraph6 { .. } => "export-graph6",
        Command::VerifyFormula { .. } => "verify-formula",
    }
}

pub fn type_json(ty: &GraphType) -> Value {
    json!({
        "order": ty.order(),
        "pair_adjacent": ty.pair_adjacent,
        "graph6": graph6::encode(&ty.base),
        "edges": ty.base.edges().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Irregular { vertices, degrees } => json!({
            "kind": "irregular",
            "vertices": [vertices.0, vertices.1],
            "degrees": [degrees.0, degrees.1],
        }),
        Witness::Pairs { ty, first, second } => json!({
            "kind": "pairs",
            "type": type_json(ty),
            "first": { "pair": [first.0 .0, first.0 .1], "count": first.1 },
            "second": { "pair": [second.0 .0, second.0 .1], "count": second.1 },
        }),
    }
}

fn status_parts(status: &TvcStatus) -> (Verdict, &'static str, Value) {
    match status {
        TvcStatus::Satisfied => (Verdict::Pass, "satisfied", Value::Null),
        TvcStatus::Violated(w) => (Verdict::Fail, "violated", witness_json(w)),
        TvcStatus::Inconclusive => (Verdict::Inconclusive, "inconclusive", Value::Null),
    }
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::Irregular { vertices, degrees } => {
            format!("vertices {} and {} have degrees {} and {}", vertices.0, vertices.1, degrees.0, degrees.1)
        }
        Witness::Pairs { ty, first, second } => format!(
            "type {} ({} pair) counts {} at {:?} but {} at {:?}",
            graph6::encode(&ty.base),
            if ty.pair_adjacent { "edge" } else { "non-edge" },
            first.1,
            first.0,
            second.1,
            second.0
        ),
    }
}

fn formula_json(r: &FormulaReport) -> Value {
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| {
            json!({
                "adjacent": c.adjacent,
                "expected": c.expected,
                "pairs": c.pairs,
                "exhausted": c.exhausted,
                "mismatch": c.mismatch.map(|((x, y), got)| json!({ "pair": [x, y], "count": got })),
            })
        })
        .collect();
    json!({ "id": r.id.to_string(), "passed": r.passed(), "classes": classes })
}

fn default_k(g: &Graph, k: Option<u8>) -> usize {
    k.map(usize::from).unwrap_or_else(|| isoregularity_level(g).max(1))
}

/// Runs one command against already loaded input.
fn execute(cmd: &Command, input: &Input, ctx: Ctx<'_>) -> Result<(Verdict, String, Value, Value), CliError> {
    let g = &input.graph;
    let mut text = String::new();
    let mut settings = json!({});
    let (verdict, result) = match cmd {
        Command::Construct { incidence_out, .. } => {
            let pls = input.geometry.as_ref().ok_or(CliError::NeedsGeometry)?;
            let (pls_ok, order) = match validate_pls(pls) {
                Ok(o) => (true, Some(o)),
                Err(w) => {
                    writeln!(text, "partial linear space: FAIL ({w})").unwrap();
                    (false, None)
                }
            };
            let gq = pls_ok && check_gq_axiom(pls, ctx).is_ok();
            if let Some((s, t)) = order {
                writeln!(text, "points {} lines {} order ({s}, {t})", pls.num_points, pls.num_lines()).unwrap();
                writeln!(text, "GQ axiom: {}", if gq { "holds" } else { "FAILS" }).unwrap();
            }
            if let Some(path) = incidence_out {
                std::fs::write(path, incidence::export(pls))
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
            }
            let verdict = if gq { Verdict::Pass } else { Verdict::Fail };
            let result = json!({
                "points": pls.num_points,
                "lines": pls.num_lines(),
                "order": order.map(|(s, t)| [s, t]),
                "partial_linear_space": pls_ok,
                "gq_axiom": gq,
            });
            (verdict, result)
        }
        Command::CheckSrg { .. } => match srg_parameters(g) {
            Ok(Some(p)) => {
                writeln!(text, "strongly regular {p}; feasibility identity {}", p.is_feasible()).unwrap();
                let result = json!({
                    "srg": { "v": p.v, "k": p.k, "lambda": p.lambda, "mu": p.mu },
                    "feasible": p.is_feasible(),
                });
                (Verdict::Pass, result)
            }
            Ok(None) => {
                writeln!(text, "not strongly regular").unwrap();
                (Verdict::Fail, json!({ "srg": null, "regular_degree": gqtvc_core::regularity::check_regular(g) }))
            }
            Err(d) => {
                let kind = if d.complete { "complete" } else { "edgeless" };
                writeln!(text, "degenerate ({kind}) graph").unwrap();
                (Verdict::Fail, json!({ "srg": null, "degenerate": kind }))
            }
        },
        Command::CheckIsoregular { k, .. } => {
            let report = check_isoregular(g, *k as usize);
            let table: BTreeMap<String, usize> = report
                .table
                .iter()
                .map(|(code, v)| (format!("order{}-edges{}-mask{}", code.order, code.edge_count(), code.bits), *v))
                .collect();
            let witness = report.witness.as_ref().map(|IsoWitness { first, second, .. }| {
                json!({
                    "first": { "set": first.0, "valency": first.1 },
                    "second": { "set": second.0, "valency": second.1 },
                })
            });
            writeln!(text, "{k}-isoregular: {}", report.passed()).unwrap();
            for (key, v) in &table {
                writeln!(text, "  {key}: {v}").unwrap();
            }
            let verdict = if report.passed() { Verdict::Pass } else { Verdict::Fail };
            (verdict, json!({ "k": k, "passed": report.passed(), "valencies": table, "witness": witness }))
        }
        Command::CheckTvc { t, mode, k, .. } => {
            let mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Reduced => Mode::Reduced { k: default_k(g, *k) },
            };
            let (mode_name, k_used) = match mode {
                Mode::Exhaustive => ("exhaustive", None),
                Mode::Reduced { k } => ("reduced", Some(k)),
            };
            settings = json!({ "t": t, "mode": mode_name, "k": k_used });
            let v = check_tvc(g, *t as usize, mode, ctx)?;
            let (verdict, status, witness) = status_parts(&v.status);
            writeln!(text, "{t}-vertex condition ({mode_name}): {status}").unwrap();
            if let TvcStatus::Violated(w) = &v.status {
                writeln!(text, "  {}", describe_witness(w)).unwrap();
            }
            (verdict, json!({ "status": status, "types_checked": v.types_checked, "witness": witness }))
        }
        Command::FindDistinguisher { t, k, .. } => {
            let k = default_k(g, *k);
            settings = json!({ "t": t, "k": k });
            let status = find_distinguisher(g, *t as usize, k, ctx)?;
            let (verdict, _, witness) = status_parts(&status);
            match &status {
                TvcStatus::Satisfied => writeln!(text, "no distinguishing type: {t}-vertex condition holds").unwrap(),
                TvcStatus::Violated(w) => writeln!(text, "distinguisher: {}", describe_witness(w)).unwrap(),
                TvcStatus::Inconclusive => writeln!(text, "budget exhausted").unwrap(),
            }
            let found = matches!(status, TvcStatus::Violated(_));
            (verdict, json!({ "found": found, "witness": witness }))
        }
        Command::CountType { ty, pair, .. } => {
            let base = graph6::decode(ty)?;
            let ty = GraphType::new(base)?;
            settings = json!({ "type": type_json(&ty) });
            match pair {
                Some(p) => {
                    let (x, y) = parse_pair(p, g.order())?;
                    let count = count_type_anchored(g, &ty, x, y)?;
                    writeln!(text, "count at ({x}, {y}): {count}").unwrap();
                    (Verdict::Pass, json!({ "pair": [x, y], "count": count }))
                }
                None => match type_census(g, &ty, ctx) {
                    None => {
                        writeln!(text, "budget exhausted").unwrap();
                        (Verdict::Inconclusive, json!({ "histogram": null }))
                    }
                    Some(h) => {
                        writeln!(text, "counts over {} pairs: {h:?}", h.values().sum::<u64>()).unwrap();
                        let verdict = if h.len() <= 1 { Verdict::Pass } else { Verdict::Fail };
                        let hist: BTreeMap<String, u64> = h.iter().map(|(c, n)| (c.to_string(), *n)).collect();
                        (verdict, json!({ "histogram": hist, "constant": h.len() <= 1 }))
                    }
                },
            }
        }
        Command::K44Census { full, .. } => {
            settings = json!({ "full": full });
            let census = count_k44_per_edge(g, !full, ctx);
            let mut hist: BTreeMap<u64, (u64, (usize, usize))> = BTreeMap::new();
            for &(e, c) in &census.counts {
                hist.entry(c).or_insert((0, e)).0 += 1;
            }
            let verdict = if census.distinct.len() >= 2 {
                Verdict::Fail
            } else if census.exhausted {
                Verdict::Inconclusive
            } else {
                Verdict::Pass
            };
            writeln!(text, "edges scanned {}; distinct counts {:?}", census.counts.len(), census.distinct).unwrap();
            for (c, (n, e)) in &hist {
                writeln!(text, "  count {c}: {n} edge(s), first {e:?}").unwrap();
            }
            let values: Vec<Value> =
                hist.iter().map(|(c, (n, e))| json!({ "count": c, "edges": n, "first_edge": [e.0, e.1] })).collect();
            let result = json!({
                "edges_scanned": census.counts.len(),
                "complete": census.complete,
                "exhausted": census.exhausted,
                "distinct": census.distinct.iter().collect::<Vec<_>>(),
                "values": values,
            });
            (verdict, result)
        }
        Command::ExportGraph6 { out, .. } => {
            let s = graph6::encode(g);
            match out {
                Some(path) => {
                    std::fs::write(path, format!("{s}\n"))
                        .map_err(|source| CliError::Io { path: path.clone(), source })?;
                    writeln!(text, "wrote {} vertices to {}", g.order(), path.display()).unwrap();
                }
                None => writeln!(text, "{s}").unwrap(),
            }
            (Verdict::Pass, json!({ "graph6": s }))
        }
        Command::VerifyFormula { formula, .. } => {
            let pls = input.geometry.as_ref().ok_or(CliError::NeedsGeometry)?;
            let (s, t) = validate_pls(pls).map_err(|w| CliError::Geometry(w.to_string()))?;
            check_gq_axiom(pls, ctx).map_err(|_| CliError::Geometry("GQ axiom fails".into()))?;
            let ids: Vec<FormulaId> = if formula == "all" {
                FormulaId::catalogue(3..=5)
                    .into_iter()
                    .filter(|id| t == s * s || matches!(id, FormulaId::Order5(_)))
                    .collect()
            } else {
                vec![formula.parse()?]
            };
            settings = json!({ "formula": formula });
            let mut reports = Vec::new();
            let mut verdict = Verdict::Pass;
            for id in ids {
                let r = verify_on_graph(g, (s, t), id, ctx)?;
                let status = if r.exhausted() {
                    "inconclusive"
                } else if r.passed() {
                    "pass"
                } else {
                    "FAIL"
                };
                writeln!(text, "{id}: {status}").unwrap();
                for c in &r.classes {
                    if let Some(((x, y), got)) = c.mismatch {
                        writeln!(text, "  expected {:?}, got {got} at ({x}, {y})", c.expected).unwrap();
                    }
                }
                if !r.passed() {
                    verdict =
                        if r.exhausted() && verdict == Verdict::Pass { Verdict::Inconclusive } else { Verdict::Fail };
                }
                reports.push(formula_json(&r));
            }
            (verdict, json!({ "order": [s, t], "formulas": reports }))
        }
    };
    Ok((verdict, text, settings, result))
}

fn parse_pair(p: &str, n: usize) -> Result<(usize, usize), CliError> {
    let (a, b) = p.split_once(',').ok_or(CliError::Pair)?;
    let x: usize = a.trim().parse().map_err(|_| CliError::Pair)?;
    let y: usize = b.trim().parse().map_err(|_| CliError::Pair)?;
    if x == y || x >= n || y >= n {
        return Err(CliError::Pair);
    }
    Ok((x, y))
}

fn run_command(cli: &Cli) -> Result<Outcome, CliError> {
    let common = common_of(&cli.command);
    let budget = match common.budget_seconds {
        None => None,
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(_) => return Err(CliError::Budget),
    };
    let pool = Pool::new(common.threads).map_err(|e| CliError::Threads(e.to_string()))?;
    let deadline = Deadline::after(budget);
    let ctx = Ctx { exec: &pool, budget: &deadline };
    let input = load(common, ctx)?;
    let (verdict, body, mut settings, result) = execute(&cli.command, &input, ctx)?;
    if let Value::Object(map) = &mut settings {
        map.insert("threads".into(), json!(common.threads));
        map.insert("budget_seconds".into(), json!(common.budget_seconds));
    }
    let report = json!({
        "command": command_name(&cli.command),
        "input": input.provenance,
        "graph": { "order": input.graph.order(), "edges": input.graph.edge_count() },
        "settings": settings,
        "verdict": verdict.name(),
        "result": result,
    });
    let mut text = format!(
        "{} on {} vertices, {} edges\n",
        command_name(&cli.command),
        input.graph.order(),
        input.graph.edge_count()
    );
    text.push_str(&body);
    writeln!(text, "verdict: {}", verdict.name()).unwrap();
    if let Some(path) = &common.json_out {
        let mut s = serde_json::to_string_pretty(&report).expect("report serialises");
        s.push('\n');
        std::fs::write(path, s).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(Outcome { code: verdict.code(), text, report: Some(report) })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            return Outcome { code, text: e.render().to_string(), report: None };
        }
    };
    match run_command(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: 3, text: format!("error: {e}\n"), report: None },
    }
}
