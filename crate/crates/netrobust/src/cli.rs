//! Command-line surface: generation, a-priori reports, attack traces,
//! robustness reports, cross-network comparison, threshold detection,
//! rewiring optimization, and the bundled table reproduction.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/parameter error. Machine
//! artifacts go to files or stdout; progress goes to stderr.

use std::collections::BTreeMap;
use std::io::Write as IoWrite;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use crate::attacks::{AttackPlan, StrategyId, TargetKind, TieBreak};
use crate::engine::{
    averaged, detect_threshold, evaluate, exa_measure, measures_needed, rank_values, run_trace,
    write_trace_csv, DriverRoute, EvalOptions, MeasureId, MeasureOutcome, RobustnessReport, Scheme,
    SchemePick, StopRule,
};
use crate::error::{Error, Result};
use crate::generators::{canonical4, generate, GeneratorConfig, ModelId, CANONICAL_DIRECTED, CANONICAL_UNDIRECTED};
use crate::graph::Graph;
use crate::measures::MeasureSet;
use crate::optimize::{optimize, Algorithm, Constraint, Objective, OptimizeConfig};

#[derive(Parser)]
#[command(name = "netrobust", version, about = "Network robustness measurement toolkit", disable_help_subcommand = true)]
struct Cli {
    /// Cap the worker thread count (default: NETROBUST_THREADS or all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic network model or canonical 4-node topology.
    Gen(GenArgs),
    /// One-shot topological and spectral indicators of a network.
    Apriori(AprioriArgs),
    /// Simulate an attack and write the functionality curve as CSV.
    Attack(AttackArgs),
    /// Evaluate scalar robustness measures for one network.
    Robustness(RobustnessArgs),
    /// Compare networks under several strategies and measures.
    Compare(CompareArgs),
    /// Detect the destruction threshold of an attack run.
    Threshold(ThresholdArgs),
    /// Optimize robustness by degree-preserving rewiring.
    Optimize(OptimizeArgs),
    /// Rebuild the bundled comparison tables.
    ReproduceTables(ReproduceArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Model id: er, sw-nw, sw-ws, rt, rh, eh, ba, sf, os, qs.
    #[arg(long, conflicts_with = "canonical")]
    model: Option<String>,
    /// Canonical 4-node topology name (FUL, LOP, ...) instead of a model.
    #[arg(long)]
    canonical: Option<String>,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    /// Mean total degree.
    #[arg(long, default_value_t = 10.0)]
    k: f64,
    #[arg(long)]
    directed: bool,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Model-specific parameter as key=value (rewire-prob, sf-alpha, os-swaps).
    #[arg(long = "param")]
    params: Vec<String>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct AprioriArgs {
    input: PathBuf,
    /// Output format (json only).
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AttackArgs {
    input: PathBuf,
    /// random, mdta, mbta, damage, critical or wprob.
    #[arg(long)]
    strategy: String,
    #[arg(long, default_value = "node")]
    target: String,
    /// Weights for wprob as a1,a2.
    #[arg(long)]
    alpha: Option<String>,
    /// Rank by intact-network scores instead of recomputing each step.
    #[arg(long = "static")]
    static_scores: bool,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Stop after this many attacks.
    #[arg(long = "stop-h")]
    stop_h: Option<usize>,
    /// Also sample driver-node counts (MIT when directed, ECT otherwise).
    #[arg(long)]
    drivers: bool,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct RobustnessArgs {
    input: PathBuf,
    #[arg(long)]
    strategy: String,
    #[arg(long, default_value = "node")]
    target: String,
    /// Comma-separated measure ids (r1,r2,r1e,r3,r3e,r6,r7,r8,r9,r10,r15,r15n).
    #[arg(long)]
    measures: String,
    /// Comma-separated schemes: cd, td.
    #[arg(long, default_value = "cd")]
    scheme: String,
    /// Threshold detection parameter for the TD scheme.
    #[arg(long, default_value_t = 0.05)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Truncate the run after this many attacks (reported under td).
    #[arg(long = "stop-h")]
    stop_h: Option<usize>,
    /// Driver-count source for controllability measures: mit or ect.
    #[arg(long)]
    driver: Option<String>,
    /// Use denominator N instead of N - i in driver densities.
    #[arg(long)]
    full_n: bool,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the per-step curve of the first repeat.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// canonical4-undirected, canonical4-directed, or comma-separated files.
    #[arg(long)]
    nets: String,
    /// Comma-separated strategies; exa averages all removal orders.
    #[arg(long)]
    strategies: String,
    #[arg(long)]
    measures: String,
    /// Emit fractional rank rows in addition to values.
    #[arg(long)]
    ranks: bool,
    #[arg(long, default_value = "node")]
    target: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    driver: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ThresholdArgs {
    input: PathBuf,
    #[arg(long, default_value = "mdta")]
    strategy: String,
    #[arg(long, default_value = "node")]
    target: String,
    #[arg(long, default_value_t = 0.05)]
    p: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OptimizeArgs {
    input: PathBuf,
    #[arg(long, default_value = "r1")]
    measure: String,
    #[arg(long, default_value = "mdta")]
    strategy: String,
    /// hc (hill climbing) or sa (simulated annealing).
    #[arg(long, default_value = "hc")]
    algo: String,
    #[arg(long, default_value_t = 1000)]
    iters: usize,
    #[arg(long = "sa-temp", default_value_t = 0.1)]
    sa_temp: f64,
    #[arg(long = "sa-cool", default_value_t = 0.995)]
    sa_cool: f64,
    /// degrees, avg, or none.
    #[arg(long, default_value = "degrees")]
    preserve: String,
    #[arg(long = "keep-connected")]
    keep_connected: bool,
    /// Objective scheme: cd or td.
    #[arg(long, default_value = "cd")]
    scheme: String,
    #[arg(long, default_value_t = 0.05)]
    p: f64,
    /// Objective evaluation repeats (for randomized strategies).
    #[arg(long, default_value_t = 1)]
    eval_repeats: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// desk (fast: exact tables plus a reduced statistical table) or paper.
    #[arg(long, default_value = "desk")]
    scale: String,
    /// Output directory for the CSV bundle.
    #[arg(short, long, default_value = "tables")]
    output: PathBuf,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

/// Reproducibility record embedded in every JSON artifact.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RunManifest {
    pub command: String,
    pub args: Vec<String>,
    pub seed: u64,
    pub version: String,
    /// Input path -> SHA-256 digest.
    pub inputs: BTreeMap<String, String>,
    pub duration_ms: u64,
}

impl RunManifest {
    fn new(command: &str, seed: u64) -> Self {
        RunManifest {
            command: command.into(),
            args: std::env::args().skip(1).collect(),
            seed,
            version: env!("CARGO_PKG_VERSION").into(),
            inputs: BTreeMap::new(),
            duration_ms: 0,
        }
    }

    fn digest(&mut self, path: &Path) -> Result<()> {
        let bytes = std::fs::read(path).map_err(|e| {
            Error::InvalidParameter(format!("cannot read {}: {}", path.display(), e))
        })?;
        let hash = Sha256::digest(&bytes);
        let hex: String = hash.iter().map(|b| format!("{:02x}", b)).collect();
        self.inputs.insert(path.display().to_string(), hex);
        Ok(())
    }
}

/// Parses argv and runs; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(t) = cli.threads.or_else(|| {
        std::env::var("NETROBUST_THREADS").ok().and_then(|v| v.parse().ok())
    }) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("netrobust: error: {}", e);
            2
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Gen(a) => cmd_gen(a),
        Command::Apriori(a) => cmd_apriori(a),
        Command::Attack(a) => cmd_attack(a),
        Command::Robustness(a) => cmd_robustness(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Threshold(a) => cmd_threshold(a),
        Command::Optimize(a) => cmd_optimize(a),
        Command::ReproduceTables(a) => cmd_reproduce(a),
    }
}

fn parse_strategy(s: &str) -> Result<StrategyId> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "random" => StrategyId::Random,
        "mdta" => StrategyId::Mdta,
        "mbta" => StrategyId::Mbta,
        "exa" => StrategyId::Exa,
        "damage" => StrategyId::Damage,
        "critical" => StrategyId::Critical,
        "wprob" => StrategyId::WeightedProb,
        other => return Err(Error::UnknownName(other.into())),
    })
}

fn parse_target(s: &str) -> Result<TargetKind> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "node" => TargetKind::Node,
        "edge" => TargetKind::Edge,
        other => return Err(Error::UnknownName(other.into())),
    })
}

fn parse_driver(s: &str) -> Result<DriverRoute> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "mit" => DriverRoute::Mit,
        "ect" => DriverRoute::Ect,
        other => return Err(Error::UnknownName(other.into())),
    })
}

fn parse_alpha(s: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidParameter(format!("alpha {:?} must be a1,a2", s)));
    }
    let a1: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad weight {:?}", parts[0])))?;
    let a2: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad weight {:?}", parts[1])))?;
    Ok((a1, a2))
}

fn parse_measures(s: &str) -> Result<Vec<MeasureId>> {
    s.split(',').map(|m| MeasureId::parse(m.trim())).collect()
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_edge_list_file(path).map_err(|e| match e {
        Error::Io(io) => Error::InvalidParameter(format!("cannot read {}: {}", path.display(), io)),
        other => other,
    })
}

fn write_json(value: &serde_json::Value, output: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{}", text),
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let graph = if let Some(name) = &a.canonical {
        canonical4(name, a.directed)?
    } else {
        let model = a
            .model
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("either --model or --canonical is required".into()))?;
        let mut config = GeneratorConfig::new(ModelId::parse(model)?, a.n, a.k)
            .directed(a.directed)
            .seed(a.seed);
        for param in &a.params {
            let (key, val) = param
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("parameter {:?} must be key=value", param)))?;
            let parse_f = || -> Result<f64> {
                val.parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad value {:?} for {}", val, key)))
            };
            match key {
                "rewire-prob" => config.rewire_prob = parse_f()?,
                "sf-alpha" => config.sf_alpha = parse_f()?,
                "os-swaps" => config.os_swaps_per_node = parse_f()? as usize,
                other => return Err(Error::UnknownName(format!("parameter {}", other))),
            }
        }
        generate(&config)?
    };
    graph.to_edge_list_file(&a.output)?;
    eprintln!(
        "wrote {} ({} nodes, {} edges)",
        a.output.display(),
        graph.node_count(),
        graph.edge_count()
    );
    Ok(())
}

fn cmd_apriori(a: AprioriArgs) -> Result<()> {
    if a.format != "json" {
        return Err(Error::InvalidParameter(format!("unsupported format {:?}", a.format)));
    }
    let start = Instant::now();
    let mut manifest = RunManifest::new("apriori", 0);
    manifest.digest(&a.input)?;
    let graph = load_graph(&a.input)?;
    let report = crate::apriori::report(&graph)?;
    let mut value = report.to_json();
    manifest.duration_ms = start.elapsed().as_millis() as u64;
    value["manifest"] = serde_json::to_value(&manifest)?;
    write_json(&value, a.output.as_deref())
}

fn build_plan(strategy: StrategyId, target: TargetKind, seed: u64, alpha: Option<&str>, static_scores: bool) -> Result<AttackPlan> {
    let mut plan = AttackPlan::new(strategy, target).with_seed(seed);
    if let Some(alpha) = alpha {
        plan.alpha = parse_alpha(alpha)?;
    }
    if static_scores {
        plan.adaptive = false;
    }
    plan.tie = TieBreak::SmallestId;
    Ok(plan)
}

fn cmd_attack(a: AttackArgs) -> Result<()> {
    let graph = load_graph(&a.input)?;
    let strategy = parse_strategy(&a.strategy)?;
    let target = parse_target(&a.target)?;
    let plan = build_plan(strategy, target, a.seed, a.alpha.as_deref(), a.static_scores)?;
    let mut which = MeasureSet::connectivity();
    if a.drivers {
        if graph.is_directed() {
            which.driver_mit = true;
        } else {
            which.driver_ect = true;
        }
    }
    let stop = match a.stop_h {
        Some(h) => StopRule::Cap(h),
        None => StopRule::Full,
    };
    let trace = run_trace(&graph, &plan, which, stop)?;
    let file = std::fs::File::create(&a.output)?;
    write_trace_csv(&trace, std::io::BufWriter::new(file))?;
    eprintln!("wrote {} ({} attacks)", a.output.display(), trace.steps());
    Ok(())
}

fn cmd_robustness(a: RobustnessArgs) -> Result<()> {
    let start = Instant::now();
    let mut manifest = RunManifest::new("robustness", a.seed);
    manifest.digest(&a.input)?;
    let graph = load_graph(&a.input)?;
    let strategy = parse_strategy(&a.strategy)?;
    let target = parse_target(&a.target)?;
    let measures = parse_measures(&a.measures)?;
    let schemes: Vec<&str> = a.scheme.split(',').map(str::trim).collect();
    for s in &schemes {
        if !matches!(*s, "cd" | "td") {
            return Err(Error::UnknownName(format!("scheme {}", s)));
        }
    }
    let opts = EvalOptions {
        driver: a.driver.as_deref().map(parse_driver).transpose()?,
        full_n: a.full_n,
    };
    let plan = build_plan(strategy, target, a.seed, a.alpha.as_deref(), false)?;
    let want_td = schemes.contains(&"td") || a.stop_h.is_some();

    // representative trace: threshold detection and optional curve output
    let mut which_all = MeasureSet { ncc: true, ..Default::default() };
    for &m in &measures {
        let need = measures_needed(m, opts, graph.is_directed(), want_td);
        which_all.lcc |= need.lcc;
        which_all.ncc |= need.ncc;
        which_all.cnp |= need.cnp;
        which_all.driver_mit |= need.driver_mit;
        which_all.driver_ect |= need.driver_ect;
        which_all.adjacency_rank |= need.adjacency_rank;
    }
    let mut rep_plan = plan.clone();
    rep_plan.seed = crate::engine::derive_seed(a.seed, 0, 0);
    let stop = match a.stop_h {
        Some(h) => StopRule::Cap(h),
        None => StopRule::Full,
    };
    let rep_trace = run_trace(&graph, &rep_plan, which_all, stop)?;
    let threshold = detect_threshold(&rep_trace, a.p)?;

    let mut outcomes: BTreeMap<String, MeasureOutcome> = BTreeMap::new();
    let mut r11: BTreeMap<String, f64> = BTreeMap::new();
    for &m in &measures {
        let mut outcome = MeasureOutcome { cd: None, td: None };
        if let Some(h) = a.stop_h {
            outcome.td = Some(evaluate(&rep_trace, m, opts, Scheme::Td(h.min(rep_trace.steps())))?);
        } else {
            for &s in &schemes {
                let pick = if s == "cd" { SchemePick::Cd } else { SchemePick::Td { p: a.p } };
                let rep = averaged(&graph, std::slice::from_ref(&plan), m, opts, pick, a.repeats)?;
                if s == "cd" {
                    outcome.cd = Some(rep.r11);
                } else {
                    outcome.td = Some(rep.r11);
                }
                if a.repeats > 1 {
                    r11.insert(format!("{}_{}", m.name(), s), rep.r11);
                }
            }
        }
        outcomes.insert(m.name().into(), outcome);
    }

    let report = RobustnessReport {
        net: a.input.display().to_string(),
        strategy,
        target,
        seed: a.seed,
        measures: outcomes,
        threshold: Some(threshold),
    };
    let mut value = serde_json::to_value(&report)?;
    if !r11.is_empty() {
        value["r11"] = serde_json::to_value(&r11)?;
        value["repeats"] = serde_json::json!(a.repeats);
    }
    manifest.duration_ms = start.elapsed().as_millis() as u64;
    value["manifest"] = serde_json::to_value(&manifest)?;

    if let Some(trace_path) = &a.trace {
        let file = std::fs::File::create(trace_path)?;
        write_trace_csv(&rep_trace, std::io::BufWriter::new(file))?;
    }
    write_json(&value, a.output.as_deref())
}

fn canonical_set(directed: bool) -> Vec<(String, Graph)> {
    let names: &[&str] = if directed { &CANONICAL_DIRECTED } else { &CANONICAL_UNDIRECTED };
    names
        .iter()
        .map(|&n| (n.to_string(), canonical4(n, directed).expect("canonical name")))
        .collect()
}

fn resolve_nets(spec: &str) -> Result<Vec<(String, Graph)>> {
    match spec {
        "canonical4-undirected" => Ok(canonical_set(false)),
        "canonical4-directed" => Ok(canonical_set(true)),
        files => files
            .split(',')
            .map(|f| {
                let path = Path::new(f.trim());
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| f.trim().to_string());
                Ok((name, load_graph(path)?))
            })
            .collect(),
    }
}

/// One comparison cell: a scalar robustness value for (net, strategy, measure).
fn compare_value(
    graph: &Graph,
    strategy: StrategyId,
    target: TargetKind,
    measure: MeasureId,
    opts: EvalOptions,
    seed: u64,
) -> Result<f64> {
    if strategy == StrategyId::Exa {
        return Ok(exa_measure(graph, target, measure, opts, None, seed)?.mean);
    }
    let plan = AttackPlan::new(strategy, target).with_seed(seed);
    let which = measures_needed(measure, opts, graph.is_directed(), false);
    let trace = run_trace(graph, &plan, which, StopRule::Full)?;
    evaluate(&trace, measure, opts, Scheme::Cd)
}

fn compare_table(
    nets: &[(String, Graph)],
    strategies: &[StrategyId],
    measures: &[MeasureId],
    target: TargetKind,
    opts: EvalOptions,
    seed: u64,
    ranks: bool,
) -> Result<String> {
    let mut out = String::new();
    out.push_str("strategy,measure,kind");
    for (name, _) in nets {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for &strategy in strategies {
        for &measure in measures {
            let values: Vec<f64> = nets
                .iter()
                .map(|(_, g)| compare_value(g, strategy, target, measure, opts, seed))
                .collect::<Result<_>>()?;
            out.push_str(&format!("{:?},{},value", strategy, measure.name()).to_lowercase());
            for v in &values {
                out.push_str(&format!(",{:.9}", v));
            }
            out.push('\n');
            if ranks {
                let r = rank_values(&values, measure.higher_is_better(), 1e-9);
                out.push_str(&format!("{:?},{},rank", strategy, measure.name()).to_lowercase());
                for v in &r {
                    out.push_str(&format!(",{}", v));
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn cmd_compare(a: CompareArgs) -> Result<()> {
    let nets = resolve_nets(&a.nets)?;
    let strategies: Vec<StrategyId> =
        a.strategies.split(',').map(|s| parse_strategy(s.trim())).collect::<Result<_>>()?;
    let measures = parse_measures(&a.measures)?;
    let target = parse_target(&a.target)?;
    let opts = EvalOptions {
        driver: a.driver.as_deref().map(parse_driver).transpose()?,
        full_n: false,
    };
    let table = compare_table(&nets, &strategies, &measures, target, opts, a.seed, a.ranks)?;
    match &a.output {
        Some(path) => std::fs::write(path, &table)?,
        None => print!("{}", table),
    }
    Ok(())
}

fn cmd_threshold(a: ThresholdArgs) -> Result<()> {
    let start = Instant::now();
    let mut manifest = RunManifest::new("threshold", a.seed);
    manifest.digest(&a.input)?;
    let graph = load_graph(&a.input)?;
    let strategy = parse_strategy(&a.strategy)?;
    let target = parse_target(&a.target)?;
    let plan = build_plan(strategy, target, a.seed, None, false)?;
    let trace = run_trace(&graph, &plan, MeasureSet::connectivity(), StopRule::Full)?;
    let th = detect_threshold(&trace, a.p)?;
    let mut value = serde_json::to_value(&th)?;
    manifest.duration_ms = start.elapsed().as_millis() as u64;
    value["manifest"] = serde_json::to_value(&manifest)?;
    write_json(&value, a.output.as_deref())
}

fn cmd_optimize(a: OptimizeArgs) -> Result<()> {
    let start = Instant::now();
    let mut manifest = RunManifest::new("optimize", a.seed);
    manifest.digest(&a.input)?;
    let graph = load_graph(&a.input)?;
    let measure = MeasureId::parse(&a.measure)?;
    let strategy = parse_strategy(&a.strategy)?;
    let scheme = match a.scheme.as_str() {
        "cd" => SchemePick::Cd,
        "td" => SchemePick::Td { p: a.p },
        other => return Err(Error::UnknownName(format!("scheme {}", other))),
    };
    let objective = Objective {
        measure,
        plan: AttackPlan::new(strategy, measure.target_kind()).with_seed(a.seed),
        opts: EvalOptions::default(),
        scheme,
        repeats: a.eval_repeats,
    };
    let mut config = OptimizeConfig::hill_climb(objective, a.iters);
    config.algorithm = match a.algo.as_str() {
        "hc" => Algorithm::HillClimb,
        "sa" => Algorithm::SimulatedAnnealing,
        other => return Err(Error::UnknownName(format!("algorithm {}", other))),
    };
    config.constraint = match a.preserve.as_str() {
        "degrees" => Constraint::PerNodeDegree,
        "avg" => Constraint::AverageDegree,
        "none" => Constraint::None,
        other => return Err(Error::UnknownName(format!("constraint {}", other))),
    };
    config.sa_initial_temp = a.sa_temp;
    config.sa_cooling = a.sa_cool;
    config.keep_connected = a.keep_connected;
    config.seed = a.seed;
    let (best, log) = optimize(&graph, &config)?;
    best.to_edge_list_file(&a.output)?;
    if let Some(log_path) = &a.log {
        let mut w = std::io::BufWriter::new(std::fs::File::create(log_path)?);
        writeln!(w, "iteration,candidate,accepted,best")?;
        for s in &log.steps {
            writeln!(w, "{},{:.9},{},{:.9}", s.iteration, s.candidate, s.accepted, s.best)?;
        }
    }
    manifest.duration_ms = start.elapsed().as_millis() as u64;
    let summary = serde_json::json!({
        "initial": log.initial,
        "best": log.best,
        "iterations": log.steps.len(),
        "stagnated": log.stagnated,
        "output": a.output.display().to_string(),
        "manifest": manifest,
    });
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}

fn cmd_reproduce(a: ReproduceArgs) -> Result<()> {
    let (n, seeds) = match a.scale.as_str() {
        "desk" => (500usize, 5usize),
        "paper" => (1000, 10),
        other => return Err(Error::UnknownName(format!("scale {}", other))),
    };
    std::fs::create_dir_all(&a.output)?;
    let strategies = [StrategyId::Exa, StrategyId::Mdta, StrategyId::Mbta];
    let measures = [MeasureId::R1, MeasureId::R15, MeasureId::R3, MeasureId::R7];

    eprintln!("building canonical rank tables...");
    let undirected = canonical_set(false);
    let table4 = compare_table(
        &undirected,
        &strategies,
        &measures,
        TargetKind::Node,
        EvalOptions { driver: Some(DriverRoute::Ect), full_n: false },
        a.seed,
        true,
    )?;
    std::fs::write(a.output.join("table4.csv"), table4)?;

    let directed = canonical_set(true);
    let table3 = compare_table(
        &directed,
        &strategies,
        &measures,
        TargetKind::Node,
        EvalOptions { driver: Some(DriverRoute::Mit), full_n: false },
        a.seed,
        true,
    )?;
    std::fs::write(a.output.join("table3.csv"), table3)?;

    eprintln!("running statistical table (N = {}, {} seeds per model)...", n, seeds);
    let mut out = String::from("model,r1_cd,r1_td,r3_cd,r3_td,threshold_t\n");
    for model in [ModelId::Er, ModelId::Ba, ModelId::Sf] {
        let mut r1_cd = 0.0;
        let mut r1_td = 0.0;
        let mut r3_cd = 0.0;
        let mut r3_td = 0.0;
        let mut t_sum = 0.0;
        for s in 0..seeds {
            let seed = crate::engine::derive_seed(a.seed, s, model as usize);
            let config = GeneratorConfig::new(model, n, 10.0).directed(true).seed(seed);
            let graph = generate(&config)?;
            let plan = AttackPlan::new(StrategyId::Mdta, TargetKind::Node).with_seed(seed);
            let which = MeasureSet { lcc: true, ncc: true, driver_mit: true, ..Default::default() };
            let trace = run_trace(&graph, &plan, which, StopRule::Full)?;
            let th = detect_threshold(&trace, 0.05)?;
            let opts = EvalOptions::default();
            r1_cd += evaluate(&trace, MeasureId::R1, opts, Scheme::Cd)?;
            r1_td += evaluate(&trace, MeasureId::R1, opts, Scheme::Td(th.t))?;
            r3_cd += evaluate(&trace, MeasureId::R3, opts, Scheme::Cd)?;
            r3_td += evaluate(&trace, MeasureId::R3, opts, Scheme::Td(th.t))?;
            t_sum += th.t as f64;
            eprintln!("  {:?} seed {} done (T = {})", model, s, th.t);
        }
        let k = seeds as f64;
        out.push_str(&format!(
            "{:?},{:.4},{:.4},{:.4},{:.4},{:.1}\n",
            model,
            r1_cd / k,
            r1_td / k,
            r3_cd / k,
            r3_td / k,
            t_sum / k
        ));
    }
    std::fs::write(a.output.join("table2.csv"), out)?;
    eprintln!("wrote {}", a.output.display());
    Ok(())
}
