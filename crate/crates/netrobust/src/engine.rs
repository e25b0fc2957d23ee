//! Attack simulation driver: runs attack sequences, records per-step
//! functionality curves, condenses them into scalar robustness values under
//! the complete-disconnection (CD) and threshold-truncated (TD) schemes,
//! detects destruction thresholds, averages over repeats and strategies,
//! and produces fractional rank tables.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::attacks::{enumerate_exa, initial_scores, next_target, AttackPlan, StrategyId, TargetKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, RemovalMask};
use crate::measures::{sample, FunctionalSample, MeasureSet};

/// When to stop a simulation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    /// Attack until no targets remain.
    Full,
    /// Stop after at most this many attacks (the truncated-sum rule H).
    Cap(usize),
}

/// An executed attack with its functionality curve. `samples[i]` describes
/// the network after `i` attacks; `samples[0]` is the intact network.
#[derive(Debug, Clone)]
pub struct AttackTrace {
    pub kind: TargetKind,
    pub directed: bool,
    pub n: usize,
    pub m: usize,
    pub sequence: Vec<usize>,
    pub samples: Vec<FunctionalSample>,
}

impl AttackTrace {
    /// Number of attacks performed.
    pub fn steps(&self) -> usize {
        self.samples.len() - 1
    }

    /// Last step index entering a complete-disconnection sum:
    /// `N - 1` for node attacks, `M` for edge attacks.
    pub fn cd_last_index(&self) -> usize {
        match self.kind {
            TargetKind::Node => self.n.saturating_sub(1),
            TargetKind::Edge => self.m,
        }
    }

    /// Removed fraction after `i` attacks.
    pub fn delta(&self, i: usize) -> f64 {
        let total = match self.kind {
            TargetKind::Node => self.n,
            TargetKind::Edge => self.m,
        };
        if total == 0 {
            0.0
        } else {
            i as f64 / total as f64
        }
    }
}

/// Executes an attack strategy step by step, sampling after every attack.
pub fn run_trace(graph: &Graph, plan: &AttackPlan, which: MeasureSet, stop: StopRule) -> Result<AttackTrace> {
    if plan.strategy == StrategyId::Exa {
        return Err(Error::InvalidParameter(
            "exhaustive attacks average over sequences; use exa_measure".into(),
        ));
    }
    let cap = match stop {
        StopRule::Full => usize::MAX,
        StopRule::Cap(h) => h,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    let static_scores = initial_scores(plan, graph)?;
    let mut mask = RemovalMask::new(graph);
    let mut sequence = Vec::new();
    let mut samples = vec![sample(graph, &mask, which, 0)?];
    let total = match plan.target_kind {
        TargetKind::Node => graph.node_count(),
        TargetKind::Edge => graph.edge_count(),
    };
    while sequence.len() < cap && sequence.len() < total {
        let target = match next_target(plan, graph, &mask, &mut rng, static_scores.as_deref()) {
            Ok(t) => t,
            Err(Error::NoAliveTargets) => break,
            Err(e) => return Err(e),
        };
        match plan.target_kind {
            TargetKind::Node => mask.remove_node(graph, target)?,
            TargetKind::Edge => mask.remove_edge(target)?,
        }
        sequence.push(target);
        samples.push(sample(graph, &mask, which, sequence.len())?);
    }
    Ok(AttackTrace {
        kind: plan.target_kind,
        directed: graph.is_directed(),
        n: graph.node_count(),
        m: graph.edge_count(),
        sequence,
        samples,
    })
}

/// Replays a fixed removal order (used by exhaustive averaging).
pub fn run_sequence(graph: &Graph, kind: TargetKind, targets: &[usize], which: MeasureSet) -> Result<AttackTrace> {
    let mut mask = RemovalMask::new(graph);
    let mut samples = vec![sample(graph, &mask, which, 0)?];
    for (step, &t) in targets.iter().enumerate() {
        match kind {
            TargetKind::Node => mask.remove_node(graph, t)?,
            TargetKind::Edge => mask.remove_edge(t)?,
        }
        samples.push(sample(graph, &mask, which, step + 1)?);
    }
    Ok(AttackTrace {
        kind,
        directed: graph.is_directed(),
        n: graph.node_count(),
        m: graph.edge_count(),
        sequence: targets.to_vec(),
        samples,
    })
}

/// Scalar robustness measures over a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureId {
    /// Mean LCC fraction, denominator N (node attacks).
    R1,
    /// Mean LCC fraction, denominator N - i.
    R2,
    /// Edge-attack variant of R1.
    R1e,
    /// Mean driver-node density (lower is better).
    R3,
    /// Edge-attack variant of R3 (lower is better).
    R3e,
    /// Mean communicable-pair fraction, exact binomial form.
    R6,
    /// Mean squared-component-size fraction.
    R7,
    /// Mean adjacency-rank fraction.
    R8,
    /// Complement of R3.
    R9,
    /// Mean LCC-to-driver-density ratio.
    R10,
    /// Mean raw component count (lower is better).
    R15,
    /// Mean component count normalized by N (lower is better).
    R15n,
}

impl MeasureId {
    pub const ALL: [MeasureId; 12] = [
        MeasureId::R1,
        MeasureId::R2,
        MeasureId::R1e,
        MeasureId::R3,
        MeasureId::R3e,
        MeasureId::R6,
        MeasureId::R7,
        MeasureId::R8,
        MeasureId::R9,
        MeasureId::R10,
        MeasureId::R15,
        MeasureId::R15n,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "r1" => MeasureId::R1,
            "r2" => MeasureId::R2,
            "r1e" => MeasureId::R1e,
            "r3" => MeasureId::R3,
            "r3e" => MeasureId::R3e,
            "r6" => MeasureId::R6,
            "r7" => MeasureId::R7,
            "r8" => MeasureId::R8,
            "r9" => MeasureId::R9,
            "r10" => MeasureId::R10,
            "r15" => MeasureId::R15,
            "r15n" => MeasureId::R15n,
            other => return Err(Error::UnknownName(other.into())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            MeasureId::R1 => "r1",
            MeasureId::R2 => "r2",
            MeasureId::R1e => "r1e",
            MeasureId::R3 => "r3",
            MeasureId::R3e => "r3e",
            MeasureId::R6 => "r6",
            MeasureId::R7 => "r7",
            MeasureId::R8 => "r8",
            MeasureId::R9 => "r9",
            MeasureId::R10 => "r10",
            MeasureId::R15 => "r15",
            MeasureId::R15n => "r15n",
        }
    }

    /// Rank direction: larger values mean a more robust network.
    pub fn higher_is_better(&self) -> bool {
        !matches!(self, MeasureId::R3 | MeasureId::R3e | MeasureId::R15 | MeasureId::R15n)
    }

    /// Target kind the measure is defined for.
    pub fn target_kind(&self) -> TargetKind {
        match self {
            MeasureId::R1e | MeasureId::R3e => TargetKind::Edge,
            _ => TargetKind::Node,
        }
    }
}

/// Which driver-node computation feeds the controllability measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DriverRoute {
    Mit,
    Ect,
}

/// Evaluation knobs shared by all measures.
#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    /// Driver-count source; defaults to MIT for directed graphs, ECT otherwise.
    pub driver: Option<DriverRoute>,
    /// Use N' = N instead of N' = N - i in driver-density denominators.
    pub full_n: bool,
}

impl EvalOptions {
    pub fn resolve_driver(&self, directed: bool) -> DriverRoute {
        self.driver.unwrap_or(if directed { DriverRoute::Mit } else { DriverRoute::Ect })
    }
}

/// Summation scheme: complete disconnection or truncation at threshold T.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Cd,
    Td(usize),
}

/// Per-step quantities that must be sampled for a measure to be evaluable.
pub fn measures_needed(measure: MeasureId, opts: EvalOptions, directed: bool, with_threshold: bool) -> MeasureSet {
    let mut set = MeasureSet::default();
    match measure {
        MeasureId::R1 | MeasureId::R2 | MeasureId::R1e => set.lcc = true,
        MeasureId::R6 | MeasureId::R7 => set.cnp = true,
        MeasureId::R8 => set.adjacency_rank = true,
        MeasureId::R15 | MeasureId::R15n => set.ncc = true,
        MeasureId::R3 | MeasureId::R3e | MeasureId::R9 | MeasureId::R10 => {
            if measure == MeasureId::R10 {
                set.lcc = true;
            }
            match opts.resolve_driver(directed) {
                DriverRoute::Mit => set.driver_mit = true,
                DriverRoute::Ect => set.driver_ect = true,
            }
        }
    }
    if with_threshold {
        set.ncc = true;
    }
    set
}

fn driver_count(trace: &AttackTrace, s: &FunctionalSample, opts: EvalOptions) -> Result<usize> {
    let v = match opts.resolve_driver(trace.directed) {
        DriverRoute::Mit => s.driver_mit,
        DriverRoute::Ect => s.driver_ect,
    };
    v.ok_or(Error::MissingDriverCounts)
}

fn require_kind(trace: &AttackTrace, measure: MeasureId) -> Result<()> {
    if trace.kind != measure.target_kind() {
        let kind = match measure.target_kind() {
            TargetKind::Node => "node",
            TargetKind::Edge => "edge",
        };
        return Err(Error::InvalidParameter(format!(
            "{} is defined on {} attack traces",
            measure.name(),
            kind
        )));
    }
    Ok(())
}

fn per_step(trace: &AttackTrace, measure: MeasureId, opts: EvalOptions, i: usize) -> Result<f64> {
    let s = &trace.samples[i];
    let n = trace.n as f64;
    // surviving node count N' used by driver densities
    let n_prime = if opts.full_n || trace.kind == TargetKind::Edge {
        trace.n
    } else {
        trace.n - i
    };
    let lcc = || s.lcc.ok_or(Error::MissingDriverCounts);
    Ok(match measure {
        MeasureId::R1 | MeasureId::R1e => lcc()? as f64 / n,
        MeasureId::R2 => lcc()? as f64 / (trace.n - i).max(1) as f64,
        MeasureId::R3 | MeasureId::R3e => driver_count(trace, s, opts)? as f64 / n_prime.max(1) as f64,
        MeasureId::R9 => 1.0 - driver_count(trace, s, opts)? as f64 / n_prime.max(1) as f64,
        MeasureId::R10 => {
            let n_l = lcc()? as f64 / n;
            let n_d = driver_count(trace, s, opts)? as f64 / n_prime.max(1) as f64;
            n_l / n_d
        }
        MeasureId::R6 => {
            let pairs = trace.n as u64 * (trace.n as u64).saturating_sub(1) / 2;
            if pairs == 0 {
                0.0
            } else {
                s.cnp_exact.ok_or(Error::MissingDriverCounts)? as f64 / pairs as f64
            }
        }
        MeasureId::R7 => s.cnp_sq.ok_or(Error::MissingDriverCounts)? as f64 / (n * n),
        MeasureId::R8 => s.adjacency_rank.ok_or(Error::MissingDriverCounts)? as f64 / n_prime.max(1) as f64,
        MeasureId::R15 => s.ncc.ok_or(Error::MissingDriverCounts)? as f64,
        MeasureId::R15n => s.ncc.ok_or(Error::MissingDriverCounts)? as f64 / n,
    })
}

/// Evaluates one scalar robustness value.
///
/// CD averages the per-step functional over `i = 0 ..= N-1` (node attacks)
/// or `i = 0 ..= M` (edge attacks). TD averages over `i = 0 ..= min(T, that
/// bound)`, so TD with T at the full range reproduces CD exactly.
pub fn evaluate(trace: &AttackTrace, measure: MeasureId, opts: EvalOptions, scheme: Scheme) -> Result<f64> {
    require_kind(trace, measure)?;
    let last = match scheme {
        Scheme::Cd => trace.cd_last_index(),
        Scheme::Td(t) => t.min(trace.cd_last_index()),
    };
    if trace.samples.len() <= last {
        return Err(Error::TraceTooShort { have: trace.samples.len(), need: last + 1 });
    }
    let mut sum = 0.0;
    for i in 0..=last {
        sum += per_step(trace, measure, opts, i)?;
    }
    Ok(sum / (last + 1) as f64)
}

/// How the destruction threshold was determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DetectionMode {
    /// Node attacks: component count decreased for the whole window.
    NodeDecrease,
    /// Edge attacks: component count stagnated for the whole window.
    EdgeStagnation,
    /// No detection; first maximizer of the component-count curve.
    ArgmaxFallback,
}

/// Destruction-threshold detection outcome.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ThresholdResult {
    /// Component-count sequence D(i) over the sampled steps.
    pub d: Vec<usize>,
    pub p: f64,
    /// Detection window c = max(1, floor(p * N)).
    pub window: usize,
    pub t: usize,
    pub mode: DetectionMode,
    /// First argmax of D(i), always reported.
    pub fallback_t: usize,
}

/// Finds the destruction threshold: the turning point after which the
/// component count D(i) decreases (node attacks) or stagnates (edge
/// attacks) for `c = max(1, floor(p * N))` successive steps; `T` is the
/// step entering the window. Falls back to the first maximizer of D when
/// the trace ends without detection.
pub fn detect_threshold(trace: &AttackTrace, p: f64) -> Result<ThresholdResult> {
    if !(0.0 < p && p < 1.0) {
        return Err(Error::InvalidParameter(format!("detection parameter p = {} outside (0, 1)", p)));
    }
    let d: Vec<usize> = trace
        .samples
        .iter()
        .map(|s| s.ncc.ok_or(Error::MissingDriverCounts))
        .collect::<Result<_>>()?;
    if d.is_empty() {
        return Err(Error::TraceTooShort { have: 0, need: 1 });
    }
    let window = ((p * trace.n as f64).floor() as usize).max(1);
    let mut fallback_t = 0usize;
    for (i, &v) in d.iter().enumerate() {
        if v > d[fallback_t] {
            fallback_t = i;
        }
    }
    let mut streak = 0usize;
    for i in 1..d.len() {
        let hit = match trace.kind {
            TargetKind::Node => d[i] < d[i - 1],
            TargetKind::Edge => d[i] == d[i - 1],
        };
        if hit {
            streak += 1;
            if streak == window {
                let mode = match trace.kind {
                    TargetKind::Node => DetectionMode::NodeDecrease,
                    TargetKind::Edge => DetectionMode::EdgeStagnation,
                };
                return Ok(ThresholdResult { d, p, window, t: i - window, mode, fallback_t });
            }
        } else {
            streak = 0;
        }
    }
    Ok(ThresholdResult { d, p, window, t: fallback_t, mode: DetectionMode::ArgmaxFallback, fallback_t })
}

/// Scheme request where TD resolves its threshold per trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemePick {
    Cd,
    /// Threshold-truncated with detection parameter p.
    Td { p: f64 },
}

/// Derives a per-cell RNG seed from the master seed; a fixed mixing
/// function so results are independent of scheduling order.
pub fn derive_seed(master: u64, repeat: usize, strategy: usize) -> u64 {
    let mut z = master
        ^ (repeat as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
        ^ (strategy as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Robustness averaged over P repeats and Q strategies.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AveragedReport {
    /// `values[p][q]` for repeat p under strategy q.
    pub values: Vec<Vec<f64>>,
    /// Grand mean over all P * Q cells.
    pub r11: f64,
    /// Column means, one per strategy.
    pub per_strategy: Vec<f64>,
}

/// Runs `repeats x plans.len()` independent simulations and averages the
/// requested measure. Cell seeds derive from each plan's seed, so the
/// result is independent of thread count and scheduling.
pub fn averaged(
    graph: &Graph,
    plans: &[AttackPlan],
    measure: MeasureId,
    opts: EvalOptions,
    scheme: SchemePick,
    repeats: usize,
) -> Result<AveragedReport> {
    if plans.is_empty() || repeats == 0 {
        return Err(Error::InvalidParameter("need at least one strategy and one repeat".into()));
    }
    let with_threshold = matches!(scheme, SchemePick::Td { .. });
    let which = measures_needed(measure, opts, graph.is_directed(), with_threshold);
    let cells: Vec<(usize, usize)> =
        (0..repeats).flat_map(|p| (0..plans.len()).map(move |q| (p, q))).collect();
    let results: Vec<f64> = cells
        .par_iter()
        .map(|&(p, q)| -> Result<f64> {
            let mut plan = plans[q].clone();
            plan.seed = derive_seed(plan.seed, p, q);
            let trace = run_trace(graph, &plan, which, StopRule::Full)?;
            let resolved = match scheme {
                SchemePick::Cd => Scheme::Cd,
                SchemePick::Td { p } => Scheme::Td(detect_threshold(&trace, p)?.t),
            };
            evaluate(&trace, measure, opts, resolved)
        })
        .collect::<Result<_>>()?;
    let q_count = plans.len();
    let values: Vec<Vec<f64>> = results.chunks(q_count).map(|c| c.to_vec()).collect();
    let r11 = results.iter().sum::<f64>() / results.len() as f64;
    let per_strategy = (0..q_count)
        .map(|q| values.iter().map(|row| row[q]).sum::<f64>() / repeats as f64)
        .collect();
    Ok(AveragedReport { values, r11, per_strategy })
}

/// Exhaustive-attack average of a measure.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ExaResult {
    pub mean: f64,
    /// Standard error of the mean; present only for sampled enumeration.
    pub std_error: Option<f64>,
    pub sequences: usize,
}

/// Averages a measure over all K! removal orders (exact for K <= 8), or
/// over `samples` random orders beyond that.
pub fn exa_measure(
    graph: &Graph,
    kind: TargetKind,
    measure: MeasureId,
    opts: EvalOptions,
    samples: Option<usize>,
    seed: u64,
) -> Result<ExaResult> {
    require_kind(
        &AttackTrace { kind, directed: graph.is_directed(), n: graph.node_count(), m: graph.edge_count(), sequence: vec![], samples: vec![] },
        measure,
    )?;
    let k = match kind {
        TargetKind::Node => graph.node_count(),
        TargetKind::Edge => graph.edge_count(),
    };
    let which = measures_needed(measure, opts, graph.is_directed(), false);
    let perms: Vec<Vec<usize>> = enumerate_exa(k, samples, seed)?.collect();
    let exact = k <= crate::attacks::EXA_EXACT_LIMIT;
    let values: Vec<f64> = perms
        .par_iter()
        .map(|perm| {
            let trace = run_sequence(graph, kind, perm, which)?;
            evaluate(&trace, measure, opts, Scheme::Cd)
        })
        .collect::<Result<_>>()?;
    let count = values.len();
    let mean = values.iter().sum::<f64>() / count as f64;
    let std_error = if exact {
        None
    } else {
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (count.max(2) - 1) as f64;
        Some((var / count as f64).sqrt())
    };
    Ok(ExaResult { mean, std_error, sequences: count })
}

/// Fractional ranks (1 = best). Ties within `tol` share the average of the
/// positions they span.
pub fn rank_values(values: &[f64], higher_is_better: bool, tol: f64) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        let cmp = values[a].partial_cmp(&values[b]).unwrap();
        if higher_is_better {
            cmp.reverse()
        } else {
            cmp
        }
    });
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && (values[order[j + 1]] - values[order[i]]).abs() <= tol {
            j += 1;
        }
        // positions i..=j (1-based) share the averaged rank
        let avg = (i + j + 2) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// CD/TD value pair for one measure.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MeasureOutcome {
    pub cd: Option<f64>,
    pub td: Option<f64>,
}

/// Scalar results of one simulated attack, serialized into report JSON.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RobustnessReport {
    pub net: String,
    pub strategy: StrategyId,
    pub target: TargetKind,
    pub seed: u64,
    pub measures: BTreeMap<String, MeasureOutcome>,
    pub threshold: Option<ThresholdResult>,
}

fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x)
    } else {
        format!("{:.8e}", x)
    }
}

/// Writes the per-step curve as CSV: normalized LCC, component count and
/// driver density, plus raw communicable-pair counts.
pub fn write_trace_csv<W: Write>(trace: &AttackTrace, mut w: W) -> Result<()> {
    writeln!(w, "i,delta,n_L,n_NCC,n_D,cnp_exact,cnp_sq")?;
    for (i, s) in trace.samples.iter().enumerate() {
        let n = trace.n as f64;
        let n_prime = match trace.kind {
            TargetKind::Node => (trace.n - i).max(1),
            TargetKind::Edge => trace.n,
        };
        let driver = s.driver_mit.or(s.driver_ect);
        let cols = [
            i.to_string(),
            fmt_sig(trace.delta(i)),
            s.lcc.map(|v| fmt_sig(v as f64 / n)).unwrap_or_default(),
            s.ncc.map(|v| fmt_sig(v as f64 / n)).unwrap_or_default(),
            driver.map(|v| fmt_sig(v as f64 / n_prime as f64)).unwrap_or_default(),
            s.cnp_exact.map(|v| v.to_string()).unwrap_or_default(),
            s.cnp_sq.map(|v| v.to_string()).unwrap_or_default(),
        ];
        writeln!(w, "{}", cols.join(","))?;
    }
    Ok(())
}

/// Reads a trace CSV back into a trace (sequence not recoverable). The
/// caller supplies the graph shape the trace was recorded against.
pub fn read_trace_csv<R: BufRead>(reader: R, kind: TargetKind, directed: bool, n: usize, m: usize) -> Result<AttackTrace> {
    let mut samples = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if idx == 0 || line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 7 {
            return Err(Error::EdgeListParse { line: idx + 1, reason: "expected 7 columns".into() });
        }
        let parse_f = |s: &str| -> Result<Option<f64>> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse::<f64>()
                    .map(Some)
                    .map_err(|_| Error::EdgeListParse { line: idx + 1, reason: format!("bad number {:?}", s) })
            }
        };
        let i: usize = cols[0]
            .parse()
            .map_err(|_| Error::EdgeListParse { line: idx + 1, reason: "bad step index".into() })?;
        let n_prime = match kind {
            TargetKind::Node => (n - i).max(1),
            TargetKind::Edge => n,
        };
        let driver = parse_f(cols[4])?.map(|v| (v * n_prime as f64).round() as usize);
        samples.push(FunctionalSample {
            step: i,
            surviving: match kind {
                TargetKind::Node => n - i,
                TargetKind::Edge => n,
            },
            lcc: parse_f(cols[2])?.map(|v| (v * n as f64).round() as usize),
            ncc: parse_f(cols[3])?.map(|v| (v * n as f64).round() as usize),
            driver_mit: if directed { driver } else { None },
            driver_ect: if directed { None } else { driver },
            adjacency_rank: None,
            cnp_exact: parse_f(cols[5])?.map(|v| v as u64),
            cnp_sq: parse_f(cols[6])?.map(|v| v as u64),
        });
    }
    Ok(AttackTrace { kind, directed, n, m, sequence: Vec::new(), samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::canonical4;

    fn plan(strategy: StrategyId) -> AttackPlan {
        AttackPlan::new(strategy, TargetKind::Node)
    }

    fn full_node_trace(g: &Graph, strategy: StrategyId, which: MeasureSet) -> AttackTrace {
        run_trace(g, &plan(strategy), which, StopRule::Full).unwrap()
    }

    #[test]
    fn k4_mdta_connectivity_values() {
        let g = canonical4("FUL", false).unwrap();
        let t = full_node_trace(&g, StrategyId::Mdta, MeasureSet::connectivity());
        assert_eq!(t.samples.len(), 5);
        let opts = EvalOptions::default();
        assert!((evaluate(&t, MeasureId::R1, opts, Scheme::Cd).unwrap() - 0.625).abs() < 1e-12);
        assert!((evaluate(&t, MeasureId::R2, opts, Scheme::Cd).unwrap() - 1.0).abs() < 1e-12);
        assert!((evaluate(&t, MeasureId::R6, opts, Scheme::Cd).unwrap() - 5.0 / 12.0).abs() < 1e-12);
        assert!((evaluate(&t, MeasureId::R7, opts, Scheme::Cd).unwrap() - 30.0 / 64.0).abs() < 1e-12);
        assert!((evaluate(&t, MeasureId::R15, opts, Scheme::Cd).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn star_mdta_r1_and_threshold() {
        let g = canonical4("STR", false).unwrap();
        let t = full_node_trace(&g, StrategyId::Mdta, MeasureSet::connectivity());
        let r1 = evaluate(&t, MeasureId::R1, EvalOptions::default(), Scheme::Cd).unwrap();
        assert!((r1 - 0.4375).abs() < 1e-12);

        let th = detect_threshold(&t, 0.05).unwrap();
        assert_eq!(th.d, vec![1, 3, 2, 1, 0]);
        assert_eq!(th.window, 1);
        assert_eq!(th.t, 1);
        assert_eq!(th.mode, DetectionMode::NodeDecrease);
    }

    #[test]
    fn iso_values() {
        let g = canonical4("ISO", false).unwrap();
        let t = full_node_trace(&g, StrategyId::Mdta, MeasureSet::connectivity());
        let opts = EvalOptions::default();
        assert!((evaluate(&t, MeasureId::R15, opts, Scheme::Cd).unwrap() - 2.5).abs() < 1e-12);
        assert_eq!(evaluate(&t, MeasureId::R6, opts, Scheme::Cd).unwrap(), 0.0);
        let th = detect_threshold(&t, 0.05).unwrap();
        assert_eq!(th.t, 0);
    }

    #[test]
    fn complete_digraph_r3_and_r9() {
        let mut arcs = Vec::new();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let g = Graph::new(4, true, arcs).unwrap();
        let which = MeasureSet { driver_mit: true, ..Default::default() };
        let t = full_node_trace(&g, StrategyId::Mdta, which);
        let opts = EvalOptions::default();
        let r3 = evaluate(&t, MeasureId::R3, opts, Scheme::Cd).unwrap();
        // N_D = 1 at every step, N' = 4, 3, 2, 1
        assert!((r3 - 25.0 / 48.0).abs() < 1e-12);
        let r9 = evaluate(&t, MeasureId::R9, opts, Scheme::Cd).unwrap();
        assert!((r3 + r9 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn td_at_full_range_is_cd() {
        let g = canonical4("CTS", false).unwrap();
        let t = full_node_trace(&g, StrategyId::Mdta, MeasureSet::connectivity());
        let opts = EvalOptions::default();
        for m in [MeasureId::R1, MeasureId::R2, MeasureId::R6, MeasureId::R7, MeasureId::R15] {
            let cd = evaluate(&t, m, opts, Scheme::Cd).unwrap();
            let td = evaluate(&t, m, opts, Scheme::Td(4)).unwrap();
            assert!((cd - td).abs() < 1e-12, "{:?}", m);
        }
        // star truncated at T = 1
        let s = canonical4("STR", false).unwrap();
        let ts = full_node_trace(&s, StrategyId::Mdta, MeasureSet::connectivity());
        let td = evaluate(&ts, MeasureId::R1, opts, Scheme::Td(1)).unwrap();
        assert!((td - 0.625).abs() < 1e-12);
    }

    #[test]
    fn edge_trace_r1e() {
        let g = Graph::new(2, false, vec![(0, 1)]).unwrap();
        let p = AttackPlan::new(StrategyId::Mdta, TargetKind::Edge);
        let t = run_trace(&g, &p, MeasureSet::connectivity(), StopRule::Full).unwrap();
        assert_eq!(t.samples.len(), 2);
        let r1e = evaluate(&t, MeasureId::R1e, EvalOptions::default(), Scheme::Cd).unwrap();
        assert!((r1e - 0.75).abs() < 1e-12);
    }

    #[test]
    fn truncated_trace_falls_back_to_argmax() {
        let g = canonical4("STR", false).unwrap();
        let t = run_trace(&g, &plan(StrategyId::Mdta), MeasureSet::connectivity(), StopRule::Cap(1)).unwrap();
        assert_eq!(t.samples.len(), 2);
        let th = detect_threshold(&t, 0.05).unwrap();
        assert_eq!(th.mode, DetectionMode::ArgmaxFallback);
        assert_eq!(th.t, 1);
        // and CD on the truncated trace is an error
        assert!(matches!(
            evaluate(&t, MeasureId::R1, EvalOptions::default(), Scheme::Cd),
            Err(Error::TraceTooShort { .. })
        ));
    }

    #[test]
    fn exa_oracle_values() {
        let opts = EvalOptions::default();
        let cases = [
            ("FUL", 0.625),
            ("LOP", 29.0 / 48.0),
            ("CTS", 113.0 / 192.0),
            ("STR", 0.5625),
            ("CHA", 0.5625),
            ("ISO", 0.25),
        ];
        for (name, expect) in cases {
            let g = canonical4(name, false).unwrap();
            let r = exa_measure(&g, TargetKind::Node, MeasureId::R1, opts, None, 0).unwrap();
            assert_eq!(r.sequences, 24);
            assert!(r.std_error.is_none());
            assert!((r.mean - expect).abs() < 1e-12, "{}: {} vs {}", name, r.mean, expect);
        }
    }

    #[test]
    fn averaged_single_cell_and_determinism() {
        let g = canonical4("CTS", false).unwrap();
        let plans = vec![plan(StrategyId::Mdta)];
        let rep = averaged(&g, &plans, MeasureId::R1, EvalOptions::default(), SchemePick::Cd, 3).unwrap();
        assert_eq!(rep.values.len(), 3);
        // deterministic strategy: every repeat identical
        assert!((rep.values[0][0] - rep.values[2][0]).abs() < 1e-15);
        assert!((rep.r11 - rep.per_strategy[0]).abs() < 1e-15);

        let t = full_node_trace(&g, StrategyId::Mdta, MeasureSet::connectivity());
        let single = evaluate(&t, MeasureId::R1, EvalOptions::default(), Scheme::Cd).unwrap();
        assert!((rep.r11 - single).abs() < 1e-12);
    }

    #[test]
    fn rank_fractional_ties() {
        let vals = [0.625, 29.0 / 48.0, 0.5625, 113.0 / 192.0, 0.5625, 0.25];
        let ranks = rank_values(&vals, true, 1e-9);
        assert_eq!(ranks, vec![1.0, 2.0, 4.5, 3.0, 4.5, 6.0]);
        let lower = rank_values(&[1.0, 2.5, 2.5], false, 1e-9);
        assert_eq!(lower, vec![1.0, 2.5, 2.5]);
        assert_eq!(rank_values(&[3.0], true, 1e-9), vec![1.0]);
    }

    #[test]
    fn trace_csv_round_trip() {
        let g = canonical4("CTS", false).unwrap();
        let t = full_node_trace(&g, StrategyId::Mdta, MeasureSet::connectivity());
        let mut buf = Vec::new();
        write_trace_csv(&t, &mut buf).unwrap();
        let back = read_trace_csv(std::io::Cursor::new(buf), t.kind, t.directed, t.n, t.m).unwrap();
        let opts = EvalOptions::default();
        for m in [MeasureId::R1, MeasureId::R2, MeasureId::R6, MeasureId::R7, MeasureId::R15] {
            let a = evaluate(&t, m, opts, Scheme::Cd).unwrap();
            let b = evaluate(&back, m, opts, Scheme::Cd).unwrap();
            assert!((a - b).abs() < 1e-12, "{:?}", m);
        }
    }

    #[test]
    fn derive_seed_is_stable_and_spread() {
        let a = derive_seed(42, 0, 0);
        assert_eq!(a, derive_seed(42, 0, 0));
        assert_ne!(a, derive_seed(42, 1, 0));
        assert_ne!(a, derive_seed(42, 0, 1));
        assert_ne!(derive_seed(42, 1, 0), derive_seed(42, 0, 1));
    }
}
