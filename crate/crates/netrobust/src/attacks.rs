//! Attack-sequence generators: random, degree-targeted (MDTA),
//! betweenness-targeted (MBTA), exhaustive, damage-greedy,
//! probability-weighted, and controllability-critical strategies.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::apriori;
use crate::error::{Error, Result};
use crate::graph::{components, degree, Graph, RemovalMask};
use crate::measures::driver_nodes_mit;

/// Largest object count for which all K! attack orders are enumerated.
pub const EXA_EXACT_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyId {
    Random,
    Mdta,
    Mbta,
    Exa,
    Damage,
    Critical,
    WeightedProb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetKind {
    Node,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Deterministic: smallest id wins.
    #[default]
    SmallestId,
    /// Seeded random choice among tied candidates.
    Random,
}

/// Immutable description of an attack strategy.
#[derive(Debug, Clone)]
pub struct AttackPlan {
    pub strategy: StrategyId,
    pub target_kind: TargetKind,
    /// Recompute scores each step (true) or rank by initial scores (false).
    pub adaptive: bool,
    pub seed: u64,
    pub tie: TieBreak,
    /// Weights (alpha_degree, alpha_betweenness) for the probability-weighted
    /// strategy; must be non-negative and sum to 1.
    pub alpha: (f64, f64),
    /// Monte Carlo sample count for exhaustive attacks beyond the exact limit.
    pub exa_samples: Option<usize>,
}

impl AttackPlan {
    pub fn new(strategy: StrategyId, target_kind: TargetKind) -> Self {
        AttackPlan {
            strategy,
            target_kind,
            adaptive: true,
            seed: 42,
            tie: TieBreak::SmallestId,
            alpha: (0.5, 0.5),
            exa_samples: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn static_scores(mut self) -> Self {
        self.adaptive = false;
        self
    }
}

/// Ordered removal sequence; no repeats, all ids valid for the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackSequence {
    pub kind: TargetKind,
    pub targets: Vec<usize>,
}

fn alive_targets(graph: &Graph, mask: &RemovalMask, kind: TargetKind) -> Vec<usize> {
    match kind {
        TargetKind::Node => mask.alive_nodes().collect(),
        TargetKind::Edge => {
            (0..graph.edge_count())
                .filter(|&e| {
                    let (u, v) = graph.edge(e);
                    mask.edge_alive(e) && mask.node_alive(u) && mask.node_alive(v)
                })
                .collect()
        }
    }
}

fn pick_tied(candidates: &[usize], tie: TieBreak, rng: &mut ChaCha8Rng) -> usize {
    match tie {
        TieBreak::SmallestId => candidates[0],
        TieBreak::Random => candidates[rng.gen_range(0..candidates.len())],
    }
}

/// Degree scores for alive targets; edge score is the endpoint degree sum.
fn degree_scores(graph: &Graph, mask: &RemovalMask, kind: TargetKind, ids: &[usize]) -> Vec<f64> {
    match kind {
        TargetKind::Node => ids
            .iter()
            .map(|&u| degree(graph, mask, u).unwrap_or(0) as f64)
            .collect(),
        TargetKind::Edge => ids
            .iter()
            .map(|&e| {
                let (u, v) = graph.edge(e);
                (degree(graph, mask, u).unwrap_or(0) + degree(graph, mask, v).unwrap_or(0)) as f64
            })
            .collect(),
    }
}

fn betweenness_scores(graph: &Graph, mask: &RemovalMask, kind: TargetKind, ids: &[usize]) -> Result<Vec<f64>> {
    let (nb, eb) = apriori::betweenness(graph, mask)?;
    Ok(match kind {
        TargetKind::Node => ids.iter().map(|&u| nb[u]).collect(),
        TargetKind::Edge => ids.iter().map(|&e| eb[e]).collect(),
    })
}

fn has_alive_edge(graph: &Graph, mask: &RemovalMask, node: usize) -> bool {
    graph
        .neighbors_undirected(node)
        .any(|(v, e)| mask.edge_alive(e) && mask.node_alive(v))
}

/// Targeted selection: the maximum strictly-positive score wins; any
/// positive-score target beats every zero-score one. When every score is
/// zero, node attacks still prefer targets with alive incident edges, so an
/// isolated node is removed only when nothing else is left.
fn select_max(
    graph: &Graph,
    mask: &RemovalMask,
    kind: TargetKind,
    ids: &[usize],
    scores: &[f64],
    tie: TieBreak,
    rng: &mut ChaCha8Rng,
) -> usize {
    let best = scores.iter().cloned().fold(0.0f64, f64::max);
    if best > 0.0 {
        let tied: Vec<usize> = ids
            .iter()
            .zip(scores)
            .filter(|(_, &s)| s == best)
            .map(|(&id, _)| id)
            .collect();
        return pick_tied(&tied, tie, rng);
    }
    if kind == TargetKind::Node {
        let connected: Vec<usize> = ids
            .iter()
            .copied()
            .filter(|&u| has_alive_edge(graph, mask, u))
            .collect();
        if !connected.is_empty() {
            return pick_tied(&connected, tie, rng);
        }
    }
    pick_tied(ids, tie, rng)
}

/// Next target under RANDOM, MDTA, MBTA or WEIGHTED_PROB.
///
/// `static_scores`, when present, is the full per-id score vector computed on
/// the intact graph; selection then ranks alive targets by those frozen
/// scores instead of recomputing.
pub fn next_target(
    plan: &AttackPlan,
    graph: &Graph,
    mask: &RemovalMask,
    rng: &mut ChaCha8Rng,
    static_scores: Option<&[f64]>,
) -> Result<usize> {
    let ids = alive_targets(graph, mask, plan.target_kind);
    if ids.is_empty() {
        return Err(Error::NoAliveTargets);
    }
    match plan.strategy {
        StrategyId::Random => Ok(ids[rng.gen_range(0..ids.len())]),
        StrategyId::Mdta => {
            let scores = match static_scores {
                Some(all) => ids.iter().map(|&i| all[i]).collect(),
                None => degree_scores(graph, mask, plan.target_kind, &ids),
            };
            Ok(select_max(graph, mask, plan.target_kind, &ids, &scores, plan.tie, rng))
        }
        StrategyId::Mbta => {
            let scores = match static_scores {
                Some(all) => ids.iter().map(|&i| all[i]).collect(),
                None => betweenness_scores(graph, mask, plan.target_kind, &ids)?,
            };
            Ok(select_max(graph, mask, plan.target_kind, &ids, &scores, plan.tie, rng))
        }
        StrategyId::WeightedProb => weighted_prob_target(plan, graph, mask, rng),
        StrategyId::Damage => damage_greedy_target(graph, mask),
        StrategyId::Critical => critical_ctrl_target(graph, mask),
        StrategyId::Exa => Err(Error::InvalidParameter(
            "exhaustive attacks enumerate whole sequences; use enumerate_exa".into(),
        )),
    }
}

/// Initial score vector for the static (non-adaptive) variant.
pub fn initial_scores(plan: &AttackPlan, graph: &Graph) -> Result<Option<Vec<f64>>> {
    if plan.adaptive {
        return Ok(None);
    }
    let mask = RemovalMask::new(graph);
    let limit = match plan.target_kind {
        TargetKind::Node => graph.node_count(),
        TargetKind::Edge => graph.edge_count(),
    };
    let ids: Vec<usize> = (0..limit).collect();
    let scores = match plan.strategy {
        StrategyId::Mdta => degree_scores(graph, &mask, plan.target_kind, &ids),
        StrategyId::Mbta => betweenness_scores(graph, &mask, plan.target_kind, &ids)?,
        _ => return Ok(None),
    };
    Ok(Some(scores))
}

/// Greedy damage attack: the alive node whose removal shrinks the LCC the
/// most; ties broken by smallest id.
pub fn damage_greedy_target(graph: &Graph, mask: &RemovalMask) -> Result<usize> {
    let ids = alive_targets(graph, mask, TargetKind::Node);
    if ids.is_empty() {
        return Err(Error::NoAliveTargets);
    }
    let before = components(graph, mask)?.largest as i64;
    let mut best_id = ids[0];
    let mut best_damage = i64::MIN;
    for &u in &ids {
        let mut trial = mask.clone();
        trial.remove_node(graph, u)?;
        let after = components(graph, &trial)?.largest as i64;
        let damage = before - after;
        if damage > best_damage {
            best_damage = damage;
            best_id = u;
        }
    }
    Ok(best_id)
}

/// Controllability-critical edge attack: the first (lowest-id) alive arc
/// whose removal increases the minimum-inputs driver count, or the lowest-id
/// alive arc when none is critical.
pub fn critical_ctrl_target(graph: &Graph, mask: &RemovalMask) -> Result<usize> {
    if !graph.is_directed() {
        return Err(Error::WrongGraphKind { expected: "directed" });
    }
    let ids = alive_targets(graph, mask, TargetKind::Edge);
    if ids.is_empty() {
        return Err(Error::NoAliveTargets);
    }
    let before = driver_nodes_mit(graph, mask)?;
    for &e in &ids {
        let mut trial = mask.clone();
        trial.remove_edge(e)?;
        if driver_nodes_mit(graph, &trial)? > before {
            return Ok(e);
        }
    }
    Ok(ids[0])
}

/// Probability-weighted target: samples target `j` with probability
/// `p_j = alpha_1 * k_j / sum(k) + alpha_2 * b_j / sum(b)`. A feature whose
/// scores are all zero falls back to the uniform distribution.
pub fn weighted_prob_target(
    plan: &AttackPlan,
    graph: &Graph,
    mask: &RemovalMask,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let (a1, a2) = plan.alpha;
    if a1 < 0.0 || a2 < 0.0 || (a1 + a2 - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "weights must be non-negative and sum to 1, got ({}, {})",
            a1, a2
        )));
    }
    let ids = alive_targets(graph, mask, plan.target_kind);
    if ids.is_empty() {
        return Err(Error::NoAliveTargets);
    }
    let probs = weighted_probabilities(plan, graph, mask, &ids)?;
    let draw: f64 = rng.gen();
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if draw < acc {
            return Ok(ids[i]);
        }
    }
    Ok(*ids.last().unwrap())
}

/// The probability vector used by [`weighted_prob_target`], aligned with the
/// alive-target list in id order.
pub fn weighted_probabilities(
    plan: &AttackPlan,
    graph: &Graph,
    mask: &RemovalMask,
    ids: &[usize],
) -> Result<Vec<f64>> {
    let normalize = |scores: Vec<f64>| -> Vec<f64> {
        let sum: f64 = scores.iter().sum();
        if sum > 0.0 {
            scores.iter().map(|s| s / sum).collect()
        } else {
            vec![1.0 / scores.len() as f64; scores.len()]
        }
    };
    let deg = normalize(degree_scores(graph, mask, plan.target_kind, ids));
    let bet = normalize(betweenness_scores(graph, mask, plan.target_kind, ids)?);
    let (a1, a2) = plan.alpha;
    Ok(deg.iter().zip(&bet).map(|(d, b)| a1 * d + a2 * b).collect())
}

/// Exhaustive attack sequences: all `k!` permutations of `0..k` in
/// lexicographic order when `k <= 8`, otherwise `samples` uniform random
/// permutations (required beyond the exact limit).
pub fn enumerate_exa(
    k: usize,
    samples: Option<usize>,
    seed: u64,
) -> Result<Box<dyn Iterator<Item = Vec<usize>>>> {
    if k <= EXA_EXACT_LIMIT {
        Ok(Box::new(lexicographic_permutations(k)))
    } else {
        let count = samples.ok_or(Error::ExaTooLarge(k))?;
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perms: Vec<Vec<usize>> = (0..count)
            .map(|_| {
                let mut p: Vec<usize> = (0..k).collect();
                p.shuffle(&mut rng);
                p
            })
            .collect();
        Ok(Box::new(perms.into_iter()))
    }
}

fn lexicographic_permutations(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = Some((0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        current = next_permutation(out.clone());
        Some(out)
    })
}

fn next_permutation(mut p: Vec<usize>) -> Option<Vec<usize>> {
    let n = p.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    Some(p)
}
