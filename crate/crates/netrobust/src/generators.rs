//! Seeded construction of the ten synthetic network models plus the
//! canonical 4-node test topologies.
//!
//! `mean_degree` denotes mean total degree; the target edge count is
//! `M = floor(N * k / 2)` for both directed and undirected instances (arcs
//! counted once), so instances of different directedness stay comparable.
//! Models that cannot hit M exactly (BA) come close. Everything is a pure
//! function of the config, bit-identical for a fixed seed.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelId {
    /// Erdos-Renyi random graph (uniform edges without replacement).
    Er,
    /// Newman-Watts small-world (ring lattice plus shortcuts).
    SwNw,
    /// Watts-Strogatz small-world (ring lattice with rewiring).
    SwWs,
    /// Random triangle (sequential triangle-motif attachment).
    Rt,
    /// Random hexagon (sequential hexagon-motif attachment).
    Rh,
    /// Extremely homogeneous (random k-regular via pairing with repair).
    Eh,
    /// Barabasi-Albert preferential attachment.
    Ba,
    /// Generic scale-free (static weight model, weights i^-alpha).
    Sf,
    /// Onion-like scale-free (SF plus assortativity-maximizing rewiring).
    Os,
    /// q-snapback: directed layered chain with backward arcs.
    Qs,
}

impl ModelId {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "er" => ModelId::Er,
            "sw-nw" | "swnw" | "nw" => ModelId::SwNw,
            "sw-ws" | "swws" | "ws" => ModelId::SwWs,
            "rt" => ModelId::Rt,
            "rh" => ModelId::Rh,
            "eh" => ModelId::Eh,
            "ba" => ModelId::Ba,
            "sf" => ModelId::Sf,
            "os" => ModelId::Os,
            "qs" => ModelId::Qs,
            other => return Err(Error::UnknownName(other.into())),
        })
    }
}

#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub model: ModelId,
    pub n: usize,
    pub mean_degree: f64,
    pub directed: bool,
    pub seed: u64,
    /// SW-WS rewiring probability.
    pub rewire_prob: f64,
    /// SF / OS static-model exponent control (weights i^-alpha).
    pub sf_alpha: f64,
    /// OS assortativity hill-climb swap attempts per node.
    pub os_swaps_per_node: usize,
}

impl GeneratorConfig {
    pub fn new(model: ModelId, n: usize, mean_degree: f64) -> Self {
        GeneratorConfig {
            model,
            n,
            mean_degree,
            directed: false,
            seed: 42,
            rewire_prob: 0.1,
            sf_alpha: 0.5,
            os_swaps_per_node: 1000,
        }
    }

    pub fn directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn target_edges(&self) -> usize {
        (self.n as f64 * self.mean_degree / 2.0).floor() as usize
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        if self.mean_degree < 0.0 {
            return Err(Error::InvalidParameter("mean degree must be non-negative".into()));
        }
        if self.mean_degree >= self.n as f64 {
            return Err(Error::InvalidParameter(format!(
                "mean degree {} must be below N = {}",
                self.mean_degree, self.n
            )));
        }
        let max_edges = self.n * (self.n - 1) / 2;
        if self.target_edges() > max_edges {
            return Err(Error::InvalidParameter("edge target exceeds simple-graph capacity".into()));
        }
        Ok(())
    }
}

/// Generates the requested model. Identical output for identical configs.
pub fn generate(config: &GeneratorConfig) -> Result<Graph> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match config.model {
        ModelId::Qs => q_snapback(config, &mut rng),
        ModelId::Er if config.directed => er_directed(config, &mut rng),
        _ => {
            let edges = undirected_edges(config, &mut rng)?;
            if config.directed {
                let oriented = edges
                    .into_iter()
                    .map(|(u, v)| if rng.gen::<bool>() { (u, v) } else { (v, u) })
                    .collect();
                Graph::new(config.n, true, oriented)
            } else {
                Graph::new(config.n, false, edges)
            }
        }
    }
}

fn undirected_edges(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    match config.model {
        ModelId::Er => Ok(er_undirected(config, rng)),
        ModelId::SwNw => Ok(small_world_nw(config, rng)),
        ModelId::SwWs => Ok(small_world_ws(config, rng)),
        ModelId::Rt => Ok(motif_attachment(config, rng, 3)),
        ModelId::Rh => Ok(motif_attachment(config, rng, 6)),
        ModelId::Eh => regular_pairing(config, rng),
        ModelId::Ba => Ok(barabasi_albert(config, rng)),
        ModelId::Sf => Ok(static_scale_free(config, rng)),
        ModelId::Os => Ok(onion_scale_free(config, rng)),
        ModelId::Qs => unreachable!("handled by generate"),
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn er_undirected(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let target = config.target_edges();
    let n = config.n;
    let mut seen = HashSet::with_capacity(target);
    let mut edges = Vec::with_capacity(target);
    while edges.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && seen.insert(key(u, v)) {
            edges.push(key(u, v));
        }
    }
    edges
}

fn er_directed(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let target = config.target_edges();
    let n = config.n;
    let mut seen = HashSet::with_capacity(target);
    let mut arcs = Vec::with_capacity(target);
    while arcs.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && seen.insert((u, v)) {
            arcs.push((u, v));
        }
    }
    Graph::new(n, true, arcs)
}

/// Ring lattice connecting each node to `half` neighbors on each side.
fn ring_lattice(n: usize, half: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let half = half.min((n.saturating_sub(1)) / 2);
    for u in 0..n {
        for d in 1..=half {
            let v = (u + d) % n;
            if u < v || (u + d) >= n {
                edges.push(key(u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn small_world_nw(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let target = config.target_edges();
    let half = ((config.mean_degree / 2.0).floor() as usize).saturating_sub(1).max(1);
    let mut edges = ring_lattice(config.n, half);
    edges.truncate(target);
    let mut seen: HashSet<(usize, usize)> = edges.iter().copied().collect();
    // shortcuts fill the gap between the ring and the degree target
    while edges.len() < target {
        let u = rng.gen_range(0..config.n);
        let v = rng.gen_range(0..config.n);
        if u != v && seen.insert(key(u, v)) {
            edges.push(key(u, v));
        }
    }
    edges
}

fn small_world_ws(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let target = config.target_edges();
    let half = ((config.mean_degree / 2.0).floor() as usize).max(1);
    let mut edges = ring_lattice(config.n, half);
    let mut seen: HashSet<(usize, usize)> = edges.iter().copied().collect();
    // rewire the far endpoint of each lattice edge with probability p
    for i in 0..edges.len() {
        if rng.gen::<f64>() >= config.rewire_prob {
            continue;
        }
        let (u, _v) = edges[i];
        for _ in 0..32 {
            let w = rng.gen_range(0..config.n);
            if w != u && !seen.contains(&key(u, w)) {
                seen.remove(&edges[i]);
                seen.insert(key(u, w));
                edges[i] = key(u, w);
                break;
            }
        }
    }
    // top up or trim so M matches the degree target exactly
    while edges.len() > target {
        let removed = edges.pop().unwrap();
        seen.remove(&removed);
    }
    while edges.len() < target {
        let u = rng.gen_range(0..config.n);
        let v = rng.gen_range(0..config.n);
        if u != v && seen.insert(key(u, v)) {
            edges.push(key(u, v));
        }
    }
    edges
}

/// Sequential random attachment of c-cycles until the edge target is hit.
fn motif_attachment(config: &GeneratorConfig, rng: &mut ChaCha8Rng, cycle: usize) -> Vec<(usize, usize)> {
    let target = config.target_edges();
    let n = config.n;
    let mut seen = HashSet::with_capacity(target);
    let mut edges = Vec::with_capacity(target);
    if n < cycle {
        return er_undirected(config, rng);
    }
    let mut all: Vec<usize> = (0..n).collect();
    while edges.len() < target {
        all.shuffle(rng);
        let motif = &all[..cycle];
        for i in 0..cycle {
            if edges.len() >= target {
                break;
            }
            let (u, v) = key(motif[i], motif[(i + 1) % cycle]);
            if seen.insert((u, v)) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random k-regular graph via the pairing model; collisions are repaired by
/// degree-preserving swaps against randomly chosen good edges.
fn regular_pairing(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let n = config.n;
    let k_f = config.mean_degree;
    if (k_f - k_f.round()).abs() > 1e-9 {
        return Err(Error::InvalidParameter("EH requires an integer mean degree".into()));
    }
    let k = k_f.round() as usize;
    if n * k % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "EH with N = {} and k = {} is infeasible (odd stub count)",
            n, k
        )));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|u| std::iter::repeat(u).take(k)).collect();
    stubs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut bad: Vec<(usize, usize)> = Vec::new();
    for pair in stubs.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        if u != v && seen.insert(key(u, v)) {
            edges.push(key(u, v));
        } else {
            bad.push((u, v));
        }
    }
    // repair: swap a conflicting pair against a random good edge
    let mut attempts = 0usize;
    let limit = 1000 * (bad.len() + 1) * (k + 1);
    while let Some((a, b)) = bad.pop() {
        let mut placed = false;
        while attempts < limit {
            attempts += 1;
            let idx = rng.gen_range(0..edges.len());
            let (c, d) = edges[idx];
            let (x, y) = if rng.gen::<bool>() { (c, d) } else { (d, c) };
            if a != x && b != y && !seen.contains(&key(a, x)) && !seen.contains(&key(b, y)) {
                seen.remove(&key(c, d));
                seen.insert(key(a, x));
                seen.insert(key(b, y));
                edges[idx] = key(a, x);
                edges.push(key(b, y));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::InvalidParameter(
                "EH pairing repair did not converge; try another seed".into(),
            ));
        }
    }
    Ok(edges)
}

fn barabasi_albert(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let n = config.n;
    let m = ((config.mean_degree / 2.0).round() as usize).max(1);
    let m0 = (m.max(2)).min(n);
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    // seed clique
    for u in 0..m0 {
        for v in (u + 1)..m0 {
            edges.push((u, v));
            seen.insert((u, v));
        }
    }
    // endpoint pool: sampling from it is degree-proportional
    let mut pool: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    for new in m0..n {
        let mut targets = HashSet::new();
        while targets.len() < m.min(new) {
            let t = if pool.is_empty() {
                rng.gen_range(0..new)
            } else {
                pool[rng.gen_range(0..pool.len())]
            };
            targets.insert(t);
        }
        let mut ts: Vec<usize> = targets.into_iter().collect();
        ts.sort_unstable();
        for t in ts {
            edges.push(key(new, t));
            seen.insert(key(new, t));
            pool.push(new);
            pool.push(t);
        }
    }
    edges
}

fn static_scale_free(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let target = config.target_edges();
    let n = config.n;
    let alpha = config.sf_alpha;
    // cumulative weights i^-alpha for weighted node sampling
    let weights: Vec<f64> = (0..n).map(|i| ((i + 1) as f64).powf(-alpha)).collect();
    let mut cum = Vec::with_capacity(n);
    let mut acc = 0.0;
    for w in &weights {
        acc += w;
        cum.push(acc);
    }
    let total = acc;
    let draw = |rng: &mut ChaCha8Rng| -> usize {
        let x = rng.gen::<f64>() * total;
        match cum.binary_search_by(|c| c.partial_cmp(&x).unwrap()) {
            Ok(i) | Err(i) => i.min(n - 1),
        }
    };
    let mut seen = HashSet::with_capacity(target);
    let mut edges = Vec::with_capacity(target);
    while edges.len() < target {
        let u = draw(rng);
        let v = draw(rng);
        if u != v && seen.insert(key(u, v)) {
            edges.push(key(u, v));
        }
    }
    edges
}

/// SF followed by an assortativity-maximizing degree-preserving hill climb
/// (the onion construction). Degrees are invariant, so the edge degree
/// product sum is the whole objective.
fn onion_scale_free(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut edges = static_scale_free(config, rng);
    let n = config.n;
    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut seen: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let attempts = config.os_swaps_per_node * n;
    if edges.len() < 2 {
        return edges;
    }
    for _ in 0..attempts {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        if a == c || a == d || b == c || b == d {
            continue;
        }
        // (a,b),(c,d) -> (a,d),(c,b); gain in sum of degree products
        let gain = (deg[a] as i64 - deg[c] as i64) * (deg[d] as i64 - deg[b] as i64);
        if gain <= 0 {
            continue;
        }
        if seen.contains(&key(a, d)) || seen.contains(&key(c, b)) {
            continue;
        }
        seen.remove(&key(a, b));
        seen.remove(&key(c, d));
        seen.insert(key(a, d));
        seen.insert(key(c, b));
        edges[i] = key(a, d);
        edges[j] = key(c, b);
    }
    edges
}

/// Directed layered chain with snapback arcs to earlier nodes, filled until
/// the arc target is reached. An undirected instance uses the underlying
/// undirected structure.
fn q_snapback(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let target = config.target_edges();
    let n = config.n;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(target);
    let mut seen = HashSet::with_capacity(target);
    for u in 0..n.saturating_sub(1) {
        if arcs.len() >= target {
            break;
        }
        arcs.push((u, u + 1));
        seen.insert((u, u + 1));
    }
    while arcs.len() < target && n > 2 {
        let u = rng.gen_range(2..n);
        let v = rng.gen_range(0..u.saturating_sub(1).max(1));
        if config.directed {
            if seen.insert((u, v)) {
                arcs.push((u, v));
            }
        } else if !seen.contains(&(v, u)) && !seen.contains(&(u, v)) && v + 1 != u {
            seen.insert((u, v));
            arcs.push((u, v));
        }
    }
    if config.directed {
        Graph::new(n, true, arcs)
    } else {
        let edges = arcs.into_iter().map(|(u, v)| key(u, v)).collect();
        Graph::new(n, false, edges)
    }
}

/// Canonical 4-node topologies used by the rank-table experiments.
///
/// Undirected: FUL (K4), LOP (C4), STR (star), CTS (triangle plus pendant),
/// CHA (path), ISO (empty). The directed set follows the figure drawings;
/// the topologies without an unambiguous textual description (WKF, RIN,
/// CTS, SSR, UCH, DIS) are documented reconstructions.
pub fn canonical4(name: &str, directed: bool) -> Result<Graph> {
    let name_up = name.to_ascii_uppercase();
    if !directed {
        let edges: Vec<(usize, usize)> = match name_up.as_str() {
            "FUL" => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            "LOP" => vec![(0, 1), (1, 2), (2, 3), (0, 3)],
            "STR" => vec![(0, 1), (0, 2), (0, 3)],
            "CTS" => vec![(0, 1), (0, 2), (1, 2), (2, 3)],
            "CHA" => vec![(0, 1), (1, 2), (2, 3)],
            "ISO" => vec![],
            _ => return Err(Error::UnknownName(name.into())),
        };
        return Graph::new(4, false, edges);
    }
    let arcs: Vec<(usize, usize)> = match name_up.as_str() {
        // complete digraph: both arcs of every pair
        "FUL" => vec![
            (0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0),
            (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2),
        ],
        // strongly-connected tournament on the complete underlying graph
        "WKF" => vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        "LOP" => vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        // ring shape with alternating directions (no directed cycle)
        "RIN" => vec![(0, 1), (2, 1), (2, 3), (0, 3)],
        // directed triangle with an outgoing pendant arc
        "CTS" => vec![(0, 1), (1, 2), (2, 0), (2, 3)],
        "SSO" => vec![(0, 1), (0, 2), (0, 3)],
        "SSI" => vec![(1, 0), (2, 0), (3, 0)],
        // star with seed-fixed random-looking orientations
        "SSR" => vec![(0, 1), (2, 0), (0, 3)],
        "DCH" => vec![(0, 1), (1, 2), (2, 3)],
        // chain shape with mixed directions
        "UCH" => vec![(0, 1), (2, 1), (2, 3)],
        // two disconnected 2-node chains
        "DIS" => vec![(0, 1), (2, 3)],
        "ISO" => vec![],
        _ => return Err(Error::UnknownName(name.into())),
    };
    Graph::new(4, true, arcs)
}

/// The canonical name sets in table column order.
pub const CANONICAL_UNDIRECTED: [&str; 6] = ["FUL", "LOP", "STR", "CTS", "CHA", "ISO"];
pub const CANONICAL_DIRECTED: [&str; 12] = [
    "FUL", "WKF", "LOP", "RIN", "CTS", "SSO", "SSI", "SSR", "DCH", "UCH", "DIS", "ISO",
];
