//! One-shot topological and spectral robustness indicators: efficiency,
//! betweenness, clustering coefficient, and the adjacency/Laplacian spectral
//! sextet. Betweenness is mask-aware because the targeted attack strategies
//! recompute it on the surviving subgraph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{components, Graph, RemovalMask};
use crate::linalg;

/// The ten a-priori indicators. `None` marks a field that is not applicable
/// (directed input for spectral measures, isolated networks for betweenness
/// and effective resistance).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AprioriReport {
    pub efficiency: Option<f64>,
    pub node_betweenness: Option<f64>,
    pub edge_betweenness: Option<f64>,
    pub clustering: Option<f64>,
    pub spectral_radius: Option<f64>,
    pub spectral_gap: Option<f64>,
    pub natural_connectivity: Option<f64>,
    pub algebraic_connectivity: Option<f64>,
    /// Natural log of the spanning-tree count.
    pub spanning_trees_log: Option<f64>,
    /// Exact spanning-tree count, reported for N <= 16.
    pub spanning_trees_exact: Option<u128>,
    pub effective_resistance: Option<f64>,
}

impl AprioriReport {
    /// JSON object with `"na"` standing in for inapplicable fields.
    pub fn to_json(&self) -> serde_json::Value {
        fn field(v: Option<f64>) -> serde_json::Value {
            match v {
                Some(x) => serde_json::json!(x),
                None => serde_json::json!("na"),
            }
        }
        let mut obj = serde_json::json!({
            "eff": field(self.efficiency),
            "nb": field(self.node_betweenness),
            "eb": field(self.edge_betweenness),
            "cc": field(self.clustering),
            "as_sr": field(self.spectral_radius),
            "as_sg": field(self.spectral_gap),
            "as_nc": field(self.natural_connectivity),
            "ls_ac": field(self.algebraic_connectivity),
            "ls_ns": field(self.spanning_trees_log),
            "ls_er": field(self.effective_resistance),
        });
        if let Some(exact) = self.spanning_trees_exact {
            obj["ls_ns_exact"] = serde_json::json!(exact.to_string());
        }
        obj
    }
}

/// Full report for a graph. Spectral fields are NA for directed inputs.
pub fn report(graph: &Graph) -> Result<AprioriReport> {
    let mask = RemovalMask::new(graph);
    let eff = efficiency(graph)?;
    let (nb, eb) = betweenness(graph, &mask)?;
    let has_edges = graph.edge_count() > 0;
    let mean = |v: &[f64]| {
        if v.is_empty() {
            0.0
        } else {
            v.iter().sum::<f64>() / v.len() as f64
        }
    };
    let cc = clustering(graph)?;
    let spec = if graph.is_directed() { None } else { Some(spectral(graph)?) };
    Ok(AprioriReport {
        efficiency: Some(eff),
        node_betweenness: has_edges.then(|| mean(&nb)),
        edge_betweenness: has_edges.then(|| mean(&eb)),
        clustering: Some(cc),
        spectral_radius: spec.as_ref().map(|s| s.spectral_radius),
        spectral_gap: spec.as_ref().map(|s| s.spectral_gap),
        natural_connectivity: spec.as_ref().map(|s| s.natural_connectivity),
        algebraic_connectivity: spec.as_ref().map(|s| s.algebraic_connectivity),
        spanning_trees_log: spec.as_ref().and_then(|s| s.spanning_trees_log),
        spanning_trees_exact: spec.as_ref().and_then(|s| s.spanning_trees_exact),
        effective_resistance: spec.as_ref().and_then(|s| s.effective_resistance),
    })
}

/// Global efficiency: mean of 1/d over ordered pairs, 0 for disconnected
/// pairs. Directed graphs use directed shortest paths.
pub fn efficiency(graph: &Graph) -> Result<f64> {
    let n = graph.node_count();
    if n < 2 {
        return Err(Error::InvalidParameter("efficiency requires at least 2 nodes".into()));
    }
    let mask = RemovalMask::new(graph);
    let mut total = 0.0f64;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in graph.neighbors_out(u) {
                if mask.edge_alive(e) && dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for t in 0..n {
            if t != s && dist[t] != usize::MAX {
                total += 1.0 / dist[t] as f64;
            }
        }
    }
    Ok(total / (n * (n - 1)) as f64)
}

/// Exact shortest-path betweenness (Brandes) on the subgraph surviving under
/// `mask`. Returns per-node and per-edge vectors indexed by id; removed
/// objects score 0. Each unordered pair is counted once for undirected
/// graphs; directed graphs count ordered pairs.
pub fn betweenness(graph: &Graph, mask: &RemovalMask) -> Result<(Vec<f64>, Vec<f64>)> {
    mask.check_dims(graph)?;
    let n = graph.node_count();
    let m = graph.edge_count();
    let mut node_bc = vec![0.0f64; n];
    let mut edge_bc = vec![0.0f64; m];

    let mut dist: Vec<i64> = vec![-1; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    for s in 0..n {
        if !mask.node_alive(s) {
            continue;
        }
        for v in 0..n {
            dist[v] = -1;
            sigma[v] = 0.0;
            delta[v] = 0.0;
            preds[v].clear();
        }
        stack.clear();
        queue.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            stack.push(u);
            for &(v, e) in graph.neighbors_out(u) {
                if !mask.edge_alive(e) || !mask.node_alive(v) {
                    continue;
                }
                if dist[v] < 0 {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if dist[v] == dist[u] + 1 {
                    sigma[v] += sigma[u];
                    preds[v].push((u, e));
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &(v, e) in &preds[w] {
                let share = sigma[v] / sigma[w] * (1.0 + delta[w]);
                delta[v] += share;
                edge_bc[e] += share;
            }
            if w != s {
                node_bc[w] += delta[w];
            }
        }
    }
    if !graph.is_directed() {
        // undirected Brandes visits each pair from both endpoints
        for b in node_bc.iter_mut() {
            *b /= 2.0;
        }
        for b in edge_bc.iter_mut() {
            *b /= 2.0;
        }
    }
    Ok((node_bc, edge_bc))
}

/// Mean local clustering coefficient; nodes with degree < 2 contribute 0.
/// Directed graphs are measured on their underlying undirected structure.
pub fn clustering(graph: &Graph) -> Result<f64> {
    let n = graph.node_count();
    if n == 0 {
        return Ok(0.0);
    }
    // underlying undirected neighbor sets (reciprocal arcs collapse)
    let mut neighbors: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for &(u, v) in graph.edges() {
        neighbors[u].insert(v);
        neighbors[v].insert(u);
    }
    let mut total = 0.0f64;
    for u in 0..n {
        let k = neighbors[u].len();
        if k < 2 {
            continue;
        }
        let mut links = 0usize;
        let nb: Vec<usize> = neighbors[u].iter().copied().collect();
        for i in 0..nb.len() {
            for j in (i + 1)..nb.len() {
                if neighbors[nb[i]].contains(&nb[j]) {
                    links += 1;
                }
            }
        }
        total += 2.0 * links as f64 / (k * (k - 1)) as f64;
    }
    Ok(total / n as f64)
}

/// The six spectral indicators of an undirected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMeasures {
    /// Largest adjacency eigenvalue.
    pub spectral_radius: f64,
    /// lambda_1 - lambda_2.
    pub spectral_gap: f64,
    /// ln((1/N) sum exp(lambda_i)).
    pub natural_connectivity: f64,
    /// Second-smallest Laplacian eigenvalue.
    pub algebraic_connectivity: f64,
    /// ln of the spanning-tree count; `None` when the graph is disconnected
    /// (zero spanning trees).
    pub spanning_trees_log: Option<f64>,
    /// Exact spanning-tree count for N <= 16.
    pub spanning_trees_exact: Option<u128>,
    /// Kirchhoff index `N * sum_{i>=2} 1/mu_i`; `None` when disconnected.
    pub effective_resistance: Option<f64>,
}

/// Adjacency and Laplacian spectral measures via a full symmetric
/// eigendecomposition (cyclic Jacobi). Errors on directed input.
pub fn spectral(graph: &Graph) -> Result<SpectralMeasures> {
    if graph.is_directed() {
        return Err(Error::WrongGraphKind { expected: "undirected" });
    }
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::InvalidParameter("spectral measures require at least 1 node".into()));
    }
    let mut adj = vec![0.0f64; n * n];
    let mut lap = vec![0.0f64; n * n];
    for &(u, v) in graph.edges() {
        adj[u * n + v] = 1.0;
        adj[v * n + u] = 1.0;
        lap[u * n + v] = -1.0;
        lap[v * n + u] = -1.0;
        lap[u * n + u] += 1.0;
        lap[v * n + v] += 1.0;
    }
    let adj_eigs = linalg::symmetric_eigenvalues(&adj, n); // descending
    let lap_eigs = linalg::symmetric_eigenvalues(&lap, n); // descending

    let lambda1 = adj_eigs[0];
    let lambda2 = if n > 1 { adj_eigs[1] } else { 0.0 };
    let natural = {
        // ln((1/N) sum e^{l_i}) computed stably around lambda1
        let sum: f64 = adj_eigs.iter().map(|&l| (l - lambda1).exp()).sum();
        lambda1 + (sum / n as f64).ln()
    };

    let mask = RemovalMask::new(graph);
    let connected = components(graph, &mask)?.count == 1 && n >= 1;
    // Laplacian eigenvalues ascending, skipping mu_1 = 0
    let mut mu: Vec<f64> = lap_eigs.iter().rev().copied().collect();
    // clamp tiny negatives from roundoff
    for v in mu.iter_mut() {
        if v.abs() < 1e-9 * n as f64 {
            *v = v.max(0.0);
        }
    }
    let algebraic = if n > 1 { mu[1].max(0.0) } else { 0.0 };
    let (trees_log, resistance) = if connected && n > 1 {
        let log_t: f64 = mu[1..].iter().map(|&v| v.ln()).sum::<f64>() - (n as f64).ln();
        let er: f64 = n as f64 * mu[1..].iter().map(|&v| 1.0 / v).sum::<f64>();
        (Some(log_t), Some(er))
    } else if n == 1 {
        (Some(0.0), Some(0.0))
    } else {
        (None, None)
    };
    let trees_exact = if n <= 16 {
        Some(spanning_tree_count_exact(graph))
    } else {
        None
    };
    Ok(SpectralMeasures {
        spectral_radius: lambda1,
        spectral_gap: lambda1 - lambda2,
        natural_connectivity: natural,
        algebraic_connectivity: algebraic,
        spanning_trees_log: trees_log,
        spanning_trees_exact: trees_exact,
        effective_resistance: resistance,
    })
}

/// Exact spanning-tree count from a Laplacian cofactor by fraction-free
/// integer elimination. Intended for small graphs (N <= 16).
pub fn spanning_tree_count_exact(graph: &Graph) -> u128 {
    let n = graph.node_count();
    if n <= 1 {
        return 1;
    }
    let m = n - 1;
    let mut lap = vec![0i128; m * m];
    for &(u, v) in graph.edges() {
        // drop row/column 0
        if u > 0 && v > 0 {
            lap[(u - 1) * m + (v - 1)] -= 1;
            lap[(v - 1) * m + (u - 1)] -= 1;
        }
        if u > 0 {
            lap[(u - 1) * m + (u - 1)] += 1;
        }
        if v > 0 {
            lap[(v - 1) * m + (v - 1)] += 1;
        }
    }
    // Bareiss fraction-free determinant
    let mut prev = 1i128;
    let mut mat = lap;
    for k in 0..m {
        if mat[k * m + k] == 0 {
            let Some(swap) = ((k + 1)..m).find(|&r| mat[r * m + k] != 0) else {
                return 0;
            };
            for c in 0..m {
                mat.swap(k * m + c, swap * m + c);
                mat[k * m + c] = -mat[k * m + c];
            }
        }
        for r in (k + 1)..m {
            for c in (k + 1)..m {
                mat[r * m + c] =
                    (mat[r * m + c] * mat[k * m + k] - mat[r * m + k] * mat[k * m + c]) / prev;
            }
            mat[r * m + k] = 0;
        }
        prev = mat[k * m + k];
    }
    mat[(m - 1) * m + (m - 1)].unsigned_abs() as u128
}
