//! Per-step functionality evaluators: LCC size, component count, driver-node
//! counts (minimum-inputs and exact-controllability routes), adjacency rank
//! and communicable node pairs.

use crate::error::{Error, Result};
use crate::graph::{components, Graph, RemovalMask};
use crate::linalg;
use crate::matching::hopcroft_karp;

/// Node count above which the O(N^3) exact-controllability rank emits a cost
/// warning to stderr.
pub const ECT_WARN_NODES: usize = 512;

/// Which per-step quantities to compute when sampling a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MeasureSet {
    pub lcc: bool,
    pub ncc: bool,
    pub driver_mit: bool,
    pub driver_ect: bool,
    pub adjacency_rank: bool,
    pub cnp: bool,
}

impl MeasureSet {
    pub fn is_empty(&self) -> bool {
        !(self.lcc || self.ncc || self.driver_mit || self.driver_ect || self.adjacency_rank || self.cnp)
    }

    pub fn connectivity() -> Self {
        MeasureSet { lcc: true, ncc: true, cnp: true, ..Default::default() }
    }

    pub fn all_for(directed: bool) -> Self {
        MeasureSet {
            lcc: true,
            ncc: true,
            cnp: true,
            driver_mit: directed,
            driver_ect: true,
            adjacency_rank: true,
        }
    }
}

/// Functionality snapshot after `step` attacks.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FunctionalSample {
    pub step: usize,
    pub surviving: usize,
    pub lcc: Option<usize>,
    pub ncc: Option<usize>,
    pub driver_mit: Option<usize>,
    pub driver_ect: Option<usize>,
    pub adjacency_rank: Option<usize>,
    pub cnp_exact: Option<u64>,
    pub cnp_sq: Option<u64>,
}

/// Largest-connected-component node count of the surviving subgraph.
pub fn lcc(graph: &Graph, mask: &RemovalMask) -> Result<usize> {
    Ok(components(graph, mask)?.largest)
}

fn compact_alive(mask: &RemovalMask, n: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut alive = Vec::new();
    let mut index = vec![None; n];
    for u in 0..n {
        if mask.node_alive(u) {
            index[u] = Some(alive.len());
            alive.push(u);
        }
    }
    (alive, index)
}

/// Driver-node count by the minimum-inputs route:
/// `max(1, N' - |maximum matching|)` on the bipartite out/in split of the
/// surviving arcs, with `N'` the surviving node count.
pub fn driver_nodes_mit(graph: &Graph, mask: &RemovalMask) -> Result<usize> {
    if !graph.is_directed() {
        return Err(Error::WrongGraphKind { expected: "directed" });
    }
    mask.check_dims(graph)?;
    let n = graph.node_count();
    let (alive, index) = compact_alive(mask, n);
    let n_alive = alive.len();
    if n_alive == 0 {
        return Ok(0);
    }
    let mut adj = vec![Vec::new(); n_alive];
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        if mask.edge_alive(e) {
            if let (Some(iu), Some(iv)) = (index[u], index[v]) {
                adj[iu].push(iv);
            }
        }
    }
    let matching = hopcroft_karp(&adj, n_alive);
    Ok((n_alive - matching).max(1))
}

/// Adjacency-matrix rank of the surviving subgraph, computed by elimination
/// with partial pivoting at tolerance `1e-8 * N' * max|A|`.
pub fn adjacency_rank(graph: &Graph, mask: &RemovalMask) -> Result<usize> {
    mask.check_dims(graph)?;
    let n = graph.node_count();
    let (alive, index) = compact_alive(mask, n);
    let n_alive = alive.len();
    if n_alive == 0 {
        return Ok(0);
    }
    if n_alive > ECT_WARN_NODES {
        eprintln!(
            "netrobust: warning: exact-controllability rank on {} nodes is O(N^3) per step",
            n_alive
        );
    }
    let mut a = vec![0.0f64; n_alive * n_alive];
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        if mask.edge_alive(e) {
            if let (Some(iu), Some(iv)) = (index[u], index[v]) {
                a[iu * n_alive + iv] = 1.0;
                if !graph.is_directed() {
                    a[iv * n_alive + iu] = 1.0;
                }
            }
        }
    }
    let tol = linalg::rank_tolerance(&a, n_alive);
    Ok(linalg::rank(a, n_alive, tol))
}

/// Driver-node count by the exact-controllability route:
/// `max(1, N' - rank(A'))` with `A'` the surviving adjacency matrix.
pub fn driver_nodes_ect(graph: &Graph, mask: &RemovalMask) -> Result<usize> {
    let n_alive = mask.surviving_nodes();
    if n_alive == 0 {
        return Ok(0);
    }
    let rank = adjacency_rank(graph, mask)?;
    Ok((n_alive - rank).max(1))
}

/// Communicable node pairs of the surviving subgraph:
/// exact `sum_j C(S_j, 2)` and the squared variant `sum_j S_j^2`.
pub fn cnp(graph: &Graph, mask: &RemovalMask) -> Result<(u64, u64)> {
    let decomp = components(graph, mask)?;
    let mut exact = 0u64;
    let mut sq = 0u64;
    for &s in &decomp.sizes {
        let s = s as u64;
        exact += s * (s - 1) / 2;
        sq += s * s;
    }
    Ok((exact, sq))
}

/// Computes the requested quantities for the surviving subgraph.
pub fn sample(graph: &Graph, mask: &RemovalMask, which: MeasureSet, step: usize) -> Result<FunctionalSample> {
    if which.is_empty() {
        return Err(Error::InvalidParameter("empty measure set".into()));
    }
    if which.driver_mit && !graph.is_directed() {
        return Err(Error::WrongGraphKind { expected: "directed" });
    }
    mask.check_dims(graph)?;
    let mut out = FunctionalSample {
        step,
        surviving: mask.surviving_nodes(),
        lcc: None,
        ncc: None,
        driver_mit: None,
        driver_ect: None,
        adjacency_rank: None,
        cnp_exact: None,
        cnp_sq: None,
    };
    if which.lcc || which.ncc || which.cnp {
        let decomp = components(graph, mask)?;
        if which.lcc {
            out.lcc = Some(decomp.largest);
        }
        if which.ncc {
            out.ncc = Some(decomp.count);
        }
        if which.cnp {
            let mut exact = 0u64;
            let mut sq = 0u64;
            for &s in &decomp.sizes {
                let s = s as u64;
                exact += s * (s - 1) / 2;
                sq += s * s;
            }
            out.cnp_exact = Some(exact);
            out.cnp_sq = Some(sq);
        }
    }
    if which.driver_mit {
        out.driver_mit = Some(driver_nodes_mit(graph, mask)?);
    }
    if which.driver_ect || which.adjacency_rank {
        let rank = adjacency_rank(graph, mask)?;
        if which.adjacency_rank {
            out.adjacency_rank = Some(rank);
        }
        if which.driver_ect {
            let n_alive = mask.surviving_nodes();
            out.driver_ect = Some(if n_alive == 0 { 0 } else { (n_alive - rank).max(1) });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcc_examples() {
        let g = Graph::new(4, false, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut mask = RemovalMask::new(&g);
        mask.remove_node(&g, 0).unwrap();
        assert_eq!(lcc(&g, &mask).unwrap(), 3);

        let star = Graph::new(4, false, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut mask = RemovalMask::new(&star);
        mask.remove_node(&star, 0).unwrap();
        assert_eq!(lcc(&star, &mask).unwrap(), 1);
    }

    #[test]
    fn mit_directed_chain_needs_one_driver() {
        let g = Graph::new(4, true, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(driver_nodes_mit(&g, &RemovalMask::new(&g)).unwrap(), 1);
    }

    #[test]
    fn mit_isolated_nodes_all_drivers() {
        let g = Graph::new(4, true, vec![]).unwrap();
        assert_eq!(driver_nodes_mit(&g, &RemovalMask::new(&g)).unwrap(), 4);
    }

    #[test]
    fn mit_out_star_three_drivers() {
        let g = Graph::new(4, true, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(driver_nodes_mit(&g, &RemovalMask::new(&g)).unwrap(), 3);
    }

    #[test]
    fn mit_rejects_undirected() {
        let g = Graph::new(3, false, vec![(0, 1)]).unwrap();
        assert!(matches!(
            driver_nodes_mit(&g, &RemovalMask::new(&g)),
            Err(Error::WrongGraphKind { .. })
        ));
    }

    #[test]
    fn ect_k4_full_rank() {
        let g = Graph::new(4, false, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mask = RemovalMask::new(&g);
        assert_eq!(adjacency_rank(&g, &mask).unwrap(), 4);
        assert_eq!(driver_nodes_ect(&g, &mask).unwrap(), 1);
    }

    #[test]
    fn ect_empty_graph_all_drivers() {
        let g = Graph::new(4, false, vec![]).unwrap();
        assert_eq!(driver_nodes_ect(&g, &RemovalMask::new(&g)).unwrap(), 4);
    }

    #[test]
    fn ect_c4_rank_two() {
        // C4 eigenvalues {2, 0, 0, -2}
        let g = Graph::new(4, false, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mask = RemovalMask::new(&g);
        assert_eq!(adjacency_rank(&g, &mask).unwrap(), 2);
        assert_eq!(driver_nodes_ect(&g, &mask).unwrap(), 2);
    }

    #[test]
    fn cnp_examples() {
        let g = Graph::new(4, false, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mask = RemovalMask::new(&g);
        assert_eq!(cnp(&g, &mask).unwrap(), (6, 16));
        let mut mask = RemovalMask::new(&g);
        mask.remove_node(&g, 0).unwrap();
        assert_eq!(cnp(&g, &mask).unwrap().0, 3);

        // two 2-node components
        let g = Graph::new(4, false, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(cnp(&g, &RemovalMask::new(&g)).unwrap(), (2, 8));
    }

    #[test]
    fn sample_requires_nonempty_set() {
        let g = Graph::new(2, false, vec![(0, 1)]).unwrap();
        let mask = RemovalMask::new(&g);
        assert!(sample(&g, &mask, MeasureSet::default(), 0).is_err());
        let s = sample(&g, &mask, MeasureSet::connectivity(), 0).unwrap();
        assert_eq!(s.lcc, Some(2));
        assert_eq!(s.driver_ect, None);
    }
}
