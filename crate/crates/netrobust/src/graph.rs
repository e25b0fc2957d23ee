//! Graph representation, removal masks and connected-component machinery.
//!
//! Node ids are dense integers in `[0, N)`. Graphs are simple: no self-loops,
//! no duplicate edges. For directed graphs `(u,v)` and `(v,u)` may coexist.
//! A [`Graph`] is immutable after construction; all attack simulation happens
//! through a [`RemovalMask`] overlay, so one parsed graph can serve many
//! concurrent simulations.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Graph {
    directed: bool,
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per-node incident list of `(neighbor, edge id)`. For directed graphs
    /// these are the out-neighbors; undirected graphs store both endpoints.
    adj_out: Vec<Vec<(usize, usize)>>,
    /// In-neighbors, populated only for directed graphs.
    adj_in: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, directed: bool, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::IdOutOfRange { kind: "node", id: u, limit: n });
            }
            if v >= n {
                return Err(Error::IdOutOfRange { kind: "node", id: v, limit: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = if directed || u < v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let mut adj_out = vec![Vec::new(); n];
        let mut adj_in = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if directed {
                adj_out[u].push((v, e));
                adj_in[v].push((u, e));
            } else {
                adj_out[u].push((v, e));
                adj_out[v].push((u, e));
            }
        }
        Ok(Graph { directed, n, edges, adj_out, adj_in })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Out-neighbors for directed graphs, all neighbors for undirected ones.
    pub fn neighbors_out(&self, u: usize) -> &[(usize, usize)] {
        &self.adj_out[u]
    }

    pub fn neighbors_in(&self, u: usize) -> &[(usize, usize)] {
        if self.directed {
            &self.adj_in[u]
        } else {
            &self.adj_out[u]
        }
    }

    /// Incident edge ids regardless of direction.
    pub fn incident_edges(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let out = self.adj_out[u].iter().map(|&(_, e)| e);
        let inn = if self.directed { &self.adj_in[u][..] } else { &[][..] };
        out.chain(inn.iter().map(|&(_, e)| e))
    }

    /// Neighbors reachable when edge directions are ignored.
    pub fn neighbors_undirected(&self, u: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let out = self.adj_out[u].iter().copied();
        let inn = if self.directed { &self.adj_in[u][..] } else { &[][..] };
        out.chain(inn.iter().copied())
    }

    /// Reads the edge-list text format: an optional `# {directed|undirected} N M`
    /// header, one `u v` pair per line; blank lines and `#` comments ignored.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut directed = false;
        let mut declared_n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_id = 0usize;
        let mut saw_node = false;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() == 3 && (fields[0] == "directed" || fields[0] == "undirected") {
                    directed = fields[0] == "directed";
                    declared_n =
                        Some(fields[1].parse().map_err(|_| Error::EdgeListParse {
                            line: line_no,
                            reason: format!("bad node count {:?}", fields[1]),
                        })?);
                }
                continue;
            }
            let mut it = trimmed.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::EdgeListParse { line: line_no, reason: "missing source".into() })?
                .parse()
                .map_err(|_| Error::EdgeListParse { line: line_no, reason: "bad source id".into() })?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::EdgeListParse { line: line_no, reason: "missing target".into() })?
                .parse()
                .map_err(|_| Error::EdgeListParse { line: line_no, reason: "bad target id".into() })?;
            if it.next().is_some() {
                return Err(Error::EdgeListParse { line: line_no, reason: "trailing tokens".into() });
            }
            max_id = max_id.max(u).max(v);
            saw_node = true;
            edges.push((u, v));
        }
        let n = declared_n.unwrap_or(if saw_node { max_id + 1 } else { 0 });
        Graph::new(n, directed, edges)
    }

    pub fn write_edge_list<W: Write>(&self, mut writer: W) -> Result<()> {
        writeln!(
            writer,
            "# {} {} {}",
            if self.directed { "directed" } else { "undirected" },
            self.n,
            self.edges.len()
        )?;
        for &(u, v) in &self.edges {
            writeln!(writer, "{} {}", u, v)?;
        }
        Ok(())
    }

    pub fn from_edge_list_file(path: &std::path::Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_edge_list(std::io::BufReader::new(file))
    }

    pub fn to_edge_list_file(&self, path: &std::path::Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        self.write_edge_list(std::io::BufWriter::new(file))
    }
}

/// Copy-on-write overlay recording which nodes and edges have been attacked.
///
/// Removing a node marks all incident edges as dead. `removed_nodes` counts
/// node attacks (the attack counter `i`); `attacked_edges` counts explicit
/// edge attacks only.
#[derive(Debug, Clone)]
pub struct RemovalMask {
    node_dead: Vec<bool>,
    edge_dead: Vec<bool>,
    removed_nodes: usize,
    attacked_edges: usize,
}

impl RemovalMask {
    pub fn new(graph: &Graph) -> Self {
        RemovalMask {
            node_dead: vec![false; graph.node_count()],
            edge_dead: vec![false; graph.edge_count()],
            removed_nodes: 0,
            attacked_edges: 0,
        }
    }

    pub fn check_dims(&self, graph: &Graph) -> Result<()> {
        if self.node_dead.len() != graph.node_count() || self.edge_dead.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch {
                graph_nodes: graph.node_count(),
                graph_edges: graph.edge_count(),
                mask_nodes: self.node_dead.len(),
                mask_edges: self.edge_dead.len(),
            });
        }
        Ok(())
    }

    pub fn node_alive(&self, u: usize) -> bool {
        !self.node_dead[u]
    }

    pub fn edge_alive(&self, e: usize) -> bool {
        !self.edge_dead[e]
    }

    /// Node attacks performed so far.
    pub fn removed_nodes(&self) -> usize {
        self.removed_nodes
    }

    /// Explicit edge attacks performed so far.
    pub fn attacked_edges(&self) -> usize {
        self.attacked_edges
    }

    pub fn surviving_nodes(&self) -> usize {
        self.node_dead.len() - self.removed_nodes
    }

    pub fn remove_node(&mut self, graph: &Graph, u: usize) -> Result<()> {
        self.check_dims(graph)?;
        if u >= self.node_dead.len() {
            return Err(Error::IdOutOfRange { kind: "node", id: u, limit: self.node_dead.len() });
        }
        if self.node_dead[u] {
            return Err(Error::DoubleRemoval { kind: "node", id: u });
        }
        self.node_dead[u] = true;
        self.removed_nodes += 1;
        for e in graph.incident_edges(u) {
            self.edge_dead[e] = true;
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, e: usize) -> Result<()> {
        if e >= self.edge_dead.len() {
            return Err(Error::IdOutOfRange { kind: "edge", id: e, limit: self.edge_dead.len() });
        }
        if self.edge_dead[e] {
            return Err(Error::DoubleRemoval { kind: "edge", id: e });
        }
        self.edge_dead[e] = true;
        self.attacked_edges += 1;
        Ok(())
    }

    pub fn alive_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.node_dead.iter().enumerate().filter(|(_, &d)| !d).map(|(i, _)| i)
    }

    pub fn alive_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edge_dead.iter().enumerate().filter(|(_, &d)| !d).map(|(i, _)| i)
    }
}

/// Weakly-connected components of the surviving subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Component id per node; `None` for removed nodes.
    pub component: Vec<Option<usize>>,
    /// Component count Γ.
    pub count: usize,
    /// Component sizes, indexed by component id.
    pub sizes: Vec<usize>,
    /// Largest component size, 0 if no nodes survive.
    pub largest: usize,
}

/// Weakly-connected components of the subgraph surviving under `mask`.
/// Directed edges are treated as undirected for component purposes.
pub fn components(graph: &Graph, mask: &RemovalMask) -> Result<ComponentDecomposition> {
    mask.check_dims(graph)?;
    let n = graph.node_count();
    let mut component = vec![None; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if !mask.node_alive(start) || component[start].is_some() {
            continue;
        }
        let cid = sizes.len();
        let mut size = 0usize;
        component[start] = Some(cid);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            size += 1;
            for (v, e) in graph.neighbors_undirected(u) {
                if mask.edge_alive(e) && mask.node_alive(v) && component[v].is_none() {
                    component[v] = Some(cid);
                    queue.push_back(v);
                }
            }
        }
        sizes.push(size);
    }
    let largest = sizes.iter().copied().max().unwrap_or(0);
    Ok(ComponentDecomposition { component, count: sizes.len(), largest, sizes })
}

/// Count of alive incident edges to alive neighbors (total degree for
/// directed graphs). Errors if `node` itself is removed.
pub fn degree(graph: &Graph, mask: &RemovalMask, node: usize) -> Result<usize> {
    mask.check_dims(graph)?;
    if !mask.node_alive(node) {
        return Err(Error::QueriedRemoved(node));
    }
    Ok(graph
        .neighbors_undirected(node)
        .filter(|&(v, e)| mask.edge_alive(e) && mask.node_alive(v))
        .count())
}

pub fn out_degree(graph: &Graph, mask: &RemovalMask, node: usize) -> Result<usize> {
    mask.check_dims(graph)?;
    if !mask.node_alive(node) {
        return Err(Error::QueriedRemoved(node));
    }
    Ok(graph
        .neighbors_out(node)
        .iter()
        .filter(|&&(v, e)| mask.edge_alive(e) && mask.node_alive(v))
        .count())
}

pub fn in_degree(graph: &Graph, mask: &RemovalMask, node: usize) -> Result<usize> {
    mask.check_dims(graph)?;
    if !mask.node_alive(node) {
        return Err(Error::QueriedRemoved(node));
    }
    Ok(graph
        .neighbors_in(node)
        .iter()
        .filter(|&&(v, e)| mask.edge_alive(e) && mask.node_alive(v))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, false, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_intact_single_component() {
        let g = k4();
        let c = components(&g, &RemovalMask::new(&g)).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.largest, 4);
    }

    #[test]
    fn path_split_by_cut_node() {
        let g = Graph::new(4, false, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut mask = RemovalMask::new(&g);
        mask.remove_node(&g, 1).unwrap();
        let c = components(&g, &mask).unwrap();
        assert_eq!(c.count, 2);
        let mut sizes = c.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
        assert_eq!(c.largest, 2);
    }

    #[test]
    fn isolated_nodes_each_a_component() {
        let g = Graph::new(4, false, vec![]).unwrap();
        let c = components(&g, &RemovalMask::new(&g)).unwrap();
        assert_eq!(c.count, 4);
        assert_eq!(c.largest, 1);
    }

    #[test]
    fn star_degrees() {
        let g = Graph::new(4, false, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut mask = RemovalMask::new(&g);
        assert_eq!(degree(&g, &mask, 0).unwrap(), 3);
        mask.remove_node(&g, 1).unwrap();
        assert_eq!(degree(&g, &mask, 0).unwrap(), 2);
    }

    #[test]
    fn directed_chain_out_degree() {
        let g = Graph::new(4, true, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let mask = RemovalMask::new(&g);
        assert_eq!(out_degree(&g, &mask, 1).unwrap(), 1);
        assert_eq!(in_degree(&g, &mask, 1).unwrap(), 1);
        assert_eq!(degree(&g, &mask, 1).unwrap(), 2);
    }

    #[test]
    fn node_removal_kills_incident_edges() {
        let g = k4();
        let mut mask = RemovalMask::new(&g);
        mask.remove_node(&g, 0).unwrap();
        assert_eq!(mask.removed_nodes(), 1);
        let dead = (0..g.edge_count()).filter(|&e| !mask.edge_alive(e)).count();
        assert_eq!(dead, 3);
    }

    #[test]
    fn edge_removal_counts_separately() {
        let g = k4();
        let mut mask = RemovalMask::new(&g);
        mask.remove_edge(0).unwrap();
        assert_eq!(mask.removed_nodes(), 0);
        assert_eq!(mask.attacked_edges(), 1);
    }

    #[test]
    fn double_removal_is_an_error() {
        let g = k4();
        let mut mask = RemovalMask::new(&g);
        mask.remove_node(&g, 0).unwrap();
        assert!(matches!(mask.remove_node(&g, 0), Err(Error::DoubleRemoval { .. })));
        mask.remove_edge(5).unwrap();
        assert!(matches!(mask.remove_edge(5), Err(Error::DoubleRemoval { .. })));
    }

    #[test]
    fn dead_node_degree_query_errors() {
        let g = k4();
        let mut mask = RemovalMask::new(&g);
        mask.remove_node(&g, 2).unwrap();
        assert!(matches!(degree(&g, &mask, 2), Err(Error::QueriedRemoved(2))));
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(matches!(Graph::new(3, false, vec![(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::new(3, false, vec![(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(..))
        ));
        // reciprocal arcs are fine in a digraph
        assert!(Graph::new(3, true, vec![(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, true, vec![(0, 1), (3, 2), (4, 0)]).unwrap();
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        let h = Graph::read_edge_list(std::io::Cursor::new(buf)).unwrap();
        assert_eq!(h.node_count(), 5);
        assert!(h.is_directed());
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn edge_list_reports_bad_line() {
        let text = "0 1\nnope\n";
        match Graph::read_edge_list(std::io::Cursor::new(text)) {
            Err(Error::EdgeListParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {:?}", other.map(|g| g.edge_count())),
        }
    }
}
