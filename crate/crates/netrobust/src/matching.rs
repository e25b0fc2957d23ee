//! Hopcroft–Karp maximum bipartite matching.
//!
//! Used for the minimum-inputs driver-node count: the directed graph is split
//! into out-copies (left) and in-copies (right), one left-right edge per arc.

const INF: usize = usize::MAX;
const NIL: usize = usize::MAX;

/// Maximum matching size on a bipartite graph given as per-left-node
/// adjacency lists over `n_right` right nodes. O(E sqrt(V)).
pub fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> usize {
    let n_left = adj.len();
    let mut match_left = vec![NIL; n_left];
    let mut match_right = vec![NIL; n_right];
    let mut dist = vec![INF; n_left];
    let mut queue = std::collections::VecDeque::new();
    let mut matching = 0usize;

    loop {
        // BFS layering from all free left nodes.
        queue.clear();
        let mut found_augmenting = false;
        for u in 0..n_left {
            if match_left[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_right[v];
                if w == NIL {
                    found_augmenting = true;
                } else if dist[w] == INF {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found_augmenting {
            break;
        }
        // DFS augmentation along the layered graph.
        for u in 0..n_left {
            if match_left[u] == NIL && dfs(u, adj, &mut match_left, &mut match_right, &mut dist) {
                matching += 1;
            }
        }
    }
    matching
}

fn dfs(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for i in 0..adj[u].len() {
        let v = adj[u][i];
        let w = match_right[v];
        if w == NIL || (dist[w] == dist[u] + 1 && dfs(w, adj, match_left, match_right, dist)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    dist[u] = INF;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_on_identity() {
        let adj = vec![vec![0], vec![1], vec![2]];
        assert_eq!(hopcroft_karp(&adj, 3), 3);
    }

    #[test]
    fn star_matches_once() {
        // one left node connected to all right nodes
        let adj = vec![vec![0, 1, 2]];
        assert_eq!(hopcroft_karp(&adj, 3), 1);
    }

    #[test]
    fn empty_graph() {
        let adj: Vec<Vec<usize>> = vec![vec![], vec![]];
        assert_eq!(hopcroft_karp(&adj, 2), 0);
    }

    #[test]
    fn augmenting_path_needed() {
        // left 0: {0,1}, left 1: {0} — greedy could match 0-0 and strand 1
        let adj = vec![vec![0, 1], vec![0]];
        assert_eq!(hopcroft_karp(&adj, 2), 2);
    }
}
