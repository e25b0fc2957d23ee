//! Independent oracles used by the integration tests. Everything here is
//! deliberately naive — brute-force enumeration and exact big-integer
//! arithmetic — so it shares no code path with the library implementations
//! it checks.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Union-find-free component labelling by transitive closure over a
/// boolean reachability matrix. Suitable for tiny graphs only.
pub fn closure_components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
    }
    for &(u, v) in edges {
        reach[u][v] = true;
        reach[v][u] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for i in 0..n {
        if label[i] == usize::MAX {
            for j in 0..n {
                if reach[i][j] {
                    label[j] = next;
                }
            }
            next += 1;
        }
    }
    label
}

/// Component sizes, descending; `(largest, count)` convenience.
pub fn closure_component_sizes(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    if n == 0 {
        return vec![];
    }
    let label = closure_components(n, edges);
    let count = label.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0usize; count];
    for &l in &label {
        sizes[l] += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Maximum bipartite matching by exhaustive recursion over left nodes.
/// `adj[l]` lists right nodes reachable from left node `l`.
pub fn brute_matching(adj: &[Vec<usize>], n_right: usize) -> usize {
    fn rec(adj: &[Vec<usize>], l: usize, used: &mut [bool]) -> usize {
        if l == adj.len() {
            return 0;
        }
        // Either leave l unmatched...
        let mut best = rec(adj, l + 1, used);
        // ...or match it to any free right node.
        for &r in &adj[l] {
            if !used[r] {
                used[r] = true;
                best = best.max(1 + rec(adj, l + 1, used));
                used[r] = false;
            }
        }
        best
    }
    let mut used = vec![false; n_right];
    rec(adj, 0, &mut used)
}

/// Exact rank of an integer matrix via fraction-free Gaussian elimination
/// (Bareiss) with arbitrary-precision integers.
pub fn exact_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut col = 0;
    while rank < rows && col < cols {
        // Find a pivot row for this column.
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = &num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Exact spanning-tree count: determinant of any Laplacian cofactor,
/// fraction-free Bareiss over big integers.
pub fn spanning_trees_cofactor(n: usize, edges: &[(usize, usize)]) -> BigInt {
    if n <= 1 {
        return BigInt::from(1);
    }
    // Laplacian with row/column n-1 deleted.
    let d = n - 1;
    let mut m = vec![vec![BigInt::zero(); d]; d];
    for &(u, v) in edges {
        if u < d {
            m[u][u] += 1;
        }
        if v < d {
            m[v][v] += 1;
        }
        if u < d && v < d {
            m[u][v] -= 1;
            m[v][u] -= 1;
        }
    }
    let mut prev = BigInt::from(1);
    for k in 0..d {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..d).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            // Row swap flips the determinant sign only; the result is
            // reported as an absolute value.
            m.swap(k, p);
        }
        for r in k + 1..d {
            for c in k + 1..d {
                let num = &m[k][k] * &m[r][c] - &m[r][k] * &m[k][c];
                m[r][c] = &num / &prev;
            }
            m[r][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    m[d - 1][d - 1].abs()
}

/// All permutations of 0..k in an arbitrary (recursion) order — a
/// generation scheme unrelated to the library's lexicographic stepper.
pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pool.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..pool.len() {
            let x = pool.remove(i);
            acc.push(x);
            rec(pool, acc, out);
            acc.pop();
            pool.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..k).collect(), &mut Vec::new(), &mut out);
    out
}

/// Mean largest-component fraction over all node-removal orders, computed
/// with the closure-based component oracle: for each order, sums N_L(i)/N
/// over i = 0..N-1 and divides by N.
pub fn naive_exa_r1(n: usize, edges: &[(usize, usize)]) -> f64 {
    let perms = all_permutations(n);
    let mut total = 0.0;
    for perm in &perms {
        let mut removed = vec![false; n];
        let mut acc = 0.0;
        for i in 0..n {
            let alive: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
            let index: std::collections::HashMap<usize, usize> =
                alive.iter().enumerate().map(|(j, &v)| (v, j)).collect();
            let sub: Vec<(usize, usize)> = edges
                .iter()
                .filter(|&&(u, v)| !removed[u] && !removed[v])
                .map(|&(u, v)| (index[&u], index[&v]))
                .collect();
            let largest = closure_component_sizes(alive.len(), &sub).first().copied().unwrap_or(0);
            acc += largest as f64 / n as f64;
            removed[perm[i]] = true;
        }
        total += acc / n as f64;
    }
    total / perms.len() as f64
}

/// Betweenness by explicit enumeration of all simple paths: for every
/// ordered pair (s, t), counts shortest paths and how many pass through
/// each intermediate node. Undirected pairs are halved by the caller.
pub fn naive_node_betweenness(n: usize, edges: &[(usize, usize)], directed: bool) -> Vec<f64> {
    let mut adj = vec![vec![]; n];
    for &(u, v) in edges {
        adj[u].push(v);
        if !directed {
            adj[v].push(u);
        }
    }
    // All simple paths s -> t via DFS; keep only those of minimal length.
    fn paths(adj: &[Vec<usize>], s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![s];
        let mut visited = vec![false; adj.len()];
        visited[s] = true;
        fn dfs(
            adj: &[Vec<usize>],
            t: usize,
            stack: &mut Vec<usize>,
            visited: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let u = *stack.last().unwrap();
            if u == t {
                out.push(stack.clone());
                return;
            }
            for &w in &adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    stack.push(w);
                    dfs(adj, t, stack, visited, out);
                    stack.pop();
                    visited[w] = false;
                }
            }
        }
        dfs(adj, t, &mut stack, &mut visited, &mut out);
        out
    }
    let mut score = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let all = paths(&adj, s, t);
            let Some(min_len) = all.iter().map(|p| p.len()).min() else {
                continue;
            };
            let shortest: Vec<&Vec<usize>> = all.iter().filter(|p| p.len() == min_len).collect();
            let sigma = shortest.len() as f64;
            for p in shortest {
                for &v in &p[1..p.len() - 1] {
                    score[v] += 1.0 / sigma;
                }
            }
        }
    }
    if !directed {
        for s in &mut score {
            *s /= 2.0;
        }
    }
    score
}

/// Deterministic simple random graph on `n` nodes from a linear
/// congruential stream — intentionally unrelated to the library's RNG.
pub fn lcg_graph(n: usize, density_pct: u64, seed: u64, directed: bool) -> Vec<(usize, usize)> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state >> 33
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v <= u) {
                continue;
            }
            if next() % 100 < density_pct {
                edges.push((u, v));
            }
        }
    }
    edges
}
