//! Dense numerical routines: rank by Gaussian elimination and a cyclic
//! Jacobi eigensolver for symmetric matrices.
//!
//! Matrices are row-major `Vec<f64>` of dimension `n * n`. The inputs here
//! are adjacency and Laplacian matrices with small integer entries, so the
//! scale-aware tolerances below cleanly separate exact zeros from pivots.

/// Numerical rank via elimination with partial pivoting.
///
/// `tol` is the absolute pivot threshold; pass [`rank_tolerance`] for
/// adjacency-style integer matrices.
pub fn rank(mut a: Vec<f64>, n: usize, tol: f64) -> usize {
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..n {
        // partial pivoting on the current column
        let mut best = row;
        let mut best_abs = 0.0f64;
        for r in row..n {
            let v = a[r * n + col].abs();
            if v > best_abs {
                best_abs = v;
                best = r;
            }
        }
        if best_abs <= tol {
            continue;
        }
        if best != row {
            for c in 0..n {
                a.swap(row * n + c, best * n + c);
            }
        }
        let pivot = a[row * n + col];
        for r in (row + 1)..n {
            let factor = a[r * n + col] / pivot;
            if factor != 0.0 {
                for c in col..n {
                    a[r * n + c] -= factor * a[row * n + c];
                }
            }
        }
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    rank
}

/// Default rank tolerance: `1e-8 * n * max|A|`.
pub fn rank_tolerance(a: &[f64], n: usize) -> f64 {
    let max_abs = a.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    1e-8 * n as f64 * max_abs.max(1.0)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps,
/// sorted descending.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    let (values, _) = symmetric_eigen(a, n);
    values
}

/// Full symmetric eigendecomposition `A = Q diag(l) Q^T`.
///
/// Returns eigenvalues sorted descending and eigenvectors as columns of `q`
/// (row-major), in matching order.
pub fn symmetric_eigen(a: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut q = vec![0.0f64; n * n];
    for i in 0..n {
        q[i * n + i] = 1.0;
    }
    if n <= 1 {
        return (m, q);
    }
    let scale = a.iter().fold(0.0f64, |s, &v| s.max(v.abs())).max(1.0);
    let eps = 1e-14 * scale;
    let max_sweeps = 64;
    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for r in (p + 1)..n {
                off = off.max(m[p * n + r].abs());
            }
        }
        if off <= eps {
            break;
        }
        for p in 0..n {
            for r in (p + 1)..n {
                let apq = m[p * n + r];
                if apq.abs() <= eps * 1e-2 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[r * n + r];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // rotate rows/columns p and r
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkr = m[k * n + r];
                    m[k * n + p] = c * mkp - s * mkr;
                    m[k * n + r] = s * mkp + c * mkr;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mrk = m[r * n + k];
                    m[p * n + k] = c * mpk - s * mrk;
                    m[r * n + k] = s * mpk + c * mrk;
                }
                for k in 0..n {
                    let qkp = q[k * n + p];
                    let qkr = q[k * n + r];
                    q[k * n + p] = c * qkp - s * qkr;
                    q[k * n + r] = s * qkp + c * qkr;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    // sort eigenpairs descending by eigenvalue
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    let sorted_values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut sorted_q = vec![0.0f64; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            sorted_q[row * n + new_col] = q[row * n + old_col];
        }
    }
    values = sorted_values;
    (values, sorted_q)
}
