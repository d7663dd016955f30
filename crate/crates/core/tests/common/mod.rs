//! Independent oracles for the integration and acceptance tests.
//!
//! Nothing here calls into the matrix or ranking code under test; every
//! helper rebuilds what it needs from the raw link structure.

#![allow(dead_code)]

use rand::Rng;
use rankforge_core::DirectedGraph;

/// Random graph with `n` nodes, link probability `p`, and roughly a
/// `dangling_share` of nodes forced to have no out-links.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, dangling_share: f64) -> DirectedGraph {
    let mut edges = Vec::new();
    for s in 0..n {
        if rng.gen_bool(dangling_share) {
            continue;
        }
        for t in 0..n {
            if rng.gen_bool(p) {
                edges.push((s, t));
            }
        }
    }
    DirectedGraph::from_edges(n, &edges).unwrap()
}

/// Dense `G` rebuilt from the links: column `j` spreads `α` evenly over the
/// targets of `j` (or over all nodes if `j` has none), plus `(1 − α)/n`.
pub fn dense_google(g: &DirectedGraph, alpha: f64) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![(1.0 - alpha) / n as f64; n]; n];
    for j in 0..n {
        let targets = g.out_links(j);
        if targets.is_empty() {
            for row in m.iter_mut() {
                row[j] += alpha / n as f64;
            }
        } else {
            for &i in targets {
                m[i][j] += alpha / targets.len() as f64;
            }
        }
    }
    m
}

/// Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f != 0.0 {
                let (top, bottom) = a.split_at_mut(row);
                for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= f * p;
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Stationary vector from `(I − α S) x = (1 − α)/n · 1`, with `S` the
/// dangling-repaired column-stochastic matrix built from the links.
pub fn pagerank_by_solve(g: &DirectedGraph, alpha: f64) -> Vec<f64> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for j in 0..n {
        let targets = g.out_links(j);
        if targets.is_empty() {
            for row in a.iter_mut() {
                row[j] -= alpha / n as f64;
            }
        } else {
            for &i in targets {
                a[i][j] -= alpha / targets.len() as f64;
            }
        }
    }
    let x = solve(a, vec![(1.0 - alpha) / n as f64; n]);
    let s: f64 = x.iter().sum();
    x.into_iter().map(|v| v / s).collect()
}

/// Leibniz-formula determinant; only for tiny matrices.
pub fn det_leibniz(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0.0;
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * (0..n).map(|i| m[i][p[i]]).product::<f64>();
    });
    total
}

/// Calls `f` on every permutation of `v[k..]` (with `v[..k]` fixed).
pub fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// All permutations of `1..=n`.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (1..=n).collect();
    permute(&mut v, 0, &mut |p| out.push(p.to_vec()));
    out
}

/// Literal square crawl: for each square `j`, scan every node for one on the
/// K-edge (`K = j`, `K* <= j`), then scan every node for one on the K*-edge
/// (`K* = j`, `K < j`). Returns nodes in 2DRank order.
pub fn square_scan(k: &[usize], k_star: &[usize]) -> Vec<usize> {
    let n = k.len();
    let mut order = Vec::with_capacity(n);
    for j in 1..=n {
        for i in 0..n {
            if k[i] == j && k_star[i] <= j {
                order.push(i);
            }
        }
        for i in 0..n {
            if k_star[i] == j && k[i] < j {
                order.push(i);
            }
        }
    }
    order
}

/// Random permutation of `1..=n` as a rank vector.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    v
}

/// In-degree of `target` (1-based) counted straight from link-list text.
pub fn grep_in_degree(text: &str, target: usize) -> usize {
    text.split(',')
        .filter_map(|rec| rec.split_once('.'))
        .filter(|(_, targets)| {
            targets
                .split_whitespace()
                .any(|t| t.parse::<usize>() == Ok(target))
        })
        .count()
}

/// Number of link-list records with no targets.
pub fn grep_empty_records(text: &str) -> usize {
    text.split(',')
        .filter_map(|rec| rec.split_once('.'))
        .filter(|(_, targets)| targets.trim().is_empty())
        .count()
}

/// True if every eigenvalue's conjugate appears in the list within `tol`.
pub fn conjugate_closed(ev: &[(f64, f64)], tol: f64) -> bool {
    ev.iter().all(|&(re, im)| {
        ev.iter()
            .any(|&(r2, i2)| (r2 - re).abs() <= tol && (i2 + im).abs() <= tol)
    })
}
