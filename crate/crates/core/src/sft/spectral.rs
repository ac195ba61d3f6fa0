//! Spectral radius and Perron eigenvectors of 0/1 transition matrices.
//!
//! Irreducible matrices go through shifted power iteration. Reducible ones
//! are decomposed into strongly connected components first: the spectral
//! radius is the maximum over components and the eigenvectors are assembled
//! by back-substitution along the condensation, which also covers the
//! periodic and defective cases where plain power iteration stalls.

use crate::error::{Error, Result};
use crate::sft::components::strongly_connected;
use crate::sft::TransitionMatrix;

pub const POWER_TOLERANCE: f64 = 1e-13;
pub const POWER_MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius with left and right Perron vectors, both nonnegative and
/// normalized to sum 1. `residual` is the max-norm of the eigen-equation
/// residual over both sides.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub lambda: f64,
    pub left: Vec<f64>,
    pub right: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub via_components: bool,
}

impl SpectralData {
    pub fn entropy(&self) -> f64 {
        self.lambda.ln()
    }
}

/// Entropy data for an essential, nonempty transition matrix: the entropy of
/// the shift is log lambda.
pub fn entropy_spectral(a: &TransitionMatrix) -> Result<SpectralData> {
    if a.is_empty_shift() {
        return Err(Error::EmptyShift);
    }
    let comps = strongly_connected(a);
    if comps.len() == 1 {
        let (lambda, right, res_r, it_r) = power_iterate(a, POWER_MAX_ITERATIONS)?;
        let (_, left, _, it_l) = power_iterate(&a.transpose(), POWER_MAX_ITERATIONS)?;
        let res_l = residual(&a.transpose(), &left, lambda);
        return Ok(SpectralData {
            lambda,
            left,
            right,
            residual: res_r.max(res_l),
            iterations: it_r + it_l,
            via_components: false,
        });
    }

    // Reducible: lambda is the max over components; vectors come from the
    // structured assembly below.
    let mut lambdas = Vec::with_capacity(comps.len());
    let mut iterations = 0usize;
    for comp in &comps {
        let sub = a.restrict(comp)?;
        if sub.edge_count() == 0 {
            lambdas.push(0.0);
            continue;
        }
        let (l, _, _, it) = power_iterate(&sub, POWER_MAX_ITERATIONS)?;
        lambdas.push(l);
        iterations += it;
    }
    let lambda = lambdas.iter().copied().fold(0.0f64, f64::max);
    let right = assemble_vector(a, &comps, &lambdas, lambda)?;
    let left = assemble_vector(&a.transpose(), &comps, &lambdas, lambda)?;
    let res = residual(a, &right, lambda).max(residual(&a.transpose(), &left, lambda));
    Ok(SpectralData {
        lambda,
        left,
        right,
        residual: res,
        iterations,
        via_components: true,
    })
}

/// Shifted power iteration on an irreducible matrix. Returns
/// (lambda, sum-1 vector, residual, iterations).
pub(crate) fn power_iterate(
    a: &TransitionMatrix,
    max_iterations: usize,
) -> Result<(f64, Vec<f64>, f64, usize)> {
    let d = a.size();
    let mut v = vec![1.0 / d as f64; d];
    let mut w = vec![0.0; d];
    for it in 1..=max_iterations {
        matvec(a, &v, &mut w);
        let num: f64 = v.iter().zip(&w).map(|(x, y)| x * y).sum();
        let den: f64 = v.iter().map(|x| x * x).sum();
        let lambda = num / den;
        let res = v
            .iter()
            .zip(&w)
            .map(|(x, y)| (y - lambda * x).abs())
            .fold(0.0f64, f64::max);
        if res <= POWER_TOLERANCE {
            let sum: f64 = v.iter().sum();
            let out: Vec<f64> = v.iter().map(|x| x / sum).collect();
            let res = residual(a, &out, lambda);
            return Ok((lambda, out, res, it));
        }
        // shift by the identity: kills periodicity without moving the vectors
        let mut sum = 0.0;
        for i in 0..d {
            w[i] += v[i];
            sum += w[i];
        }
        for i in 0..d {
            v[i] = w[i] / sum;
        }
    }
    Err(Error::NonConvergence {
        tolerance: POWER_TOLERANCE,
        max_iterations,
    })
}

fn matvec(a: &TransitionMatrix, v: &[f64], out: &mut [f64]) {
    let d = a.size();
    for i in 0..d {
        let mut acc = 0.0;
        for j in 0..d {
            if a.get(i, j) {
                acc += v[j];
            }
        }
        out[i] = acc;
    }
}

fn residual(a: &TransitionMatrix, v: &[f64], lambda: f64) -> f64 {
    let mut w = vec![0.0; a.size()];
    matvec(a, v, &mut w);
    v.iter()
        .zip(&w)
        .map(|(x, y)| (y - lambda * x).abs())
        .fold(0.0f64, f64::max)
}

/// Right Perron vector of a reducible matrix. Picks a spectral-radius
/// component no other such component can reach, takes its Perron vector, and
/// back-substitutes through the ancestor components, where lambda exceeds the
/// local spectral radius so the linear systems are nonsingular with
/// nonnegative solutions.
fn assemble_vector(
    a: &TransitionMatrix,
    comps: &[Vec<usize>],
    lambdas: &[f64],
    lambda: f64,
) -> Result<Vec<f64>> {
    let d = a.size();
    let k = comps.len();
    let mut comp_of = vec![0usize; d];
    for (c, comp) in comps.iter().enumerate() {
        for &s in comp {
            comp_of[s] = c;
        }
    }
    // comp-level reachability (reach[x][y]: x reaches y, x != y)
    let mut edge = vec![vec![false; k]; k];
    for i in 0..d {
        for j in 0..d {
            if a.get(i, j) && comp_of[i] != comp_of[j] {
                edge[comp_of[i]][comp_of[j]] = true;
            }
        }
    }
    let mut reach = edge.clone();
    for m in 0..k {
        for x in 0..k {
            if reach[x][m] {
                for y in 0..k {
                    if reach[m][y] {
                        reach[x][y] = true;
                    }
                }
            }
        }
    }

    let basic: Vec<usize> = (0..k)
        .filter(|&c| lambdas[c] >= lambda * (1.0 - 1e-9))
        .collect();
    // a basic component no other basic component can reach; ties broken by
    // smallest symbol for determinism
    let mut candidates: Vec<usize> = basic
        .iter()
        .copied()
        .filter(|&c| basic.iter().all(|&b| b == c || !reach[b][c]))
        .collect();
    candidates.sort_by_key(|&c| comps[c].iter().copied().min());
    let star = candidates[0];

    let in_support: Vec<bool> = (0..k).map(|c| c == star || reach[c][star]).collect();
    let mut r = vec![0.0; d];
    let mut solved = vec![false; k];

    let sub = a.restrict(&comps[star])?;
    let (_, v, _, _) = power_iterate(&sub, POWER_MAX_ITERATIONS)?;
    for (idx, &s) in comps[star].iter().enumerate() {
        r[s] = v[idx];
    }
    solved[star] = true;

    // back-substitute ancestors once all their support successors are solved
    loop {
        let mut progressed = false;
        for c in 0..k {
            if solved[c] || !in_support[c] {
                continue;
            }
            let ready = (0..k).all(|y| y == c || !edge[c][y] || !in_support[y] || solved[y]);
            if !ready {
                continue;
            }
            let n = comps[c].len();
            let mut mat = vec![0.0; n * n];
            let mut rhs = vec![0.0; n];
            for (p, &i) in comps[c].iter().enumerate() {
                for (q, &j) in comps[c].iter().enumerate() {
                    let e = if a.get(i, j) { 1.0 } else { 0.0 };
                    mat[p * n + q] = if p == q { lambda - e } else { -e };
                }
                let mut acc = 0.0;
                for j in 0..d {
                    if comp_of[j] != c && a.get(i, j) {
                        acc += r[j];
                    }
                }
                rhs[p] = acc;
            }
            let sol = gauss_solve(n, &mut mat, &mut rhs)?;
            for (p, &i) in comps[c].iter().enumerate() {
                r[i] = sol[p].max(0.0);
            }
            solved[c] = true;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }

    let sum: f64 = r.iter().sum();
    if !(sum > 0.0) {
        return Err(Error::NonConvergence {
            tolerance: POWER_TOLERANCE,
            max_iterations: POWER_MAX_ITERATIONS,
        });
    }
    Ok(r.iter().map(|x| x / sum).collect())
}

/// Dense Gaussian elimination with partial pivoting; `mat` is n x n row-major.
fn gauss_solve(n: usize, mat: &mut [f64], rhs: &mut [f64]) -> Result<Vec<f64>> {
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if mat[row * n + col].abs() > mat[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if mat[pivot * n + col].abs() < 1e-300 {
            return Err(Error::NonConvergence {
                tolerance: POWER_TOLERANCE,
                max_iterations: POWER_MAX_ITERATIONS,
            });
        }
        if pivot != col {
            for j in 0..n {
                mat.swap(col * n + j, pivot * n + j);
            }
            rhs.swap(col, pivot);
        }
        let diag = mat[col * n + col];
        for row in col + 1..n {
            let f = mat[row * n + col] / diag;
            if f == 0.0 {
                continue;
            }
            for j in col..n {
                mat[row * n + j] -= f * mat[col * n + j];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for j in row + 1..n {
            acc -= mat[row * n + j] * x[j];
        }
        x[row] = acc / mat[row * n + row];
    }
    Ok(x)
}
