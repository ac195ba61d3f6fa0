//! The Parry measure: the explicit Markov measure of maximal entropy of an
//! irreducible transition matrix, built from its Perron eigenvectors.

use crate::error::{Error, Result};
use crate::sft::components::is_irreducible;
use crate::sft::spectral::entropy_spectral;
use crate::sft::TransitionMatrix;

/// Stationary Markov measure on the symbols of a matrix: stationary
/// distribution plus a row-stochastic kernel supported on the 1-entries.
#[derive(Debug, Clone)]
pub struct ParryMeasure {
    pub stationary: Vec<f64>,
    pub kernel: Vec<Vec<f64>>,
}

impl ParryMeasure {
    /// max |(pi P)_j - pi_j|.
    pub fn stationarity_residual(&self) -> f64 {
        let d = self.stationary.len();
        (0..d)
            .map(|j| {
                let pushed: f64 = (0..d).map(|i| self.stationary[i] * self.kernel[i][j]).sum();
                (pushed - self.stationary[j]).abs()
            })
            .fold(0.0f64, f64::max)
    }

    /// Measure-theoretic entropy -sum_i pi_i sum_j P_ij log P_ij.
    pub fn entropy(&self) -> f64 {
        measure_entropy(&self.stationary, &self.kernel)
    }

    /// Lift to a larger alphabet: `symbols[k]` is the ambient symbol of local
    /// state k. Rows outside the support are filled uniformly over the
    /// ambient successors so the kernel stays row-stochastic; the stationary
    /// vector is zero there, so those rows never carry mass.
    pub fn embed(
        &self,
        symbols: &[usize],
        ambient: &TransitionMatrix,
    ) -> (Vec<f64>, Vec<Vec<f64>>) {
        let d = ambient.size();
        let mut pi = vec![0.0; d];
        let mut kernel = vec![vec![0.0; d]; d];
        for (k, &s) in symbols.iter().enumerate() {
            pi[s] = self.stationary[k];
            for (l, &t) in symbols.iter().enumerate() {
                kernel[s][t] = self.kernel[k][l];
            }
        }
        for i in 0..d {
            if symbols.contains(&i) {
                continue;
            }
            let succ: Vec<usize> = (0..d).filter(|&j| ambient.get(i, j)).collect();
            for &j in &succ {
                kernel[i][j] = 1.0 / succ.len() as f64;
            }
        }
        (pi, kernel)
    }
}

pub fn measure_entropy(stationary: &[f64], kernel: &[Vec<f64>]) -> f64 {
    let mut h = 0.0;
    for (i, &pi) in stationary.iter().enumerate() {
        if pi == 0.0 {
            continue;
        }
        for &p in &kernel[i] {
            if p > 0.0 {
                h -= pi * p * p.ln();
            }
        }
    }
    h
}

/// Parry measure of an irreducible matrix: kernel P_ij = A_ij r_j / (lambda
/// r_i) with r the right Perron vector, stationary pi_i proportional to
/// l_i r_i with l the left Perron vector.
pub fn parry_measure(component: &TransitionMatrix) -> Result<ParryMeasure> {
    if !is_irreducible(component) {
        return Err(Error::Reducible);
    }
    let s = entropy_spectral(component)?;
    let d = component.size();
    let mut kernel = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..d {
            if component.get(i, j) {
                kernel[i][j] = s.right[j] / (s.lambda * s.right[i]);
            }
        }
    }
    let weights: Vec<f64> = (0..d).map(|i| s.left[i] * s.right[i]).collect();
    let total: f64 = weights.iter().sum();
    let stationary: Vec<f64> = weights.iter().map(|w| w / total).collect();
    Ok(ParryMeasure { stationary, kernel })
}
