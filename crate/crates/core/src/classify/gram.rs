use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::permutation::Permutation;
use crate::rational::{to_f64, Rational};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    pub size: usize,
    pub min_eigenvalue_float: f64,
    pub norm_float: f64,
    /// `λ_min ≥ −10⁻⁹·‖G‖`.
    pub positive_semidefinite: bool,
}

/// Floating-point spot check that `[φ(g_i g_j⁻¹)]` is positive
/// semidefinite; a diagnostic only.
pub fn gram_check<F>(phi: F, elements: &[Permutation]) -> Result<GramReport>
where
    F: Fn(&Permutation) -> Result<Rational>,
{
    let n = elements.len();
    let mut g = DMatrix::<f64>::zeros(n, n);
    for (i, gi) in elements.iter().enumerate() {
        for (j, gj) in elements.iter().enumerate() {
            g[(i, j)] = to_f64(&phi(&gi.compose(&gj.inverse()))?);
        }
    }
    // symmetrize away rounding before the symmetric eigensolver
    let g = (&g + g.transpose()) * 0.5;
    let norm = g.norm();
    let min = if n == 0 {
        0.0
    } else {
        g.symmetric_eigenvalues().min()
    };
    Ok(GramReport {
        size: n,
        min_eigenvalue_float: min,
        norm_float: norm,
        positive_semidefinite: min >= -1e-9 * norm,
    })
}
