//! States, POVM representation and validation, outcome probabilities.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{real_rank, C64, CMatrix};
use crate::tol::Tolerances;

/// Unit vector in C^d. Global phase carries no meaning; equality of states is
/// fidelity >= 1 - 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dim: usize,
    amps: Vec<C64>,
}

impl PureState {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::Structural(String::from("empty amplitude vector")));
        }
        let norm = vec_norm(&amps);
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureState {
            dim: amps.len(),
            amps,
        })
    }

    /// Normalizes the input before constructing the state.
    pub fn normalized(amps: Vec<C64>) -> Result<Self> {
        let norm = vec_norm(&amps);
        if norm < 1e-14 {
            return Err(Error::NotNormalized { norm });
        }
        Self::new(amps.iter().map(|a| a / norm).collect())
    }

    pub fn basis_state(dim: usize, index: usize) -> Self {
        let mut amps = alloc::vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        PureState { dim, amps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            mat: CMatrix::scaled_projector(&self.amps, 1.0),
        }
    }

    /// |<a|b>|^2, phase-invariant.
    pub fn fidelity(&self, other: &PureState) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let overlap: C64 = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(overlap.norm_sqr().clamp(0.0, 1.0))
    }

    /// Equality up to global phase.
    pub fn approx_eq(&self, other: &PureState) -> bool {
        matches!(self.fidelity(other), Ok(f) if f >= 1.0 - 1e-10)
    }

    /// Canonical representative: first amplitude of significant magnitude is
    /// rotated to the positive real axis.
    pub fn phase_fixed(&self) -> PureState {
        let pivot = self
            .amps
            .iter()
            .find(|a| a.norm() > 1e-8)
            .copied()
            .unwrap_or(C64::new(1.0, 0.0));
        let phase = pivot / pivot.norm();
        PureState {
            dim: self.dim,
            amps: self.amps.iter().map(|a| a / phase).collect(),
        }
    }
}

fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Trace-one positive-semidefinite operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
}

impl DensityMatrix {
    pub fn new(mat: CMatrix) -> Result<Self> {
        if mat.hermiticity_residual() > 1e-12 {
            return Err(Error::Structural(String::from("matrix is not Hermitian")));
        }
        if (mat.trace().re - 1.0).abs() > 1e-12 || mat.trace().im.abs() > 1e-12 {
            return Err(Error::Structural(String::from("trace is not one")));
        }
        let min_eig = mat
            .hermitian_eigenvalues()
            .first()
            .copied()
            .unwrap_or(0.0);
        if min_eig < -1e-10 {
            return Err(Error::Structural(alloc::format!(
                "negative eigenvalue {min_eig:e}"
            )));
        }
        Ok(DensityMatrix { mat })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityMatrix {
            mat: CMatrix::identity(dim).scale(C64::new(1.0 / dim as f64, 0.0)),
        }
    }

    /// Convex combination `lambda * self + (1 - lambda) * other`.
    pub fn mix(&self, other: &DensityMatrix, lambda: f64) -> DensityMatrix {
        let a = self.mat.scale(C64::new(lambda, 0.0));
        let b = other.mat.scale(C64::new(1.0 - lambda, 0.0));
        DensityMatrix { mat: a.add(&b) }
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn purity(&self) -> f64 {
        self.mat.trace_product(&self.mat).re
    }
}

/// Positive operator-valued measure: effects summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    dim: usize,
    effects: Vec<CMatrix>,
    label: String,
    metadata: BTreeMap<String, String>,
}

/// Worst-case residuals of the POVM invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub psd_ok: bool,
    pub identity_ok: bool,
    pub rank1_normalized: bool,
    /// Most negative effect eigenvalue observed (0 if none negative).
    pub min_eigenvalue: f64,
    /// Worst entrywise residual of sum(effects) - identity.
    pub identity_residual: f64,
    /// Worst deviation of effect traces from d/k (rank-1 normalized case).
    pub trace_residual: f64,
}

impl ValidationReport {
    pub fn accepted(&self) -> bool {
        self.psd_ok && self.identity_ok
    }
}

impl Povm {
    pub fn new(effects: Vec<CMatrix>, label: String) -> Result<Self> {
        if effects.is_empty() {
            return Err(Error::Structural(String::from("POVM has no effects")));
        }
        let dim = effects[0].dim();
        for e in &effects {
            if e.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: e.dim(),
                });
            }
        }
        Ok(Povm {
            dim,
            effects,
            label,
            metadata: BTreeMap::new(),
        })
    }

    pub fn with_metadata(mut self, key: &str, value: &str) -> Self {
        self.metadata.insert(String::from(key), String::from(value));
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn outcomes(&self) -> usize {
        self.effects.len()
    }

    pub fn effects(&self) -> &[CMatrix] {
        &self.effects
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn validate(&self, tol: &Tolerances) -> ValidationReport {
        let k = self.effects.len();
        let d = self.dim;
        let mut min_eig = f64::INFINITY;
        let mut rank1 = true;
        let mut trace_residual: f64 = 0.0;
        let target_trace = d as f64 / k as f64;
        for e in &self.effects {
            let eigs = e.hermitian_eigenvalues();
            min_eig = min_eig.min(eigs[0]);
            trace_residual = trace_residual.max((e.trace().re - target_trace).abs());
            // rank 1: exactly one eigenvalue of size ~ trace, rest ~ 0
            let significant = eigs.iter().filter(|&&x| x.abs() > 1e-9).count();
            if significant != 1 {
                rank1 = false;
            }
        }
        if trace_residual > tol.structural {
            rank1 = false;
        }
        let mut sum = CMatrix::zeros(d);
        for e in &self.effects {
            sum = sum.add(e);
        }
        let identity_residual = sum.max_abs_diff(&CMatrix::identity(d));
        ValidationReport {
            psd_ok: min_eig >= tol.psd_floor,
            identity_ok: identity_residual <= tol.structural,
            rank1_normalized: rank1,
            min_eigenvalue: min_eig.min(0.0),
            identity_residual,
            trace_residual,
        }
    }

    /// p_j = tr(rho Pi_j), clamped at zero against roundoff.
    pub fn outcome_probabilities(&self, rho: &DensityMatrix) -> Result<Vec<f64>> {
        if rho.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rho.dim(),
            });
        }
        Ok(self
            .effects
            .iter()
            .map(|e| e.trace_product(rho.matrix()).re.max(0.0))
            .collect())
    }

    /// Probabilities for a pure state, via the quadratic form <psi|Pi_j|psi>.
    pub fn outcome_probabilities_pure(&self, psi: &PureState) -> Result<Vec<f64>> {
        if psi.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: psi.dim(),
            });
        }
        Ok(self
            .effects
            .iter()
            .map(|e| e.expectation(psi.amplitudes()).max(0.0))
            .collect())
    }
}

/// Informational-completeness report: dimension of the real span of
/// {Pi_j - (1/k) I} inside the traceless Hermitian operators.
#[derive(Debug, Clone, PartialEq)]
pub struct IcReport {
    pub complete: bool,
    pub span_dim: usize,
}

pub fn is_informationally_complete(povm: &Povm) -> IcReport {
    let d = povm.dim();
    let k = povm.outcomes() as f64;
    let basis = crate::bloch::hermitian_basis(d);
    let cols = basis.len(); // d^2 - 1
    let scaled_id = CMatrix::identity(d).scale(C64::new(1.0 / k, 0.0));
    let mut rows_data = Vec::with_capacity(povm.outcomes() * cols);
    for e in povm.effects() {
        let centered = e.sub(&scaled_id);
        for b in &basis {
            rows_data.push(centered.trace_product(b).re);
        }
    }
    let span_dim = real_rank(povm.outcomes(), cols, &rows_data, 1e-9);
    IcReport {
        complete: span_dim == d * d - 1,
        span_dim,
    }
}
