//! Normalized Bloch representation: pure states map onto the unit sphere in
//! R^(d^2-1) and tr(rho sigma) = ((d-1) u.v + 1)/d for all state pairs.

use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{C64, CMatrix};
use crate::quantum::{DensityMatrix, Povm, PureState};

/// Real coordinates of a state in the orthonormal traceless Hermitian basis,
/// rescaled so pure states are unit vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    dim: usize,
    coords: Vec<f64>,
}

impl BlochVector {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != dim * dim - 1 {
            return Err(Error::Structural(alloc::format!(
                "Bloch vector for d={dim} must have length {}, got {}",
                dim * dim - 1,
                coords.len()
            )));
        }
        Ok(BlochVector { dim, coords })
    }

    /// 3-vector shorthand for d=2.
    pub fn qubit(x: f64, y: f64, z: f64) -> Self {
        BlochVector {
            dim: 2,
            coords: alloc::vec![x, y, z],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Orthonormal (w.r.t. the HS inner product) traceless Hermitian basis for
/// C^(dxd): symmetric pairs, antisymmetric pairs, then diagonal generators,
/// each family in lexicographic index order. For d=2 this is
/// (sigma_x, sigma_y, sigma_z)/sqrt(2).
pub fn hermitian_basis(d: usize) -> Vec<CMatrix> {
    let mut basis = Vec::with_capacity(d * d - 1);
    let inv_sqrt2 = 1.0 / 2f64.sqrt();
    for i in 0..d {
        for j in (i + 1)..d {
            let mut m = CMatrix::zeros(d);
            m[(i, j)] = C64::new(inv_sqrt2, 0.0);
            m[(j, i)] = C64::new(inv_sqrt2, 0.0);
            basis.push(m);
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let mut m = CMatrix::zeros(d);
            m[(i, j)] = C64::new(0.0, -inv_sqrt2);
            m[(j, i)] = C64::new(0.0, inv_sqrt2);
            basis.push(m);
        }
    }
    for l in 1..d {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut m = CMatrix::zeros(d);
        for i in 0..l {
            m[(i, i)] = C64::new(norm, 0.0);
        }
        m[(l, l)] = C64::new(-(l as f64) * norm, 0.0);
        basis.push(m);
    }
    basis
}

/// Bloch image of a state: expand rho - I/d in the orthonormal basis and
/// rescale by sqrt(d/(d-1)) so that pure states land on the unit sphere.
pub fn bloch_vector(rho: &DensityMatrix) -> BlochVector {
    let d = rho.dim();
    let scale = (d as f64 / (d as f64 - 1.0)).sqrt();
    let coords = hermitian_basis(d)
        .iter()
        .map(|b| rho.matrix().trace_product(b).re * scale)
        .collect();
    BlochVector { dim: d, coords }
}

/// Inverse Bloch map, d=2 only: rho = (I + u.sigma)/2.
pub fn state_from_bloch(u: &BlochVector) -> Result<DensityMatrix> {
    if u.dim != 2 {
        return Err(Error::OutOfDomain(String::from(
            "inverse Bloch map is only supported for d=2",
        )));
    }
    let n = u.norm();
    if n > 1.0 + 1e-10 {
        return Err(Error::OutOfDomain(alloc::format!(
            "Bloch vector has norm {n} > 1"
        )));
    }
    let (x, y, z) = (u.coords[0], u.coords[1], u.coords[2]);
    let mat = CMatrix::from_data(
        2,
        alloc::vec![
            C64::new((1.0 + z) / 2.0, 0.0),
            C64::new(x / 2.0, -y / 2.0),
            C64::new(x / 2.0, y / 2.0),
            C64::new((1.0 - z) / 2.0, 0.0),
        ],
    )?;
    DensityMatrix::new(mat)
}

/// Pure state for a unit Bloch vector, d=2 only.
pub fn pure_state_from_bloch(u: &BlochVector) -> Result<PureState> {
    if u.dim != 2 {
        return Err(Error::OutOfDomain(String::from(
            "pure state from Bloch vector is only supported for d=2",
        )));
    }
    let n = u.norm();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm: n });
    }
    let (x, y, z) = (u.coords[0] / n, u.coords[1] / n, u.coords[2] / n);
    let theta = z.clamp(-1.0, 1.0).acos();
    let phi = y.atan2(x);
    let half = theta / 2.0;
    PureState::new(alloc::vec![
        C64::new(half.cos(), 0.0),
        C64::new(phi.cos() * half.sin(), phi.sin() * half.sin()),
    ])
}

/// Bloch images of the states rho_j = (k/d) Pi_j of a rank-1 normalized POVM.
pub fn povm_bloch_vectors(povm: &Povm) -> Result<Vec<BlochVector>> {
    let tol = crate::tol::Tolerances::default();
    let report = povm.validate(&tol);
    if !report.rank1_normalized {
        return Err(Error::Structural(String::from(
            "POVM is not rank-1 normalized",
        )));
    }
    let d = povm.dim();
    let k = povm.outcomes() as f64;
    let scale = C64::new(k / d as f64, 0.0);
    povm.effects()
        .iter()
        .map(|e| {
            let rho = DensityMatrix::new(e.scale(scale))?;
            Ok(bloch_vector(&rho))
        })
        .collect()
}
