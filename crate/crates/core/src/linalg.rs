//! Small dense linear algebra over complex square matrices.
//!
//! All matrices in this crate are at most 8x8 (Hilbert-space operators) or
//! 64x64 (Gram matrices), so a plain `Vec`-backed representation and a Jacobi
//! eigensolver are entirely adequate.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_data(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Structural(alloc::format!(
                "matrix data length {} is not {dim}x{dim}",
                data.len()
            )));
        }
        Ok(CMatrix { dim, data })
    }

    /// Rank-one projector |psi><psi| scaled by `scale`.
    pub fn scaled_projector(psi: &[C64], scale: f64) -> Self {
        let dim = psi.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = psi[i] * psi[j].conj() * scale;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)].conj();
            }
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        CMatrix {
            dim: self.dim,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        CMatrix {
            dim: self.dim,
            data,
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += a * other[(k, j)];
                }
            }
        }
        m
    }

    /// tr(A B) without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        let n = self.dim;
        let mut t = C64::new(0.0, 0.0);
        for i in 0..n {
            for k in 0..n {
                t += self[(i, k)] * other[(k, i)];
            }
        }
        t
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from the adjoint.
    pub fn hermiticity_residual(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// <psi| A |psi> as a real number (valid for Hermitian A).
    pub fn expectation(&self, psi: &[C64]) -> f64 {
        let n = self.dim;
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += psi[i].conj() * self[(i, j)] * psi[j];
            }
        }
        acc.re
    }

    /// Eigenvalues of a Hermitian matrix, ascending. Computed by embedding
    /// A = X + iY into the real symmetric matrix [[X, -Y], [Y, X]], whose
    /// spectrum is that of A with every eigenvalue doubled.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        let mut s = vec![0.0f64; (2 * n) * (2 * n)];
        let idx = |i: usize, j: usize| i * 2 * n + j;
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                s[idx(i, j)] = a.re;
                s[idx(i + n, j + n)] = a.re;
                s[idx(i, j + n)] = -a.im;
                s[idx(i + n, j)] = a.im;
            }
        }
        let mut eigs = symmetric_eigenvalues(2 * n, &mut s);
        eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // Doubled spectrum: average each adjacent pair.
        (0..n).map(|i| (eigs[2 * i] + eigs[2 * i + 1]) / 2.0).collect()
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Eigenvalues of a real symmetric matrix (row-major, destroyed in place) by
/// cyclic Jacobi sweeps.
pub fn symmetric_eigenvalues(n: usize, a: &mut [f64]) -> Vec<f64> {
    let idx = |i: usize, j: usize| i * n + j;
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[idx(i, j)] * a[idx(i, j)];
            }
        }
        s
    };
    let scale: f64 = a.iter().map(|x| x.abs()).fold(0.0, f64::max).max(1.0);
    let tol = (1e-30 * scale * scale).max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        if off(a) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[idx(i, i)]).collect()
}

/// Rank of a real rows x cols matrix (row-major) by Gaussian elimination with
/// partial pivoting; pivots below `rel_tol * max_abs` count as zero.
pub fn real_rank(rows: usize, cols: usize, data: &[f64], rel_tol: f64) -> usize {
    let mut m: Vec<f64> = data.to_vec();
    let idx = |i: usize, j: usize| i * cols + j;
    let max_abs = m.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if max_abs == 0.0 {
        return 0;
    }
    let tol = rel_tol * max_abs;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let mut piv = row;
        for r in row..rows {
            if m[idx(r, col)].abs() > m[idx(piv, col)].abs() {
                piv = r;
            }
        }
        if m[idx(piv, col)].abs() <= tol {
            continue;
        }
        if piv != row {
            for j in 0..cols {
                m.swap(idx(piv, j), idx(row, j));
            }
        }
        for r in (row + 1)..rows {
            let f = m[idx(r, col)] / m[idx(row, col)];
            for j in col..cols {
                m[idx(r, j)] -= f * m[idx(row, j)];
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}
