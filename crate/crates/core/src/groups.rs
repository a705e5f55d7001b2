//! The polyhedral symmetry groups T_d, O_h and I_h as explicit lists of 3x3
//! orthogonal matrices, and group orbits of points on the unit sphere.

use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::catalog::{icosahedron_vertices, tetrahedron_vertices};
use crate::error::{Error, Result};

pub type Mat3 = [[f64; 3]; 3];
pub type Vec3 = [f64; 3];

pub fn apply(m: &Mat3, v: &Vec3) -> Vec3 {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn matmul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for (k, bk) in b.iter().enumerate() {
                c[i][j] += a[i][k] * bk[j];
            }
        }
    }
    c
}

fn mat_close(a: &Mat3, b: &Mat3, tol: f64) -> bool {
    for i in 0..3 {
        for j in 0..3 {
            if (a[i][j] - b[i][j]).abs() > tol {
                return false;
            }
        }
    }
    true
}

fn orthogonality_residual(m: &Mat3) -> f64 {
    let mt = [
        [m[0][0], m[1][0], m[2][0]],
        [m[0][1], m[1][1], m[2][1]],
        [m[0][2], m[1][2], m[2][2]],
    ];
    let p = matmul(m, &mt);
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((p[i][j] - target).abs());
        }
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupName {
    /// Full tetrahedral group, order 24.
    Tetrahedral,
    /// Full octahedral group, order 48.
    Octahedral,
    /// Full icosahedral group, order 120.
    Icosahedral,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryGroup {
    pub name: GroupName,
    elements: Vec<Mat3>,
}

/// All signed permutation matrices (the full octahedral group).
fn signed_permutations() -> Vec<Mat3> {
    let perms = [
        [0usize, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(48);
    for p in perms {
        for signs in 0..8u32 {
            let mut m = [[0.0; 3]; 3];
            for (row, &col) in p.iter().enumerate() {
                m[row][col] = if signs & (1 << row) == 0 { 1.0 } else { -1.0 };
            }
            out.push(m);
        }
    }
    out
}

fn preserves_vertex_set(m: &Mat3, vs: &[Vec3]) -> bool {
    vs.iter().all(|v| {
        let w = apply(m, v);
        vs.iter().any(|u| dot(u, &w) > 1.0 - 1e-9)
    })
}

impl SymmetryGroup {
    pub fn new(name: GroupName) -> Self {
        let elements = match name {
            GroupName::Octahedral => signed_permutations(),
            GroupName::Tetrahedral => {
                let tet = tetrahedron_vertices();
                signed_permutations()
                    .into_iter()
                    .filter(|m| preserves_vertex_set(m, &tet))
                    .collect()
            }
            GroupName::Icosahedral => icosahedral_elements(),
        };
        SymmetryGroup { name, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elements
    }

    /// Worst closure residual: for every product g*h, the distance to the
    /// nearest group element.
    pub fn closure_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in &self.elements {
            for b in &self.elements {
                let p = matmul(a, b);
                let best = self
                    .elements
                    .iter()
                    .map(|g| {
                        let mut d = 0.0f64;
                        for i in 0..3 {
                            for j in 0..3 {
                                d = d.max((g[i][j] - p[i][j]).abs());
                            }
                        }
                        d
                    })
                    .fold(f64::INFINITY, f64::min);
                worst = worst.max(best);
            }
        }
        worst
    }

    pub fn max_orthogonality_residual(&self) -> f64 {
        self.elements
            .iter()
            .map(orthogonality_residual)
            .fold(0.0, f64::max)
    }
}

/// I_h via frame matching: every orthogonal map sending an adjacent vertex
/// pair of the icosahedron to an adjacent vertex pair (with either chirality)
/// and preserving the vertex set is a group element; there are exactly 120.
fn icosahedral_elements() -> Vec<Mat3> {
    let vs = icosahedron_vertices();
    let v1 = vs[0];
    // nearest neighbour of v1
    let mut best = 1;
    for (i, v) in vs.iter().enumerate() {
        if i != 0 && dot(v, &v1) > dot(&vs[best], &v1) {
            best = i;
        }
    }
    let v2 = vs[best];
    let target_dot = dot(&v1, &v2);
    let frame = frame_from_pair(&v1, &v2, 1.0);
    let frame_inv = transpose(&frame);
    let mut out: Vec<Mat3> = Vec::with_capacity(120);
    for w1 in &vs {
        for w2 in &vs {
            if (dot(w1, w2) - target_dot).abs() > 1e-9 {
                continue;
            }
            for chirality in [1.0, -1.0] {
                let g = matmul(&frame_from_pair(w1, w2, chirality), &frame_inv);
                if orthogonality_residual(&g) < 1e-9
                    && preserves_vertex_set(&g, &vs)
                    && !out.iter().any(|m| mat_close(m, &g, 1e-9))
                {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn transpose(m: &Mat3) -> Mat3 {
    [
        [m[0][0], m[1][0], m[2][0]],
        [m[0][1], m[1][1], m[2][1]],
        [m[0][2], m[1][2], m[2][2]],
    ]
}

/// Orthonormal frame with columns (a, gram-schmidt(b), +-(a x b2)).
fn frame_from_pair(a: &Vec3, b: &Vec3, chirality: f64) -> Mat3 {
    let d = dot(a, b);
    let mut b2 = [b[0] - d * a[0], b[1] - d * a[1], b[2] - d * a[2]];
    let n = dot(&b2, &b2).sqrt();
    for x in &mut b2 {
        *x /= n;
    }
    let mut c = cross(a, &b2);
    for x in &mut c {
        *x *= chirality;
    }
    [
        [a[0], b2[0], c[0]],
        [a[1], b2[1], c[1]],
        [a[2], b2[2], c[2]],
    ]
}

/// Deduplicated orbit of a unit seed vector; vectors closer than 1e-9 in dot
/// product to an existing orbit member are merged.
pub fn group_orbit(group: &SymmetryGroup, seed: &Vec3) -> Result<Vec<Vec3>> {
    let n = dot(seed, seed).sqrt();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm: n });
    }
    let mut orbit: Vec<Vec3> = Vec::new();
    for g in group.elements() {
        let w = apply(g, seed);
        if !orbit.iter().any(|u| dot(u, &w) > 1.0 - 1e-9) {
            orbit.push(w);
        }
    }
    if group.order() % orbit.len() != 0 {
        return Err(Error::Structural(String::from(
            "orbit size does not divide the group order",
        )));
    }
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(SymmetryGroup::new(GroupName::Tetrahedral).order(), 24);
        assert_eq!(SymmetryGroup::new(GroupName::Octahedral).order(), 48);
        assert_eq!(SymmetryGroup::new(GroupName::Icosahedral).order(), 120);
    }

    #[test]
    fn groups_are_closed_and_orthogonal() {
        for name in [
            GroupName::Tetrahedral,
            GroupName::Octahedral,
            GroupName::Icosahedral,
        ] {
            let g = SymmetryGroup::new(name);
            assert!(g.max_orthogonality_residual() < 1e-12, "{name:?}");
            assert!(g.closure_residual() < 1e-12, "{name:?}");
            let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
            assert!(g.elements().iter().any(|m| mat_close(m, &id, 1e-12)));
        }
    }

    #[test]
    fn octahedral_orbits() {
        let g = SymmetryGroup::new(GroupName::Octahedral);
        assert_eq!(group_orbit(&g, &[1.0, 0.0, 0.0]).unwrap().len(), 6);
        let s = 1.0 / 3f64.sqrt();
        assert_eq!(group_orbit(&g, &[s, s, s]).unwrap().len(), 8);
    }

    #[test]
    fn icosahedral_vertex_orbit() {
        let g = SymmetryGroup::new(GroupName::Icosahedral);
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        let n = (tau * tau + 1.0).sqrt();
        let seed = [tau / n, 1.0 / n, 0.0];
        assert_eq!(group_orbit(&g, &seed).unwrap().len(), 12);
    }

    #[test]
    fn non_unit_seed_rejected() {
        let g = SymmetryGroup::new(GroupName::Octahedral);
        assert!(group_orbit(&g, &[2.0, 0.0, 0.0]).is_err());
    }
}
