//! Measurement families: SIC-POVMs from fiducials, the seven informationally
//! complete highly symmetric POVMs in dimension two, equatorial n-gons, and
//! PVMs from orthonormal bases.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::bloch::{state_from_bloch, BlochVector};
use crate::error::{Error, Result};
use crate::linalg::{C64, CMatrix};
use crate::quantum::{Povm, PureState};

/// Seed vector whose Weyl-Heisenberg orbit forms a SIC-POVM.
#[derive(Debug, Clone, PartialEq)]
pub struct FiducialRecord {
    pub dim: usize,
    pub vector: Vec<C64>,
    pub source: String,
}

impl FiducialRecord {
    pub fn new(dim: usize, vector: Vec<C64>, source: &str) -> Result<Self> {
        if vector.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: vector.len(),
            });
        }
        let norm = vector.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(FiducialRecord {
            dim,
            vector,
            source: source.to_string(),
        })
    }
}

/// Group whose orbit of the fiducial is taken. The cyclic group covers the
/// builtin d=2,3 fiducials; the Hoggar SIC in d=8 is covariant under the
/// three-qubit (tensor-product) group instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylHeisenberg {
    /// X = cyclic shift, Z = diagonal phases omega^j, orbit X^a Z^b |psi>.
    Cyclic,
    /// Tensor products of qubit X^a Z^b over three qubits (d = 8 only).
    ThreeQubit,
}

fn cyclic_orbit(fiducial: &[C64]) -> Vec<Vec<C64>> {
    let d = fiducial.len();
    let omega = 2.0 * PI / d as f64;
    let mut states = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            // (X^a Z^b psi)_i = omega^(b*(i-a)) * psi_(i-a mod d)
            let mut v = alloc::vec![C64::new(0.0, 0.0); d];
            for (i, slot) in v.iter_mut().enumerate() {
                let src = (i + d - a % d) % d;
                let phase = omega * (b * src) as f64;
                *slot = fiducial[src] * C64::new(phase.cos(), phase.sin());
            }
            states.push(v);
        }
    }
    states
}

fn three_qubit_orbit(fiducial: &[C64]) -> Vec<Vec<C64>> {
    debug_assert_eq!(fiducial.len(), 8);
    let mut states = Vec::with_capacity(64);
    for a in 0..8usize {
        for b in 0..8usize {
            // Index i is a 3-bit string; X^a flips bits, Z^b contributes
            // (-1)^(b . source bits).
            let mut v = alloc::vec![C64::new(0.0, 0.0); 8];
            for (i, slot) in v.iter_mut().enumerate() {
                let src = i ^ a;
                let sign = if (src & b).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                *slot = fiducial[src] * sign;
            }
            states.push(v);
        }
    }
    states
}

/// Builds the d^2 effects (1/d)|psi_ab><psi_ab| from the group orbit of the
/// fiducial and verifies the defining Gram condition
/// tr(Pi_i Pi_j) = 1/(d^2 (d+1)) for i != j and tr(Pi_j^2) = 1/d^2.
pub fn sic_from_fiducial(fiducial: &FiducialRecord, group: WeylHeisenberg) -> Result<Povm> {
    let d = fiducial.dim;
    if group == WeylHeisenberg::ThreeQubit && d != 8 {
        return Err(Error::Structural(String::from(
            "three-qubit Weyl-Heisenberg group requires d = 8",
        )));
    }
    let states = match group {
        WeylHeisenberg::Cyclic => cyclic_orbit(&fiducial.vector),
        WeylHeisenberg::ThreeQubit => three_qubit_orbit(&fiducial.vector),
    };
    // Gram test on |<psi_i|psi_j>|^2: tr(Pi_i Pi_j) = |<psi_i|psi_j>|^2 / d^2.
    let df = d as f64;
    let target_off = df * df / (df * df * (df + 1.0)); // |<i|j>|^2 = 1/(d+1)
    let mut worst = 0.0f64;
    let mut worst_pair = (0usize, 0usize);
    for i in 0..states.len() {
        for j in 0..states.len() {
            let overlap: C64 = states[i]
                .iter()
                .zip(&states[j])
                .map(|(a, b)| a.conj() * b)
                .sum();
            let val = overlap.norm_sqr();
            let target = if i == j { 1.0 } else { target_off };
            let res = (val - target).abs();
            if res > worst {
                worst = res;
                worst_pair = (i, j);
            }
        }
    }
    // Residual on tr(Pi_i Pi_j): divide by d^2.
    if worst / (df * df) >= 1e-10 {
        return Err(Error::NotASicFiducial {
            worst_pair,
            residual: worst / (df * df),
        });
    }
    let effects = states
        .iter()
        .map(|s| CMatrix::scaled_projector(s, 1.0 / df))
        .collect();
    Ok(Povm::new(effects, alloc::format!("sic-d{d}"))?
        .with_metadata("construction", "weyl-heisenberg")
        .with_metadata("source", &fiducial.source))
}

/// Builtin SIC fiducials. The Hoggar SIC requires an externally supplied d=8
/// fiducial; use [`hoggar_sic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BuiltinSic {
    /// d=2, fiducial from the Bloch vector (1,1,1)/sqrt(3).
    Tetrahedral,
    /// d=3 Hesse SIC, fiducial (0, 1, -1)/sqrt(2).
    Hesse,
    /// d=3 one-parameter family (0, 1, -e^{it})/sqrt(2); t=0 is Hesse.
    Generic3(f64),
}

pub fn builtin_sic(which: BuiltinSic) -> Result<Povm> {
    let fiducial = match which {
        BuiltinSic::Tetrahedral => {
            let s = 1.0 / 3f64.sqrt();
            let u = BlochVector::qubit(s, s, s);
            let rho = state_from_bloch(&u)?;
            let psi = crate::bloch::pure_state_from_bloch(&u)?;
            debug_assert!((rho.purity() - 1.0).abs() < 1e-12);
            FiducialRecord::new(2, psi.amplitudes().to_vec(), "builtin tetrahedral")?
        }
        BuiltinSic::Hesse => fiducial_generic3(0.0, "builtin hesse")?,
        BuiltinSic::Generic3(t) => fiducial_generic3(t, "builtin generic3")?,
    };
    let label = match which {
        BuiltinSic::Tetrahedral => "tetrahedral-sic",
        BuiltinSic::Hesse => "hesse-sic",
        BuiltinSic::Generic3(_) => "generic3-sic",
    };
    let povm = sic_from_fiducial(&fiducial, WeylHeisenberg::Cyclic)?;
    Ok(povm.with_metadata("family", label))
}

fn fiducial_generic3(t: f64, source: &str) -> Result<FiducialRecord> {
    let s = 1.0 / 2f64.sqrt();
    FiducialRecord::new(
        3,
        alloc::vec![
            C64::new(0.0, 0.0),
            C64::new(s, 0.0),
            C64::new(-s * t.cos(), -s * t.sin()),
        ],
        source,
    )
}

/// Hoggar SIC from a d=8 fiducial (three-qubit Weyl-Heisenberg covariance).
pub fn hoggar_sic(fiducial: &FiducialRecord) -> Result<Povm> {
    if fiducial.dim != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: fiducial.dim,
        });
    }
    Ok(sic_from_fiducial(fiducial, WeylHeisenberg::ThreeQubit)?
        .with_metadata("family", "hoggar-sic"))
}

/// Bloch-sphere configurations of the d=2 highly symmetric POVMs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyhedronName {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
    Cuboctahedron,
    Icosidodecahedron,
    Digon,
    Ngon(usize),
}

impl PolyhedronName {
    pub fn label(&self) -> String {
        match self {
            PolyhedronName::Tetrahedron => "tetrahedron".to_string(),
            PolyhedronName::Cube => "cube".to_string(),
            PolyhedronName::Octahedron => "octahedron".to_string(),
            PolyhedronName::Icosahedron => "icosahedron".to_string(),
            PolyhedronName::Dodecahedron => "dodecahedron".to_string(),
            PolyhedronName::Cuboctahedron => "cuboctahedron".to_string(),
            PolyhedronName::Icosidodecahedron => "icosidodecahedron".to_string(),
            PolyhedronName::Digon => "digon".to_string(),
            PolyhedronName::Ngon(n) => alloc::format!("ngon-{n}"),
        }
    }
}

/// Named vertex configuration on the unit sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyhedronSpec {
    pub name: PolyhedronName,
    pub vertices: Vec<[f64; 3]>,
}

fn normalize3(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn tetrahedron_vertices() -> Vec<[f64; 3]> {
    [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ]
    .iter()
    .map(|&v| normalize3(v))
    .collect()
}

pub fn octahedron_vertices() -> Vec<[f64; 3]> {
    alloc::vec![
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ]
}

pub fn cube_vertices() -> Vec<[f64; 3]> {
    let mut out = Vec::with_capacity(8);
    for &x in &[1.0, -1.0] {
        for &y in &[1.0, -1.0] {
            for &z in &[1.0, -1.0] {
                out.push(normalize3([x, y, z]));
            }
        }
    }
    out
}

/// Icosahedron vertices: cyclic permutations of (+-tau, +-1, 0), normalized.
pub fn icosahedron_vertices() -> Vec<[f64; 3]> {
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let mut out = Vec::with_capacity(12);
    for &a in &[tau, -tau] {
        for &b in &[1.0, -1.0] {
            out.push(normalize3([a, b, 0.0]));
            out.push(normalize3([0.0, a, b]));
            out.push(normalize3([b, 0.0, a]));
        }
    }
    out
}

fn sort_vertices(mut vs: Vec<[f64; 3]>) -> Vec<[f64; 3]> {
    vs.sort_by(|a, b| {
        for i in 0..3 {
            let (ra, rb) = (round9(a[i]), round9(b[i]));
            if ra != rb {
                return ra.partial_cmp(&rb).unwrap();
            }
        }
        core::cmp::Ordering::Equal
    });
    vs
}

fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

fn dedup_vertices(vs: Vec<[f64; 3]>) -> Vec<[f64; 3]> {
    let mut out: Vec<[f64; 3]> = Vec::new();
    for v in vs {
        if !out.iter().any(|w| dot3(w, &v) > 1.0 - 1e-9) {
            out.push(v);
        }
    }
    out
}

/// Normalized centroids of the triangular faces of a deltahedron-like vertex
/// set (faces found via mutual nearest-neighbour triples).
fn face_centers(vs: &[[f64; 3]]) -> Vec<[f64; 3]> {
    let n = vs.len();
    let mut max_dot = -1.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            max_dot = max_dot.max(dot3(&vs[i], &vs[j]));
        }
    }
    let adj = |i: usize, j: usize| dot3(&vs[i], &vs[j]) > max_dot - 1e-9;
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if !adj(i, j) {
                continue;
            }
            for k in (j + 1)..n {
                if adj(i, k) && adj(j, k) {
                    out.push(normalize3([
                        vs[i][0] + vs[j][0] + vs[k][0],
                        vs[i][1] + vs[j][1] + vs[k][1],
                        vs[i][2] + vs[j][2] + vs[k][2],
                    ]));
                }
            }
        }
    }
    dedup_vertices(out)
}

/// Normalized edge midpoints of a vertex set.
fn edge_midpoints(vs: &[[f64; 3]]) -> Vec<[f64; 3]> {
    let n = vs.len();
    let mut max_dot = -1.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            max_dot = max_dot.max(dot3(&vs[i], &vs[j]));
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if dot3(&vs[i], &vs[j]) > max_dot - 1e-9 {
                out.push(normalize3([
                    vs[i][0] + vs[j][0],
                    vs[i][1] + vs[j][1],
                    vs[i][2] + vs[j][2],
                ]));
            }
        }
    }
    dedup_vertices(out)
}

pub fn dodecahedron_vertices() -> Vec<[f64; 3]> {
    sort_vertices(face_centers(&icosahedron_vertices()))
}

pub fn cuboctahedron_vertices() -> Vec<[f64; 3]> {
    sort_vertices(edge_midpoints(&cube_vertices()))
}

pub fn icosidodecahedron_vertices() -> Vec<[f64; 3]> {
    sort_vertices(edge_midpoints(&icosahedron_vertices()))
}

pub fn ngon_vertices(n: usize) -> Vec<[f64; 3]> {
    (0..n)
        .map(|j| {
            let phi = 2.0 * PI * j as f64 / n as f64;
            [phi.cos(), phi.sin(), 0.0]
        })
        .collect()
}

impl PolyhedronSpec {
    pub fn new(name: PolyhedronName) -> Result<Self> {
        let vertices = match name {
            PolyhedronName::Tetrahedron => tetrahedron_vertices(),
            PolyhedronName::Cube => cube_vertices(),
            PolyhedronName::Octahedron => octahedron_vertices(),
            PolyhedronName::Icosahedron => icosahedron_vertices(),
            PolyhedronName::Dodecahedron => dodecahedron_vertices(),
            PolyhedronName::Cuboctahedron => cuboctahedron_vertices(),
            PolyhedronName::Icosidodecahedron => icosidodecahedron_vertices(),
            PolyhedronName::Digon => ngon_vertices(2),
            PolyhedronName::Ngon(n) => {
                if n < 2 {
                    return Err(Error::Structural(String::from("n-gon requires n >= 2")));
                }
                ngon_vertices(n)
            }
        };
        let expected = match name {
            PolyhedronName::Tetrahedron => 4,
            PolyhedronName::Cube => 8,
            PolyhedronName::Octahedron => 6,
            PolyhedronName::Icosahedron => 12,
            PolyhedronName::Dodecahedron => 20,
            PolyhedronName::Cuboctahedron => 12,
            PolyhedronName::Icosidodecahedron => 30,
            PolyhedronName::Digon => 2,
            PolyhedronName::Ngon(n) => n,
        };
        if vertices.len() != expected {
            return Err(Error::Structural(alloc::format!(
                "{} has {} vertices, expected {expected}",
                name.label(),
                vertices.len()
            )));
        }
        Ok(PolyhedronSpec { name, vertices })
    }
}

/// Highly symmetric POVM in d=2: effects (2/k) rho(v_i) over the vertex set.
pub fn hs_povm(spec: &PolyhedronSpec) -> Result<Povm> {
    let k = spec.vertices.len() as f64;
    let effects = spec
        .vertices
        .iter()
        .map(|&v| {
            let u = BlochVector::qubit(v[0], v[1], v[2]);
            let rho = state_from_bloch(&u)?;
            Ok(rho.matrix().scale(C64::new(2.0 / k, 0.0)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Povm::new(effects, spec.name.label())?.with_metadata("construction", "bloch-polyhedron"))
}

/// POVM of the regular equatorial n-gon (n = 2 is the digon, a PVM).
pub fn ngon_povm(n: usize) -> Result<Povm> {
    hs_povm(&PolyhedronSpec::new(if n == 2 {
        PolyhedronName::Digon
    } else {
        PolyhedronName::Ngon(n)
    })?)
}

/// PVM of rank-1 projectors onto a pairwise-orthonormal basis.
pub fn pvm_from_basis(basis: &[PureState]) -> Result<Povm> {
    if basis.is_empty() {
        return Err(Error::Structural(String::from("empty basis")));
    }
    let d = basis[0].dim();
    if basis.len() != d {
        return Err(Error::Structural(alloc::format!(
            "basis has {} vectors, expected {d}",
            basis.len()
        )));
    }
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if i != j && a.fidelity(b)? > 1e-10 {
                return Err(Error::Structural(alloc::format!(
                    "basis vectors {i} and {j} are not orthogonal"
                )));
            }
        }
    }
    let effects = basis
        .iter()
        .map(|s| CMatrix::scaled_projector(s.amplitudes(), 1.0))
        .collect();
    Ok(Povm::new(effects, String::from("pvm"))?.with_metadata("construction", "pvm-from-basis"))
}
