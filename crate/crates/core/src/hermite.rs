//! Hermite interpolation with node multiplicities (Newton divided differences
//! with repeated nodes) and the interpolation-from-above check.

use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::error::{Error, Result};

/// Interpolation nodes with multiplicities on an interval.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSpec {
    /// Strictly increasing node positions with positive multiplicities.
    pub nodes: Vec<(f64, usize)>,
    pub interval: (f64, f64),
}

impl HermiteSpec {
    pub fn new(nodes: Vec<(f64, usize)>, interval: (f64, f64)) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Structural(String::from("no interpolation nodes")));
        }
        for w in nodes.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::Structural(String::from(
                    "nodes must be strictly increasing (duplicates belong in the multiplicity)",
                )));
            }
        }
        for &(t, m) in &nodes {
            if m == 0 {
                return Err(Error::Structural(String::from("zero multiplicity")));
            }
            if t < interval.0 - 1e-12 || t > interval.1 + 1e-12 {
                return Err(Error::Structural(alloc::format!(
                    "node {t} outside interval [{}, {}]",
                    interval.0,
                    interval.1
                )));
            }
        }
        Ok(HermiteSpec { nodes, interval })
    }

    /// Total multiplicity D; the interpolant has degree < D.
    pub fn total_multiplicity(&self) -> usize {
        self.nodes.iter().map(|&(_, m)| m).sum()
    }

    /// From-above shape: interior nodes of multiplicity 2, the right endpoint
    /// (if it is a node) of multiplicity 1, and t_0 > a.
    pub fn is_from_above_shape(&self) -> bool {
        let (a, b) = self.interval;
        if self.nodes[0].0 <= a {
            return false;
        }
        let last = self.nodes.len() - 1;
        self.nodes.iter().enumerate().all(|(i, &(t, m))| {
            if i == last && (t - b).abs() < 1e-12 {
                m == 1
            } else {
                m == 2
            }
        })
    }
}

/// Function and derivative values at one node, up to order multiplicity - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeValues {
    pub value: f64,
    pub derivatives: Vec<f64>,
}

/// Polynomial in Newton form with the repeated-node centers.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    centers: Vec<f64>,
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.coefficients.len();
        let mut acc = self.coefficients[n - 1];
        for j in (0..n - 1).rev() {
            acc = acc * (t - self.centers[j]) + self.coefficients[j];
        }
        acc
    }

    pub fn degree(&self) -> usize {
        // Highest index with a nonvanishing Newton coefficient.
        self.coefficients
            .iter()
            .rposition(|&c| c.abs() > 1e-12)
            .unwrap_or(0)
    }

    pub fn newton_coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn newton_centers(&self) -> &[f64] {
        &self.centers
    }
}

/// Newton divided differences with repeated nodes; confluent entries use the
/// supplied derivatives (f^(j)(t)/j!).
pub fn hermite_interpolate(spec: &HermiteSpec, values: &[NodeValues]) -> Result<Polynomial> {
    if values.len() != spec.nodes.len() {
        return Err(Error::Structural(String::from(
            "one NodeValues entry required per node",
        )));
    }
    for (&(_, m), v) in spec.nodes.iter().zip(values) {
        if v.derivatives.len() < m - 1 {
            return Err(Error::Structural(alloc::format!(
                "node of multiplicity {m} needs {} derivative(s), got {}",
                m - 1,
                v.derivatives.len()
            )));
        }
    }
    let total = spec.total_multiplicity();
    let mut seq = Vec::with_capacity(total);
    let mut f0 = Vec::with_capacity(total);
    for (&(t, m), v) in spec.nodes.iter().zip(values) {
        for _ in 0..m {
            seq.push(t);
            f0.push(v.value);
        }
    }
    // Table column by column; confluent differences take f^(j)(t)/j!.
    let mut factorial = 1.0f64;
    let mut table = f0;
    let mut coefficients = Vec::with_capacity(total);
    coefficients.push(table[0]);
    for order in 1..total {
        factorial *= order as f64;
        let mut next = Vec::with_capacity(total - order);
        for i in 0..(total - order) {
            let dt = seq[i + order] - seq[i];
            if dt.abs() < 1e-14 {
                // All points in the window coincide with some node.
                let node_index = spec
                    .nodes
                    .iter()
                    .position(|&(t, _)| (t - seq[i]).abs() < 1e-14)
                    .expect("confluent point must be a node");
                next.push(values[node_index].derivatives[order - 1] / factorial);
            } else {
                next.push((table[i + 1] - table[i]) / dt);
            }
        }
        coefficients.push(next[0]);
        table = next;
    }
    Ok(Polynomial {
        centers: seq,
        coefficients,
    })
}

/// Interpolates a function given as value/derivative closures.
pub fn hermite_interpolate_fn(
    spec: &HermiteSpec,
    f: impl Fn(f64) -> f64,
    derivative: impl Fn(usize, f64) -> f64,
) -> Result<Polynomial> {
    let values: Vec<NodeValues> = spec
        .nodes
        .iter()
        .map(|&(t, m)| NodeValues {
            value: f(t),
            derivatives: (1..m).map(|l| derivative(l, t)).collect(),
        })
        .collect();
    hermite_interpolate(spec, &values)
}

/// Diagnostics of the from-above scan.
#[derive(Debug, Clone, PartialEq)]
pub struct FromAboveReport {
    pub ok: bool,
    /// Smallest p - f over grid points not close to any node.
    pub min_gap_off_nodes: f64,
    /// Most negative p - f anywhere on the grid (>= -1e-10 when ok).
    pub worst_violation: f64,
}

/// Checks p(t) >= f(t) - 1e-10 on a uniform grid and that near-equality
/// (within 1e-8) happens only close to nodes.
pub fn check_from_above(
    p: &Polynomial,
    f: impl Fn(f64) -> f64,
    interval: (f64, f64),
    nodes: &[(f64, usize)],
    grid_n: usize,
) -> FromAboveReport {
    let (a, b) = interval;
    let near = 0.05 * (b - a);
    let mut min_gap_off_nodes = f64::INFINITY;
    let mut worst_violation = f64::INFINITY;
    let mut ok = true;
    for i in 0..=grid_n {
        let t = a + (b - a) * i as f64 / grid_n as f64;
        let gap = p.eval(t) - f(t);
        worst_violation = worst_violation.min(gap);
        if gap < -1e-10 {
            ok = false;
        }
        let off_nodes = nodes.iter().all(|&(tn, _)| (t - tn).abs() > near);
        if off_nodes {
            min_gap_off_nodes = min_gap_off_nodes.min(gap);
            if gap < 1e-8 {
                ok = false;
            }
        }
    }
    FromAboveReport {
        ok,
        min_gap_off_nodes,
        worst_violation,
    }
}

/// Closed-form derivatives of eta: eta'(x) = -ln x - 1 and
/// eta^(l)(x) = (-1)^(l-1) (l-2)! / x^(l-1) for l >= 2.
pub fn eta_derivative(l: usize, x: f64) -> Result<f64> {
    if l == 0 {
        return Err(Error::OutOfDomain(String::from(
            "derivative order must be >= 1",
        )));
    }
    if x <= 0.0 {
        return Err(Error::OutOfDomain(alloc::format!(
            "eta derivatives require x > 0, got {x}"
        )));
    }
    if l == 1 {
        return Ok(-x.ln() - 1.0);
    }
    let mut fact = 1.0f64; // (l-2)!
    for i in 2..l {
        fact *= (i - 1) as f64;
    }
    let sign = if l % 2 == 0 { -1.0 } else { 1.0 };
    Ok(sign * fact / x.powi(l as i32 - 1))
}
