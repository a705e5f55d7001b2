//! Optimality certificates: interpolate h from above on the node set induced
//! by a candidate orbit, assemble the bounding polynomial P over the POVM
//! Bloch configuration, and show P is maximized on the candidate orbit either
//! because it is constant on the sphere or through its primary-invariant
//! decomposition A + B * Inv.

use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;
use rand::RngCore;

use crate::bloch::{povm_bloch_vectors, BlochVector};
use crate::entropy::{entropy_from_bloch, h_derivative, h_function};
use crate::error::{Error, Result};
use crate::hermite::{check_from_above, hermite_interpolate_fn, HermiteSpec, Polynomial};
use crate::invariants::PrimaryInvariant;
use crate::quantum::Povm;
use crate::random::haar_bloch;
use crate::tol::Tolerances;

/// Sorted multiset of dot products {w . v_j}, clustered at the given
/// tolerance; returns distinct values with multiplicities.
pub fn node_set(vs: &[BlochVector], w: &BlochVector, cluster_tol: f64) -> Vec<(f64, usize)> {
    let mut dots: Vec<f64> = vs.iter().map(|v| w.dot(v)).collect();
    dots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<(f64, usize)> = Vec::new();
    for t in dots {
        match out.last_mut() {
            Some((value, count)) if (t - *value).abs() <= cluster_tol => {
                // running mean keeps the cluster center stable
                *value = (*value * *count as f64 + t) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => out.push((t, 1)),
        }
    }
    out
}

/// How the bounding polynomial restricted to the sphere was identified.
#[derive(Debug, Clone, PartialEq)]
pub enum Decomposition {
    /// All moment sums of the configuration up to deg p are constant, so P is
    /// constant on the Bloch set.
    Constant { value: f64 },
    /// P restricted to S^2 equals a + b * invariant.
    InvariantFit {
        invariant: PrimaryInvariant,
        a: f64,
        b: f64,
        /// The two evaluation points that determined (a, b): candidate-orbit
        /// and POVM-orbit representatives with their P values.
        eval_points: [(f64, f64); 2],
        /// Largest |P - (a + b Inv)| over the random sphere probes.
        residual: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignVerdict {
    /// Constant decomposition: every sphere point attains the bound.
    ConstantBound,
    /// B > 0 and the candidate orbit is the global maximizer of the invariant.
    PositiveAtInvariantMax,
    /// B < 0 and the candidate orbit is the global minimizer of the invariant.
    NegativeAtInvariantMin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub povm_label: String,
    pub dim: usize,
    pub outcomes: usize,
    /// Candidate orbit representative (Bloch coordinates) and orbit size.
    pub candidate_representative: Vec<f64>,
    pub candidate_size: usize,
    /// Distinct interpolation nodes with multiplicities in the Hermite spec.
    pub nodes: Vec<(f64, usize)>,
    pub interpolant: Polynomial,
    pub from_above_ok: bool,
    pub min_gap_off_nodes: f64,
    pub decomposition: Decomposition,
    pub sign_verdict: SignVerdict,
    /// Certified global maximum of the entropy H over pure states.
    pub certified_value: f64,
    /// ln k - certified_value: certified global minimum of the relative
    /// entropy over pure states.
    pub certified_min_relative_entropy: f64,
}

fn bound_polynomial<'a>(
    p: &Polynomial,
    vs: &'a [BlochVector],
    d: usize,
) -> impl Fn(&BlochVector) -> f64 + 'a {
    let k = vs.len() as f64;
    let df = d as f64;
    let p = p.clone();
    move |u: &BlochVector| {
        (k / df).ln() + df / k * vs.iter().map(|v| p.eval(u.dot(v))).sum::<f64>()
    }
}

/// Builds an optimality certificate for the entropy maximizers of a rank-1
/// normalized POVM (a d=2 HS-POVM or a Gram-verified SIC in any dimension).
///
/// `candidate` is the conjectured maximizer orbit as unit Bloch vectors; for
/// SIC-POVMs it is the POVM's own Bloch configuration. `invariant` optionally
/// pins the primary invariant used for the fit; when `None` the constant
/// route is tried first, then I4 and I6'.
pub fn build_certificate(
    povm: &Povm,
    candidate: &[BlochVector],
    invariant: Option<PrimaryInvariant>,
    tol: &Tolerances,
    rng: &mut impl RngCore,
) -> Result<CertificateReport> {
    if candidate.is_empty() {
        return Err(Error::Structural(String::from("empty candidate orbit")));
    }
    let d = povm.dim();
    let k = povm.outcomes();
    let vs = povm_bloch_vectors(povm)?;
    for w in candidate {
        if w.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: w.dim(),
            });
        }
        if (w.norm() - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized { norm: w.norm() });
        }
    }
    let w = &candidate[0];
    let interval = (-1.0 / (d as f64 - 1.0), 1.0);
    let nodes = node_set(&vs, w, tol.cluster);
    if nodes[0].0 <= interval.0 + 1e-12 {
        return Err(Error::CertificateFailed(alloc::format!(
            "smallest node {} is not interior to the h domain",
            nodes[0].0
        )));
    }
    // from-above shape: double every node, except a node at the right endpoint
    let spec_nodes: Vec<(f64, usize)> = nodes
        .iter()
        .map(|&(t, _)| (t, if (t - 1.0).abs() <= tol.cluster { 1 } else { 2 }))
        .collect();
    let spec = HermiteSpec::new(spec_nodes, interval)?;
    debug_assert!(spec.is_from_above_shape());
    let p = hermite_interpolate_fn(
        &spec,
        |t| h_function(t, d).expect("node inside h domain"),
        |_, t| h_derivative(t, d).expect("node inside h domain"),
    )?;
    // Node reproduction check.
    for &(t, _) in &spec.nodes {
        let err = (p.eval(t) - h_function(t, d)?).abs();
        if err > tol.fit_residual {
            return Err(Error::CertificateFailed(alloc::format!(
                "interpolant misses node {t} by {err:e}"
            )));
        }
    }
    let above = check_from_above(
        &p,
        |t| h_function(t, d).expect("grid point inside h domain"),
        interval,
        &spec.nodes,
        tol.grid_points,
    );
    if !above.ok {
        return Err(Error::CertificateFailed(alloc::format!(
            "interpolant does not dominate h (worst violation {:e})",
            above.worst_violation
        )));
    }

    let probes: Vec<BlochVector> = (0..tol.probe_points).map(|_| haar_bloch(d, rng)).collect();
    let big_p = bound_polynomial(&p, &vs, d);
    let candidate_entropy = entropy_from_bloch(w, &vs)?;
    let certified_value = big_p(w);
    if (certified_value - candidate_entropy).abs() > 1e-10 {
        return Err(Error::CertificateFailed(alloc::format!(
            "bound {certified_value} does not touch H at the candidate ({candidate_entropy})"
        )));
    }

    // Constant route: all moment sums up to deg p constant over the probes.
    let deg = p.degree();
    let moments_constant = (1..=deg).all(|s| {
        let sums: Vec<f64> = probes
            .iter()
            .map(|u| {
                vs.iter()
                    .map(|v| {
                        let t = u.dot(v);
                        let mut acc = 1.0;
                        for _ in 0..s {
                            acc *= t;
                        }
                        acc
                    })
                    .sum()
            })
            .collect();
        let mean = sums.iter().sum::<f64>() / sums.len() as f64;
        sums.iter().all(|x| (x - mean).abs() < 1e-8)
    });

    let (decomposition, sign_verdict) = if moments_constant {
        (
            Decomposition::Constant {
                value: certified_value,
            },
            SignVerdict::ConstantBound,
        )
    } else {
        if d != 2 {
            return Err(Error::CertificateFailed(String::from(
                "invariant decomposition is only available on the d=2 Bloch sphere",
            )));
        }
        let candidates = match invariant {
            Some(inv) => alloc::vec![inv],
            None => alloc::vec![PrimaryInvariant::I4, PrimaryInvariant::I6p],
        };
        let mut fitted = None;
        for inv in candidates {
            if let Some(fit) = try_invariant_fit(&big_p, inv, w, &vs[0], &probes, tol) {
                fitted = Some((inv, fit));
                break;
            }
        }
        let Some((inv, (a, b, eval_points, residual))) = fitted else {
            return Err(Error::CertificateFailed(String::from(
                "no primary invariant reproduces the bound polynomial on the sphere",
            )));
        };
        let (inv_min, inv_max) = inv.sphere_extrema().ok_or_else(|| {
            Error::CertificateFailed(alloc::format!(
                "no known sphere extrema for invariant {}",
                inv.name()
            ))
        })?;
        let inv_at_candidate =
            inv.evaluate(&[w.coords()[0], w.coords()[1], w.coords()[2]]);
        let verdict = if b > 0.0 && (inv_at_candidate - inv_max).abs() < 1e-9 {
            SignVerdict::PositiveAtInvariantMax
        } else if b < 0.0 && (inv_at_candidate - inv_min).abs() < 1e-9 {
            SignVerdict::NegativeAtInvariantMin
        } else {
            return Err(Error::CertificateFailed(alloc::format!(
                "sign of B = {b:e} is inconsistent with the candidate sitting at the \
                 {} extremum of {}",
                if b > 0.0 { "max" } else { "min" },
                inv.name()
            )));
        };
        (
            Decomposition::InvariantFit {
                invariant: inv,
                a,
                b,
                eval_points,
                residual,
            },
            verdict,
        )
    };

    Ok(CertificateReport {
        povm_label: String::from(povm.label()),
        dim: d,
        outcomes: k,
        candidate_representative: w.coords().to_vec(),
        candidate_size: candidate.len(),
        nodes: spec.nodes.clone(),
        interpolant: p,
        from_above_ok: above.ok,
        min_gap_off_nodes: above.min_gap_off_nodes,
        decomposition,
        sign_verdict,
        certified_value,
        certified_min_relative_entropy: (k as f64).ln() - certified_value,
    })
}

type Fit = (f64, f64, [(f64, f64); 2], f64);

fn try_invariant_fit(
    big_p: &impl Fn(&BlochVector) -> f64,
    inv: PrimaryInvariant,
    candidate_rep: &BlochVector,
    povm_rep: &BlochVector,
    probes: &[BlochVector],
    tol: &Tolerances,
) -> Option<Fit> {
    let point3 = |u: &BlochVector| [u.coords()[0], u.coords()[1], u.coords()[2]];
    let i1 = inv.evaluate(&point3(candidate_rep));
    let i2 = inv.evaluate(&point3(povm_rep));
    if (i1 - i2).abs() < 1e-12 {
        return None; // the two orbits do not separate this invariant
    }
    let p1 = big_p(candidate_rep);
    let p2 = big_p(povm_rep);
    let b = (p1 - p2) / (i1 - i2);
    let a = p1 - b * i1;
    let residual = probes
        .iter()
        .map(|u| (big_p(u) - a - b * inv.evaluate(&point3(u))).abs())
        .fold(0.0, f64::max);
    if residual < tol.fit_residual {
        Some((a, b, [(i1, p1), (i2, p2)], residual))
    } else {
        None
    }
}
