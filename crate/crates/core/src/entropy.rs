//! Entropy functionals of measurement outcome statistics: Shannon and
//! alpha-entropies, the Bloch-form evaluation, index of coincidence, mutual
//! information, the Haar average (Jones' formula) and the SIC closed form.
//!
//! All logarithms are natural; values are in nats.

use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;

use crate::bloch::BlochVector;
use crate::error::{Error, Result};
use crate::quantum::{DensityMatrix, Povm};

/// eta(x) = -x ln x, with eta(0) = 0.
pub fn eta(x: f64) -> f64 {
    if x <= 1e-300 {
        0.0
    } else {
        -x * x.ln()
    }
}

fn check_probability_vector(p: &[f64]) -> Result<()> {
    for &x in p {
        if x < -1e-12 {
            return Err(Error::OutOfDomain(alloc::format!(
                "negative probability {x:e}"
            )));
        }
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-10 {
        return Err(Error::OutOfDomain(alloc::format!(
            "probabilities sum to {sum}"
        )));
    }
    Ok(())
}

/// Shannon entropy of a probability vector, in nats.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    check_probability_vector(p)?;
    Ok(p.iter().map(|&x| eta(x.max(0.0))).sum())
}

/// Entropy of the measurement: H(rho, Pi).
pub fn measurement_entropy(rho: &DensityMatrix, povm: &Povm) -> Result<f64> {
    let p = povm.outcome_probabilities(rho)?;
    Ok(p.iter().map(|&x| eta(x)).sum())
}

/// Relative entropy of the measurement w.r.t. the uniform distribution:
/// ln k - H(rho, Pi).
pub fn relative_entropy(rho: &DensityMatrix, povm: &Povm) -> Result<f64> {
    Ok((povm.outcomes() as f64).ln() - measurement_entropy(rho, povm)?)
}

/// h(t) = eta(((d-1)t + 1)/d) on [-1/(d-1), 1].
pub fn h_function(t: f64, d: usize) -> Result<f64> {
    let df = d as f64;
    let lo = -1.0 / (df - 1.0);
    if t < lo - 1e-12 || t > 1.0 + 1e-12 {
        return Err(Error::OutOfDomain(alloc::format!(
            "h argument {t} outside [{lo}, 1]"
        )));
    }
    let x = (((df - 1.0) * t + 1.0) / df).clamp(0.0, 1.0);
    Ok(eta(x))
}

/// First derivative of h.
pub fn h_derivative(t: f64, d: usize) -> Result<f64> {
    let df = d as f64;
    let x = ((df - 1.0) * t + 1.0) / df;
    if x <= 0.0 || x > 1.0 + 1e-12 {
        return Err(Error::OutOfDomain(alloc::format!(
            "h' argument {t} maps to nonpositive probability"
        )));
    }
    Ok((-x.ln() - 1.0) * (df - 1.0) / df)
}

/// Bloch form of the measurement entropy:
/// H_Pi(u) = ln(k/d) + (d/k) sum_j h(u . v_j).
pub fn entropy_from_bloch(u: &BlochVector, vs: &[BlochVector]) -> Result<f64> {
    let d = u.dim();
    let k = vs.len();
    let df = d as f64;
    let mut acc = 0.0;
    for v in vs {
        if v.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: v.dim(),
            });
        }
        acc += h_function(u.dot(v).clamp(-1.0 / (df - 1.0), 1.0), d)?;
    }
    Ok((k as f64 / df).ln() + df / k as f64 * acc)
}

/// Relative entropy in Bloch form: ln k - H_Pi(u).
pub fn relative_entropy_from_bloch(u: &BlochVector, vs: &[BlochVector]) -> Result<f64> {
    Ok((vs.len() as f64).ln() - entropy_from_bloch(u, vs)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaKind {
    Tsallis,
    Renyi,
}

/// Havrda-Charvat-Tsallis or Renyi alpha-entropy for alpha in (0, 2);
/// alpha = 1 routes to the Shannon entropy exactly.
pub fn alpha_entropy(p: &[f64], alpha: f64, kind: AlphaKind) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::OutOfDomain(alloc::format!(
            "alpha = {alpha} outside (0, 2)"
        )));
    }
    check_probability_vector(p)?;
    if alpha == 1.0 {
        return shannon_entropy(p);
    }
    let pow_sum: f64 = p.iter().map(|&x| x.max(0.0).powf(alpha)).sum();
    Ok(match kind {
        AlphaKind::Tsallis => {
            let lin: f64 = p.iter().map(|&x| x.max(0.0)).sum();
            (lin - pow_sum) / (alpha - 1.0)
        }
        AlphaKind::Renyi => pow_sum.ln() / (1.0 - alpha),
    })
}

/// theta_alpha(x) = (x - x^alpha)/(alpha - 1), the scalar function behind the
/// Tsallis entropy.
pub fn theta_alpha(x: f64, alpha: f64) -> f64 {
    (x - x.max(0.0).powf(alpha)) / (alpha - 1.0)
}

pub fn theta_alpha_derivative(x: f64, alpha: f64) -> f64 {
    (1.0 - alpha * x.max(0.0).powf(alpha - 1.0)) / (alpha - 1.0)
}

/// Index of coincidence: sum of squared probabilities.
pub fn index_of_coincidence(p: &[f64]) -> f64 {
    p.iter().map(|&x| x * x).sum()
}

/// Ensemble of quantum states with prior weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    weights: Vec<f64>,
    states: Vec<DensityMatrix>,
}

impl Ensemble {
    pub fn new(weights: Vec<f64>, states: Vec<DensityMatrix>) -> Result<Self> {
        if weights.len() != states.len() || states.is_empty() {
            return Err(Error::Structural(String::from(
                "ensemble weights and states must be nonempty and equal length",
            )));
        }
        check_probability_vector(&weights)?;
        let d = states[0].dim();
        for s in &states {
            if s.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: s.dim(),
                });
            }
        }
        Ok(Ensemble { weights, states })
    }

    /// Uniform ensemble over the given states.
    pub fn uniform(states: Vec<DensityMatrix>) -> Result<Self> {
        let w = alloc::vec![1.0 / states.len() as f64; states.len()];
        Self::new(w, states)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }
}

/// Mutual information of the joint table P_ij = pi_i tr(sigma_i Pi_j):
/// I = H(row marginal) + H(column marginal) - H(joint).
pub fn mutual_information(ensemble: &Ensemble, povm: &Povm) -> Result<f64> {
    let m = ensemble.states().len();
    let k = povm.outcomes();
    let mut joint = Vec::with_capacity(m * k);
    for (w, s) in ensemble.weights().iter().zip(ensemble.states()) {
        let p = povm.outcome_probabilities(s)?;
        for pj in p {
            joint.push(w * pj);
        }
    }
    let mut h_rows = 0.0;
    for i in 0..m {
        h_rows += eta(joint[i * k..(i + 1) * k].iter().sum());
    }
    let mut h_cols = 0.0;
    for j in 0..k {
        h_cols += eta((0..m).map(|i| joint[i * k + j]).sum());
    }
    let h_joint: f64 = joint.iter().map(|&x| eta(x)).sum();
    Ok(h_rows + h_cols - h_joint)
}

/// Average relative entropy over Haar-random pure states (Jones' formula):
/// ln d - sum_{j=2}^d 1/j.
pub fn jones_average(d: usize) -> f64 {
    let harmonic_tail: f64 = (2..=d).map(|j| 1.0 / j as f64).sum();
    (d as f64).ln() - harmonic_tail
}

/// Closed-form minimum relative entropy of a SIC-POVM over pure states:
/// ln d - ((d-1)/d) ln(d+1).
pub fn sic_min_relative_entropy(d: usize) -> f64 {
    let df = d as f64;
    df.ln() - (df - 1.0) / df * (df + 1.0).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_sic, BuiltinSic};
    use crate::quantum::PureState;

    #[test]
    fn shannon_uniform_and_point_mass() {
        assert!((shannon_entropy(&[0.25; 4]).unwrap() - 4f64.ln()).abs() < 1e-12);
        assert!(shannon_entropy(&[1.0, 0.0, 0.0]).unwrap().abs() < 1e-15);
        assert!(shannon_entropy(&[-1e-3, 1.0]).is_err());
    }

    #[test]
    fn sic_state_distribution_entropy() {
        // (1/2, 1/6, 1/6, 1/6): 0.5 ln 2 + 0.5 ln 6
        let h = shannon_entropy(&[0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0]).unwrap();
        let expected = 0.5 * 2f64.ln() + 0.5 * 6f64.ln();
        assert!((h - expected).abs() < 1e-12);
        assert!((h - 1.242453).abs() < 1e-6);
        // cross-check: ln 4 - h equals the closed-form minimum
        assert!((4f64.ln() - h - sic_min_relative_entropy(2)).abs() < 1e-12);
    }

    #[test]
    fn h_function_values() {
        assert!(h_function(1.0, 2).unwrap().abs() < 1e-15);
        assert!(h_function(-1.0, 2).unwrap().abs() < 1e-15);
        assert!((h_function(0.0, 2).unwrap() - eta(0.5)).abs() < 1e-15);
        assert!((h_function(0.0, 2).unwrap() - 0.346574).abs() < 1e-6);
        assert!(h_function(-1.1, 2).is_err());
    }

    #[test]
    fn alpha_entropy_cases() {
        // Tsallis tends to Shannon near alpha = 1.
        let p = [0.25; 4];
        let shannon = shannon_entropy(&p).unwrap();
        for a in [1.0 - 1e-4, 1.0 + 1e-4] {
            let t = alpha_entropy(&p, a, AlphaKind::Tsallis).unwrap();
            assert!((t - shannon).abs() < 1e-4);
        }
        assert!(alpha_entropy(&[1.0, 0.0], 0.5, AlphaKind::Tsallis)
            .unwrap()
            .abs()
            < 1e-15);
        let r = alpha_entropy(&[0.5, 0.5], 0.5, AlphaKind::Renyi).unwrap();
        assert!((r - 2f64.ln()).abs() < 1e-12);
        assert!(alpha_entropy(&p, 2.5, AlphaKind::Renyi).is_err());
    }

    #[test]
    fn index_of_coincidence_values() {
        assert!((index_of_coincidence(&[0.25; 4]) - 0.25).abs() < 1e-15);
        let sic = builtin_sic(BuiltinSic::Tetrahedral).unwrap();
        let p = sic
            .outcome_probabilities(&PureState::basis_state(2, 0).to_density())
            .unwrap();
        assert!((index_of_coincidence(&p) - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn jones_average_values() {
        assert!((jones_average(2) - 0.193147).abs() < 1e-6);
        assert!((jones_average(3) - 0.265279).abs() < 1e-6);
        assert!((jones_average(8) - 0.361585).abs() < 1e-6);
    }

    #[test]
    fn sic_closed_form_values() {
        assert!((sic_min_relative_entropy(2) - 0.143841).abs() < 1e-6);
        assert!((sic_min_relative_entropy(3) - 0.174416).abs() < 1e-6);
        assert!((sic_min_relative_entropy(8) - 0.156870).abs() < 1e-6);
        // positive everywhere, eventually decreasing to zero
        let mut prev = sic_min_relative_entropy(8);
        for d in [16usize, 64, 256, 1024] {
            let v = sic_min_relative_entropy(d);
            assert!(v > 0.0 && v < prev);
            prev = v;
        }
        assert!(sic_min_relative_entropy(100_000) < 1e-3);
    }

    #[test]
    fn single_state_ensemble_has_zero_information() {
        let povm = builtin_sic(BuiltinSic::Tetrahedral).unwrap();
        let e = Ensemble::uniform(alloc::vec![PureState::basis_state(2, 0).to_density()])
            .unwrap();
        assert!(mutual_information(&e, &povm).unwrap().abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_nonnegative_at_mixed_state() {
        let povm = builtin_sic(BuiltinSic::Tetrahedral).unwrap();
        let rho = crate::quantum::DensityMatrix::maximally_mixed(2);
        assert!(relative_entropy(&rho, &povm).unwrap().abs() < 1e-12);
    }
}
