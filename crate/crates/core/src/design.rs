//! Moment tests: whether a point set has constant power sums
//! sum_j (u . v_j)^s over probe directions, the defining property used for
//! spherical and projective 2-designs.

use alloc::vec::Vec;

use crate::bloch::BlochVector;

#[derive(Debug, Clone, PartialEq)]
pub struct DesignReport {
    pub ok: bool,
    /// Variance of the power sum over the probes, per degree 1..=t.
    pub moment_variances: Vec<f64>,
    /// Mean of the degree-2 power sum (equals k/3 for 2-designs on S^2).
    pub second_moment_mean: f64,
}

/// Tests sum_j (u . v_j)^s = const for all s <= t, with the constancy judged
/// by the variance over the supplied probe directions (< 1e-9).
///
/// Probes must be drawn from the relevant domain: uniform unit vectors for
/// point sets on S^2, Bloch images of Haar-random pure states for POVM Bloch
/// configurations in higher dimension.
pub fn is_t_design(vs: &[BlochVector], t: usize, probes: &[BlochVector]) -> DesignReport {
    let mut moment_variances = Vec::with_capacity(t);
    let mut second_moment_mean = 0.0;
    let mut ok = true;
    for s in 1..=t {
        let sums: Vec<f64> = probes
            .iter()
            .map(|u| {
                vs.iter()
                    .map(|v| {
                        let d = u.dot(v);
                        let mut acc = 1.0;
                        for _ in 0..s {
                            acc *= d;
                        }
                        acc
                    })
                    .sum()
            })
            .collect();
        let mean: f64 = sums.iter().sum::<f64>() / sums.len() as f64;
        let var: f64 =
            sums.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / sums.len() as f64;
        if s == 2 {
            second_moment_mean = mean;
        }
        if var >= 1e-9 {
            ok = false;
        }
        moment_variances.push(var);
    }
    DesignReport {
        ok,
        moment_variances,
        second_moment_mean,
    }
}

/// Convenience wrapper for point sets on S^2 given as 3-vectors.
pub fn is_t_design_s2(vs: &[[f64; 3]], t: usize, probes: &[[f64; 3]]) -> DesignReport {
    let to_bloch = |v: &[f64; 3]| BlochVector::qubit(v[0], v[1], v[2]);
    let vsb: Vec<BlochVector> = vs.iter().map(to_bloch).collect();
    let pb: Vec<BlochVector> = probes.iter().map(to_bloch).collect();
    is_t_design(&vsb, t, &pb)
}
