//! Haar-random pure states (normalized complex Gaussian vectors) and the
//! Monte Carlo estimate of the average relative entropy.

use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;
use rand::RngCore;

use crate::bloch::{bloch_vector, BlochVector};
use crate::entropy::relative_entropy;
use crate::error::Result;
use crate::linalg::C64;
use crate::quantum::{Povm, PureState};

fn uniform01(rng: &mut impl RngCore) -> f64 {
    // 53 random bits in [0, 1); offset keeps Box-Muller away from log(0)
    let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    x + f64::MIN_POSITIVE
}

/// One standard normal sample (Box-Muller).
pub fn standard_normal(rng: &mut impl RngCore) -> f64 {
    let u1 = uniform01(rng);
    let u2 = uniform01(rng);
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Haar-random pure state in C^d.
pub fn haar_state(d: usize, rng: &mut impl RngCore) -> PureState {
    loop {
        let amps: Vec<C64> = (0..d)
            .map(|_| C64::new(standard_normal(rng), standard_normal(rng)))
            .collect();
        if let Ok(state) = PureState::normalized(amps) {
            return state;
        }
    }
}

/// Bloch image of a Haar-random pure state (uniform on S^2 for d = 2).
pub fn haar_bloch(d: usize, rng: &mut impl RngCore) -> BlochVector {
    bloch_vector(&haar_state(d, rng).to_density())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub samples: usize,
}

/// Monte Carlo mean of the relative entropy over Haar-random pure states.
pub fn average_relative_entropy(
    povm: &Povm,
    samples: usize,
    rng: &mut impl RngCore,
) -> Result<MonteCarloEstimate> {
    if samples == 0 {
        return Err(crate::error::Error::Structural(
            alloc::string::String::from("sample count must be positive"),
        ));
    }
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..samples {
        let state = haar_state(povm.dim(), rng);
        let value = relative_entropy(&state.to_density(), povm)?;
        sum += value;
        sum_sq += value * value;
    }
    let n = samples as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    Ok(MonteCarloEstimate {
        estimate: mean,
        stderr: (variance / n).sqrt(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_states_are_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in [2usize, 3, 8] {
            let s = haar_state(d, &mut rng);
            assert_eq!(s.dim(), d);
        }
    }

    #[test]
    fn haar_bloch_is_unit_for_pure_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for d in [2usize, 3, 4] {
            let b = haar_bloch(d, &mut rng);
            assert!((b.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_samples_is_an_error() {
        let povm = crate::catalog::builtin_sic(crate::catalog::BuiltinSic::Tetrahedral).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(average_relative_entropy(&povm, 0, &mut rng).is_err());
    }
}
