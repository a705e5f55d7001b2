//! Global search for extremal pure states of the outcome-entropy landscape:
//! multi-start compass search over the real-and-imaginary amplitude
//! coordinates, with normalization folded into the objective.

use alloc::vec::Vec;
#[allow(unused_imports)] // needed without std, shadowed with it
use num_traits::Float;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bloch::{pure_state_from_bloch, BlochVector};
use crate::entropy::{alpha_entropy, shannon_entropy, AlphaKind};
use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::quantum::{Povm, PureState};
use crate::random::standard_normal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Objective {
    /// Shannon entropy of the outcome distribution.
    Entropy,
    /// Tsallis or Renyi entropy of order alpha in (0, 2).
    AlphaEntropy { alpha: f64, kind: AlphaKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptConfig {
    pub objective: Objective,
    pub sense: Sense,
    /// Number of start points (equal-area grid for d = 2, Haar otherwise).
    pub starts: usize,
    /// Compass search terminates once the step falls below this.
    pub step_tol: f64,
    /// Optima within this window of the best value join the optimum set.
    pub value_window: f64,
    /// Two optima are the same state when their fidelity exceeds this.
    pub cluster_fidelity: f64,
    pub seed: u64,
}

impl Default for OptConfig {
    fn default() -> Self {
        OptConfig {
            objective: Objective::Entropy,
            sense: Sense::Maximize,
            starts: 64,
            step_tol: 1e-12,
            value_window: 1e-7,
            cluster_fidelity: 1.0 - 1e-8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Optimum {
    pub state: PureState,
    pub value: f64,
    /// How many converged runs landed on this state.
    pub cluster_size: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptResult {
    /// Best objective value found, in the configured sense.
    pub best_value: f64,
    /// Shannon entropy at the best state (equals best_value for the entropy
    /// objective).
    pub entropy: f64,
    /// ln k minus the Shannon entropy at the best state.
    pub relative_entropy: f64,
    /// Distinct optimal states within the value window, largest cluster first.
    pub optima: Vec<Optimum>,
    /// Converged runs outside the value window (local optima).
    pub dropped: usize,
    pub evaluations: usize,
}

fn state_from_coords(x: &[f64]) -> Option<PureState> {
    let amps: Vec<C64> = x.chunks_exact(2).map(|c| C64::new(c[0], c[1])).collect();
    PureState::normalized(amps).ok()
}

struct Eval<'a> {
    povm: &'a Povm,
    objective: Objective,
    sign: f64,
    count: usize,
}

impl Eval<'_> {
    /// Signed objective: larger is better in the configured sense.
    fn call(&mut self, x: &[f64]) -> f64 {
        self.count += 1;
        let Some(state) = state_from_coords(x) else {
            return f64::NEG_INFINITY;
        };
        let p = self
            .povm
            .outcome_probabilities_pure(&state)
            .expect("dimension fixed by start point");
        let value = match self.objective {
            Objective::Entropy => shannon_entropy(&p),
            Objective::AlphaEntropy { alpha, kind } => alpha_entropy(&p, alpha, kind),
        };
        match value {
            Ok(v) => self.sign * v,
            Err(_) => f64::NEG_INFINITY,
        }
    }
}

fn renormalize(x: &mut [f64]) {
    let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if n > 0.0 {
        for v in x.iter_mut() {
            *v /= n;
        }
    }
}

fn compass_search(eval: &mut Eval, start: Vec<f64>, step_tol: f64) -> (Vec<f64>, f64) {
    let mut x = start;
    renormalize(&mut x);
    let mut fx = eval.call(&x);
    let mut step = 0.25;
    while step > step_tol {
        let mut improved = false;
        for i in 0..x.len() {
            for s in [1.0, -1.0] {
                let old = x[i];
                x[i] = old + s * step;
                let fy = eval.call(&x);
                if fy > fx {
                    fx = fy;
                    improved = true;
                    renormalize(&mut x);
                } else {
                    x[i] = old;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    (x, fx)
}

/// Deterministic equal-area spiral on S^2 (golden-angle longitudes).
fn fibonacci_sphere(n: usize) -> Vec<[f64; 3]> {
    let golden_angle = core::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden_angle * i as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

fn start_points(d: usize, starts: usize, rng: &mut impl RngCore) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(starts);
    if d == 2 {
        // equal-area grid covers the sphere; random starts fill the rest
        let grid = starts.min(starts / 2 + 16);
        for v in fibonacci_sphere(grid) {
            let psi = pure_state_from_bloch(&BlochVector::qubit(v[0], v[1], v[2]))
                .expect("unit Bloch vector");
            let mut x = Vec::with_capacity(4);
            for a in psi.amplitudes() {
                x.push(a.re);
                x.push(a.im);
            }
            out.push(x);
        }
    }
    while out.len() < starts {
        let mut x: Vec<f64> = (0..2 * d).map(|_| standard_normal(rng)).collect();
        renormalize(&mut x);
        out.push(x);
    }
    out
}

/// Multi-start global optimization of the outcome-entropy objective over pure
/// states. Returns the clustered set of optimal states within the value
/// window of the best run.
pub fn optimize(povm: &Povm, config: &OptConfig) -> Result<OptResult> {
    if let Objective::AlphaEntropy { alpha, .. } = config.objective {
        if !(alpha > 0.0 && alpha < 2.0) {
            return Err(Error::OutOfDomain(alloc::format!(
                "alpha = {alpha} outside (0, 2)"
            )));
        }
    }
    if config.starts == 0 {
        return Err(Error::Structural(alloc::string::String::from(
            "at least one start point is required",
        )));
    }
    let d = povm.dim();
    let k = povm.outcomes();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let sign = match config.sense {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };
    let mut eval = Eval {
        povm,
        objective: config.objective,
        sign,
        count: 0,
    };
    let mut runs: Vec<(PureState, f64)> = Vec::with_capacity(config.starts);
    for start in start_points(d, config.starts, &mut rng) {
        let (x, fx) = compass_search(&mut eval, start, config.step_tol);
        if let Some(state) = state_from_coords(&x) {
            runs.push((state, fx));
        }
    }
    let best_signed = runs
        .iter()
        .map(|(_, f)| *f)
        .fold(f64::NEG_INFINITY, f64::max);
    if !best_signed.is_finite() {
        return Err(Error::Structural(alloc::string::String::from(
            "no run converged to a finite objective value",
        )));
    }
    let mut optima: Vec<Optimum> = Vec::new();
    let mut dropped = 0usize;
    for (state, fx) in runs {
        if best_signed - fx > config.value_window {
            dropped += 1;
            continue;
        }
        match optima
            .iter_mut()
            .find(|o| matches!(o.state.fidelity(&state), Ok(f) if f >= config.cluster_fidelity))
        {
            Some(o) => o.cluster_size += 1,
            None => optima.push(Optimum {
                state: state.phase_fixed(),
                value: sign * fx,
                cluster_size: 1,
            }),
        }
    }
    optima.sort_by(|a, b| b.cluster_size.cmp(&a.cluster_size));
    let best_state = &optima[0].state;
    let entropy = shannon_entropy(&povm.outcome_probabilities_pure(best_state)?)?;
    Ok(OptResult {
        best_value: sign * best_signed,
        entropy,
        relative_entropy: (k as f64).ln() - entropy,
        optima,
        dropped,
        evaluations: eval.count,
    })
}

/// Entropy maximizers (relative-entropy minimizers) with default settings.
pub fn maximize_entropy(povm: &Povm, seed: u64) -> Result<OptResult> {
    optimize(
        povm,
        &OptConfig {
            seed,
            ..OptConfig::default()
        },
    )
}

/// Entropy minimizers (relative-entropy maximizers) with default settings.
pub fn minimize_entropy(povm: &Povm, seed: u64) -> Result<OptResult> {
    optimize(
        povm,
        &OptConfig {
            sense: Sense::Minimize,
            seed,
            ..OptConfig::default()
        },
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    pub ok: bool,
    pub found: usize,
    pub expected: usize,
    pub matched: usize,
}

/// Checks that the found optimum set coincides with the expected state set:
/// equal counts and a perfect fidelity matching at the given threshold.
pub fn verify_maximizer_set(
    found: &[PureState],
    expected: &[PureState],
    fidelity_threshold: f64,
) -> MatchReport {
    let n = found.len();
    let m = expected.len();
    // bipartite matching by augmenting paths (sets are tiny)
    let adj: Vec<Vec<usize>> = found
        .iter()
        .map(|f| {
            expected
                .iter()
                .enumerate()
                .filter(|(_, e)| matches!(f.fidelity(e), Ok(x) if x >= fidelity_threshold))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = alloc::vec![None; m];
    fn try_assign(
        i: usize,
        adj: &[Vec<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || try_assign(owner[j].unwrap(), adj, owner, seen) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut matched = 0;
    for i in 0..n {
        let mut seen = alloc::vec![false; m];
        if try_assign(i, &adj, &mut owner, &mut seen) {
            matched += 1;
        }
    }
    MatchReport {
        ok: n == m && matched == n,
        found: n,
        expected: m,
        matched,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandscapeRow {
    pub theta: f64,
    pub phi: f64,
    pub entropy: f64,
    pub relative_entropy: f64,
}

/// Entropy landscape of a qubit POVM over an equal-area spherical grid.
pub fn landscape_scan(povm: &Povm, points: usize) -> Result<Vec<LandscapeRow>> {
    if povm.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: povm.dim(),
        });
    }
    let ln_k = (povm.outcomes() as f64).ln();
    fibonacci_sphere(points)
        .into_iter()
        .map(|v| {
            let theta = v[2].clamp(-1.0, 1.0).acos();
            let phi = v[1].atan2(v[0]);
            let psi = pure_state_from_bloch(&BlochVector::qubit(v[0], v[1], v[2]))?;
            let h = shannon_entropy(&povm.outcome_probabilities_pure(&psi)?)?;
            Ok(LandscapeRow {
                theta,
                phi,
                entropy: h,
                relative_entropy: ln_k - h,
            })
        })
        .collect()
}
