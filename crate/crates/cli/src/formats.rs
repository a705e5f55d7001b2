//! On-disk JSON schemas and conversions to/from the core types. Complex
//! numbers are stored as [re, im] pairs, matrices row-major.

use povmlab_core::catalog::FiducialRecord;
use povmlab_core::certify::{CertificateReport, Decomposition, SignVerdict};
use povmlab_core::linalg::{C64, CMatrix};
use povmlab_core::optimize::OptResult;
use povmlab_core::quantum::{Povm, PureState};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Serialize, Deserialize)]
pub struct PovmFile {
    pub dim: usize,
    pub label: String,
    /// effects[j] is a dim x dim row-major matrix of [re, im] entries
    pub effects: Vec<Vec<Vec<[f64; 2]>>>,
}

impl PovmFile {
    pub fn from_povm(povm: &Povm) -> Self {
        let d = povm.dim();
        let effects = povm
            .effects()
            .iter()
            .map(|m| {
                (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| {
                                let z = m.data()[i * d + j];
                                [z.re, z.im]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        PovmFile {
            dim: d,
            label: povm.label().to_string(),
            effects,
        }
    }

    pub fn into_povm(self) -> Result<Povm, povmlab_core::Error> {
        let d = self.dim;
        let effects = self
            .effects
            .into_iter()
            .map(|rows| {
                let mut data = Vec::with_capacity(d * d);
                for row in &rows {
                    for &[re, im] in row {
                        data.push(C64::new(re, im));
                    }
                }
                CMatrix::from_data(d, data)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Povm::new(effects, self.label)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StateFile {
    pub dim: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn from_state(psi: &PureState) -> Self {
        StateFile {
            dim: psi.dim(),
            amplitudes: psi.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn into_state(self) -> Result<PureState, povmlab_core::Error> {
        if self.amplitudes.len() != self.dim {
            return Err(povmlab_core::Error::DimensionMismatch {
                expected: self.dim,
                found: self.amplitudes.len(),
            });
        }
        PureState::new(
            self.amplitudes
                .iter()
                .map(|&[re, im]| C64::new(re, im))
                .collect(),
        )
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FiducialFile {
    pub dim: usize,
    pub vector: Vec<[f64; 2]>,
    pub label: String,
    /// Covariance group: "cyclic" or "three-qubit"; defaults to three-qubit
    /// for d = 8 and cyclic otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

impl FiducialFile {
    pub fn into_record(self) -> Result<FiducialRecord, povmlab_core::Error> {
        FiducialRecord::new(
            self.dim,
            self.vector
                .iter()
                .map(|&[re, im]| C64::new(re, im))
                .collect(),
            &self.label,
        )
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlochFile {
    pub dim: usize,
    pub coords: Vec<f64>,
}

/// Single machine-readable record emitted under --json. The timestamp and
/// duration are omitted for seeded runs so output is bit-reproducible.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub command: String,
    pub config: Value,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp_unix: Option<u64>,
    pub outputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

pub fn opt_result_json(res: &OptResult) -> Value {
    json!({
        "best_value": res.best_value,
        "entropy": res.entropy,
        "relative_entropy": res.relative_entropy,
        "optima": res.optima.iter().map(|o| json!({
            "amplitudes": StateFile::from_state(&o.state).amplitudes,
            "value": o.value,
            "cluster_size": o.cluster_size,
        })).collect::<Vec<_>>(),
        "dropped": res.dropped,
        "evaluations": res.evaluations,
    })
}

pub fn certificate_json(r: &CertificateReport) -> Value {
    let decomposition = match &r.decomposition {
        Decomposition::Constant { value } => json!({ "kind": "constant", "value": value }),
        Decomposition::InvariantFit {
            invariant,
            a,
            b,
            eval_points,
            residual,
        } => json!({
            "kind": "invariant-fit",
            "invariant": invariant.name(),
            "a": a,
            "b": b,
            "eval_points": eval_points,
            "residual": residual,
        }),
    };
    let verdict = match r.sign_verdict {
        SignVerdict::ConstantBound => "constant-bound",
        SignVerdict::PositiveAtInvariantMax => "positive-at-invariant-max",
        SignVerdict::NegativeAtInvariantMin => "negative-at-invariant-min",
    };
    json!({
        "povm": r.povm_label,
        "dim": r.dim,
        "outcomes": r.outcomes,
        "candidate_representative": r.candidate_representative,
        "candidate_size": r.candidate_size,
        "nodes": r.nodes,
        "interpolant": {
            "newton_centers": r.interpolant.newton_centers(),
            "newton_coefficients": r.interpolant.newton_coefficients(),
        },
        "from_above_ok": r.from_above_ok,
        "min_gap_off_nodes": r.min_gap_off_nodes,
        "decomposition": decomposition,
        "sign_verdict": verdict,
        "certified_value": r.certified_value,
        "certified_min_relative_entropy": r.certified_min_relative_entropy,
    })
}
