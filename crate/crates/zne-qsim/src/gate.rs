use crate::error::{QsimError, Result};

/// One circuit operation with its per-gate error probability.
///
/// The rotation conventions are `Rx(theta) = exp(-i theta X / 2)` and
/// `Rz(theta) = exp(-i theta Z / 2)`; `Cnot` flips the target when the
/// control qubit is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateOp {
    Rx {
        target: usize,
        angle: f64,
        error_prob: f64,
    },
    Rz {
        target: usize,
        angle: f64,
        error_prob: f64,
    },
    Cnot {
        control: usize,
        target: usize,
        error_prob: f64,
    },
}

impl GateOp {
    pub fn error_prob(&self) -> f64 {
        match *self {
            GateOp::Rx { error_prob, .. }
            | GateOp::Rz { error_prob, .. }
            | GateOp::Cnot { error_prob, .. } => error_prob,
        }
    }

    /// Qubits the gate acts on; the noise channel after the gate acts on
    /// the same set.
    pub fn targets(&self) -> (usize, Option<usize>) {
        match *self {
            GateOp::Rx { target, .. } | GateOp::Rz { target, .. } => (target, None),
            GateOp::Cnot {
                control, target, ..
            } => (control, Some(target)),
        }
    }

    /// The inverse gate, carrying the same error probability.
    pub fn inverse(&self) -> GateOp {
        match *self {
            GateOp::Rx {
                target,
                angle,
                error_prob,
            } => GateOp::Rx {
                target,
                angle: -angle,
                error_prob,
            },
            GateOp::Rz {
                target,
                angle,
                error_prob,
            } => GateOp::Rz {
                target,
                angle: -angle,
                error_prob,
            },
            cnot @ GateOp::Cnot { .. } => cnot,
        }
    }

    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let check = |q: usize| {
            if q >= n_qubits {
                Err(QsimError::TargetOutOfRange {
                    target: q,
                    n_qubits,
                })
            } else {
                Ok(())
            }
        };
        match *self {
            GateOp::Rx { target, .. } | GateOp::Rz { target, .. } => check(target)?,
            GateOp::Cnot {
                control, target, ..
            } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(QsimError::DuplicateTargets { target });
                }
            }
        }
        let p = self.error_prob();
        if !(p.is_finite() && (0.0..=1.0).contains(&p)) {
            return Err(QsimError::InvalidProbability(p));
        }
        Ok(())
    }
}
