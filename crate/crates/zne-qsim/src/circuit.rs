use crate::density::DensityMatrix;
use crate::error::{QsimError, Result};
use crate::gate::GateOp;
use crate::ops::{apply_gate_mut, depolarize_mut};

/// An ordered gate list over a fixed qubit register.
///
/// The total noise level of a circuit is the sum of its per-gate error
/// probabilities, accumulated with compensated summation so that folding a
/// circuit scales the level by exactly the fold factor.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitSpec {
    n_qubits: usize,
    gates: Vec<GateOp>,
}

impl CircuitSpec {
    pub fn new(n_qubits: usize, gates: Vec<GateOp>) -> Result<Self> {
        for gate in &gates {
            gate.validate(n_qubits)?;
        }
        Ok(Self { n_qubits, gates })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[GateOp] {
        &self.gates
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// Total circuit noise level `lambda`, the sum of per-gate error
    /// probabilities.
    pub fn noise_level(&self) -> f64 {
        neumaier_sum(self.gates.iter().map(GateOp::error_prob))
    }

    /// Line-oriented text rendering: `RX q theta p`, `RZ q theta p`,
    /// `CNOT q1 q2 p`; one gate per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for gate in &self.gates {
            match *gate {
                GateOp::Rx {
                    target,
                    angle,
                    error_prob,
                } => out.push_str(&format!("RX {target} {angle} {error_prob}\n")),
                GateOp::Rz {
                    target,
                    angle,
                    error_prob,
                } => out.push_str(&format!("RZ {target} {angle} {error_prob}\n")),
                GateOp::Cnot {
                    control,
                    target,
                    error_prob,
                } => out.push_str(&format!("CNOT {control} {target} {error_prob}\n")),
            }
        }
        out
    }

    /// Parse the text format produced by [`CircuitSpec::to_text`]. The
    /// register width is inferred from the highest qubit index; blank lines
    /// are skipped. Parse failures name the 1-based line number.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut gates = Vec::new();
        let mut max_qubit = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| QsimError::ParseError {
                line: line_no,
                message,
            };
            let usize_field = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(format!("bad qubit index {s:?}")))
            };
            let f64_field = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| parse_err(format!("bad number {s:?}")))
            };
            let gate = match (fields[0], fields.len()) {
                ("RX", 4) => GateOp::Rx {
                    target: usize_field(fields[1])?,
                    angle: f64_field(fields[2])?,
                    error_prob: f64_field(fields[3])?,
                },
                ("RZ", 4) => GateOp::Rz {
                    target: usize_field(fields[1])?,
                    angle: f64_field(fields[2])?,
                    error_prob: f64_field(fields[3])?,
                },
                ("CNOT", 4) => GateOp::Cnot {
                    control: usize_field(fields[1])?,
                    target: usize_field(fields[2])?,
                    error_prob: f64_field(fields[3])?,
                },
                (op, n) => {
                    return Err(parse_err(format!(
                        "expected `RX q theta p`, `RZ q theta p` or `CNOT q1 q2 p`, got {op:?} with {} fields",
                        n - 1
                    )))
                }
            };
            let (a, b) = gate.targets();
            max_qubit = max_qubit.max(a).max(b.unwrap_or(0));
            gates.push(gate);
        }
        Self::new(max_qubit + 1, gates)
    }
}

/// Global unitary folding: replace the circuit `U` by `U (U^dagger U)^m`
/// with `2m + 1 = fold_factor`, leaving the noiseless computation unchanged
/// while multiplying the gate count and the noise level by the (odd)
/// fold factor.
pub fn fold_circuit(circuit: &CircuitSpec, fold_factor: u32) -> Result<CircuitSpec> {
    if fold_factor == 0 || fold_factor % 2 == 0 {
        return Err(QsimError::InvalidFoldFactor(fold_factor));
    }
    let mut gates = Vec::with_capacity(circuit.gates.len() * fold_factor as usize);
    gates.extend_from_slice(&circuit.gates);
    for _ in 0..(fold_factor - 1) / 2 {
        gates.extend(circuit.gates.iter().rev().map(GateOp::inverse));
        gates.extend_from_slice(&circuit.gates);
    }
    CircuitSpec::new(circuit.n_qubits, gates)
}

/// Evolve a computational basis state through the circuit: each gate's
/// unitary is followed by the depolarizing channel on the gate's qubits
/// with that gate's error probability.
pub fn run_circuit(initial_state: usize, circuit: &CircuitSpec) -> Result<DensityMatrix> {
    let mut rho = DensityMatrix::basis_state(circuit.n_qubits, initial_state)?;
    for gate in &circuit.gates {
        apply_gate_mut(&mut rho, gate)?;
        let p = gate.error_prob();
        if p > 0.0 {
            match gate.targets() {
                (q, None) => depolarize_mut(&mut rho, &[q], p)?,
                (a, Some(b)) => depolarize_mut(&mut rho, &[a, b], p)?,
            }
        }
        debug_assert!(
            (rho.trace().re - 1.0).abs() < 1e-9,
            "trace drifted to {}",
            rho.trace()
        );
    }
    #[cfg(debug_assertions)]
    if let Err(e) = rho.validate() {
        panic!("circuit output failed validation: {e}");
    }
    Ok(rho)
}

/// Compensated (Neumaier) summation; the error term makes uniform-p gate
/// lists sum to the correctly rounded total.
fn neumaier_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut compensation = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}
