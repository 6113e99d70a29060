use crate::circuit::CircuitSpec;
use crate::error::{QsimError, Result};
use crate::gate::GateOp;
use crate::graph::SpinGraph;

/// First-order Trotter circuit for evolution under the transverse-field
/// Ising Hamiltonian `H = -h sum_i X_i - J sum_{<ij>} Z_i Z_j` with the
/// `U(t) = exp(+i t H)` sign convention.
///
/// Each of the `n_trotter` steps applies `Rx(2 h t / N)` on every site and,
/// per edge, the compiled ZZ rotation `CNOT . Rz(2 J t / N) . CNOT` on the
/// edge target. Every gate carries the same error probability `p_gate`, so
/// the circuit noise level is `p_gate * n_trotter * (n_sites + 3 |edges|)`.
pub fn build_trotter_circuit(
    graph: &SpinGraph,
    h: f64,
    j_coupling: f64,
    t: f64,
    n_trotter: u32,
    p_gate: f64,
) -> Result<CircuitSpec> {
    if n_trotter == 0 {
        return Err(QsimError::InvalidTrotterSteps);
    }
    let dt = t / n_trotter as f64;
    let theta_x = 2.0 * h * dt;
    let theta_z = 2.0 * j_coupling * dt;

    let mut gates =
        Vec::with_capacity(n_trotter as usize * (graph.n_sites() + 3 * graph.n_edges()));
    for _ in 0..n_trotter {
        for site in 0..graph.n_sites() {
            gates.push(GateOp::Rx {
                target: site,
                angle: theta_x,
                error_prob: p_gate,
            });
        }
        for &(a, b) in graph.edges() {
            gates.push(GateOp::Cnot {
                control: a,
                target: b,
                error_prob: p_gate,
            });
            gates.push(GateOp::Rz {
                target: b,
                angle: theta_z,
                error_prob: p_gate,
            });
            gates.push(GateOp::Cnot {
                control: a,
                target: b,
                error_prob: p_gate,
            });
        }
    }
    CircuitSpec::new(graph.n_sites(), gates)
}
