//! Gate and noise-channel action on density matrices.
//!
//! All updates are `rho -> U rho U^dagger` conjugations or convex mixtures
//! with the maximally mixed state on the targeted qubits, performed in
//! place over index pairs selected by qubit bit masks.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{QsimError, Result};
use crate::gate::GateOp;

/// Apply a gate's unitary: `rho -> U rho U^dagger`.
pub fn apply_gate(rho: &DensityMatrix, gate: &GateOp) -> Result<DensityMatrix> {
    let mut out = rho.clone();
    apply_gate_mut(&mut out, gate)?;
    Ok(out)
}

/// Depolarize one or two target qubits with probability `p`: the targets
/// are replaced by the maximally mixed state while the rest keeps its
/// reduced state. `p = 0` is the identity map.
pub fn depolarize(rho: &DensityMatrix, targets: &[usize], p: f64) -> Result<DensityMatrix> {
    let mut out = rho.clone();
    depolarize_mut(&mut out, targets, p)?;
    Ok(out)
}

pub(crate) fn apply_gate_mut(rho: &mut DensityMatrix, gate: &GateOp) -> Result<()> {
    gate.validate(rho.n_qubits())?;
    match *gate {
        GateOp::Rx { target, angle, .. } => {
            let half = angle / 2.0;
            let c = Complex64::new(half.cos(), 0.0);
            let ms = Complex64::new(0.0, -half.sin());
            apply_single_qubit(rho, target, [c, ms, ms, c]);
        }
        GateOp::Rz { target, angle, .. } => apply_rz(rho, target, angle),
        GateOp::Cnot {
            control, target, ..
        } => apply_cnot(rho, control, target),
    }
    Ok(())
}

pub(crate) fn depolarize_mut(rho: &mut DensityMatrix, targets: &[usize], p: f64) -> Result<()> {
    if !(p.is_finite() && (0.0..=1.0).contains(&p)) {
        return Err(QsimError::InvalidProbability(p));
    }
    for &t in targets {
        if t >= rho.n_qubits() {
            return Err(QsimError::TargetOutOfRange {
                target: t,
                n_qubits: rho.n_qubits(),
            });
        }
    }
    match *targets {
        [q] => depolarize_one(rho, q, p),
        [a, b] => {
            if a == b {
                return Err(QsimError::DuplicateTargets { target: a });
            }
            depolarize_two(rho, a, b, p);
        }
        _ => return Err(QsimError::InvalidTargetCount(targets.len())),
    }
    Ok(())
}

/// Conjugate by a single-qubit unitary `u` (row-major 2x2).
fn apply_single_qubit(rho: &mut DensityMatrix, qubit: usize, u: [Complex64; 4]) {
    let dim = rho.dim();
    let mask = rho.qubit_mask(qubit);
    let data = rho.data_mut();

    // Left multiplication: rows mix in pairs.
    for i in 0..dim {
        if i & mask != 0 {
            continue;
        }
        let (r0, r1) = (i * dim, (i | mask) * dim);
        for col in 0..dim {
            let a = data[r0 + col];
            let b = data[r1 + col];
            data[r0 + col] = u[0] * a + u[1] * b;
            data[r1 + col] = u[2] * a + u[3] * b;
        }
    }
    // Right multiplication by u^dagger: columns mix in pairs.
    let conj = [u[0].conj(), u[1].conj(), u[2].conj(), u[3].conj()];
    for j in 0..dim {
        if j & mask != 0 {
            continue;
        }
        let (c0, c1) = (j, j | mask);
        for row in 0..dim {
            let base = row * dim;
            let a = data[base + c0];
            let b = data[base + c1];
            data[base + c0] = a * conj[0] + b * conj[1];
            data[base + c1] = a * conj[2] + b * conj[3];
        }
    }
}

/// `Rz` only rotates coherences whose target bit differs; populations and
/// target-diagonal blocks are untouched, so diagonal states pass through
/// bit-for-bit.
fn apply_rz(rho: &mut DensityMatrix, qubit: usize, angle: f64) {
    let dim = rho.dim();
    let mask = rho.qubit_mask(qubit);
    // rho[i, j] with bits (0, 1) picks up e^{-i angle}; (1, 0) the conjugate.
    let w = Complex64::new(angle.cos(), -angle.sin());
    let data = rho.data_mut();
    for i in 0..dim {
        let bi = i & mask;
        for j in 0..dim {
            let bj = j & mask;
            if bi == bj {
                continue;
            }
            let idx = i * dim + j;
            data[idx] *= if bi == 0 { w } else { w.conj() };
        }
    }
}

fn apply_cnot(rho: &mut DensityMatrix, control: usize, target: usize) {
    let dim = rho.dim();
    let cmask = rho.qubit_mask(control);
    let tmask = rho.qubit_mask(target);
    let data = rho.data_mut();

    // Swap rows i <-> i|tmask wherever the control is set.
    for i in 0..dim {
        if i & cmask == 0 || i & tmask != 0 {
            continue;
        }
        let (r0, r1) = (i * dim, (i | tmask) * dim);
        for col in 0..dim {
            data.swap(r0 + col, r1 + col);
        }
    }
    // Same permutation on columns.
    for j in 0..dim {
        if j & cmask == 0 || j & tmask != 0 {
            continue;
        }
        let (c0, c1) = (j, j | tmask);
        for row in 0..dim {
            let base = row * dim;
            data.swap(base + c0, base + c1);
        }
    }
}

fn depolarize_one(rho: &mut DensityMatrix, qubit: usize, p: f64) {
    if p == 0.0 {
        return;
    }
    let dim = rho.dim();
    let mask = rho.qubit_mask(qubit);
    let keep = 1.0 - p;
    let half_p = 0.5 * p;
    let data = rho.data_mut();
    for i in 0..dim {
        if i & mask != 0 {
            continue;
        }
        for j in 0..dim {
            if j & mask != 0 {
                continue;
            }
            let i00 = i * dim + j;
            let i01 = i * dim + (j | mask);
            let i10 = (i | mask) * dim + j;
            let i11 = (i | mask) * dim + (j | mask);
            let mix = (data[i00] + data[i11]) * half_p;
            data[i00] = data[i00] * keep + mix;
            data[i11] = data[i11] * keep + mix;
            data[i01] *= keep;
            data[i10] *= keep;
        }
    }
}

fn depolarize_two(rho: &mut DensityMatrix, qubit_a: usize, qubit_b: usize, p: f64) {
    if p == 0.0 {
        return;
    }
    let dim = rho.dim();
    let ma = rho.qubit_mask(qubit_a);
    let mb = rho.qubit_mask(qubit_b);
    let both = ma | mb;
    let subs = [0, mb, ma, both];
    let keep = 1.0 - p;
    let quarter_p = 0.25 * p;
    let data = rho.data_mut();
    for i in 0..dim {
        if i & both != 0 {
            continue;
        }
        for j in 0..dim {
            if j & both != 0 {
                continue;
            }
            let mut block_trace = Complex64::ZERO;
            for s in subs {
                block_trace += data[(i | s) * dim + (j | s)];
            }
            let mix = block_trace * quarter_p;
            for (a, &sa) in subs.iter().enumerate() {
                for (b, &sb) in subs.iter().enumerate() {
                    let idx = (i | sa) * dim + (j | sb);
                    data[idx] *= keep;
                    if a == b {
                        data[idx] += mix;
                    }
                }
            }
        }
    }
}
