//! Pure-state simulation for a handful of qubits.
//!
//! Qubit `k` is the `k`-th most significant bit of a basis index, which keeps
//! qubit numbering aligned with Pauli-string letter positions and with
//! outcome labels.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, ONE, ZERO};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const NORM_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState {
    amplitudes: Vec<Complex64>,
    n: usize,
}

impl QuantumState {
    /// Normalizes `amplitudes`; the length must be a power of two.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::NullState);
        }
        Ok(Self {
            n: len.trailing_zeros() as usize,
            amplitudes: amplitudes.into_iter().map(|a| a / norm).collect(),
        })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    pub fn zero(n: usize) -> Self {
        let mut amplitudes = vec![ZERO; 1 << n];
        amplitudes[0] = ONE;
        Self { amplitudes, n }
    }

    pub fn basis(n: usize, index: usize) -> Self {
        let mut amplitudes = vec![ZERO; 1 << n];
        amplitudes[index] = ONE;
        Self { amplitudes, n }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Computational-basis probabilities.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn inner(&self, other: &QuantumState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Distance to `other` after removing the best global phase.
    pub fn distance_up_to_phase(&self, other: &QuantumState) -> f64 {
        let overlap = self.inner(other);
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            ONE
        };
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a * phase - b).norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateFamily {
    /// `C1 (cos a, cos a, sin b, sin b)`
    S1,
    /// `C2 (sin a, sin a, cos b, cos b)`
    S2,
    Explicit,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StatePrepSpec {
    pub family: StateFamily,
    pub alpha: f64,
    pub beta: f64,
    pub explicit_amplitudes: Option<Vec<Complex64>>,
}

impl StatePrepSpec {
    pub fn s1(alpha: f64, beta: f64) -> Self {
        Self {
            family: StateFamily::S1,
            alpha,
            beta,
            explicit_amplitudes: None,
        }
    }

    pub fn s2(alpha: f64, beta: f64) -> Self {
        Self {
            family: StateFamily::S2,
            alpha,
            beta,
            explicit_amplitudes: None,
        }
    }

    pub fn explicit(amplitudes: Vec<Complex64>) -> Self {
        Self {
            family: StateFamily::Explicit,
            alpha: 0.0,
            beta: 0.0,
            explicit_amplitudes: Some(amplitudes),
        }
    }

    /// Unnormalized amplitude vector.
    fn raw_amplitudes(&self) -> Result<Vec<Complex64>> {
        let (a, b) = match self.family {
            StateFamily::S1 => (self.alpha.cos(), self.beta.sin()),
            StateFamily::S2 => (self.alpha.sin(), self.beta.cos()),
            StateFamily::Explicit => {
                return self
                    .explicit_amplitudes
                    .clone()
                    .ok_or_else(|| Error::Config("explicit family needs amplitudes".into()))
            }
        };
        Ok([a, a, b, b].iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Positive normalization constant of the family vector.
    pub fn normalization(&self) -> Result<f64> {
        let raw = self.raw_amplitudes()?;
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::NullState);
        }
        Ok(1.0 / norm)
    }
}

pub fn prepare_state(spec: &StatePrepSpec) -> Result<QuantumState> {
    QuantumState::from_amplitudes(spec.raw_amplitudes()?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateOp {
    /// `U3(theta, phi, lambda)` in the IBM convention.
    U3 {
        qubit: usize,
        theta: f64,
        phi: f64,
        lambda: f64,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    H(usize),
    Sdg(usize),
}

impl GateOp {
    /// 2x2 matrix of a single-qubit gate, `None` for CNOT.
    pub fn single_qubit_matrix(&self) -> Option<CMatrix> {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        match *self {
            GateOp::U3 {
                theta, phi, lambda, ..
            } => {
                let (s, co) = (theta / 2.0).sin_cos();
                Some(CMatrix::from_rows(&[
                    &[c(co, 0.0), -Complex64::from_polar(s, lambda)],
                    &[
                        Complex64::from_polar(s, phi),
                        Complex64::from_polar(co, phi + lambda),
                    ],
                ]))
            }
            GateOp::H(_) => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                Some(CMatrix::from_rows(&[&[c(h, 0.0), c(h, 0.0)], &[c(h, 0.0), c(-h, 0.0)]]))
            }
            GateOp::Sdg(_) => Some(CMatrix::from_diag(&[ONE, c(0.0, -1.0)])),
            GateOp::Cnot { .. } => None,
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        let check_one = |index: usize| {
            if index >= n {
                Err(Error::QubitOutOfRange { index, n })
            } else {
                Ok(())
            }
        };
        match *self {
            GateOp::U3 { qubit, .. } | GateOp::H(qubit) | GateOp::Sdg(qubit) => check_one(qubit),
            GateOp::Cnot { control, target } => {
                check_one(control)?;
                check_one(target)?;
                if control == target {
                    return Err(Error::ControlIsTarget(control));
                }
                Ok(())
            }
        }
    }
}

pub fn apply_gate(state: &QuantumState, gate: &GateOp) -> Result<QuantumState> {
    let n = state.n;
    gate.check(n)?;
    let mut amps = state.amplitudes.clone();
    match *gate {
        GateOp::Cnot { control, target } => {
            let cmask = 1 << (n - 1 - control);
            let tmask = 1 << (n - 1 - target);
            for i in 0..amps.len() {
                if i & cmask != 0 && i & tmask == 0 {
                    amps.swap(i, i | tmask);
                }
            }
        }
        GateOp::U3 { qubit, .. } | GateOp::H(qubit) | GateOp::Sdg(qubit) => {
            let m = gate.single_qubit_matrix().expect("single-qubit gate");
            let mask = 1 << (n - 1 - qubit);
            for i in 0..amps.len() {
                if i & mask == 0 {
                    let (a0, a1) = (amps[i], amps[i | mask]);
                    amps[i] = m[(0, 0)] * a0 + m[(0, 1)] * a1;
                    amps[i | mask] = m[(1, 0)] * a0 + m[(1, 1)] * a1;
                }
            }
        }
    }
    Ok(QuantumState { amplitudes: amps, n })
}

pub fn apply_gates(state: &QuantumState, gates: &[GateOp]) -> Result<QuantumState> {
    gates
        .iter()
        .try_fold(state.clone(), |s, g| apply_gate(&s, g))
}

/// Unitary of a gate sequence (first gate applied first).
pub fn circuit_unitary(n: usize, gates: &[GateOp]) -> Result<CMatrix> {
    let dim = 1 << n;
    let mut u = CMatrix::zeros(dim);
    for col in 0..dim {
        let out = apply_gates(&QuantumState::basis(n, col), gates)?;
        for (row, a) in out.amplitudes.iter().enumerate() {
            u[(row, col)] = *a;
        }
    }
    Ok(u)
}

/// Born probability `<psi|P|psi>`, clamped to `[0, 1]`.
pub fn projection_probability(state: &QuantumState, projector: &CMatrix) -> Result<f64> {
    if projector.dim() != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: state.dim(),
            got: projector.dim(),
        });
    }
    let pv = projector.apply(&state.amplitudes);
    let value: Complex64 = state
        .amplitudes
        .iter()
        .zip(&pv)
        .map(|(a, b)| a.conj() * b)
        .sum();
    Ok(value.re.clamp(0.0, 1.0))
}

/// Splits a product state into normalized single-qubit factors, or fails.
pub fn factor_product_state(state: &QuantumState) -> Result<Vec<[Complex64; 2]>> {
    let n = state.n;
    let amps = &state.amplitudes;
    let anchor = (0..amps.len())
        .max_by(|&a, &b| amps[a].norm().partial_cmp(&amps[b].norm()).unwrap())
        .expect("non-empty");
    let mut factors = Vec::with_capacity(n);
    for k in 0..n {
        let mask = 1 << (n - 1 - k);
        let v = [amps[anchor & !mask], amps[anchor | mask]];
        let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        factors.push([v[0] / norm, v[1] / norm]);
    }
    let rebuilt: Vec<Complex64> = (0..amps.len())
        .map(|i| {
            (0..n)
                .map(|k| factors[k][(i >> (n - 1 - k)) & 1])
                .product()
        })
        .collect();
    let candidate = QuantumState {
        amplitudes: rebuilt,
        n,
    };
    if candidate.distance_up_to_phase(state) > NORM_TOL {
        return Err(Error::NotProductState);
    }
    Ok(factors)
}

/// Single U3 taking |0> to `(a, b)` up to global phase. The free `lambda` is
/// pinned to pi so that |+> comes out as exactly the Hadamard.
fn u3_for(qubit: usize, v: [Complex64; 2]) -> GateOp {
    let theta = 2.0 * v[1].norm().atan2(v[0].norm());
    let phi = if v[1].norm() > 1e-15 && v[0].norm() > 1e-15 {
        v[1].arg() - v[0].arg()
    } else if v[1].norm() > 1e-15 {
        v[1].arg()
    } else {
        0.0
    };
    let phi = (phi + PI).rem_euclid(2.0 * PI) - PI;
    GateOp::U3 {
        qubit,
        theta,
        phi,
        lambda: PI,
    }
}

/// Per-qubit U3 gates preparing `spec` from |0...0>. Qubits already in |0>
/// (up to phase) get no gate.
pub fn synthesize_prep_circuit(spec: &StatePrepSpec) -> Result<Vec<GateOp>> {
    let target = prepare_state(spec)?;
    let factors = factor_product_state(&target)?;
    let gates: Vec<GateOp> = factors
        .iter()
        .enumerate()
        .filter(|(_, v)| v[1].norm() > 1e-15)
        .map(|(k, v)| u3_for(k, *v))
        .collect();
    let produced = apply_gates(&QuantumState::zero(target.n), &gates)?;
    let err = produced.distance_up_to_phase(&target);
    debug_assert!(err < NORM_TOL, "prep synthesis self-check failed: {err}");
    if err > NORM_TOL {
        return Err(Error::NotProductState);
    }
    Ok(gates)
}
