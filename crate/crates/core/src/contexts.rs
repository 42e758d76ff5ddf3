//! Measurement contexts and their exact outcome statistics.
//!
//! Two readout conventions are supported. *Coarse* outcomes are the
//! eigenvalue tuples of the observables in the context. *Fine* outcomes are
//! the full per-qubit readout record in a basis that diagonalizes every
//! observable of the context at once; for two-outcome observables on two
//! qubits the fine record has four outcomes, so its entropy can exceed one
//! bit.
//!
//! A fine basis is either *local* (one Pauli axis per qubit, read out after a
//! single-qubit rotation into Z) or, for a commuting two-qubit pair with no
//! local common basis, the joint eigenbasis of the pair. In the second case
//! every joint eigenspace is one-dimensional and the record bit `k` is 0 when
//! observable `k` reads +1.

use crate::distribution::{eigen_distribution, OutcomeDistribution, OutcomeLabel};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::pauli::{PauliLetter, PauliString};
use crate::qasm;
use crate::statevec::{apply_gates, projection_probability, GateOp, QuantumState};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Coarse,
    #[default]
    Fine,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Coarse => "coarse",
            Convention::Fine => "fine",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "coarse" => Ok(Convention::Coarse),
            "fine" => Ok(Convention::Fine),
            other => Err(Error::Config(format!("unknown convention {other:?}"))),
        }
    }
}

/// How the fine-grained record of a context is read out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FineBasis {
    /// Axis measured on each qubit (never `I`).
    Local(Vec<PauliLetter>),
    /// Joint eigenbasis of a commuting two-qubit pair.
    EigenPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MeasurementContext {
    observables: Vec<PauliString>,
    convention: Convention,
}

impl MeasurementContext {
    pub fn new(observables: Vec<PauliString>, convention: Convention) -> Result<Self> {
        if observables.is_empty() || observables.len() > 2 {
            return Err(Error::InvalidContext(format!(
                "expected 1 or 2 observables, got {}",
                observables.len()
            )));
        }
        let n = observables[0].num_qubits();
        for o in &observables {
            if o.num_qubits() != n {
                return Err(Error::LengthMismatch(n, o.num_qubits()));
            }
            if o.is_identity() {
                return Err(Error::DegenerateObservable(o.to_string()));
            }
        }
        if observables.len() == 2 && !observables[0].commutes(&observables[1])? {
            return Err(Error::NonCommuting(
                observables[0].to_string(),
                observables[1].to_string(),
            ));
        }
        Ok(Self {
            observables,
            convention,
        })
    }

    pub fn single(p: PauliString, convention: Convention) -> Result<Self> {
        Self::new(vec![p], convention)
    }

    pub fn pair(a: PauliString, b: PauliString, convention: Convention) -> Result<Self> {
        Self::new(vec![a, b], convention)
    }

    pub fn observables(&self) -> &[PauliString] {
        &self.observables
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn with_convention(&self, convention: Convention) -> Self {
        Self {
            observables: self.observables.clone(),
            convention,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.observables[0].num_qubits()
    }

    pub fn arity(&self) -> usize {
        self.observables.len()
    }

    pub fn texts(&self) -> Vec<String> {
        self.observables.iter().map(|o| o.to_string()).collect()
    }

    /// Per-qubit measurement axis when one exists. An `I` letter inherits the
    /// partner observable's letter on that qubit, or Z when both are `I`.
    pub fn local_axes(&self) -> Option<Vec<PauliLetter>> {
        let n = self.num_qubits();
        let mut axes = Vec::with_capacity(n);
        for k in 0..n {
            let mut axis = PauliLetter::I;
            for o in &self.observables {
                let l = o.letters()[k];
                if l == PauliLetter::I {
                    continue;
                }
                if axis != PauliLetter::I && axis != l {
                    return None;
                }
                axis = l;
            }
            axes.push(if axis == PauliLetter::I { PauliLetter::Z } else { axis });
        }
        Some(axes)
    }

    pub fn fine_basis(&self) -> Result<FineBasis> {
        if let Some(axes) = self.local_axes() {
            return Ok(FineBasis::Local(axes));
        }
        // Two commuting, non-local Paulis on two qubits generate a maximal
        // stabilizer group, so their joint eigenspaces are rays.
        if self.arity() == 2 && self.num_qubits() == 2 {
            return Ok(FineBasis::EigenPair);
        }
        Err(Error::FineBasisUnavailable(self.to_string()))
    }

    /// Human-readable record of which axis each identity letter was read in.
    pub fn identity_axis_notes(&self) -> Vec<String> {
        let Some(axes) = self.local_axes() else {
            return Vec::new();
        };
        let mut notes = Vec::new();
        for (k, axis) in axes.iter().enumerate() {
            if self.observables.iter().any(|o| o.letters()[k] == PauliLetter::I) {
                let inherited = self.observables.iter().any(|o| o.letters()[k] != PauliLetter::I);
                notes.push(format!(
                    "context {self}: qubit {k} read in {} basis ({})",
                    axis.as_char(),
                    if inherited { "inherited from partner" } else { "identity default" }
                ));
            }
        }
        notes
    }

    /// Eigenvalue of observable `which` on fine record `index`.
    pub fn eigenvalue_on_record(&self, which: usize, index: usize) -> Result<i8> {
        match self.fine_basis()? {
            FineBasis::Local(_) => Ok(self.observables[which].parity_sign(index)),
            FineBasis::EigenPair => {
                let bit = (index >> (self.arity() - 1 - which)) & 1;
                Ok(if bit == 0 { 1 } else { -1 })
            }
        }
    }
}

impl fmt::Display for MeasurementContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.texts().join(","))
    }
}

/// Gates rotating a qubit's `axis` eigenbasis onto the computational basis.
pub fn axis_rotation(qubit: usize, axis: PauliLetter) -> Vec<GateOp> {
    match axis {
        PauliLetter::X => vec![GateOp::H(qubit)],
        PauliLetter::Y => vec![GateOp::Sdg(qubit), GateOp::H(qubit)],
        PauliLetter::Z | PauliLetter::I => Vec::new(),
    }
}

pub fn joint_distribution_coarse(
    state: &QuantumState,
    context: &MeasurementContext,
) -> Result<OutcomeDistribution> {
    if context.num_qubits() != state.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: state.num_qubits(),
            got: context.num_qubits(),
        });
    }
    let projectors: Vec<(CMatrix, CMatrix)> = context
        .observables
        .iter()
        .map(|o| o.eigenprojectors())
        .collect::<Result<_>>()?;
    let arity = projectors.len();
    let mut probs = Vec::with_capacity(1 << arity);
    for outcome in 0..(1usize << arity) {
        let mut product: Option<CMatrix> = None;
        for (k, (plus, minus)) in projectors.iter().enumerate() {
            let p = if (outcome >> (arity - 1 - k)) & 1 == 0 { plus } else { minus };
            product = Some(match product {
                None => p.clone(),
                Some(acc) => &acc * p,
            });
        }
        probs.push(projection_probability(state, &product.expect("arity >= 1"))?);
    }
    Ok(eigen_distribution(normalize(probs)))
}

pub fn joint_distribution_fine(
    state: &QuantumState,
    context: &MeasurementContext,
) -> Result<OutcomeDistribution> {
    let n = context.num_qubits();
    if n != state.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: state.num_qubits(),
            got: n,
        });
    }
    match context.fine_basis()? {
        FineBasis::Local(axes) => {
            let gates: Vec<GateOp> = axes
                .iter()
                .enumerate()
                .flat_map(|(k, &a)| axis_rotation(k, a))
                .collect();
            let rotated = apply_gates(state, &gates)?;
            let labels = (0..rotated.dim()).map(|i| OutcomeLabel::record(i, n)).collect();
            Ok(OutcomeDistribution::from_parts(labels, normalize(rotated.probabilities())))
        }
        FineBasis::EigenPair => {
            let coarse = joint_distribution_coarse(state, context)?;
            let labels = (0..coarse.len()).map(|i| OutcomeLabel::record(i, 2)).collect();
            Ok(OutcomeDistribution::from_parts(labels, coarse.probs().to_vec()))
        }
    }
}

/// Dispatches on the context's convention.
pub fn joint_distribution(
    state: &QuantumState,
    context: &MeasurementContext,
) -> Result<OutcomeDistribution> {
    match context.convention {
        Convention::Coarse => joint_distribution_coarse(state, context),
        Convention::Fine => joint_distribution_fine(state, context),
    }
}

/// Bins a fine record distribution into eigenvalue tuples.
pub fn coarsen(
    fine: &OutcomeDistribution,
    context: &MeasurementContext,
) -> Result<OutcomeDistribution> {
    let basis = context.fine_basis()?;
    let bits = match basis {
        FineBasis::Local(_) => context.num_qubits(),
        FineBasis::EigenPair => context.arity(),
    };
    let arity = context.arity();
    let mut probs = vec![0.0; 1 << arity];
    for (label, p) in fine.iter() {
        let record = label
            .as_record()
            .filter(|r| r.len() == bits)
            .ok_or_else(|| Error::Arity(format!("label {label} is not a {bits}-bit record")))?;
        let index = usize::from_str_radix(record, 2)
            .map_err(|_| Error::Arity(format!("label {label} is not a bit string")))?;
        let mut bin = 0usize;
        for which in 0..arity {
            bin <<= 1;
            if context.eigenvalue_on_record(which, index)? < 0 {
                bin |= 1;
            }
        }
        probs[bin] += p;
    }
    Ok(eigen_distribution(probs))
}

/// Per-site single-qubit rotations taking `(from_a, from_b)` to `(Z, X)` up
/// to sign, searched over short words in H and S-dagger.
fn bell_pre_rotation(qubit: usize, from_a: PauliLetter, from_b: PauliLetter) -> Option<Vec<GateOp>> {
    let words: Vec<Vec<bool>> = (0..=3usize)
        .flat_map(|len| (0..(1usize << len)).map(move |bits| (0..len).map(|k| (bits >> k) & 1 == 1).collect()))
        .collect();
    let maps_to = |u: &CMatrix, from: PauliLetter, to: PauliLetter| {
        let conj = &(u * &from.matrix()) * &u.dagger();
        let target = to.matrix();
        (&conj - &target).max_abs() < 1e-12 || (&conj + &target).max_abs() < 1e-12
    };
    for word in words {
        let gates: Vec<GateOp> = word
            .iter()
            .map(|&is_h| if is_h { GateOp::H(qubit) } else { GateOp::Sdg(qubit) })
            .collect();
        let u = gates.iter().fold(CMatrix::identity(2), |acc, g| {
            &g.single_qubit_matrix().expect("single-qubit") * &acc
        });
        if maps_to(&u, from_a, PauliLetter::Z) && maps_to(&u, from_b, PauliLetter::X) {
            return Some(gates);
        }
    }
    None
}

/// Basis-change gates that diagonalize every observable of `context`: local
/// axis rotations, or for a two-qubit entangled pair a local Clifford layer
/// followed by the Bell-basis template (CNOT 0->1, then H on qubit 0).
pub fn measurement_basis_gates(context: &MeasurementContext) -> Result<Vec<GateOp>> {
    if let Some(axes) = context.local_axes() {
        return Ok(axes
            .iter()
            .enumerate()
            .flat_map(|(k, &a)| axis_rotation(k, a))
            .collect());
    }
    let unsupported = || Error::UnsupportedContext(context.to_string());
    if context.arity() != 2 || context.num_qubits() != 2 {
        return Err(unsupported());
    }
    let (a, b) = (&context.observables[0], &context.observables[1]);
    let mut gates = Vec::new();
    for k in 0..2 {
        gates.extend(bell_pre_rotation(k, a.letters()[k], b.letters()[k]).ok_or_else(unsupported)?);
    }
    gates.push(GateOp::Cnot {
        control: 0,
        target: 1,
    });
    gates.push(GateOp::H(0));
    Ok(gates)
}

pub fn export_measurement_circuit(context: &MeasurementContext, prep: &[GateOp]) -> Result<String> {
    let basis = measurement_basis_gates(context)?;
    Ok(qasm::emit(context.num_qubits(), prep, &basis))
}

fn normalize(mut probs: Vec<f64>) -> Vec<f64> {
    let total: f64 = probs.iter().sum();
    if total > 0.0 {
        probs.iter_mut().for_each(|p| *p /= total);
    }
    probs
}
