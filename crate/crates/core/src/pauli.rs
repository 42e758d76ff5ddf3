//! Phase-free n-qubit Pauli strings.
//!
//! The first letter acts on the most significant qubit, i.e. the left factor
//! of the Kronecker product and the leftmost bit of an outcome label. `"XZ"`
//! is σ_X ⊗ σ_Z.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, ONE, ZERO};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn matrix(self) -> CMatrix {
        let i = Complex64::new(0.0, 1.0);
        match self {
            PauliLetter::I => CMatrix::identity(2),
            PauliLetter::X => CMatrix::from_rows(&[&[ZERO, ONE], &[ONE, ZERO]]),
            PauliLetter::Y => CMatrix::from_rows(&[&[ZERO, -i], &[i, ZERO]]),
            PauliLetter::Z => CMatrix::from_rows(&[&[ONE, ZERO], &[ZERO, -ONE]]),
        }
    }

    /// Single-site anticommutation: both non-identity and different.
    pub fn anticommutes_with(self, other: PauliLetter) -> bool {
        self != PauliLetter::I && other != PauliLetter::I && self != other
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

impl TryFrom<char> for PauliLetter {
    type Error = Error;
    fn try_from(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'I' => Ok(PauliLetter::I),
            'X' => Ok(PauliLetter::X),
            'Y' => Ok(PauliLetter::Y),
            'Z' => Ok(PauliLetter::Z),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PauliString {
    letters: Vec<PauliLetter>,
}

impl PauliString {
    pub fn new(letters: Vec<PauliLetter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyPauli);
        }
        Ok(Self { letters })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            letters: vec![PauliLetter::I; n.max(1)],
        }
    }

    pub fn letters(&self) -> &[PauliLetter] {
        &self.letters
    }

    pub fn num_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&l| l == PauliLetter::I)
    }

    /// Number of positions carrying a non-identity letter.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&l| l != PauliLetter::I).count()
    }

    /// Commutation by anticommuting-site parity.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::LengthMismatch(self.num_qubits(), other.num_qubits()));
        }
        let anti = self
            .letters
            .iter()
            .zip(&other.letters)
            .filter(|(a, b)| a.anticommutes_with(**b))
            .count();
        Ok(anti % 2 == 0)
    }

    /// Kronecker product of the single-qubit matrices, first letter leftmost.
    pub fn matrix(&self) -> CMatrix {
        let mut iter = self.letters.iter();
        let first = iter.next().expect("non-empty").matrix();
        iter.fold(first, |acc, l| acc.kron(&l.matrix()))
    }

    /// Spectral projectors `(P+, P-) = ((I + M)/2, (I - M)/2)`.
    pub fn eigenprojectors(&self) -> Result<(CMatrix, CMatrix)> {
        if self.is_identity() {
            return Err(Error::DegenerateObservable(self.to_string()));
        }
        let m = self.matrix();
        let id = CMatrix::identity(m.dim());
        let half = Complex64::new(0.5, 0.0);
        Ok(((&id + &m).scale(half), (&id - &m).scale(half)))
    }

    /// Eigenvalue (+1 or -1) of this string on a computational basis state,
    /// assuming every non-identity letter is Z. Used after basis rotation.
    pub fn parity_sign(&self, basis_index: usize) -> i8 {
        let n = self.num_qubits();
        let mut sign = 1i8;
        for (k, l) in self.letters.iter().enumerate() {
            if *l != PauliLetter::I && (basis_index >> (n - 1 - k)) & 1 == 1 {
                sign = -sign;
            }
        }
        sign
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(PauliLetter::try_from)
            .collect::<Result<Vec<_>>>()?;
        PauliString::new(letters)
    }
}

impl TryFrom<String> for PauliString {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PauliString> for String {
    fn from(p: PauliString) -> String {
        p.to_string()
    }
}

pub fn commutes(p: &PauliString, q: &PauliString) -> Result<bool> {
    p.commutes(q)
}

/// Commutation facts for a cyclically ordered observable list.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleReport {
    pub n_observables: usize,
    /// Entry `i` covers the pair `(i, i + 1 mod n)`.
    pub adjacent_commuting: Vec<bool>,
    /// Full pairwise table; adjacent entries are repeated here too.
    pub nonadjacent_commuting: Vec<Vec<bool>>,
}

impl CycleReport {
    pub fn is_valid_cycle(&self) -> bool {
        self.adjacent_commuting.iter().all(|&b| b)
    }

    /// Indices `(i, j)` of adjacent pairs that fail to commute.
    pub fn failing_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n_observables;
        self.adjacent_commuting
            .iter()
            .enumerate()
            .filter(|(_, &ok)| !ok)
            .map(|(i, _)| (i, (i + 1) % n))
            .collect()
    }
}

pub fn verify_cycle(observables: &[PauliString]) -> Result<CycleReport> {
    let n = observables.len();
    if n < 3 {
        return Err(Error::Arity(format!("a cycle needs at least 3 observables, got {n}")));
    }
    let width = observables[0].num_qubits();
    if let Some(bad) = observables.iter().find(|o| o.num_qubits() != width) {
        return Err(Error::LengthMismatch(width, bad.num_qubits()));
    }
    let mut table = vec![vec![true; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = observables[i].commutes(&observables[j])?;
        }
    }
    let adjacent = (0..n).map(|i| table[i][(i + 1) % n]).collect();
    Ok(CycleReport {
        n_observables: n,
        adjacent_commuting: adjacent,
        nonadjacent_commuting: table,
    })
}

fn parse_set(texts: &[&str]) -> Vec<PauliString> {
    texts.iter().map(|t| t.parse().expect("preset")).collect()
}

/// X1..X5 = ZZ, XX, XI, XZ, IZ.
pub fn table1_observables() -> Vec<PauliString> {
    parse_set(&["ZZ", "XX", "XI", "XZ", "IZ"])
}

/// X1..X5 = ZZ, YX, XZ, ZX, XY.
pub fn table2_observables() -> Vec<PauliString> {
    parse_set(&["ZZ", "YX", "XZ", "ZX", "XY"])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn diag_of(m: &CMatrix) -> Vec<f64> {
        m.diagonal().iter().map(|c| c.re).collect()
    }

    #[test]
    fn commutation_examples() {
        assert!(commutes(&p("ZZ"), &p("XX")).unwrap());
        assert!(!commutes(&p("ZZ"), &p("XI")).unwrap());
        assert!(commutes(&p("XX"), &p("XI")).unwrap());
    }

    #[test]
    fn commutation_length_mismatch() {
        assert!(matches!(
            commutes(&p("ZZ"), &p("Z")),
            Err(Error::LengthMismatch(2, 1))
        ));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(p("I").matrix(), CMatrix::identity(2));
        assert_eq!(diag_of(&p("Z").matrix()), vec![1.0, -1.0]);
        let zz = p("ZZ").matrix();
        assert_eq!(diag_of(&zz), vec![1.0, -1.0, -1.0, 1.0]);
        assert_eq!(zz.max_off_diagonal(), 0.0);
    }

    #[test]
    fn projector_examples() {
        let (pp, pm) = p("Z").eigenprojectors().unwrap();
        assert_eq!(diag_of(&pp), vec![1.0, 0.0]);
        assert_eq!(diag_of(&pm), vec![0.0, 1.0]);
        let (pp, _) = p("ZZ").eigenprojectors().unwrap();
        assert_eq!(diag_of(&pp), vec![1.0, 0.0, 0.0, 1.0]);
        let (pp, _) = p("XX").eigenprojectors().unwrap();
        assert!((pp.trace().re - 2.0).abs() < 1e-12);
        assert_eq!(pp.rank(1e-9), 2);
    }

    #[test]
    fn identity_has_no_projectors() {
        assert!(matches!(
            p("II").eigenprojectors(),
            Err(Error::DegenerateObservable(_))
        ));
    }

    #[test]
    fn preset_cycles_are_valid() {
        for set in [table1_observables(), table2_observables()] {
            let report = verify_cycle(&set).unwrap();
            assert_eq!(report.adjacent_commuting, vec![true; 5]);
        }
    }

    #[test]
    fn broken_cycle_is_reported() {
        let report = verify_cycle(&[p("ZZ"), p("XI"), p("IZ")]).unwrap();
        assert!(!report.adjacent_commuting[0]);
        assert_eq!(report.failing_pairs()[0], (0, 1));
        assert!(!report.is_valid_cycle());
    }

    #[test]
    fn text_round_trip_and_parse_errors() {
        assert_eq!(p("yx").to_string(), "YX");
        assert!(matches!("XQ".parse::<PauliString>(), Err(Error::InvalidLetter('Q'))));
        assert!(matches!("".parse::<PauliString>(), Err(Error::EmptyPauli)));
    }
}
