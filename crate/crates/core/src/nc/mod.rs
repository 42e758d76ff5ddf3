//! Noncontextual hidden-variable models for an `n`-cycle of ±1 observables.
//!
//! A model is a probability vector over the `2^n` deterministic assignments.
//! Its cyclic marginals always satisfy `M <= 0`; [`lp_feasibility`] decides the
//! converse question of whether given pair marginals come from any such model.

pub mod simplex;

use crate::distribution::{eigen_distribution, OutcomeDistribution, OutcomeLabel};
use crate::entropy::{evaluate_m_cycle, shannon_entropy};
use crate::error::{Error, Result};
use rand::Rng;
use rand_distr::{Distribution, Gamma};
use serde::Serialize;
use simplex::Tableau;

pub const MAX_OBSERVABLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeterministicAssignment {
    /// `values[i]` is the value of `X(i+1)`.
    pub values: Vec<i8>,
}

impl DeterministicAssignment {
    /// Assignment number `index` in counting order; `X1` is the most
    /// significant digit and a 0 digit means +1.
    pub fn from_index(index: usize, n: usize) -> Self {
        Self {
            values: (0..n)
                .map(|k| if (index >> (n - 1 - k)) & 1 == 0 { 1 } else { -1 })
                .collect(),
        }
    }
}

pub fn enumerate_assignments(n: usize) -> Result<Vec<DeterministicAssignment>> {
    if n == 0 || n > MAX_OBSERVABLES {
        return Err(Error::TooManyObservables(n));
    }
    Ok((0..(1usize << n))
        .map(|i| DeterministicAssignment::from_index(i, n))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NcModel {
    n: usize,
    weights: Vec<f64>,
}

impl NcModel {
    pub fn new(n: usize, weights: Vec<f64>) -> Result<Self> {
        if n == 0 || n > MAX_OBSERVABLES {
            return Err(Error::TooManyObservables(n));
        }
        if weights.len() != 1 << n {
            return Err(Error::LengthMismatch(1 << n, weights.len()));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution("negative model weight".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!("model weights sum to {total}")));
        }
        Ok(Self { n, weights })
    }

    pub fn point_mass(n: usize, index: usize) -> Self {
        let mut weights = vec![0.0; 1 << n];
        weights[index] = 1.0;
        Self { n, weights }
    }

    pub fn uniform(n: usize) -> Self {
        let k = 1usize << n;
        Self {
            n,
            weights: vec![1.0 / k as f64; k],
        }
    }

    /// Symmetric Dirichlet(`concentration`) weights. Small concentrations
    /// push mass onto faces of the simplex.
    pub fn random_dirichlet<R: Rng + ?Sized>(n: usize, concentration: f64, rng: &mut R) -> Self {
        let gamma = Gamma::new(concentration, 1.0).expect("positive concentration");
        let k = 1usize << n;
        loop {
            let raw: Vec<f64> = (0..k).map(|_| gamma.sample(rng)).collect();
            let total: f64 = raw.iter().sum();
            if total > 0.0 && total.is_finite() {
                return Self {
                    n,
                    weights: raw.into_iter().map(|w| w / total).collect(),
                };
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelMarginals {
    /// Cyclic pairs `(X1,X2), ..., (Xn,X1)`.
    pub pairs: Vec<OutcomeDistribution>,
    /// `X1..Xn`.
    pub singles: Vec<OutcomeDistribution>,
}

fn bit(index: usize, k: usize, n: usize) -> usize {
    (index >> (n - 1 - k)) & 1
}

pub fn model_marginals(model: &NcModel) -> ModelMarginals {
    let n = model.n;
    let mut pairs = vec![vec![0.0; 4]; n];
    let mut singles = vec![vec![0.0; 2]; n];
    for (a, &w) in model.weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        for i in 0..n {
            let j = (i + 1) % n;
            pairs[i][2 * bit(a, i, n) + bit(a, j, n)] += w;
            singles[i][bit(a, i, n)] += w;
        }
    }
    ModelMarginals {
        pairs: pairs.into_iter().map(eigen_distribution).collect(),
        singles: singles.into_iter().map(eigen_distribution).collect(),
    }
}

pub fn m_of_model(model: &NcModel) -> Result<f64> {
    let marg = model_marginals(model);
    let n = model.n;
    let pairs = marg
        .pairs
        .iter()
        .map(shannon_entropy)
        .collect::<Result<Vec<_>>>()?;
    let singles = marg.singles[1..n - 1]
        .iter()
        .map(shannon_entropy)
        .collect::<Result<Vec<_>>>()?;
    evaluate_m_cycle(&pairs, &singles, n)
}

/// `M` of a cyclic pair set. The interior single `H(Xi)` is read from the
/// pair `(Xi, Xi+1)`, where `Xi` is the first component.
pub fn pair_set_m(pairs: &[OutcomeDistribution]) -> Result<f64> {
    let n = pairs.len();
    let h_pairs = pairs.iter().map(shannon_entropy).collect::<Result<Vec<_>>>()?;
    let h_singles = (1..n.saturating_sub(1))
        .map(|i| shannon_entropy(&pairs[i].eigen_marginal(0)?))
        .collect::<Result<Vec<_>>>()?;
    evaluate_m_cycle(&h_pairs, &h_singles, n)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeasibilityResult {
    pub feasible: bool,
    pub witness: Option<NcModel>,
    /// Largest `|model marginal - input|` over all pair cells for the best
    /// model found (normalized LP solution).
    pub max_constraint_violation: f64,
    /// Optimal total violation of the phase-one LP.
    pub total_violation: f64,
}

fn pair_cell(p: &OutcomeDistribution, bin: usize) -> Result<f64> {
    let label = OutcomeLabel::eigen_from_index(bin, 2);
    p.prob_of(&label).ok_or(Error::UnfactorableLabels)
}

/// Phase-one LP over assignment weights `w >= 0` with
///
/// ```text
///   sum_a w_a                                 + r       = 1
///   sum_{a consistent with cell} w_a + s+ - s-          = p(cell)   (4n rows)
/// ```
///
/// minimizing `r + sum(s+ + s-)`. Feasible iff the optimum is at most
/// `tolerance`.
pub fn lp_feasibility(pairs: &[OutcomeDistribution], n: usize, tolerance: f64) -> Result<FeasibilityResult> {
    if pairs.len() != n {
        return Err(Error::Arity(format!("expected {n} pair distributions, got {}", pairs.len())));
    }
    if !(2..=MAX_OBSERVABLES).contains(&n) {
        return Err(Error::TooManyObservables(n));
    }
    let k = 1usize << n;
    let cells = 4 * n;
    let m = cells + 1;
    let cols = k + 2 * cells + 1;
    let mut a = vec![vec![0.0; cols]; m];
    let mut b = vec![0.0; m];
    let mut basis = vec![0; m];
    let mut target = vec![0.0; cells];
    for i in 0..n {
        for bin in 0..4 {
            target[4 * i + bin] = pair_cell(&pairs[i], bin)?;
        }
    }
    #[allow(clippy::needless_range_loop)]
    for assign in 0..k {
        for i in 0..n {
            let j = (i + 1) % n;
            let bin = 2 * bit(assign, i, n) + bit(assign, j, n);
            a[4 * i + bin][assign] = 1.0;
        }
    }
    a[cells][..k].iter_mut().for_each(|v| *v = 1.0);
    for r in 0..cells {
        let plus = k + 2 * r;
        a[r][plus] = 1.0;
        a[r][plus + 1] = -1.0;
        b[r] = target[r].max(0.0);
        basis[r] = plus;
    }
    a[cells][cols - 1] = 1.0;
    b[cells] = 1.0;
    basis[cells] = cols - 1;
    let mut cost = vec![1.0; cols];
    cost[..k].iter_mut().for_each(|c| *c = 0.0);

    let sol = Tableau::new(a, b, cost, basis).solve();
    let raw = &sol.x[..k];
    let mass: f64 = raw.iter().sum();
    let weights: Vec<f64> = if mass > 0.0 {
        raw.iter().map(|w| w / mass).collect()
    } else {
        vec![1.0 / k as f64; k]
    };
    let model = NcModel { n, weights };
    let marg = model_marginals(&model);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for bin in 0..4 {
            worst = worst.max((marg.pairs[i].probs()[bin] - target[4 * i + bin]).abs());
        }
    }
    let feasible = sol.objective <= tolerance;
    Ok(FeasibilityResult {
        feasible,
        witness: feasible.then_some(model),
        max_constraint_violation: worst,
        total_violation: sol.objective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn assignment_examples() {
        let one = enumerate_assignments(1).unwrap();
        assert_eq!(one[0].values, vec![1]);
        assert_eq!(one[1].values, vec![-1]);
        assert_eq!(enumerate_assignments(5).unwrap().len(), 32);
        let two: Vec<Vec<i8>> = enumerate_assignments(2).unwrap().into_iter().map(|a| a.values).collect();
        assert_eq!(two, vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]);
        assert!(matches!(enumerate_assignments(21), Err(Error::TooManyObservables(21))));
    }

    #[test]
    fn marginal_examples() {
        let marg = model_marginals(&NcModel::point_mass(5, 13));
        for d in marg.pairs.iter().chain(&marg.singles) {
            assert!(d.probs().iter().all(|&p| p == 0.0 || p == 1.0));
        }
        let marg = model_marginals(&NcModel::uniform(5));
        assert!(marg.pairs.iter().all(|d| d.probs().iter().all(|&p| (p - 0.25).abs() < 1e-15)));
        assert!(marg.singles.iter().all(|d| d.probs().iter().all(|&p| (p - 0.5).abs() < 1e-15)));
        let mut w = vec![0.0; 32];
        w[0] = 0.5;
        w[31] = 0.5;
        let marg = model_marginals(&NcModel::new(5, w).unwrap());
        for d in &marg.pairs {
            assert_eq!(d.probs(), &[0.5, 0.0, 0.0, 0.5]);
        }
    }

    #[test]
    fn m_of_model_examples() {
        for i in 0..32 {
            assert_eq!(m_of_model(&NcModel::point_mass(5, i)).unwrap(), 0.0);
        }
        // closing pair 2 bits, four chain pairs 2 bits each, three singles 1 bit
        assert!((m_of_model(&NcModel::uniform(5)).unwrap() + 3.0).abs() < 1e-12);
    }

    #[test]
    fn model_validation() {
        assert!(NcModel::new(2, vec![0.5, 0.5]).is_err());
        assert!(NcModel::new(1, vec![0.7, 0.7]).is_err());
        assert!(NcModel::new(1, vec![1.2, -0.2]).is_err());
    }

    #[test]
    fn lp_accepts_model_marginals() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let model = NcModel::random_dirichlet(5, 0.5, &mut rng);
            let res = lp_feasibility(&model_marginals(&model).pairs, 5, 1e-9).unwrap();
            assert!(res.feasible);
            assert!(res.max_constraint_violation < 1e-9);
        }
    }

    #[test]
    fn lp_rejects_contextual_box() {
        // chain perfectly correlated, closing pair perfectly anticorrelated
        let corr = eigen_distribution(vec![0.5, 0.0, 0.0, 0.5]);
        let anti = eigen_distribution(vec![0.0, 0.5, 0.5, 0.0]);
        let mut pairs = vec![corr; 4];
        pairs.push(anti);
        let res = lp_feasibility(&pairs, 5, 1e-9).unwrap();
        assert!(!res.feasible);
        assert!(res.witness.is_none());
        assert!(res.max_constraint_violation > 0.1);
        // entropically silent: M = 1 - 4 + 3 = 0
        assert!(pair_set_m(&pairs).unwrap().abs() < 1e-12);
    }

    #[test]
    fn lp_rejects_inconsistent_singles() {
        let a = eigen_distribution(vec![1.0, 0.0, 0.0, 0.0]);
        let b = eigen_distribution(vec![0.0, 0.0, 0.0, 1.0]);
        let res = lp_feasibility(&[a.clone(), b, a], 3, 1e-9).unwrap();
        assert!(!res.feasible);
    }

    #[test]
    fn lp_arity_checked() {
        let a = eigen_distribution(vec![0.25; 4]);
        assert!(matches!(lp_feasibility(&[a], 3, 1e-9), Err(Error::Arity(_))));
    }
}
