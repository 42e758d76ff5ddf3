//! Dense tableau simplex for `min c.x  s.t.  A x = b, x >= 0` with `b >= 0`
//! and a caller-supplied starting basis of identity columns. Entering and
//! leaving variables follow Bland's rule, so degenerate problems terminate.

const PIVOT_EPS: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct SimplexSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub pivots: usize,
}

pub struct Tableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    cost: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    /// `basis[r]` must name a column equal to the `r`-th unit vector.
    pub fn new(a: Vec<Vec<f64>>, b: Vec<f64>, cost: Vec<f64>, basis: Vec<usize>) -> Self {
        assert_eq!(a.len(), b.len());
        assert_eq!(a.len(), basis.len());
        assert!(b.iter().all(|&v| v >= 0.0), "rhs must be nonnegative");
        for (r, &col) in basis.iter().enumerate() {
            for (i, row) in a.iter().enumerate() {
                debug_assert_eq!(row[col], if i == r { 1.0 } else { 0.0 });
            }
        }
        Self {
            rows: a,
            rhs: b,
            cost,
            basis,
        }
    }

    fn reduced_costs(&self) -> Vec<f64> {
        let mut reduced = self.cost.clone();
        for (r, &bcol) in self.basis.iter().enumerate() {
            let cb = self.cost[bcol];
            if cb != 0.0 {
                for (j, v) in self.rows[r].iter().enumerate() {
                    reduced[j] -= cb * v;
                }
            }
        }
        reduced
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col];
        self.rows[row].iter_mut().for_each(|v| *v /= p);
        self.rhs[row] /= p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row];
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let f = self.rows[r][col];
            if f.abs() > 0.0 {
                for (v, pv) in self.rows[r].iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                self.rhs[r] = (self.rhs[r] - f * pivot_rhs).max(0.0);
            }
        }
        self.basis[row] = col;
    }

    pub fn solve(mut self) -> SimplexSolution {
        let mut pivots = 0;
        loop {
            let reduced = self.reduced_costs();
            let Some(enter) = (0..reduced.len()).find(|&j| reduced[j] < -PIVOT_EPS) else {
                break;
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][enter];
                if a > PIVOT_EPS {
                    let ratio = self.rhs[r] / a;
                    leave = match leave {
                        None => Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio < lratio - PIVOT_EPS
                                || (ratio <= lratio + PIVOT_EPS && self.basis[r] < self.basis[lr])
                            {
                                Some((r, ratio))
                            } else {
                                Some((lr, lratio))
                            }
                        }
                    };
                }
            }
            // unbounded cannot happen for the nonnegative objectives we build
            let Some((row, _)) = leave else { break };
            self.pivot(row, enter);
            pivots += 1;
        }
        let mut x = vec![0.0; self.cost.len()];
        for (r, &col) in self.basis.iter().enumerate() {
            x[col] = self.rhs[r];
        }
        let objective = x.iter().zip(&self.cost).map(|(a, b)| a * b).sum();
        SimplexSolution { x, objective, pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_phase_one() {
        // rows: x0 + x1 + a0 = 1 ; x0 + a1 = 0.25 ; minimize a0 + a1
        let a = vec![vec![1.0, 1.0, 1.0, 0.0], vec![1.0, 0.0, 0.0, 1.0]];
        let sol = Tableau::new(a, vec![1.0, 0.25], vec![0.0, 0.0, 1.0, 1.0], vec![2, 3]).solve();
        assert!(sol.objective.abs() < 1e-12);
        assert!((sol.x[0] - 0.25).abs() < 1e-12);
        assert!((sol.x[1] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn infeasible_system_has_positive_optimum() {
        // x0 + a0 = 1 ; x0 + a1 = 0 -> best total violation 1
        let a = vec![vec![1.0, 1.0, 0.0], vec![1.0, 0.0, 1.0]];
        let sol = Tableau::new(a, vec![1.0, 0.0], vec![0.0, 1.0, 1.0], vec![1, 2]).solve();
        assert!((sol.objective - 1.0).abs() < 1e-12);
    }
}
