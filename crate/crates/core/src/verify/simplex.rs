//! An exact rational simplex solver and the cross-check built on it: at a
//! fixed numeric point (t, q) the optimal view distribution found by the
//! solver must reproduce the reference energy exactly. This path shares no
//! code with the symbolic certificates, so agreement is strong evidence
//! that the coefficient data and the dual reasoning are sound.

use num_traits::Zero;

use crate::algebra::{rational, Rational};
use crate::coeffs::{CoeffSet, Sense};
use crate::localview::Catalogue;

use super::reference::{k44_reference, k5_reference};
use super::{ensure_matching, VerifyError};

/// A linear program in equality form: minimise or maximise `objective . x`
/// subject to `rows x = rhs` and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LpInstance {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    objective: Vec<Rational>,
}

impl LpInstance {
    pub fn new(rows: Vec<Vec<Rational>>, rhs: Vec<Rational>, objective: Vec<Rational>) -> Self {
        assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
        for row in &rows {
            assert_eq!(row.len(), objective.len(), "ragged constraint matrix");
        }
        LpInstance {
            rows,
            rhs,
            objective,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpSense {
    Min,
    Max,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

/// Dense tableau with an explicit basis; all arithmetic is exact.
struct Tableau {
    /// m rows of n+1 entries, the last being the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced-cost row of n+1 entries; the last is minus the objective.
    cost: Vec<Rational>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for entry in self.rows[row].iter_mut() {
            *entry *= &inv;
        }
        let pivot_row = self.rows[row].clone();
        for (i, other) in self.rows.iter_mut().enumerate() {
            if i == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (entry, p) in other.iter_mut().zip(&pivot_row) {
                *entry -= &factor * p;
            }
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            for (entry, p) in self.cost.iter_mut().zip(&pivot_row) {
                *entry -= &factor * p;
            }
        }
        self.basis[row] = col;
    }

    /// Runs the simplex loop with Bland's rule on the active columns.
    /// Returns false if the objective is unbounded below.
    fn optimise(&mut self, active: &[bool]) -> bool {
        loop {
            let Some(col) =
                (0..active.len()).find(|&j| active[j] && self.cost[j] < Rational::zero())
            else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col] <= Rational::zero() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.rows[i][col];
                let better = match &leave {
                    None => true,
                    Some((best_i, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_i])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return false;
            };
            self.pivot(row, col);
        }
    }

    fn rhs(&self, i: usize) -> Rational {
        self.rows[i].last().unwrap().clone()
    }

    fn objective_value(&self) -> Rational {
        -self.cost.last().unwrap().clone()
    }
}

/// Solves an equality-form linear program by the two-phase simplex method
/// with Bland's anti-cycling rule, in exact rational arithmetic.
pub fn solve_lp(instance: &LpInstance, sense: LpSense) -> LpOutcome {
    let n = instance.num_vars();
    let m = instance.num_rows();

    // Phase 1 tableau: original columns, one artificial per row, rhs
    // normalised non-negative. The artificial basis starts feasible.
    let mut rows = Vec::with_capacity(m);
    for (i, row) in instance.rows.iter().enumerate() {
        let flip = instance.rhs[i] < Rational::zero();
        let mut full: Vec<Rational> = Vec::with_capacity(n + m + 1);
        for v in row {
            full.push(if flip { -v.clone() } else { v.clone() });
        }
        for j in 0..m {
            full.push(if j == i {
                rational(1, 1)
            } else {
                Rational::zero()
            });
        }
        full.push(if flip {
            -instance.rhs[i].clone()
        } else {
            instance.rhs[i].clone()
        });
        rows.push(full);
    }

    // Phase 1 reduced costs for minimising the sum of artificials: the
    // artificial columns cost 1 each, so subtract every constraint row.
    let mut cost = vec![Rational::zero(); n + m + 1];
    for row in &rows {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    for j in n..n + m {
        cost[j] += rational(1, 1);
    }

    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
        cost,
    };
    let mut active = vec![true; n + m];
    let finished = tab.optimise(&active);
    assert!(finished, "phase 1 is bounded below by zero");
    if !tab.objective_value().is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive leftover artificials out of the basis; a row that offers no
    // pivot is a redundant constraint and is dropped.
    for j in n..n + m {
        active[j] = false;
    }
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] < n {
            i += 1;
            continue;
        }
        match (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
            Some(col) => {
                tab.pivot(i, col);
                i += 1;
            }
            None => {
                tab.rows.remove(i);
                tab.basis.remove(i);
            }
        }
    }

    // Phase 2: rebuild the reduced-cost row for the real objective,
    // minimising (negate first when maximising).
    let mut cost = vec![Rational::zero(); n + m + 1];
    for j in 0..n {
        cost[j] = match sense {
            LpSense::Min => instance.objective[j].clone(),
            LpSense::Max => -instance.objective[j].clone(),
        };
    }
    for (i, &b) in tab.basis.iter().enumerate() {
        if cost[b].is_zero() {
            continue;
        }
        let factor = cost[b].clone();
        let row = tab.rows[i].clone();
        for (entry, p) in cost.iter_mut().zip(&row) {
            *entry -= &factor * p;
        }
    }
    tab.cost = cost;

    if !tab.optimise(&active) {
        return LpOutcome::Unbounded;
    }

    let mut solution = vec![Rational::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            solution[b] = tab.rhs(i);
        }
    }
    let value = match sense {
        LpSense::Min => tab.objective_value(),
        LpSense::Max => -tab.objective_value(),
    };
    LpOutcome::Optimal { value, solution }
}

/// The LP optimum at one numeric point next to the reference energy it
/// should equal.
#[derive(Debug, Clone)]
pub struct LpCrossCheck {
    pub optimum: Rational,
    pub reference: Rational,
    pub support_size: usize,
}

impl LpCrossCheck {
    pub fn matches(&self) -> bool {
        self.optimum == self.reference
    }
}

/// Builds the view-distribution linear program at a numeric point (t, q)
/// and solves it: minimisation cases must attain the K_{4,4} energy,
/// the maximisation case the K_5 energy.
pub fn crosscheck_lp(
    cat: &Catalogue,
    records: &CoeffSet,
    q: i64,
    t0: &Rational,
) -> Result<LpCrossCheck, VerifyError> {
    let case = records.case();
    ensure_matching(cat, records)?;
    if cat.d() != 4 {
        return Err(VerifyError::MismatchedInputs(format!(
            "the reference energies are for 4-regular graphs, got d={}",
            cat.d()
        )));
    }
    let Some(r_val) = case.r_for_q(q) else {
        return Err(VerifyError::MismatchedInputs(format!(
            "case {case} cannot represent q={q}"
        )));
    };
    let r0 = Rational::from(crate::algebra::BigInt::from(r_val));

    let n = records.len();
    let balance_count = records.records()[0].balance_count();
    let mut objective = Vec::with_capacity(n);
    let mut rows = vec![vec![Rational::zero(); n]; 1 + balance_count];
    for (j, rec) in records.records().iter().enumerate() {
        let z = rec.ztilde().eval(t0, &r0);
        if z.is_zero() {
            return Err(VerifyError::MismatchedInputs(format!(
                "partition function of view {j} vanishes at the sample point"
            )));
        }
        objective.push(rec.centre().eval(t0, &r0) / (&z * rational(2, 1)));
        rows[0][j] = rational(1, 1);
        for s in 0..balance_count {
            rows[1 + s][j] = rec.balance(s).eval(t0, &r0) / (&z * rational(4, 1));
        }
    }
    let mut rhs = vec![Rational::zero(); 1 + balance_count];
    rhs[0] = rational(1, 1);

    let instance = LpInstance::new(rows, rhs, objective);
    let (sense, reference) = match case.sense() {
        Sense::Min => (LpSense::Min, k44_reference(case).u_star()?.eval(t0, &r0)?),
        Sense::Max => (LpSense::Max, k5_reference(case).u_star()?.eval(t0, &r0)?),
    };

    match solve_lp(&instance, sense) {
        LpOutcome::Optimal { value, solution } => Ok(LpCrossCheck {
            optimum: value,
            reference,
            support_size: solution.iter().filter(|x| !x.is_zero()).count(),
        }),
        LpOutcome::Infeasible => Err(VerifyError::PrimalInfeasible(
            "the view distribution polytope came back empty".to_string(),
        )),
        LpOutcome::Unbounded => Err(VerifyError::PrimalInfeasible(
            "the view distribution program came back unbounded".to_string(),
        )),
    }
}
