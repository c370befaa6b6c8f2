//! Phase-1 simplex over exact rationals for Newton-polyhedron membership.
//!
//! Decides whether a point `a` satisfies `Σ λ_i g_i ≤ a`, `Σ λ_i = 1`,
//! `λ ≥ 0` for generators `g_i`. The tableau carries the generator weights,
//! one slack per coordinate and a single artificial variable on the
//! convexity row. Bland's rule picks both the entering and the leaving
//! variable, so the method terminates without any tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ideal::ExponentVector;

pub(crate) enum Phase1 {
    /// Convex weights, one per generator.
    Feasible(Vec<BigRational>),
    /// Optimal dual of phase 1 restricted to the coordinate rows; it is
    /// non-negative and separates `a` from the polyhedron.
    Infeasible(Vec<BigRational>),
}

fn rat(v: &num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

struct Tableau {
    /// Constraint rows, each `ncols + 1` wide (last entry is the rhs).
    rows: Vec<Vec<BigRational>>,
    /// Reduced costs; last entry is minus the objective value.
    cost: Vec<BigRational>,
    /// Column index of the basic variable for each row.
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for x in self.rows[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            for (x, p) in self.cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
    }

    fn entering(&self) -> Option<usize> {
        (0..self.ncols).find(|&j| self.cost[j].is_negative())
    }

    fn leaving(&self, col: usize) -> Option<usize> {
        let rhs = self.ncols;
        let mut best: Option<(usize, BigRational)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[col];
            best = match best {
                None => Some((r, ratio)),
                Some((br, bratio)) => {
                    if ratio < bratio || (ratio == bratio && self.basis[r] < self.basis[br]) {
                        Some((r, ratio))
                    } else {
                        Some((br, bratio))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }
}

pub(crate) fn phase_one(gens: &[ExponentVector], point: &ExponentVector) -> Phase1 {
    let k = gens.len();
    let n = point.len();
    // Columns: weights 0..k, slacks k..k+n, artificial k+n.
    let ncols = k + n + 1;
    let art = k + n;
    let zero = BigRational::zero();
    let one = BigRational::one();

    let mut rows = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut row = vec![zero.clone(); ncols + 1];
        for (i, g) in gens.iter().enumerate() {
            row[i] = rat(g.get(j));
        }
        row[k + j] = one.clone();
        row[ncols] = rat(point.get(j));
        rows.push(row);
    }
    let mut conv = vec![zero.clone(); ncols + 1];
    for x in conv.iter_mut().take(k) {
        *x = one.clone();
    }
    conv[art] = one.clone();
    conv[ncols] = one.clone();
    rows.push(conv);

    // Minimise the artificial: reduced costs are c - (convexity row).
    let mut cost = vec![zero.clone(); ncols + 1];
    for x in cost.iter_mut().take(k) {
        *x = -one.clone();
    }
    cost[ncols] = -one.clone();

    let mut basis: Vec<usize> = (k..k + n).collect();
    basis.push(art);
    let mut tab = Tableau {
        rows,
        cost,
        basis,
        ncols,
    };

    while let Some(col) = tab.entering() {
        // Phase 1 is bounded below by zero, so a leaving row always exists.
        let row = tab
            .leaving(col)
            .expect("phase-1 objective is bounded below");
        tab.pivot(row, col);
    }

    let objective = -tab.cost[ncols].clone();
    if objective.is_zero() {
        let mut weights = vec![zero; k];
        for (r, &b) in tab.basis.iter().enumerate() {
            if b < k {
                weights[b] = tab.rows[r][ncols].clone();
            }
        }
        Phase1::Feasible(weights)
    } else {
        // Dual of slack row j is minus its reduced cost; the separating
        // functional is the negated dual, i.e. the reduced cost itself.
        let functional = (0..n)
            .map(|j| {
                let c = tab.cost[k + j].clone();
                if c.is_negative() {
                    BigRational::zero()
                } else {
                    c
                }
            })
            .collect();
        Phase1::Infeasible(functional)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn midpoint_of_two_generators() {
        let gens = [
            ExponentVector::from([0, 2, 2]),
            ExponentVector::from([2, 0, 2]),
            ExponentVector::from([2, 2, 0]),
        ];
        match phase_one(&gens, &ExponentVector::from([1, 1, 2])) {
            Phase1::Feasible(w) => assert_eq!(w, vec![r(1, 2), r(1, 2), r(0, 1)]),
            Phase1::Infeasible(_) => panic!("(1,1,2) lies in the polyhedron"),
        }
    }

    #[test]
    fn centre_point_is_separated() {
        let gens = [
            ExponentVector::from([0, 2, 2]),
            ExponentVector::from([2, 0, 2]),
            ExponentVector::from([2, 2, 0]),
        ];
        match phase_one(&gens, &ExponentVector::from([1, 1, 1])) {
            Phase1::Feasible(_) => panic!("(1,1,1) is outside"),
            Phase1::Infeasible(w) => {
                assert!(w.iter().all(|x| !x.is_negative()));
                assert!(w.iter().any(|x| !x.is_zero()));
            }
        }
    }

    #[test]
    fn degenerate_origin_point() {
        let gens = [ExponentVector::from([1, 0]), ExponentVector::from([0, 1])];
        assert!(matches!(
            phase_one(&gens, &ExponentVector::from([0, 0])),
            Phase1::Infeasible(_)
        ));
    }
}
