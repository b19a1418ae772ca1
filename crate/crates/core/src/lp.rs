//! Dense exact-rational simplex method.
//!
//! Solves `max c·y` subject to `A y ≤ b`, `y ≥ 0` with `b ≥ 0`, so the slack
//! basis is feasible from the start. Bland's rule guarantees termination;
//! all arithmetic is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub objective: BigRational,
    /// Optimal `y`.
    pub primal: Vec<BigRational>,
    /// Optimal multipliers of the rows of `A`: a solution of the dual
    /// `min b·x` subject to `Aᵀ x ≥ c`, `x ≥ 0`.
    pub dual: Vec<BigRational>,
    pub pivots: usize,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn maximize(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> Result<LpSolution> {
    let rows = a.len();
    let cols = c.len();
    if b.len() != rows {
        return Err(Error::DimensionMismatch { expected: rows, found: b.len() });
    }
    if let Some(row) = a.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
    }
    if b.iter().any(|v| v.is_negative()) {
        return Err(Error::Invalid("right-hand side must be nonnegative".into()));
    }

    let width = cols + rows;
    let mut tableau: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = row.clone();
            t.extend((0..rows).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            t
        })
        .collect();
    let mut rhs: Vec<BigRational> = b.to_vec();
    let mut basis: Vec<usize> = (cols..width).collect();
    let mut reduced: Vec<BigRational> = c.iter().cloned().chain((0..rows).map(|_| BigRational::zero())).collect();
    let mut objective = BigRational::zero();
    let mut pivots = 0;

    // Bland: lowest-index improving column, lowest-index basic variable on ties.
    while let Some(enter) = reduced.iter().position(|r| r.is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            let coef = &tableau[i][enter];
            if !coef.is_positive() {
                continue;
            }
            let ratio = &rhs[i] / coef;
            let better = match &leave {
                None => true,
                Some((j, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*j]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::Invalid("linear program is unbounded".into()));
        };

        let pivot = tableau[row][enter].clone();
        for v in tableau[row].iter_mut() {
            *v /= &pivot;
        }
        rhs[row] /= &pivot;
        let pivot_row = tableau[row].clone();
        let pivot_rhs = rhs[row].clone();
        for i in 0..rows {
            if i == row || tableau[i][enter].is_zero() {
                continue;
            }
            let factor = tableau[i][enter].clone();
            for (v, p) in tableau[i].iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = reduced[enter].clone();
        for (v, p) in reduced.iter_mut().zip(&pivot_row) {
            *v -= &factor * p;
        }
        objective += &factor * &pivot_rhs;
        basis[row] = enter;
        pivots += 1;
    }

    let mut primal = vec![BigRational::zero(); cols];
    for (i, &var) in basis.iter().enumerate() {
        if var < cols {
            primal[var] = rhs[i].clone();
        }
    }
    let dual = reduced[cols..].iter().map(|r| -r.clone()).collect();
    Ok(LpSolution { objective, primal, dual, pivots })
}
