//! Exact simplex method for packing LPs `max c.x  s.t.  A x <= b, x >= 0`
//! with `b >= 0` (the slack basis is feasible), using Bland's rule so that
//! degenerate pivots cannot cycle.

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// Optimal primal point.
    pub primal: Vec<Rational>,
    /// Optimal dual prices, one per constraint row.
    pub dual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("right-hand side must be nonnegative")]
    InfeasibleStart,
    #[error("objective is unbounded")]
    Unbounded,
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> Result<LpSolution, LpError> {
    let rows = a.len();
    let vars = c.len();
    assert_eq!(b.len(), rows);
    if b.iter().any(|v| v < &Rational::zero()) {
        return Err(LpError::InfeasibleStart);
    }
    let width = vars + rows;
    // tableau rows: [coefficients | rhs]; objective row holds reduced costs.
    let mut t: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row = vec![Rational::zero(); width + 1];
            for (k, v) in a[r].iter().enumerate() {
                row[k] = v.clone();
            }
            row[vars + r] = Rational::one();
            row[width] = b[r].clone();
            row
        })
        .collect();
    let mut obj = vec![Rational::zero(); width + 1];
    for (k, v) in c.iter().enumerate() {
        obj[k] = -v.clone();
    }
    let mut basis: Vec<usize> = (vars..width).collect();

    loop {
        let Some(enter) = (0..width).find(|&k| obj[k] < Rational::zero()) else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if t[r][enter] > Rational::zero() {
                let ratio = &t[r][width] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pr, _) = leave.ok_or(LpError::Unbounded)?;
        let inv = Rational::one() / &t[pr][enter];
        for k in 0..=width {
            t[pr][k] = &t[pr][k] * &inv;
        }
        for r in 0..rows {
            if r != pr && !t[r][enter].is_zero() {
                let f = t[r][enter].clone();
                for k in 0..=width {
                    let d = &f * &t[pr][k];
                    t[r][k] -= d;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for k in 0..=width {
                let d = &f * &t[pr][k];
                obj[k] -= d;
            }
        }
        basis[pr] = enter;
    }

    let mut primal = vec![Rational::zero(); vars];
    for (r, &var) in basis.iter().enumerate() {
        if var < vars {
            primal[var] = t[r][width].clone();
        }
    }
    let dual = (0..rows).map(|r| obj[vars + r].clone()).collect();
    Ok(LpSolution { value: obj[width].clone(), primal, dual })
}
