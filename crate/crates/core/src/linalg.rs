//! Small dense exact linear algebra.

use num_traits::Zero;

use crate::rational::Rational;

/// Unique solution of the square system `a x = b`, or `None` when `a` is
/// singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "system must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Rational::from_integer(1.into()) / &m[col][col];
        for k in col..=n {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let d = &f * &m[col][k];
                    m[r][k] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Row rank.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, p);
        for k in r + 1..m.len() {
            if !m[k][c].is_zero() {
                let f = &m[k][c] / &m[r][c];
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[k][j] -= d;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn solves_and_detects_singular() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(solve(&a, &[int(3), int(5)]).unwrap(), vec![frac(4, 5), frac(7, 5)]);
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve(&s, &[int(1), int(2)]).is_none());
        assert_eq!(rank(&s), 1);
        assert_eq!(rank(&a), 2);
    }
}
