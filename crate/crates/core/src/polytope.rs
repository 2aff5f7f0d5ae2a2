//! Vertex enumeration for small bounded polyhedra
//! `{x : eq_k . x = e_k, ineq_k . x <= c_k}` by sweeping every choice of
//! tight inequality set. Exponential in general, cheap at the sizes here
//! (tens of constraints).

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::linalg::dot;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: Vec<Rational>,
    pub bound: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vec<Rational>, bound: Rational) -> HalfSpace {
        HalfSpace { normal, bound }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        dot(&self.normal, x) <= self.bound
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        dot(&self.normal, x) == self.bound
    }
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else { return };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Rows kept in insertion order; row `k` is zero at the pivots of rows
/// `0..k`, so new rows reduce against them in sequence.
struct Echelon {
    rows: Vec<(Vec<Rational>, Rational, usize)>,
}

impl Echelon {
    /// Reduced copy of `(a, b)` with its pivot, or `None` if dependent.
    fn reduce(&self, a: &[Rational], b: &Rational) -> Option<(Vec<Rational>, Rational, usize)> {
        let mut a = a.to_vec();
        let mut b = b.clone();
        for (row, rhs, p) in &self.rows {
            if !a[*p].is_zero() {
                let f = &a[*p] / &row[*p];
                for (x, y) in a.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
                b -= &f * rhs;
            }
        }
        let p = a.iter().position(|x| !x.is_zero())?;
        Some((a, b, p))
    }

    fn solution(&self, dim: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); dim];
        for (row, rhs, p) in self.rows.iter().rev() {
            let mut acc = rhs.clone();
            for (c, v) in row.iter().enumerate() {
                if c != *p && !v.is_zero() {
                    acc -= v * &x[c];
                }
            }
            x[*p] = acc / &row[*p];
        }
        x
    }
}

/// All vertices of the polyhedron, sorted and without duplicates. The
/// equalities must be linearly independent; the polyhedron is assumed
/// pointed (true for every polytope built in this crate).
pub fn vertices(dim: usize, equalities: &[HalfSpace], inequalities: &[HalfSpace]) -> Vec<Vec<Rational>> {
    let mut basis = Echelon { rows: Vec::with_capacity(dim) };
    for h in equalities {
        let row = basis.reduce(&h.normal, &h.bound).expect("equalities must be independent");
        basis.rows.push(row);
    }
    assert!(basis.rows.len() <= dim, "too many equalities");
    let mut found = BTreeSet::new();
    fn walk(
        dim: usize,
        start: usize,
        basis: &mut Echelon,
        ineq: &[HalfSpace],
        found: &mut BTreeSet<Vec<Rational>>,
    ) {
        if basis.rows.len() == dim {
            let x = basis.solution(dim);
            if ineq.iter().all(|h| h.contains(&x)) {
                found.insert(x);
            }
            return;
        }
        let missing = dim - basis.rows.len();
        for k in start..ineq.len() {
            if ineq.len() - k < missing {
                break;
            }
            if let Some(row) = basis.reduce(&ineq[k].normal, &ineq[k].bound) {
                basis.rows.push(row);
                walk(dim, k + 1, basis, ineq, found);
                basis.rows.pop();
            }
        }
    }
    walk(dim, 0, &mut basis, inequalities, &mut found);
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn subsets_are_lexicographic() {
        let mut all = Vec::new();
        for_each_subset(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut empty = 0;
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            empty += 1
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn unit_square_with_cut() {
        // 0 <= x, y <= 1 and x + y <= 3/2
        let h = |a: i64, b: i64, c: Rational| HalfSpace::new(vec![int(a), int(b)], c);
        let ineq = vec![
            h(-1, 0, int(0)),
            h(0, -1, int(0)),
            h(1, 0, int(1)),
            h(0, 1, int(1)),
            h(1, 1, frac(3, 2)),
        ];
        let v = vertices(2, &[], &ineq);
        assert_eq!(v.len(), 5);
        assert!(v.contains(&vec![int(1), frac(1, 2)]));
        assert!(!v.contains(&vec![int(1), int(1)]));
    }
}
