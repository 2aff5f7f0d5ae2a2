//! Extreme Nash equilibria as completely labeled vertex pairs of the two
//! best-response polytopes
//!
//! ```text
//! P = { x >= 0 : B'^T x <= 1 }    Q = { y >= 0 : A' y <= 1 }
//! ```
//!
//! where `A'`, `B'` are the payoff matrices shifted to be positive. Label `i`
//! (row action) marks `x_i = 0` or `(A'y)_i = 1`, label `m + j` marks
//! `(B'^T x)_j = 1` or `y_j = 0`. Every tight set is swept, so degenerate
//! games (extra labels, equilibrium segments) are handled exactly.

use std::collections::BTreeSet;

use crate::game::{Game, MixedStrategy, Player, Profile};
use crate::polytope::{self, HalfSpace};
use crate::rational::{self, Rational};

/// A maximal Nash subset: every pairing of a listed player-1 vertex with a
/// listed player-2 vertex is an equilibrium, and no vertex can be added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashComponent {
    pub s1_vertices: Vec<MixedStrategy>,
    pub s2_vertices: Vec<MixedStrategy>,
}

impl NashComponent {
    pub fn is_singleton(&self) -> bool {
        self.s1_vertices.len() == 1 && self.s2_vertices.len() == 1
    }

    pub fn vertex_pairs(&self) -> impl Iterator<Item = Profile> + '_ {
        self.s1_vertices.iter().flat_map(move |a| {
            self.s2_vertices.iter().map(move |b| Profile { s1: a.clone(), s2: b.clone() })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumSet {
    pub extreme_equilibria: Vec<Profile>,
    pub components: Vec<NashComponent>,
    pub degenerate: bool,
}

impl EquilibriumSet {
    pub fn is_unique(&self) -> bool {
        self.extreme_equilibria.len() == 1
    }

    pub fn pure(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.extreme_equilibria.iter().filter_map(Profile::pure_cell)
    }
}

struct LabeledVertex {
    point: Vec<Rational>,
    labels: u128,
}

fn labeled_vertices(dim: usize, ineq: &[HalfSpace]) -> Vec<LabeledVertex> {
    polytope::vertices(dim, &[], ineq)
        .into_iter()
        .map(|point| {
            let labels = ineq
                .iter()
                .enumerate()
                .filter(|(_, h)| h.is_tight(&point))
                .fold(0u128, |acc, (k, _)| acc | (1u128 << k));
            LabeledVertex { point, labels }
        })
        .collect()
}

fn shifted(game: &Game, player: Player) -> Vec<Vec<Rational>> {
    let shift = rational::one() - game.min_payoff(player);
    (0..game.rows())
        .map(|i| (0..game.cols()).map(|j| game.payoff(player, i, j) + &shift).collect())
        .collect()
}

fn unit(len: usize, at: usize, value: i64) -> Vec<Rational> {
    let mut v = vec![rational::zero(); len];
    v[at] = rational::int(value);
    v
}

pub fn nash_equilibria(game: &Game) -> EquilibriumSet {
    let (m, n) = game.shape();
    assert!(m + n <= 128, "label sets are stored in a u128");
    let a = shifted(game, Player::One);
    let b = shifted(game, Player::Two);

    // P: labels 0..m from x_i >= 0, m..m+n from (B'^T x)_j <= 1.
    let mut p_ineq: Vec<HalfSpace> = (0..m).map(|i| HalfSpace::new(unit(m, i, -1), rational::zero())).collect();
    p_ineq.extend((0..n).map(|j| HalfSpace::new((0..m).map(|i| b[i][j].clone()).collect(), rational::one())));
    // Q: labels 0..m from (A' y)_i <= 1, m..m+n from y_j >= 0.
    let mut q_ineq: Vec<HalfSpace> = (0..m).map(|i| HalfSpace::new(a[i].clone(), rational::one())).collect();
    q_ineq.extend((0..n).map(|j| HalfSpace::new(unit(n, j, -1), rational::zero())));

    let p = labeled_vertices(m, &p_ineq);
    let q = labeled_vertices(n, &q_ineq);
    let mut degenerate = p.iter().any(|v| v.labels.count_ones() as usize > m)
        || q.iter().any(|v| v.labels.count_ones() as usize > n);

    let full: u128 = if m + n == 128 { u128::MAX } else { (1u128 << (m + n)) - 1 };
    let is_zero = |v: &LabeledVertex| v.point.iter().all(|c| c == &rational::zero());
    let p_nonzero: Vec<&LabeledVertex> = p.iter().filter(|v| !is_zero(v)).collect();
    let q_nonzero: Vec<&LabeledVertex> = q.iter().filter(|v| !is_zero(v)).collect();

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (xi, x) in p_nonzero.iter().enumerate() {
        for (yi, y) in q_nonzero.iter().enumerate() {
            if x.labels | y.labels == full {
                edges.push((xi, yi));
            }
        }
    }

    let s1: Vec<MixedStrategy> = p_nonzero
        .iter()
        .map(|v| MixedStrategy::normalized(Player::One, v.point.clone()).unwrap())
        .collect();
    let s2: Vec<MixedStrategy> = q_nonzero
        .iter()
        .map(|v| MixedStrategy::normalized(Player::Two, v.point.clone()).unwrap())
        .collect();

    let extreme_equilibria: Vec<Profile> =
        edges.iter().map(|&(x, y)| Profile { s1: s1[x].clone(), s2: s2[y].clone() }).collect();

    let components = maximal_bicliques(&edges)
        .into_iter()
        .map(|(xs, ys)| NashComponent {
            s1_vertices: xs.into_iter().map(|x| s1[x].clone()).collect(),
            s2_vertices: ys.into_iter().map(|y| s2[y].clone()).collect(),
        })
        .collect::<Vec<_>>();
    degenerate |= components.iter().any(|c| !c.is_singleton());

    EquilibriumSet { extreme_equilibria, components, degenerate }
}

/// Maximal complete bipartite subgraphs of the equilibrium graph. The
/// right-hand sides of maximal bicliques are exactly the nonempty
/// intersections of left-vertex neighborhoods, so those are closed under
/// pairwise intersection until nothing new appears.
fn maximal_bicliques(edges: &[(usize, usize)]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let lefts: BTreeSet<usize> = edges.iter().map(|e| e.0).collect();
    let neighbours = |x: usize| -> BTreeSet<usize> { edges.iter().filter(|e| e.0 == x).map(|e| e.1).collect() };
    let mut sides: BTreeSet<BTreeSet<usize>> = lefts.iter().map(|&x| neighbours(x)).collect();
    loop {
        let current: Vec<BTreeSet<usize>> = sides.iter().cloned().collect();
        let mut grew = false;
        for (k, a) in current.iter().enumerate() {
            for b in &current[k + 1..] {
                let meet: BTreeSet<usize> = a.intersection(b).copied().collect();
                if !meet.is_empty() && sides.insert(meet) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = sides
        .into_iter()
        .map(|ys| {
            let xs: Vec<usize> = lefts.iter().copied().filter(|&x| ys.is_subset(&neighbours(x))).collect();
            (xs, ys.into_iter().collect())
        })
        .collect();
    out.sort();
    out
}
