use serde::Serialize;

use crate::error::Result;
use crate::game::{Game, MixedStrategy, Player};
use crate::linalg::dot;
use crate::lp;
use crate::polytope::{self, HalfSpace};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceKind {
    Maximin,
    Minimax,
}

/// The optimal face of a maximin or minimax problem, given by its vertices.
///
/// For `Maximin`, `value` is the player's security level. For `Minimax`, it
/// is the cap enforced on the opponent, i.e. the opponent's security level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFace {
    pub player: Player,
    pub kind: FaceKind,
    pub value: Rational,
    pub vertices: Vec<MixedStrategy>,
}

impl SolutionFace {
    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn centroid(&self) -> MixedStrategy {
        MixedStrategy::centroid(&self.vertices).expect("faces are nonempty")
    }

    /// Exact membership test for an arbitrary strategy of `self.player`.
    pub fn contains(&self, game: &Game, s: &MixedStrategy) -> Result<bool> {
        Ok(match self.kind {
            FaceKind::Maximin => nash_guarantee(game, self.player, s)? == self.value,
            FaceKind::Minimax => {
                let replies = game.pure_payoffs_against(self.player.other(), s)?;
                rational::max_of(&replies).unwrap() == self.value
            }
        })
    }
}

/// Both optimal strategies and the value of the zero-sum game in which the
/// row side maximizes `matrix[a][b]` and the column side minimizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumSolution {
    pub value: Rational,
    pub maximizer: Vec<Rational>,
    pub minimizer: Vec<Rational>,
}

/// Solves `max_s min_b s . M[:, b]` through one packing LP on the shifted
/// matrix; the LP optimum and its dual give the two sides. Both guarantees
/// are re-evaluated on the original matrix and must meet at one value.
pub fn zero_sum_solution(matrix: &[Vec<Rational>]) -> ZeroSumSolution {
    let rows = matrix.len();
    let cols = matrix[0].len();
    let low = matrix.iter().flatten().min().unwrap().clone();
    let shift = rational::one() - low;
    let shifted: Vec<Vec<Rational>> =
        matrix.iter().map(|r| r.iter().map(|v| v + &shift).collect()).collect();
    let sol = lp::maximize(&vec![rational::one(); cols], &shifted, &vec![rational::one(); rows])
        .expect("packing LP on a positive matrix is feasible and bounded");
    let total = sol.value.clone();
    let minimizer: Vec<Rational> = sol.primal.iter().map(|w| w / &total).collect();
    let dual_total: Rational = sol.dual.iter().sum();
    let maximizer: Vec<Rational> = sol.dual.iter().map(|w| w / &dual_total).collect();
    let value = rational::one() / &total - &shift;

    let guaranteed = (0..cols)
        .map(|b| maximizer.iter().zip(matrix).map(|(p, r)| p * &r[b]).sum::<Rational>())
        .min()
        .unwrap();
    let capped = matrix.iter().map(|r| dot(r, &minimizer)).max().unwrap();
    assert_eq!(guaranteed, value, "maximin side misses the LP value");
    assert_eq!(capped, value, "minimax side differs from maximin value");
    ZeroSumSolution { value, maximizer, minimizer }
}

/// `max_s min_b u_player(s, b)`, exact.
pub fn security_level(game: &Game, player: Player) -> Rational {
    zero_sum_solution(&game.own_matrix(player)).value
}

/// Vertices of `{s in simplex : s . column_b >= level for every b}` where
/// `columns[b][a]` is the coefficient of action `a`, plus any `caps` of the
/// form `s . cap_k <= bound_k`.
pub fn face_vertices(
    owner: Player,
    actions: usize,
    floors: &[(Vec<Rational>, Rational)],
    caps: &[(Vec<Rational>, Rational)],
) -> Vec<MixedStrategy> {
    let mut ineq: Vec<HalfSpace> = (0..actions)
        .map(|a| {
            let mut n = vec![rational::zero(); actions];
            n[a] = rational::int(-1);
            HalfSpace::new(n, rational::zero())
        })
        .collect();
    for (col, level) in floors {
        ineq.push(HalfSpace::new(col.iter().map(|v| -v.clone()).collect(), -level.clone()));
    }
    for (row, bound) in caps {
        ineq.push(HalfSpace::new(row.clone(), bound.clone()));
    }
    let simplex = HalfSpace::new(vec![rational::one(); actions], rational::one());
    polytope::vertices(actions, &[simplex], &ineq)
        .into_iter()
        .map(|w| MixedStrategy::new(owner, w).expect("face vertices lie on the simplex"))
        .collect()
}

/// Floors `u_player(s, b) >= level` for every opponent pure action `b`.
pub(crate) fn maximin_constraints(game: &Game, player: Player, level: &Rational) -> Vec<(Vec<Rational>, Rational)> {
    (0..game.action_count(player.other()))
        .map(|b| {
            let col = (0..game.action_count(player)).map(|a| game.payoff_at(player, a, b).clone()).collect();
            (col, level.clone())
        })
        .collect()
}

/// Caps `u_opp(a, t) <= cap` for every opponent pure action `a`.
pub(crate) fn minimax_constraints(game: &Game, player: Player, cap: &Rational) -> Vec<(Vec<Rational>, Rational)> {
    let opp = player.other();
    (0..game.action_count(opp))
        .map(|a| {
            let row = (0..game.action_count(player)).map(|k| game.payoff_at(opp, a, k).clone()).collect();
            (row, cap.clone())
        })
        .collect()
}

pub fn maximin_face(game: &Game, player: Player) -> SolutionFace {
    let value = security_level(game, player);
    let vertices =
        face_vertices(player, game.action_count(player), &maximin_constraints(game, player, &value), &[]);
    SolutionFace { player, kind: FaceKind::Maximin, value, vertices }
}

/// Strategies of `player` that hold the opponent's best reply down to the
/// opponent's security level.
pub fn minimax_face(game: &Game, player: Player) -> SolutionFace {
    let value = security_level(game, player.other());
    let vertices =
        face_vertices(player, game.action_count(player), &[], &minimax_constraints(game, player, &value));
    SolutionFace { player, kind: FaceKind::Minimax, value, vertices }
}

/// Worst case of `s` over the opponent's pure actions.
pub fn nash_guarantee(game: &Game, player: Player, s: &MixedStrategy) -> Result<Rational> {
    let values = game.payoffs_against_pure(player, s)?;
    Ok(rational::min_of(&values).expect("opponent has actions"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn strat(owner: Player, w: &[Rational]) -> MixedStrategy {
        MixedStrategy::new(owner, w.to_vec()).unwrap()
    }

    #[test]
    fn pennies_value_zero() {
        let g = Game::from_int_cells(&[&[(1, -1), (-1, 1)], &[(-1, 1), (1, -1)]]).unwrap();
        for p in Player::BOTH {
            assert_eq!(security_level(&g, p), int(0));
            let f = maximin_face(&g, p);
            assert_eq!(f.vertices, vec![strat(p, &[frac(1, 2), frac(1, 2)])]);
            let m = minimax_face(&g, p);
            assert_eq!(m.vertices, vec![strat(p, &[frac(1, 2), frac(1, 2)])]);
        }
    }

    #[test]
    fn constant_game_face_is_whole_simplex() {
        let g = Game::from_int_cells(&[&[(2, 2), (2, 2)], &[(2, 2), (2, 2)], &[(2, 2), (2, 2)]]).unwrap();
        let f = maximin_face(&g, Player::One);
        assert_eq!(f.value, int(2));
        assert_eq!(f.vertices.len(), 3);
        assert!(f.contains(&g, &f.centroid()).unwrap());
    }

    #[test]
    fn one_by_one_game() {
        let g = Game::from_int_cells(&[&[(3, -4)]]).unwrap();
        assert_eq!(security_level(&g, Player::One), int(3));
        assert_eq!(security_level(&g, Player::Two), int(-4));
        assert_eq!(minimax_face(&g, Player::One).value, int(-4));
    }

    #[test]
    fn guarantee_of_a_pure_row() {
        let g = Game::from_int_cells(&[&[(4, 1), (0, 0)], &[(1, 4), (1, 2)]]).unwrap();
        let b = MixedStrategy::pure(Player::One, 2, 1);
        assert_eq!(nash_guarantee(&g, Player::One, &b).unwrap(), int(1));
        assert!(nash_guarantee(&g, Player::Two, &b).is_err());
    }
}
