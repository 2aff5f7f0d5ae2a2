//! Finite two-player games with exact payoffs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::One, Player::Two];

    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }

    /// Zero-based index: 0 for the row player, 1 for the column player.
    pub fn index(self) -> usize {
        match self {
            Player::One => 0,
            Player::Two => 1,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index() + 1)
    }
}

/// A bimatrix game. Row `i`, column `j` holds `(u_1, u_2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Game {
    actions_1: Vec<String>,
    actions_2: Vec<String>,
    payoffs: Vec<Vec<(Rational, Rational)>>,
}

impl Game {
    pub fn new(
        actions_1: Vec<String>,
        actions_2: Vec<String>,
        payoffs: Vec<Vec<(Rational, Rational)>>,
    ) -> Result<Game> {
        if actions_1.is_empty() || actions_2.is_empty() {
            return Err(Error::InvalidGame("each player needs at least one action".into()));
        }
        for (player, labels) in [(1, &actions_1), (2, &actions_2)] {
            for (k, label) in labels.iter().enumerate() {
                if labels[..k].contains(label) {
                    return Err(Error::InvalidGame(format!(
                        "duplicate action label {label:?} for player {player}"
                    )));
                }
            }
        }
        if payoffs.len() != actions_1.len() {
            return Err(Error::Dimension(format!(
                "{} payoff rows for {} row actions",
                payoffs.len(),
                actions_1.len()
            )));
        }
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != actions_2.len() {
                return Err(Error::Dimension(format!(
                    "payoff row {} has {} entries for {} column actions",
                    i + 1,
                    row.len(),
                    actions_2.len()
                )));
            }
        }
        Ok(Game { actions_1, actions_2, payoffs })
    }

    /// Game with default labels `a1..am` / `b1..bn` from two payoff matrices.
    pub fn from_matrices(u1: Vec<Vec<Rational>>, u2: Vec<Vec<Rational>>) -> Result<Game> {
        if u1.len() != u2.len() || u1.iter().zip(&u2).any(|(a, b)| a.len() != b.len()) {
            return Err(Error::Dimension("payoff matrices differ in shape".into()));
        }
        let m = u1.len();
        let n = u1.first().map_or(0, Vec::len);
        let payoffs = u1
            .into_iter()
            .zip(u2)
            .map(|(r1, r2)| r1.into_iter().zip(r2).collect())
            .collect();
        Game::new(default_labels("a", m), default_labels("b", n), payoffs)
    }

    /// Integer-payoff convenience constructor; `cells[i][j] = (u_1, u_2)`.
    pub fn from_int_cells(cells: &[&[(i64, i64)]]) -> Result<Game> {
        let m = cells.len();
        let n = cells.first().map_or(0, |r| r.len());
        let payoffs = cells
            .iter()
            .map(|row| row.iter().map(|&(a, b)| (rational::int(a), rational::int(b))).collect())
            .collect();
        Game::new(default_labels("a", m), default_labels("b", n), payoffs)
    }

    /// Symmetric game whose row player matrix is `a`; the column player gets
    /// the transpose.
    pub fn symmetric(labels: Vec<String>, a: Vec<Vec<Rational>>) -> Result<Game> {
        let k = a.len();
        if a.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension("symmetric game needs a square matrix".into()));
        }
        let payoffs = (0..k)
            .map(|i| (0..k).map(|j| (a[i][j].clone(), a[j][i].clone())).collect())
            .collect();
        Game::new(labels.clone(), labels, payoffs)
    }

    pub fn with_labels(mut self, actions_1: Vec<String>, actions_2: Vec<String>) -> Result<Game> {
        self.actions_1 = actions_1;
        self.actions_2 = actions_2;
        Game::new(self.actions_1, self.actions_2, self.payoffs)
    }

    pub fn rows(&self) -> usize {
        self.actions_1.len()
    }

    pub fn cols(&self) -> usize {
        self.actions_2.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn action_count(&self, player: Player) -> usize {
        match player {
            Player::One => self.rows(),
            Player::Two => self.cols(),
        }
    }

    pub fn actions(&self, player: Player) -> &[String] {
        match player {
            Player::One => &self.actions_1,
            Player::Two => &self.actions_2,
        }
    }

    pub fn action_index(&self, player: Player, label: &str) -> Option<usize> {
        self.actions(player).iter().position(|a| a == label)
    }

    pub fn cell(&self, row: usize, col: usize) -> &(Rational, Rational) {
        &self.payoffs[row][col]
    }

    pub fn payoff(&self, player: Player, row: usize, col: usize) -> &Rational {
        let cell = &self.payoffs[row][col];
        match player {
            Player::One => &cell.0,
            Player::Two => &cell.1,
        }
    }

    pub fn payoff_rows(&self) -> &[Vec<(Rational, Rational)>] {
        &self.payoffs
    }

    /// Payoffs of `player` indexed `[own action][opponent action]`.
    pub fn own_matrix(&self, player: Player) -> Vec<Vec<Rational>> {
        let own = self.action_count(player);
        let opp = self.action_count(player.other());
        (0..own)
            .map(|a| (0..opp).map(|b| self.payoff_at(player, a, b).clone()).collect())
            .collect()
    }

    /// Payoff of `player` when it plays `own` and the opponent plays `opp`.
    pub fn payoff_at(&self, player: Player, own: usize, opp: usize) -> &Rational {
        match player {
            Player::One => &self.payoffs[own][opp].0,
            Player::Two => &self.payoffs[opp][own].1,
        }
    }

    pub fn max_payoff(&self, player: Player) -> Rational {
        self.payoffs
            .iter()
            .flatten()
            .map(|c| if player == Player::One { &c.0 } else { &c.1 })
            .max()
            .cloned()
            .expect("games are nonempty")
    }

    pub fn min_payoff(&self, player: Player) -> Rational {
        self.payoffs
            .iter()
            .flatten()
            .map(|c| if player == Player::One { &c.0 } else { &c.1 })
            .min()
            .cloned()
            .expect("games are nonempty")
    }

    /// `u_2(i, j) == u_1(j, i)` for all cells of a square game.
    pub fn is_symmetric(&self) -> bool {
        let k = self.rows();
        k == self.cols()
            && (0..k).all(|i| (0..k).all(|j| self.payoffs[i][j].1 == self.payoffs[j][i].0))
    }

    /// Leading `rows x cols` block, keeping labels.
    pub fn leading_block(&self, rows: usize, cols: usize) -> Result<Game> {
        if rows == 0 || cols == 0 || rows > self.rows() || cols > self.cols() {
            return Err(Error::Dimension(format!(
                "cannot take {rows}x{cols} block of a {}x{} game",
                self.rows(),
                self.cols()
            )));
        }
        Game::new(
            self.actions_1[..rows].to_vec(),
            self.actions_2[..cols].to_vec(),
            self.payoffs[..rows].iter().map(|r| r[..cols].to_vec()).collect(),
        )
    }

    /// Transformation to relative payoffs `(u_1 - u_2, u_2 - u_1)`.
    pub fn relative_payoff_game(&self) -> Game {
        let payoffs = self
            .payoffs
            .iter()
            .map(|row| row.iter().map(|(a, b)| (a - b, b - a)).collect())
            .collect();
        Game { actions_1: self.actions_1.clone(), actions_2: self.actions_2.clone(), payoffs }
    }

    /// Expected payoff vector of a mixed profile.
    pub fn expected_payoff(&self, profile: &Profile) -> Result<PayoffVector> {
        self.check_profile(profile)?;
        let (s1, s2) = (&profile.s1.weights, &profile.s2.weights);
        let mut u1 = rational::zero();
        let mut u2 = rational::zero();
        for (i, p) in s1.iter().enumerate() {
            if p == &rational::zero() {
                continue;
            }
            for (j, q) in s2.iter().enumerate() {
                if q == &rational::zero() {
                    continue;
                }
                let w = p * q;
                let (a, b) = &self.payoffs[i][j];
                u1 += &w * a;
                u2 += &w * b;
            }
        }
        Ok(PayoffVector { u1, u2 })
    }

    /// Payoff of `player` for each own pure action against a fixed opponent
    /// mixture.
    pub fn pure_payoffs_against(&self, player: Player, opp: &MixedStrategy) -> Result<Vec<Rational>> {
        self.check_strategy(player.other(), opp)?;
        Ok((0..self.action_count(player))
            .map(|a| {
                opp.weights
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| **w != rational::zero())
                    .map(|(b, w)| w * self.payoff_at(player, a, b))
                    .sum()
            })
            .collect())
    }

    /// Payoff of `player`'s mixture `own` against each opponent pure action.
    pub fn payoffs_against_pure(&self, player: Player, own: &MixedStrategy) -> Result<Vec<Rational>> {
        self.check_strategy(player, own)?;
        Ok((0..self.action_count(player.other()))
            .map(|b| {
                own.weights
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| **w != rational::zero())
                    .map(|(a, w)| w * self.payoff_at(player, a, b))
                    .sum()
            })
            .collect())
    }

    /// Arg-max set of `player`'s pure actions against `opp`; never empty.
    pub fn pure_best_responses(&self, player: Player, opp: &MixedStrategy) -> Result<Vec<usize>> {
        let values = self.pure_payoffs_against(player, opp)?;
        let best = rational::max_of(&values).expect("nonempty action set");
        Ok(values.iter().enumerate().filter(|(_, v)| **v == best).map(|(a, _)| a).collect())
    }

    /// Mutual best-response test.
    pub fn is_nash(&self, profile: &Profile) -> Result<bool> {
        let u = self.expected_payoff(profile)?;
        let best1 = rational::max_of(&self.pure_payoffs_against(Player::One, &profile.s2)?).unwrap();
        let best2 = rational::max_of(&self.pure_payoffs_against(Player::Two, &profile.s1)?).unwrap();
        Ok(u.u1 == best1 && u.u2 == best2)
    }

    /// Pure equilibria as `(row, col)` cells, row-major.
    pub fn pure_nash_equilibria(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let (a, b) = &self.payoffs[i][j];
                let row_best = (0..self.rows()).all(|k| &self.payoffs[k][j].0 <= a);
                let col_best = (0..self.cols()).all(|k| &self.payoffs[i][k].1 <= b);
                if row_best && col_best {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn check_strategy(&self, player: Player, s: &MixedStrategy) -> Result<()> {
        if s.owner != player {
            return Err(Error::WrongOwner { expected: player, found: s.owner });
        }
        if s.weights.len() != self.action_count(player) {
            return Err(Error::Dimension(format!(
                "strategy of player {player} has {} weights for {} actions",
                s.weights.len(),
                self.action_count(player)
            )));
        }
        Ok(())
    }

    pub fn check_profile(&self, profile: &Profile) -> Result<()> {
        self.check_strategy(Player::One, &profile.s1)?;
        self.check_strategy(Player::Two, &profile.s2)
    }
}

pub(crate) fn default_labels(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

/// A probability vector over one player's actions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedStrategy {
    owner: Player,
    weights: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(owner: Player, weights: Vec<Rational>) -> Result<MixedStrategy> {
        if weights.is_empty() {
            return Err(Error::InvalidStrategy("no weights".into()));
        }
        if weights.iter().any(|w| w < &rational::zero()) {
            return Err(Error::InvalidStrategy("negative weight".into()));
        }
        let total: Rational = weights.iter().sum();
        if total != rational::one() {
            return Err(Error::InvalidStrategy(format!(
                "weights sum to {}, not 1",
                rational::to_exact(&total)
            )));
        }
        Ok(MixedStrategy { owner, weights })
    }

    /// Rescales nonnegative weights with a positive sum onto the simplex.
    pub fn normalized(owner: Player, weights: Vec<Rational>) -> Result<MixedStrategy> {
        let total: Rational = weights.iter().sum();
        if total <= rational::zero() {
            return Err(Error::InvalidStrategy("weights do not have a positive sum".into()));
        }
        MixedStrategy::new(owner, weights.into_iter().map(|w| w / &total).collect())
    }

    pub fn pure(owner: Player, actions: usize, action: usize) -> MixedStrategy {
        assert!(action < actions, "pure action out of range");
        let weights = (0..actions)
            .map(|k| if k == action { rational::one() } else { rational::zero() })
            .collect();
        MixedStrategy { owner, weights }
    }

    pub fn uniform_over(owner: Player, actions: usize, support: &[usize]) -> Result<MixedStrategy> {
        if support.is_empty() || support.iter().any(|&a| a >= actions) {
            return Err(Error::InvalidStrategy("bad uniform support".into()));
        }
        let mut weights = vec![rational::zero(); actions];
        let w = rational::frac(1, support.len() as i64);
        for &a in support {
            weights[a] = w.clone();
        }
        MixedStrategy::new(owner, weights)
    }

    /// Barycenter of a nonempty list of strategies of one player.
    pub fn centroid(points: &[MixedStrategy]) -> Result<MixedStrategy> {
        let first = points.first().ok_or_else(|| Error::InvalidStrategy("empty set".into()))?;
        let k = rational::frac(1, points.len() as i64);
        let mut weights = vec![rational::zero(); first.len()];
        for p in points {
            if p.owner != first.owner || p.len() != first.len() {
                return Err(Error::InvalidStrategy("mixed owners or sizes".into()));
            }
            for (acc, w) in weights.iter_mut().zip(&p.weights) {
                *acc += w * &k;
            }
        }
        MixedStrategy::new(first.owner, weights)
    }

    pub fn owner(&self) -> Player {
        self.owner
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, action: usize) -> &Rational {
        &self.weights[action]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > rational::zero())
            .map(|(a, _)| a)
            .collect()
    }

    /// The action played with certainty, if any.
    pub fn pure_action(&self) -> Option<usize> {
        match self.support()[..] {
            [a] => Some(a),
            _ => None,
        }
    }

    /// `lambda * self + (1 - lambda) * other`.
    pub fn mix(&self, other: &MixedStrategy, lambda: &Rational) -> Result<MixedStrategy> {
        if self.owner != other.owner || self.len() != other.len() {
            return Err(Error::InvalidStrategy("cannot mix strategies of different shape".into()));
        }
        if lambda < &rational::zero() || lambda > &rational::one() {
            return Err(Error::InvalidStrategy("mixing weight outside [0, 1]".into()));
        }
        let rest = rational::one() - lambda;
        let weights = self.weights.iter().zip(&other.weights).map(|(a, b)| lambda * a + &rest * b).collect();
        MixedStrategy::new(self.owner, weights)
    }

    pub fn exact_strings(&self) -> Vec<String> {
        self.weights.iter().map(rational::to_exact).collect()
    }
}

impl fmt::Display for MixedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.exact_strings().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub s1: MixedStrategy,
    pub s2: MixedStrategy,
}

impl Profile {
    pub fn new(s1: MixedStrategy, s2: MixedStrategy) -> Result<Profile> {
        if s1.owner != Player::One || s2.owner != Player::Two {
            return Err(Error::InvalidStrategy("profile components have the wrong owners".into()));
        }
        Ok(Profile { s1, s2 })
    }

    pub fn pure(game: &Game, row: usize, col: usize) -> Profile {
        Profile {
            s1: MixedStrategy::pure(Player::One, game.rows(), row),
            s2: MixedStrategy::pure(Player::Two, game.cols(), col),
        }
    }

    pub fn strategy(&self, player: Player) -> &MixedStrategy {
        match player {
            Player::One => &self.s1,
            Player::Two => &self.s2,
        }
    }

    pub fn pure_cell(&self) -> Option<(usize, usize)> {
        Some((self.s1.pure_action()?, self.s2.pure_action()?))
    }

    /// Replaces `player`'s component.
    pub fn with(&self, player: Player, s: MixedStrategy) -> Profile {
        match player {
            Player::One => Profile { s1: s, s2: self.s2.clone() },
            Player::Two => Profile { s1: self.s1.clone(), s2: s },
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.s1, self.s2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PayoffVector {
    pub u1: Rational,
    pub u2: Rational,
}

impl PayoffVector {
    pub fn new(u1: Rational, u2: Rational) -> PayoffVector {
        PayoffVector { u1, u2 }
    }

    pub fn of(&self, player: Player) -> &Rational {
        match player {
            Player::One => &self.u1,
            Player::Two => &self.u2,
        }
    }
}

impl From<(i64, i64)> for PayoffVector {
    fn from((a, b): (i64, i64)) -> Self {
        PayoffVector::new(rational::int(a), rational::int(b))
    }
}

impl fmt::Display for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", rational::to_exact(&self.u1), rational::to_exact(&self.u2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn mixed_3x3() -> Game {
        let a = [[7, 9, 0], [4, 8, 7], [8, 4, 3]];
        Game::symmetric(
            vec!["x".into(), "y".into(), "z".into()],
            a.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn symmetric_constructor_transposes() {
        let g = mixed_3x3();
        assert_eq!(g.cell(0, 1), &(int(9), int(4)));
        assert_eq!(g.cell(1, 0), &(int(4), int(9)));
        assert!(g.is_symmetric());
    }

    #[test]
    fn rejects_bad_shapes_and_labels() {
        assert!(Game::new(vec!["a".into()], vec!["b".into()], vec![]).is_err());
        assert!(Game::new(
            vec!["a".into(), "a".into()],
            vec!["b".into()],
            vec![vec![(int(0), int(0))], vec![(int(0), int(0))]]
        )
        .is_err());
        assert!(Game::new(vec!["a".into()], vec!["b".into(), "c".into()], vec![vec![(int(0), int(0))]])
            .is_err());
    }

    #[test]
    fn expected_payoff_of_mixed_equilibrium() {
        let g = mixed_3x3();
        let s = |o| MixedStrategy::new(o, vec![frac(1, 2), frac(1, 4), frac(1, 4)]).unwrap();
        let u = g.expected_payoff(&Profile::new(s(Player::One), s(Player::Two)).unwrap()).unwrap();
        assert_eq!(u, PayoffVector::new(frac(23, 4), frac(23, 4)));
    }

    #[test]
    fn expected_payoff_rejects_mismatched_profile() {
        let g = mixed_3x3();
        let p = Profile::new(
            MixedStrategy::pure(Player::One, 2, 0),
            MixedStrategy::pure(Player::Two, 3, 0),
        )
        .unwrap();
        assert!(matches!(g.expected_payoff(&p), Err(Error::Dimension(_))));
    }

    #[test]
    fn strategy_validation() {
        assert!(MixedStrategy::new(Player::One, vec![frac(1, 2), frac(1, 3)]).is_err());
        assert!(MixedStrategy::new(Player::One, vec![frac(3, 2), frac(-1, 2)]).is_err());
        assert!(MixedStrategy::new(Player::One, vec![]).is_err());
        let s = MixedStrategy::normalized(Player::Two, vec![int(2), int(0), int(6)]).unwrap();
        assert_eq!(s.weights(), &[frac(1, 4), int(0), frac(3, 4)]);
        assert_eq!(s.support(), vec![0, 2]);
    }

    #[test]
    fn best_responses_with_ties() {
        let pennies = Game::from_int_cells(&[&[(1, -1), (-1, 1)], &[(-1, 1), (1, -1)]]).unwrap();
        let half = MixedStrategy::new(Player::Two, vec![frac(1, 2), frac(1, 2)]).unwrap();
        assert_eq!(pennies.pure_best_responses(Player::One, &half).unwrap(), vec![0, 1]);
        let wrong = MixedStrategy::new(Player::One, vec![frac(1, 2), frac(1, 2)]).unwrap();
        assert!(pennies.pure_best_responses(Player::One, &wrong).is_err());
    }

    #[test]
    fn relative_payoffs() {
        let r = mixed_3x3().relative_payoff_game();
        assert_eq!(r.cell(0, 1), &(int(5), int(-5)));
        assert_eq!(r.cell(2, 2), &(int(0), int(0)));
    }

    #[test]
    fn leading_block_round_trip() {
        let g = mixed_3x3();
        let b = g.leading_block(2, 3).unwrap();
        assert_eq!(b.shape(), (2, 3));
        assert_eq!(b.cell(1, 2), g.cell(1, 2));
        assert!(g.leading_block(4, 1).is_err());
    }
}
