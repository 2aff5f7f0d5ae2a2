//! Closed forms for 2x2 games, kept as an independent cross-check of the
//! general solvers.

use crate::game::{Game, MixedStrategy, Player, Profile};
use crate::rational::{self, Rational};

fn require_2x2(game: &Game) -> Option<()> {
    (game.shape() == (2, 2)).then_some(())
}

/// Security level from the candidate set {pure rows, crossing point}.
pub fn security_level(game: &Game, player: Player) -> Option<Rational> {
    require_2x2(game)?;
    let m = game.own_matrix(player);
    let (a, b, c, d) = (&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
    // own weight p on the first action: against b0 -> p a + (1-p) c, b1 -> p b + (1-p) d
    let guarantee = |p: &Rational| {
        let q = rational::one() - p;
        let l = p * a + &q * c;
        let r = p * b + &q * d;
        l.min(r)
    };
    let mut best = guarantee(&rational::zero()).max(guarantee(&rational::one()));
    let den = a - b - c + d;
    if den != rational::zero() {
        let p = (d - c) / den;
        if p > rational::zero() && p < rational::one() {
            best = best.max(guarantee(&p));
        }
    }
    Some(best)
}

/// All equilibria of a nondegenerate 2x2 game; `None` when the game is not
/// 2x2 or some best reply is tied at a pure strategy.
pub fn nash_equilibria(game: &Game) -> Option<Vec<Profile>> {
    require_2x2(game)?;
    let u1 = |i, j| game.payoff(Player::One, i, j).clone();
    let u2 = |i, j| game.payoff(Player::Two, i, j).clone();
    if u1(0, 0) == u1(1, 0) || u1(0, 1) == u1(1, 1) || u2(0, 0) == u2(0, 1) || u2(1, 0) == u2(1, 1) {
        return None;
    }
    let mut out: Vec<Profile> =
        game.pure_nash_equilibria().into_iter().map(|(i, j)| Profile::pure(game, i, j)).collect();
    // p = P(row 0) makes the column player indifferent, q = P(col 0) the row player.
    let den_p = u2(0, 0) - u2(0, 1) - u2(1, 0) + u2(1, 1);
    let den_q = u1(0, 0) - u1(0, 1) - u1(1, 0) + u1(1, 1);
    if den_p == rational::zero() || den_q == rational::zero() {
        return Some(out);
    }
    let p = (u2(1, 1) - u2(1, 0)) / den_p;
    let q = (u1(1, 1) - u1(0, 1)) / den_q;
    let inside = |x: &Rational| x > &rational::zero() && x < &rational::one();
    if inside(&p) && inside(&q) {
        let s1 = MixedStrategy::new(Player::One, vec![p.clone(), rational::one() - &p]).unwrap();
        let s2 = MixedStrategy::new(Player::Two, vec![q.clone(), rational::one() - &q]).unwrap();
        out.push(Profile { s1, s2 });
    }
    Some(out)
}
