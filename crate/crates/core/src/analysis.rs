//! One-shot solution bundle shared by the dominance checks, extension
//! certificates and reports.

use crate::game::{Game, MixedStrategy, PayoffVector, Player, Profile};
use crate::rational::Rational;
use crate::solvers::{self, EquilibriumSet, SolutionFace};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub game: Game,
    pub security: [Rational; 2],
    pub maximin: [SolutionFace; 2],
    pub minimax: [SolutionFace; 2],
    pub equilibria: EquilibriumSet,
}

impl Analysis {
    pub fn new(game: &Game) -> Analysis {
        let maximin = [solvers::maximin_face(game, Player::One), solvers::maximin_face(game, Player::Two)];
        let minimax = [solvers::minimax_face(game, Player::One), solvers::minimax_face(game, Player::Two)];
        let security = [maximin[0].value.clone(), maximin[1].value.clone()];
        Analysis { game: game.clone(), security, maximin, minimax, equilibria: solvers::nash_equilibria(game) }
    }

    pub fn v(&self, player: Player) -> &Rational {
        &self.security[player.index()]
    }

    pub fn security_vector(&self) -> PayoffVector {
        PayoffVector::new(self.security[0].clone(), self.security[1].clone())
    }

    pub fn maximin_face(&self, player: Player) -> &SolutionFace {
        &self.maximin[player.index()]
    }

    pub fn minimax_face(&self, player: Player) -> &SolutionFace {
        &self.minimax[player.index()]
    }

    pub fn payoff(&self, profile: &Profile) -> PayoffVector {
        self.game.expected_payoff(profile).expect("profiles built from this game")
    }

    fn pairs(a: &[MixedStrategy], b: &[MixedStrategy]) -> Vec<Profile> {
        a.iter().flat_map(|x| b.iter().map(move |y| Profile { s1: x.clone(), s2: y.clone() })).collect()
    }

    /// Vertex pairs of `M_1 x M_2`.
    pub fn maximin_pairs(&self) -> Vec<Profile> {
        Self::pairs(&self.maximin[0].vertices, &self.maximin[1].vertices)
    }

    /// Vertex pairs of the product of both minimax faces.
    pub fn minimax_pairs(&self) -> Vec<Profile> {
        Self::pairs(&self.minimax[0].vertices, &self.minimax[1].vertices)
    }

    /// Extreme equilibria together with every vertex pair of every maximal
    /// Nash subset, without repeats. Bilinear payoffs take their extremes
    /// over an equilibrium component at these points.
    pub fn equilibrium_points(&self) -> Vec<Profile> {
        let mut out: Vec<Profile> = self.equilibria.extreme_equilibria.clone();
        for c in &self.equilibria.components {
            for p in c.vertex_pairs() {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Best pure-reply payoff of `player` against `opp`.
    pub fn best_reply_value(&self, player: Player, opp: &MixedStrategy) -> Rational {
        let values = self.game.pure_payoffs_against(player, opp).expect("strategy of this game");
        values.into_iter().max().expect("nonempty")
    }
}
