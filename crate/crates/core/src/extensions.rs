//! Finite extensions that move a game into either dominance class while
//! keeping the original game as the leading block.

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::dominance::diagnose;
use crate::error::{Error, Result};
use crate::game::{Game, MixedStrategy, PayoffVector, Player, Profile};
use crate::pareto::strictly_dominates;
use crate::rational::{self, serde_exact_pair, Rational};
use crate::solvers;

/// Parameters of the maximin extension, per player:
/// `l < rho < v < n < h < big_h`, with `big_h` above every original payoff.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionParams {
    #[serde(with = "serde_exact_pair")]
    pub l: [Rational; 2],
    #[serde(with = "serde_exact_pair")]
    pub rho: [Rational; 2],
    #[serde(with = "serde_exact_pair")]
    pub n: [Rational; 2],
    #[serde(with = "serde_exact_pair")]
    pub h: [Rational; 2],
    #[serde(rename = "H", with = "serde_exact_pair")]
    pub big_h: [Rational; 2],
}

impl ExtensionParams {
    pub fn validate(&self, game: &Game) -> Result<()> {
        for p in Player::BOTH {
            let i = p.index();
            let v = solvers::security_level(game, p);
            let chain = [&self.l[i], &self.rho[i], &v, &self.n[i], &self.h[i], &self.big_h[i]];
            if chain.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!(
                    "player {p} needs l < rho < v < n < h < H, got {}",
                    chain.iter().map(|r| rational::to_exact(r)).collect::<Vec<_>>().join(", ")
                )));
            }
            let max = game.max_payoff(p);
            if self.big_h[i] <= max {
                return Err(Error::Precondition(format!(
                    "player {p}: H = {} must exceed every payoff (max {max})",
                    self.big_h[i]
                )));
            }
        }
        Ok(())
    }
}

pub fn canonical_params(game: &Game) -> ExtensionParams {
    let per = |f: &dyn Fn(Player) -> Rational| [f(Player::One), f(Player::Two)];
    let v = |p| solvers::security_level(game, p);
    let offset = |k: i64| per(&|p| v(p) + rational::int(k));
    let h = offset(2);
    let big_h = per(&|p| game.max_payoff(p).max(h[p.index()].clone()) + rational::one());
    ExtensionParams { l: offset(-2), rho: offset(-1), n: offset(1), h: h.clone(), big_h }
}

/// Parameters of the equilibrium extension: `l < v` and `k` above every
/// original payoff, per player.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquilibriumParams {
    #[serde(with = "serde_exact_pair")]
    pub l: [Rational; 2],
    #[serde(rename = "K", with = "serde_exact_pair")]
    pub k: [Rational; 2],
}

impl EquilibriumParams {
    pub fn validate(&self, game: &Game) -> Result<()> {
        for p in Player::BOTH {
            let i = p.index();
            let v = solvers::security_level(game, p);
            if self.l[i] >= v {
                return Err(Error::Precondition(format!("player {p}: l = {} must be below v = {v}", self.l[i])));
            }
            let max = game.max_payoff(p);
            if self.k[i] <= max {
                return Err(Error::Precondition(format!("player {p}: K = {} must exceed max payoff {max}", self.k[i])));
            }
        }
        Ok(())
    }
}

pub fn canonical_equilibrium_params(game: &Game) -> EquilibriumParams {
    let l = Player::BOTH.map(|p| solvers::security_level(game, p) - rational::one());
    let k = Player::BOTH.map(|p| game.max_payoff(p) + rational::one());
    EquilibriumParams { l, k }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Certificate {
    pub clauses: Vec<Clause>,
}

impl Certificate {
    fn add(&mut self, name: &'static str, holds: bool, detail: impl Into<String>) {
        self.clauses.push(Clause { name, holds, detail: detail.into() });
    }

    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }
}

#[derive(Debug, Clone)]
pub struct ExtensionResult {
    pub extended: Game,
    pub base_shape: (usize, usize),
    pub new_actions_1: Vec<String>,
    pub new_actions_2: Vec<String>,
    pub certificate: Certificate,
}

impl ExtensionResult {
    /// The base game, recovered by deleting the appended actions.
    pub fn strip(&self) -> Game {
        self.extended.leading_block(self.base_shape.0, self.base_shape.1).expect("extension keeps the base block")
    }
}

/// `base`, or `base_k` for the smallest `k >= 1` not already taken.
fn fresh_label(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == base) {
        return base.to_string();
    }
    (1..).map(|k| format!("{base}_{k}")).find(|c| !taken.contains(c)).unwrap()
}

fn fresh_labels(bases: &[&str], existing: &[String]) -> Vec<String> {
    let mut taken = existing.to_vec();
    let mut out = Vec::new();
    for b in bases {
        let l = fresh_label(b, &taken);
        taken.push(l.clone());
        out.push(l);
    }
    out
}

fn pad(s: &MixedStrategy, len: usize) -> MixedStrategy {
    let mut w = s.weights().to_vec();
    w.resize(len, rational::zero());
    MixedStrategy::new(s.owner(), w).expect("padding keeps a distribution")
}

/// Appends rows `R, T, MU1` and columns `C, D, MU2`. The extension keeps
/// both security levels, has `(R, C)` as its only equilibrium, and
/// `(MU1, MU2)` is a maximin profile paying `h` to both.
pub fn maximin_extension(game: &Game, p: &ExtensionParams) -> Result<ExtensionResult> {
    p.validate(game)?;
    let (m, n) = game.shape();
    let v = [solvers::security_level(game, Player::One), solvers::security_level(game, Player::Two)];
    let [v1, v2] = v.clone();
    let [l1, l2] = p.l.clone();
    let [r1, r2] = p.rho.clone();
    let [n1, n2] = p.n.clone();
    let [h1, h2] = p.h.clone();
    let [hh1, hh2] = p.big_h.clone();

    let mut payoffs: Vec<Vec<(Rational, Rational)>> = game
        .payoff_rows()
        .iter()
        .map(|row| {
            let mut row = row.clone();
            row.extend([(v1.clone(), hh2.clone()), (v1.clone(), l2.clone()), (v1.clone(), hh2.clone())]);
            row
        })
        .collect();
    let old_cols = |x: &(Rational, Rational)| vec![x.clone(); n];
    let new_row = |old: (Rational, Rational), tail: [(Rational, Rational); 3]| {
        let mut row = old_cols(&old);
        row.extend(tail);
        row
    };
    payoffs.push(new_row(
        (hh1.clone(), v2.clone()),
        [(n1.clone(), n2.clone()), (r1.clone(), l2.clone()), (hh1.clone(), v2.clone())],
    ));
    payoffs.push(new_row(
        (l1.clone(), v2.clone()),
        [(l1.clone(), r2.clone()), (l1.clone(), l2.clone()), (l1.clone(), v2.clone())],
    ));
    payoffs.push(new_row(
        (hh1.clone(), v2.clone()),
        [(v1.clone(), hh2.clone()), (v1.clone(), l2.clone()), (h1.clone(), h2.clone())],
    ));

    let new_1 = fresh_labels(&["R", "T", "MU1"], game.actions(Player::One));
    let new_2 = fresh_labels(&["C", "D", "MU2"], game.actions(Player::Two));
    let mut a1 = game.actions(Player::One).to_vec();
    a1.extend(new_1.iter().cloned());
    let mut a2 = game.actions(Player::Two).to_vec();
    a2.extend(new_2.iter().cloned());
    let extended = Game::new(a1, a2, payoffs)?;

    let (r_row, mu1_row) = (m, m + 2);
    let (c_col, d_col, mu2_col) = (n, n + 1, n + 2);
    let old_analysis = Analysis::new(game);
    let a = Analysis::new(&extended);
    let mut cert = Certificate::default();

    cert.add("security_levels_unchanged", a.security == v, format!("{} -> {}", old_analysis.security_vector(), a.security_vector()));

    let mu = [MixedStrategy::pure(Player::One, m + 3, mu1_row), MixedStrategy::pure(Player::Two, n + 3, mu2_col)];
    let mut members = true;
    for pl in Player::BOTH {
        let face = a.maximin_face(pl);
        members &= face.contains(&extended, &mu[pl.index()])?;
        let len = extended.action_count(pl);
        for old in &old_analysis.maximin_face(pl).vertices {
            members &= face.contains(&extended, &pad(old, len))?;
        }
    }
    cert.add("maximin_membership", members, "MU1, MU2 and every old maximin vertex stay maximin");

    let eqs = &a.equilibria.extreme_equilibria;
    let only_rc = eqs.len() == 1
        && a.equilibria.components.len() == 1
        && eqs[0].pure_cell() == Some((r_row, c_col))
        && a.payoff(&eqs[0]) == PayoffVector::new(n1.clone(), n2.clone());
    cert.add("unique_equilibrium", only_rc, format!("{} extreme equilibria", eqs.len()));

    let (x, y) = extended.cell(mu1_row, mu2_col).clone();
    let u_mu = PayoffVector::new(x, y);
    let u_ne = PayoffVector::new(n1, n2);
    cert.add("maximin_profile_dominates", strictly_dominates(&u_mu, &u_ne), format!("{u_mu} vs {u_ne}"));

    let no_weak = extended.payoff(Player::One, mu1_row, d_col) > extended.payoff(Player::One, r_row, d_col)
        && extended.payoff(Player::Two, m + 1, mu2_col) > extended.payoff(Player::Two, m + 1, c_col);
    cert.add("new_actions_not_weakly_dominated", no_weak, "u1(MU1, D) > u1(R, D) and u2(T, MU2) > u2(T, C)");

    Ok(ExtensionResult { extended, base_shape: (m, n), new_actions_1: new_1, new_actions_2: new_2, certificate: cert })
}

pub fn equilibrium_extension(game: &Game) -> Result<ExtensionResult> {
    equilibrium_extension_with(game, &canonical_equilibrium_params(game))
}

/// Appends row `r` and column `c` so that `(r, c)` is a strict equilibrium
/// paying `K` while the maximin faces stay as they were.
pub fn equilibrium_extension_with(game: &Game, p: &EquilibriumParams) -> Result<ExtensionResult> {
    p.validate(game)?;
    let (m, n) = game.shape();
    let v = [solvers::security_level(game, Player::One), solvers::security_level(game, Player::Two)];
    let mut payoffs: Vec<Vec<(Rational, Rational)>> = game
        .payoff_rows()
        .iter()
        .map(|row| {
            let mut row = row.clone();
            row.push((v[0].clone(), p.l[1].clone()));
            row
        })
        .collect();
    let mut last = vec![(p.l[0].clone(), v[1].clone()); n];
    last.push((p.k[0].clone(), p.k[1].clone()));
    payoffs.push(last);

    let new_1 = fresh_labels(&["r"], game.actions(Player::One));
    let new_2 = fresh_labels(&["c"], game.actions(Player::Two));
    let mut a1 = game.actions(Player::One).to_vec();
    a1.extend(new_1.iter().cloned());
    let mut a2 = game.actions(Player::Two).to_vec();
    a2.extend(new_2.iter().cloned());
    let extended = Game::new(a1, a2, payoffs)?;

    let old = Analysis::new(game);
    let a = Analysis::new(&extended);
    let mut cert = Certificate::default();

    let mut same = true;
    for pl in Player::BOTH {
        let len = extended.action_count(pl);
        let mut before: Vec<MixedStrategy> = old.maximin_face(pl).vertices.iter().map(|s| pad(s, len)).collect();
        let mut after = a.maximin_face(pl).vertices.clone();
        before.sort();
        after.sort();
        same &= before == after && old.v(pl) == a.v(pl);
    }
    cert.add("maximin_faces_unchanged", same, "vertex sets compared exactly");

    let rc = Profile::pure(&extended, m, n);
    let d = diagnose(&a, &rc);
    cert.add("new_cell_strict_equilibrium", d.is_strict && extended.is_nash(&rc)?, format!("payoff {}", d.payoff));

    let worst = a.maximin_pairs().iter().find(|mp| !strictly_dominates(&d.payoff, &a.payoff(mp))).cloned();
    cert.add(
        "equilibrium_dominates_maximin_pairs",
        worst.is_none(),
        worst.map_or_else(|| format!("{} beats every maximin pair", d.payoff), |w| format!("fails against {w}")),
    );

    Ok(ExtensionResult { extended, base_shape: (m, n), new_actions_1: new_1, new_actions_2: new_2, certificate: cert })
}
