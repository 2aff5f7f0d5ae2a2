//! Decision rules as strategies, the games they induce between rule
//! followers, and the population comparisons built on them.

use std::fmt;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::game::{Game, MixedStrategy, PayoffVector, Player, Profile};
use crate::rational::{self, Rational};
use crate::solvers;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Nash,
    Maximin,
    Minimax,
    /// Maximin of the relative-payoff game, played in the original game.
    RelativeMaximin,
    /// Lowest-index pure best reply to the other player's strategy under the
    /// target rule.
    BestResponseTo(Box<Rule>),
    /// Explicit strategies, e.g. a pure action chosen by hand.
    Fixed { name: String, s1: MixedStrategy, s2: MixedStrategy },
}

/// Which point of a multi-vertex solution face a rule uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    #[default]
    Centroid,
    Vertex(usize),
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Nash => write!(f, "nash"),
            Rule::Maximin => write!(f, "maximin"),
            Rule::Minimax => write!(f, "minimax"),
            Rule::RelativeMaximin => write!(f, "relative_maximin"),
            Rule::BestResponseTo(r) => write!(f, "best_response_to({r})"),
            Rule::Fixed { name, .. } => write!(f, "{name}"),
        }
    }
}

impl Rule {
    /// Parses `nash`, `maximin`, `minimax`, `relative_maximin`,
    /// `best_response_to(<rule>)`, or `name=<action>` / `name=<row>:<column>`
    /// for a fixed pure choice. A trailing `@k` selects face vertex `k`.
    pub fn parse(text: &str, game: &Game) -> Result<(Rule, Selection)> {
        let text = text.trim();
        let bad = |msg: &str| Error::Parse { location: format!("rule {text:?}"), message: msg.into() };
        if let Some((name, choice)) = text.split_once('=') {
            let (a, b) = choice.split_once(':').unwrap_or((choice, choice));
            let row = game.action_index(Player::One, a.trim()).ok_or_else(|| bad("unknown row action"))?;
            let col = game.action_index(Player::Two, b.trim()).ok_or_else(|| bad("unknown column action"))?;
            if name.trim().is_empty() {
                return Err(bad("missing rule name"));
            }
            return Ok((
                Rule::Fixed {
                    name: name.trim().to_string(),
                    s1: MixedStrategy::pure(Player::One, game.rows(), row),
                    s2: MixedStrategy::pure(Player::Two, game.cols(), col),
                },
                Selection::Centroid,
            ));
        }
        let (body, selection) = match text.rsplit_once('@') {
            Some((body, k)) => (body, Selection::Vertex(k.parse().map_err(|_| bad("vertex index must be an integer"))?)),
            None => (text, Selection::Centroid),
        };
        let rule = match body {
            "nash" => Rule::Nash,
            "maximin" => Rule::Maximin,
            "minimax" => Rule::Minimax,
            "relative_maximin" => Rule::RelativeMaximin,
            _ => match body.strip_prefix("best_response_to(").and_then(|r| r.strip_suffix(')')) {
                Some(inner) => Rule::BestResponseTo(Box::new(Rule::parse(inner, game)?.0)),
                None => return Err(bad("unknown rule")),
            },
        };
        Ok((rule, selection))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedRule {
    pub rule: Rule,
    pub strategies: [MixedStrategy; 2],
    /// How the strategy was picked when the solution was not unique.
    pub note: Option<String>,
}

impl ResolvedRule {
    pub fn name(&self) -> String {
        self.rule.to_string()
    }

    pub fn strategy(&self, p: Player) -> &MixedStrategy {
        &self.strategies[p.index()]
    }
}

fn pick(vertices: &[MixedStrategy], selection: Selection, what: &str) -> Result<(MixedStrategy, Option<String>)> {
    if vertices.is_empty() {
        return Err(Error::Precondition(format!("{what} has no vertices")));
    }
    if vertices.len() == 1 {
        return Ok((vertices[0].clone(), None));
    }
    match selection {
        Selection::Centroid => {
            Ok((MixedStrategy::centroid(vertices)?, Some(format!("{what}: centroid of {} vertices", vertices.len()))))
        }
        Selection::Vertex(k) => vertices
            .get(k)
            .cloned()
            .map(|v| (v, Some(format!("{what}: vertex {k} of {}", vertices.len()))))
            .ok_or_else(|| Error::Precondition(format!("{what} has {} vertices, asked for {k}", vertices.len()))),
    }
}

fn face_rule(faces: [solvers::SolutionFace; 2], selection: Selection, what: &str) -> Result<([MixedStrategy; 2], Option<String>)> {
    let (s1, n1) = pick(&faces[0].vertices, selection, &format!("{what} face of player 1"))?;
    let (s2, n2) = pick(&faces[1].vertices, selection, &format!("{what} face of player 2"))?;
    let s1 = MixedStrategy::new(Player::One, s1.weights().to_vec())?;
    let s2 = MixedStrategy::new(Player::Two, s2.weights().to_vec())?;
    let note = match (n1, n2) {
        (None, None) => None,
        (a, b) => Some([a, b].into_iter().flatten().collect::<Vec<_>>().join("; ")),
    };
    Ok(([s1, s2], note))
}

pub fn resolve(game: &Game, rule: &Rule, selection: Selection) -> Result<ResolvedRule> {
    let (strategies, note) = match rule {
        Rule::Maximin => face_rule(
            [solvers::maximin_face(game, Player::One), solvers::maximin_face(game, Player::Two)],
            selection,
            "maximin",
        )?,
        Rule::Minimax => face_rule(
            [solvers::minimax_face(game, Player::One), solvers::minimax_face(game, Player::Two)],
            selection,
            "minimax",
        )?,
        Rule::RelativeMaximin => {
            let rel = game.relative_payoff_game();
            face_rule(
                [solvers::maximin_face(&rel, Player::One), solvers::maximin_face(&rel, Player::Two)],
                selection,
                "relative maximin",
            )?
        }
        Rule::Nash => {
            let eq = solvers::nash_equilibria(game);
            match selection {
                Selection::Vertex(k) => {
                    let e = eq.extreme_equilibria.get(k).ok_or_else(|| {
                        Error::Precondition(format!("{} extreme equilibria, asked for {k}", eq.extreme_equilibria.len()))
                    })?;
                    let note = (eq.extreme_equilibria.len() > 1).then(|| format!("nash: extreme equilibrium {k}"));
                    ([e.s1.clone(), e.s2.clone()], note)
                }
                Selection::Centroid => {
                    let c = &eq.components[0];
                    let s1 = MixedStrategy::centroid(&c.s1_vertices)?;
                    let s2 = MixedStrategy::centroid(&c.s2_vertices)?;
                    let note = (eq.components.len() > 1 || !c.is_singleton()).then(|| {
                        format!("nash: centroid of the first of {} equilibrium components", eq.components.len())
                    });
                    ([s1, s2], note)
                }
            }
        }
        Rule::BestResponseTo(target) => {
            let t = resolve(game, target, selection)?;
            let reply = |p: Player| -> Result<MixedStrategy> {
                let br = game.pure_best_responses(p, t.strategy(p.other()))?;
                Ok(MixedStrategy::pure(p, game.action_count(p), br[0]))
            };
            let note = Some("best reply ties broken by lowest action index".to_string());
            ([reply(Player::One)?, reply(Player::Two)?], note)
        }
        Rule::Fixed { s1, s2, .. } => {
            game.check_strategy(Player::One, s1)?;
            game.check_strategy(Player::Two, s2)?;
            ([s1.clone(), s2.clone()], None)
        }
    };
    Ok(ResolvedRule { rule: rule.clone(), strategies, note })
}

pub fn resolve_all(game: &Game, rules: &[(Rule, Selection)]) -> Result<Vec<ResolvedRule>> {
    rules.iter().map(|(r, s)| resolve(game, r, *s)).collect()
}

/// `k x k` game whose cell `(r, r')` is the payoff when player 1 follows
/// rule `r` and player 2 follows rule `r'`.
pub fn induced_rule_game(game: &Game, rules: &[ResolvedRule]) -> Result<Game> {
    if rules.is_empty() {
        return Err(Error::Precondition("no rules given".into()));
    }
    let mut payoffs = Vec::with_capacity(rules.len());
    for r in rules {
        let mut row = Vec::with_capacity(rules.len());
        for c in rules {
            let u = game.expected_payoff(&Profile::new(r.strategy(Player::One).clone(), c.strategy(Player::Two).clone())?)?;
            row.push((u.u1, u.u2));
        }
        payoffs.push(row);
    }
    let mut labels: Vec<String> = Vec::new();
    for r in rules {
        let base = r.name();
        let mut label = base.clone();
        let mut k = 1;
        while labels.contains(&label) {
            label = format!("{base}_{k}");
            k += 1;
        }
        labels.push(label);
    }
    Game::new(labels.clone(), labels, payoffs)
}

/// `constant + alpha * a + beta * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linear {
    pub constant: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

impl Linear {
    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        &self.constant + &self.alpha * alpha + &self.beta * beta
    }

    pub fn sub(&self, other: &Linear) -> Linear {
        Linear {
            constant: &self.constant - &other.constant,
            alpha: &self.alpha - &other.alpha,
            beta: &self.beta - &other.beta,
        }
    }

    /// Substitutes `beta = alpha`, giving `(constant, slope)` in `alpha`.
    pub fn on_diagonal(&self) -> (Rational, Rational) {
        (self.constant.clone(), &self.alpha + &self.beta)
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + ({})*alpha + ({})*beta",
            rational::to_exact(&self.constant),
            rational::to_exact(&self.alpha),
            rational::to_exact(&self.beta)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Condition {
    fn new(lhs: &Rational, rhs: &Rational, test: fn(&Rational, &Rational) -> bool) -> Condition {
        Condition { holds: test(lhs, rhs), lhs: lhs.clone(), rhs: rhs.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvoReport {
    pub m_rule: String,
    pub n_rule: String,
    /// `u1(M,M) > u1(N,N)`
    pub cond_a: Condition,
    /// `u1(M,N) >= u2(M,N)`
    pub cond_b: Condition,
    /// `u1(M,M) > u2(M,N)`
    pub cond_c: Condition,
    /// `u1(N,N) = u1(M,N)`
    pub cond_d: Condition,
    pub e_m: Linear,
    pub e_n: Linear,
    pub ess_m: bool,
    pub ess_n: bool,
    /// `beats[x][y]`: rule `x` earns strictly more against `y` than `y` does
    /// against `x`. Index 0 is M, 1 is N.
    pub beats: [[bool; 2]; 2],
    pub induced: Game,
}

impl EvoReport {
    /// E(M) - E(N) with equal mixing rates, as `(constant, slope)` in alpha.
    pub fn equal_rate_advantage(&self) -> (Rational, Rational) {
        self.e_m.sub(&self.e_n).on_diagonal()
    }
}

fn require_symmetric(game: &Game) -> Result<()> {
    if game.is_symmetric() {
        Ok(())
    } else {
        Err(Error::Precondition("the game must be symmetric".into()))
    }
}

/// ESS within the pure strategies of a symmetric game given by player 1's
/// payoffs `u[row][col]`.
pub fn is_ess(u: &[Vec<Rational>], s: usize) -> bool {
    (0..u.len()).filter(|&t| t != s).all(|t| u[s][s] > u[t][s] || (u[s][s] == u[t][s] && u[s][t] > u[t][t]))
}

pub fn evo_conditions(game: &Game, m: &ResolvedRule, n: &ResolvedRule) -> Result<EvoReport> {
    require_symmetric(game)?;
    let induced = induced_rule_game(game, &[m.clone(), n.clone()])?;
    let u1 = |i: usize, j: usize| induced.payoff(Player::One, i, j).clone();
    let u2 = |i: usize, j: usize| induced.payoff(Player::Two, i, j).clone();
    let (mm, nn, mn1, mn2) = (u1(0, 0), u1(1, 1), u1(0, 1), u2(0, 1));
    let zero = rational::zero();
    let e_m = Linear { constant: mn1.clone(), alpha: &mm - &mn1, beta: zero.clone() };
    let e_n = Linear { constant: mn2.clone(), alpha: zero, beta: &nn - &mn2 };
    let own = induced.own_matrix(Player::One);
    let beats = [[false, u1(0, 1) > u1(1, 0)], [u1(1, 0) > u1(0, 1), false]];
    Ok(EvoReport {
        m_rule: m.name(),
        n_rule: n.name(),
        cond_a: Condition::new(&mm, &nn, |a, b| a > b),
        cond_b: Condition::new(&mn1, &mn2, |a, b| a >= b),
        cond_c: Condition::new(&mm, &mn2, |a, b| a > b),
        cond_d: Condition::new(&nn, &mn1, |a, b| a == b),
        e_m,
        e_n,
        ess_m: is_ess(&own, 0),
        ess_n: is_ess(&own, 1),
        beats,
        induced,
    })
}

/// Action `a` earns strictly more against `b` than `b` does against `a`.
pub fn pairwise_beats(game: &Game, a: usize, b: usize) -> Result<bool> {
    require_symmetric(game)?;
    if a >= game.rows() || b >= game.rows() {
        return Err(Error::Dimension(format!("action index out of range for {} actions", game.rows())));
    }
    Ok(game.payoff(Player::One, a, b) > game.payoff(Player::One, b, a))
}

/// Expected payoff when each player mixes uniformly over the actions it uses
/// in some pure equilibrium.
pub fn coordination_failure_payoff(game: &Game) -> Result<PayoffVector> {
    let pure = game.pure_nash_equilibria();
    if pure.len() < 2 {
        return Err(Error::Precondition(format!("needs at least two pure equilibria, found {}", pure.len())));
    }
    let mut rows: Vec<usize> = pure.iter().map(|e| e.0).collect();
    let mut cols: Vec<usize> = pure.iter().map(|e| e.1).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    let s1 = MixedStrategy::uniform_over(Player::One, game.rows(), &rows)?;
    let s2 = MixedStrategy::uniform_over(Player::Two, game.cols(), &cols)?;
    game.expected_payoff(&Profile::new(s1, s2)?)
}

/// Smallest payoff each player gets over all maximin vertex pairs.
pub fn worst_maximin_pair_payoff(a: &Analysis) -> PayoffVector {
    let pairs: Vec<PayoffVector> = a.maximin_pairs().iter().map(|p| a.payoff(p)).collect();
    PayoffVector::new(
        rational::min_of(pairs.iter().map(|u| &u.u1)).unwrap(),
        rational::min_of(pairs.iter().map(|u| &u.u2)).unwrap(),
    )
}
