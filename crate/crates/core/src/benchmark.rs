//! Expected solutions for the classic 2x2 games, written as
//! `(p, q)` = (probability of the first row, probability of the first column).

use crate::analysis::Analysis;
use crate::fixtures;
use crate::game::{Game, MixedStrategy, Player, Profile};
use crate::rational::{self, Rational};

type Pq = (Rational, Rational);

#[derive(Debug, Clone)]
pub struct ClassicExpectation {
    pub name: &'static str,
    pub game: Game,
    pub equilibria: Vec<(Pq, Pq)>,
    /// `(profile, payoff)`
    pub maximin: (Pq, Pq),
    pub minimax: (Pq, Pq),
}

fn q(text: &str) -> Rational {
    rational::parse(text).expect("literal")
}

fn pq(p: &str, r: &str) -> Pq {
    (q(p), q(r))
}

pub fn expectations() -> Vec<ClassicExpectation> {
    let row = |name, game, equilibria: &[(&str, &str, &str, &str)], mm: [&str; 4], mx: [&str; 4]| ClassicExpectation {
        name,
        game,
        equilibria: equilibria.iter().map(|&(a, b, c, d)| (pq(a, b), pq(c, d))).collect(),
        maximin: (pq(mm[0], mm[1]), pq(mm[2], mm[3])),
        minimax: (pq(mx[0], mx[1]), pq(mx[2], mx[3])),
    };
    vec![
        row("Prisoner's Dilemma", fixtures::prisoners_dilemma(), &[("0", "0", "1", "1")], ["0", "0", "1", "1"], ["0", "0", "1", "1"]),
        row(
            "Chicken (Hawk-Dove)",
            fixtures::chicken(),
            &[("1", "0", "4", "1"), ("0", "1", "1", "4"), ("2/3", "2/3", "4/3", "4/3")],
            ["0", "0", "2", "2"],
            ["1", "1", "0", "0"],
        ),
        row(
            "Assurance (Stag Hunt)",
            fixtures::assurance(),
            &[("1", "1", "4", "4"), ("0", "0", "2", "2"), ("1/2", "1/2", "5/2", "5/2")],
            ["0", "0", "2", "2"],
            ["0", "0", "2", "2"],
        ),
        row(
            "Battle of the Sexes",
            fixtures::battle_of_the_sexes(),
            &[("1", "1", "2", "1"), ("0", "0", "1", "2"), ("2/3", "1/3", "2/3", "2/3")],
            ["1/3", "2/3", "2/3", "2/3"],
            ["2/3", "1/3", "2/3", "2/3"],
        ),
        row("Harmony", fixtures::harmony(), &[("1", "1", "4", "4")], ["1", "1", "4", "4"], ["0", "0", "1", "1"]),
        row(
            "Matching Pennies",
            fixtures::matching_pennies(),
            &[("1/2", "1/2", "0", "0")],
            ["1/2", "1/2", "0", "0"],
            ["1/2", "1/2", "0", "0"],
        ),
        row(
            "Coordination",
            fixtures::coordination(),
            &[("1", "1", "4", "4"), ("0", "0", "2", "2"), ("1/3", "1/3", "4/3", "4/3")],
            ["1/3", "1/3", "4/3", "4/3"],
            ["1/3", "1/3", "4/3", "4/3"],
        ),
    ]
}

fn to_pq(p: &Profile) -> Pq {
    (p.s1.weight(0).clone(), p.s2.weight(0).clone())
}

pub fn profile_of(pq: &Pq) -> Profile {
    let one = rational::one();
    Profile {
        s1: MixedStrategy::new(Player::One, vec![pq.0.clone(), &one - &pq.0]).expect("probability"),
        s2: MixedStrategy::new(Player::Two, vec![pq.1.clone(), &one - &pq.1]).expect("probability"),
    }
}

#[derive(Debug, Clone)]
pub struct ClassicOutcome {
    pub name: &'static str,
    pub equilibria: Vec<(Pq, Pq)>,
    pub maximin: Vec<(Pq, Pq)>,
    pub minimax: Vec<(Pq, Pq)>,
    pub mismatches: Vec<String>,
}

fn solved(a: &Analysis, profiles: Vec<Profile>) -> Vec<(Pq, Pq)> {
    let mut out: Vec<(Pq, Pq)> = profiles
        .iter()
        .map(|p| {
            let u = a.payoff(p);
            (to_pq(p), (u.u1, u.u2))
        })
        .collect();
    out.sort();
    out
}

pub fn check(expect: &ClassicExpectation) -> ClassicOutcome {
    let a = Analysis::new(&expect.game);
    let equilibria = solved(&a, a.equilibria.extreme_equilibria.clone());
    let maximin = solved(&a, a.maximin_pairs());
    let minimax = solved(&a, a.minimax_pairs());
    let mut mismatches = Vec::new();
    let mut want = expect.equilibria.clone();
    want.sort();
    if equilibria != want {
        mismatches.push("Nash equilibria".to_string());
    }
    if maximin != [expect.maximin.clone()] {
        mismatches.push("maximin pair".to_string());
    }
    if minimax != [expect.minimax.clone()] {
        mismatches.push("minimax pair".to_string());
    }
    ClassicOutcome { name: expect.name, equilibria, maximin, minimax, mismatches }
}

pub fn run() -> Vec<ClassicOutcome> {
    expectations().iter().map(check).collect()
}

pub fn render_pq(entry: &(Pq, Pq)) -> String {
    let s = |r: &Rational| rational::to_exact(r);
    format!("({}, {}): {}, {}", s(&entry.0 .0), s(&entry.0 .1), s(&entry.1 .0), s(&entry.1 .1))
}
