//! JSON reports. Every number appears as an exact `"p/q"` string next to a
//! decimal rendering.

use serde_json::{json, Value};

use crate::analysis::Analysis;
use crate::census::CensusReport;
use crate::dominance::{self, DominanceVerdict, PropositionReport};
use crate::dynamics::{Condition, EvoReport, ResolvedRule};
use crate::extensions::ExtensionResult;
use crate::game::{Game, MixedStrategy, PayoffVector, Player, Profile};
use crate::rational::{self, Rational};
use crate::solvers::SolutionFace;

const PLACES: usize = 6;

pub fn number(r: &Rational) -> Value {
    json!({ "exact": rational::to_exact(r), "decimal": rational::to_short_decimal(r, PLACES) })
}

pub fn strategy(game: &Game, s: &MixedStrategy) -> Value {
    let labels = game.actions(s.owner());
    json!({
        "exact": s.exact_strings(),
        "decimal": s.weights().iter().map(|w| rational::to_short_decimal(w, PLACES)).collect::<Vec<_>>(),
        "support": s.support().iter().map(|&a| labels[a].clone()).collect::<Vec<_>>(),
    })
}

pub fn payoff(u: &PayoffVector) -> Value {
    json!([number(&u.u1), number(&u.u2)])
}

pub fn profile(game: &Game, p: &Profile) -> Value {
    let u = game.expected_payoff(p).expect("profile of this game");
    json!({ "player_1": strategy(game, &p.s1), "player_2": strategy(game, &p.s2), "payoff": payoff(&u) })
}

pub fn game(g: &Game) -> Value {
    let cells: Vec<Vec<[String; 2]>> = g
        .payoff_rows()
        .iter()
        .map(|row| row.iter().map(|(a, b)| [rational::to_exact(a), rational::to_exact(b)]).collect())
        .collect();
    json!({ "actions_1": g.actions(Player::One), "actions_2": g.actions(Player::Two), "payoffs": cells })
}

fn face(g: &Game, f: &SolutionFace) -> Value {
    json!({
        "value": number(&f.value),
        "vertices": f.vertices.iter().map(|v| strategy(g, v)).collect::<Vec<_>>(),
    })
}

pub fn verdict(g: &Game, v: &DominanceVerdict) -> Value {
    json!({
        "maximin_dominates_all_equilibria": v.in_c_m,
        "equilibrium_dominates_all_maximin": v.in_c_n,
        "maximin_witnesses": v.c_m_witnesses.iter().map(|p| profile(g, p)).collect::<Vec<_>>(),
        "equilibrium_witnesses": v.c_n_witnesses.iter().map(|p| profile(g, p)).collect::<Vec<_>>(),
    })
}

pub fn checks(r: &PropositionReport) -> Value {
    let passed = r.records.iter().filter(|c| matches!(c.outcome, dominance::CheckOutcome::Passed)).count();
    let vacuous = r.records.iter().filter(|c| matches!(c.outcome, dominance::CheckOutcome::Vacuous)).count();
    json!({
        "all_passed": r.all_passed(),
        "passed": passed,
        "vacuous": vacuous,
        "failed": r.failures().count(),
        "records": serde_json::to_value(&r.records).expect("serializable"),
    })
}

fn condition(c: &Condition) -> Value {
    json!({ "holds": c.holds, "lhs": number(&c.lhs), "rhs": number(&c.rhs) })
}

pub fn rules(g: &Game, resolved: &[ResolvedRule], induced: &Game, evo: Option<&EvoReport>) -> Value {
    let rules: Vec<Value> = resolved
        .iter()
        .map(|r| {
            json!({
                "rule": r.name(),
                "player_1": strategy(g, r.strategy(Player::One)),
                "player_2": strategy(g, r.strategy(Player::Two)),
                "selection": r.note,
            })
        })
        .collect();
    let mut out = json!({ "rules": rules, "induced_game": game(induced) });
    if let Some(e) = evo {
        out["evolution"] = json!({
            "maximin_side": e.m_rule,
            "nash_side": e.n_rule,
            "a": condition(&e.cond_a),
            "b": condition(&e.cond_b),
            "c": condition(&e.cond_c),
            "d": condition(&e.cond_d),
            "expected_return_m": e.e_m.to_string(),
            "expected_return_n": e.e_n.to_string(),
            "ess_m": e.ess_m,
            "ess_n": e.ess_n,
            "m_beats_n": e.beats[0][1],
            "n_beats_m": e.beats[1][0],
        });
    }
    out
}

pub fn analysis(a: &Analysis, propositions: &PropositionReport) -> Value {
    let g = &a.game;
    let diagnostics: Vec<Value> = dominance::diagnostics(a)
        .iter()
        .map(|d| {
            json!({
                "profile": profile(g, &d.profile),
                "strict": d.is_strict,
                "quasi_strict": d.is_quasi_strict,
                "attains_security": d.attains_security,
            })
        })
        .collect();
    let sec = a.security_vector();
    let unprofitable = a.equilibrium_points().iter().all(|e| a.payoff(e) == sec);
    let components: Vec<Value> = a
        .equilibria
        .components
        .iter()
        .map(|c| {
            json!({
                "player_1": c.s1_vertices.iter().map(|s| strategy(g, s)).collect::<Vec<_>>(),
                "player_2": c.s2_vertices.iter().map(|s| strategy(g, s)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut out = json!({
        "game": game(g),
        "security_levels": payoff(&sec),
        "maximin": [face(g, a.maximin_face(Player::One)), face(g, a.maximin_face(Player::Two))],
        "minimax": [face(g, a.minimax_face(Player::One)), face(g, a.minimax_face(Player::Two))],
        "equilibria": {
            "degenerate": a.equilibria.degenerate,
            "extreme": diagnostics,
            "components": components,
        },
        "unprofitable": unprofitable,
        "dominance": verdict(g, &dominance::classify_analysis(a)),
        "propositions": checks(propositions),
    });
    if !g.pure_nash_equilibria().is_empty() {
        out["pure_dominance"] = verdict(g, &dominance::classify_dominance_pure(g));
    }
    out
}

pub fn extension(res: &ExtensionResult) -> Value {
    json!({
        "game": game(&res.extended),
        "new_actions_1": res.new_actions_1,
        "new_actions_2": res.new_actions_2,
        "certificate": {
            "holds": res.certificate.holds(),
            "clauses": serde_json::to_value(&res.certificate.clauses).expect("serializable"),
        },
    })
}

pub fn census(r: &CensusReport) -> Value {
    let shares = |row: usize| (0..4).map(|c| rational::to_decimal(&r.stat_share(row, c), 2)).collect::<Vec<_>>();
    json!({
        "total_games": r.total_games,
        "labeled_total": r.labeled_total,
        "ne_counts": r.ne_counts,
        "ne_shares": (0..4).map(|k| rational::to_decimal(&r.ne_share(k), 2)).collect::<Vec<_>>(),
        "statistics": r.stats.iter().enumerate().map(|(k, row)| json!({
            "statistic": row.statistic,
            "counts": row.counts,
            "shares": shares(k),
        })).collect::<Vec<_>>(),
    })
}
