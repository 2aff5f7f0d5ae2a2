//! Dominance-class membership and executable checks of the security-level
//! and saddle-point characterizations.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::game::{Game, MixedStrategy, PayoffVector, Player, Profile};
use crate::pareto::strictly_dominates;
use crate::rational::Rational;
use crate::solvers::security::{face_vertices, maximin_constraints, minimax_constraints};

#[derive(Debug, Clone, PartialEq)]
pub struct DominanceVerdict {
    /// Some maximin profile strictly Pareto dominates every equilibrium.
    pub in_c_m: bool,
    /// Some equilibrium strictly Pareto dominates every maximin profile.
    pub in_c_n: bool,
    pub c_m_witnesses: Vec<Profile>,
    pub c_n_witnesses: Vec<Profile>,
}

fn verdict(maximin: &[(Profile, PayoffVector)], equilibria: &[(Profile, PayoffVector)]) -> DominanceVerdict {
    let beats_all = |u: &PayoffVector, others: &[(Profile, PayoffVector)]| {
        !others.is_empty() && others.iter().all(|(_, w)| strictly_dominates(u, w))
    };
    let c_m_witnesses: Vec<Profile> =
        maximin.iter().filter(|(_, u)| beats_all(u, equilibria)).map(|(p, _)| p.clone()).collect();
    let c_n_witnesses: Vec<Profile> =
        equilibria.iter().filter(|(_, u)| beats_all(u, maximin)).map(|(p, _)| p.clone()).collect();
    let v = DominanceVerdict {
        in_c_m: !c_m_witnesses.is_empty(),
        in_c_n: !c_n_witnesses.is_empty(),
        c_m_witnesses,
        c_n_witnesses,
    };
    assert!(!(v.in_c_m && v.in_c_n), "dominance classes are disjoint");
    v
}

fn with_payoffs(a: &Analysis, profiles: Vec<Profile>) -> Vec<(Profile, PayoffVector)> {
    profiles.into_iter().map(|p| {
        let u = a.payoff(&p);
        (p, u)
    }).collect()
}

pub fn classify_dominance(game: &Game) -> DominanceVerdict {
    classify_analysis(&Analysis::new(game))
}

/// Mixed-strategy classification over maximin vertex pairs and equilibrium
/// points (extreme equilibria plus component vertex pairs).
pub fn classify_analysis(a: &Analysis) -> DominanceVerdict {
    verdict(&with_payoffs(a, a.maximin_pairs()), &with_payoffs(a, a.equilibrium_points()))
}

/// Rows (or columns) whose worst pure payoff is largest.
pub fn pure_maximin_actions(game: &Game, player: Player) -> Vec<usize> {
    let m = game.own_matrix(player);
    let worst: Vec<Rational> = m.iter().map(|row| row.iter().min().unwrap().clone()).collect();
    let best = worst.iter().max().unwrap();
    (0..worst.len()).filter(|&i| &worst[i] == best).collect()
}

/// The same classification restricted to pure strategies: pure maximin
/// actions against pure equilibria. Both flags are false when the game has
/// no pure equilibrium.
pub fn classify_dominance_pure(game: &Game) -> DominanceVerdict {
    let rows = pure_maximin_actions(game, Player::One);
    let cols = pure_maximin_actions(game, Player::Two);
    let cell = |i: usize, j: usize| {
        let p = Profile::pure(game, i, j);
        let (x, y) = game.cell(i, j).clone();
        (p, PayoffVector::new(x, y))
    };
    let maximin: Vec<_> = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|(i, j)| cell(i, j)).collect();
    let equilibria: Vec<_> = game.pure_nash_equilibria().into_iter().map(|(i, j)| cell(i, j)).collect();
    verdict(&maximin, &equilibria)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumDiagnostic {
    pub profile: Profile,
    pub payoff: PayoffVector,
    pub is_strict: bool,
    pub is_quasi_strict: bool,
    pub attains_security: [bool; 2],
}

pub fn equilibrium_diagnostics(game: &Game) -> Vec<EquilibriumDiagnostic> {
    diagnostics(&Analysis::new(game))
}

pub fn diagnose(a: &Analysis, e: &Profile) -> EquilibriumDiagnostic {
    let payoff = a.payoff(e);
    let mut strict = true;
    let mut quasi = true;
    for p in Player::BOTH {
        let br = a.game.pure_best_responses(p, e.strategy(p.other())).expect("own game");
        let own = e.strategy(p);
        strict &= br.len() == 1 && own.pure_action() == Some(br[0]);
        let support = own.support();
        quasi &= br.iter().all(|b| support.contains(b));
    }
    let attains_security = [payoff.u1 == a.security[0], payoff.u2 == a.security[1]];
    debug_assert!(!strict || quasi);
    EquilibriumDiagnostic { profile: e.clone(), payoff, is_strict: strict, is_quasi_strict: quasi, attains_security }
}

pub fn diagnostics(a: &Analysis) -> Vec<EquilibriumDiagnostic> {
    a.equilibria.extreme_equilibria.iter().map(|e| diagnose(a, e)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum CheckOutcome {
    /// Hypothesis did not hold.
    Vacuous,
    Passed,
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    pub subject: String,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub records: Vec<CheckRecord>,
}

impl PropositionReport {
    fn push(&mut self, check: &'static str, subject: impl Into<String>, hypothesis: bool, conclusion: impl FnOnce() -> Option<String>) {
        let outcome = if !hypothesis {
            CheckOutcome::Vacuous
        } else {
            match conclusion() {
                None => CheckOutcome::Passed,
                Some(why) => CheckOutcome::Failed(why),
            }
        };
        self.records.push(CheckRecord { check, subject: subject.into(), outcome });
    }

    pub fn extend(&mut self, other: PropositionReport) {
        self.records.extend(other.records);
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| matches!(r.outcome, CheckOutcome::Failed(_)))
    }

    pub fn count(&self, check: &str, outcome: &CheckOutcome) -> usize {
        let same = |o: &CheckOutcome| std::mem::discriminant(o) == std::mem::discriminant(outcome);
        self.records.iter().filter(|r| r.check == check && same(&r.outcome)).count()
    }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

fn u(a: &Analysis, p: &Profile) -> PayoffVector {
    a.payoff(p)
}

fn payoff_with(a: &Analysis, player: Player, own: &MixedStrategy, opp: &MixedStrategy) -> Rational {
    let profile = match player {
        Player::One => Profile { s1: own.clone(), s2: opp.clone() },
        Player::Two => Profile { s1: opp.clone(), s2: own.clone() },
    };
    u(a, &profile).of(player).clone()
}

/// Minimax theorem, payoffs above security levels, minimax caps and the
/// equilibrium-strategy deviation bound.
pub fn check_basic(a: &Analysis) -> PropositionReport {
    let mut r = PropositionReport::default();
    let eqs = a.equilibrium_points();
    for p in Player::BOTH {
        // Opponent's side of the same zero-sum game, solved as its own LP.
        let opp_view: Vec<Vec<Rational>> = {
            let m = a.game.own_matrix(p);
            (0..m[0].len()).map(|j| m.iter().map(|row| -row[j].clone()).collect()).collect()
        };
        let denied = crate::solvers::zero_sum_solution(&opp_view).value;
        let v = a.v(p).clone();
        r.push("minimax_theorem", format!("player {p}"), true, || {
            fail_if(-denied.clone() != v, || format!("maximin {v} but minimax {}", -denied))
        });
        r.push("minimax_face_value", format!("player {p}"), true, || {
            let cap = &a.minimax_face(p).value;
            fail_if(cap != a.v(p.other()), || format!("minimax cap {cap} differs from opponent security"))
        });
    }
    for (k, e) in eqs.iter().enumerate() {
        let ue = u(a, e);
        r.push("equilibrium_above_security", format!("equilibrium {k}"), true, || {
            fail_if(&ue.u1 < a.v(Player::One) || &ue.u2 < a.v(Player::Two), || format!("{ue} below {}", a.security_vector()))
        });
        for p in Player::BOTH {
            let q = p.other();
            r.push("equilibrium_strategy_caps_deviation", format!("equilibrium {k}, player {q} deviating"), true, || {
                let dev = a.game.pure_payoffs_against(q, e.strategy(p)).unwrap();
                fail_if(dev.iter().any(|d| d > ue.of(q)), || format!("deviation payoff exceeds {}", ue.of(q)))
            });
            for (t, m) in a.minimax_face(p).vertices.iter().enumerate() {
                r.push("minimax_caps_opponent", format!("minimax vertex {t} of player {p}, equilibrium {k}"), true, || {
                    let best = a.best_reply_value(q, m);
                    fail_if(&best > ue.of(q), || format!("opponent reaches {best} above {}", ue.of(q)))
                });
            }
        }
        for (t, q) in a.minimax_pairs().iter().enumerate() {
            r.push("equilibrium_dominates_minimax_profile", format!("minimax pair {t}, equilibrium {k}"), true, || {
                let uq = u(a, q);
                fail_if(uq.u1 > ue.u1 || uq.u2 > ue.u2, || format!("minimax profile {uq} exceeds {ue}"))
            });
        }
    }
    for (t, m) in a.maximin_pairs().iter().enumerate() {
        let um = u(a, m);
        r.push("maximin_profile_above_security", format!("maximin pair {t}"), true, || {
            fail_if(&um.u1 < a.v(Player::One) || &um.u2 < a.v(Player::Two), || format!("{um} below {}", a.security_vector()))
        });
    }
    r
}

/// Security attainment at equilibrium: best-reply and minimax consequences,
/// support containment and the pinning of maximin payoffs.
pub fn check_security_propositions(a: &Analysis) -> PropositionReport {
    let mut r = PropositionReport::default();
    let diags = diagnostics(a);
    let sec = a.security_vector();
    let pairs = a.maximin_pairs();
    for (k, d) in diags.iter().enumerate() {
        let e = &d.profile;
        for p in Player::BOTH {
            let i = p.index();
            let q = p.other();
            let subject = format!("equilibrium {k}, player {p}");
            let best = a.best_reply_value(p, e.strategy(q));
            r.push("security_attainment_makes_maximin_best_reply", subject.clone(), d.attains_security[i], || {
                a.maximin_face(p).vertices.iter().find_map(|m| {
                    let got = payoff_with(a, p, m, e.strategy(q));
                    fail_if(got != best || &got != a.v(p), || format!("maximin vertex {m} earns {got}, best reply {best}"))
                })
            });
            r.push("security_attainment_iff_opponent_minimax", subject.clone(), true, || {
                let in_face = a.minimax_face(q).contains(&a.game, e.strategy(q)).unwrap();
                let attained = d.attains_security[i];
                fail_if(attained != in_face || attained != (&best == a.v(p)), || {
                    format!("attains {attained}, opponent strategy in minimax face {in_face}")
                })
            });
            r.push("quasi_strict_support_contains_maximin", subject, d.is_quasi_strict && d.attains_security[i], || {
                let support = e.strategy(p).support();
                a.maximin_face(p).vertices.iter().find_map(|m| {
                    fail_if(!m.support().iter().all(|s| support.contains(s)), || format!("maximin vertex {m} leaves support {support:?}"))
                })
            });
        }
        let at_security = d.attains_security == [true, true];
        r.push("strict_equilibrium_at_security_is_unique_maximin", format!("equilibrium {k}"), d.is_strict && at_security, || {
            Player::BOTH.iter().find_map(|&p| {
                let face = &a.maximin_face(p).vertices;
                fail_if(face.len() != 1 || &face[0] != e.strategy(p), || format!("player {p} maximin face has {} vertices", face.len()))
            })
        });
        r.push("quasi_strict_at_security_pins_maximin_pairs", format!("equilibrium {k}"), d.is_quasi_strict && at_security, || {
            pairs.iter().find_map(|m| {
                let um = u(a, m);
                fail_if(um != sec, || format!("maximin pair {m} pays {um}"))
            })
        });
    }
    let all_at_security = a.equilibrium_points().iter().all(|e| u(a, e) == sec);
    let quasi_found = diags.iter().any(|d| d.is_quasi_strict);
    r.push("all_equilibria_at_security_pin_maximin_pairs", "game", all_at_security && quasi_found, || {
        pairs.iter().find_map(|m| {
            let um = u(a, m);
            fail_if(um != sec, || format!("maximin pair {m} pays {um}"))
        })
    });
    r
}

/// Pure deviations suffice by linearity.
fn is_saddle(a: &Analysis, m: &Profile) -> bool {
    let um = u(a, m);
    Player::BOTH.iter().all(|&p| {
        let q = p.other();
        let mine = um.of(p);
        let own_dev = a.game.pure_payoffs_against(p, m.strategy(q)).unwrap();
        let opp_dev = a.game.pure_payoffs_against(q, m.strategy(p)).unwrap();
        // Opponent deviations evaluated in player p's payoffs.
        let opp_dev_mine: Vec<Rational> = (0..opp_dev.len())
            .map(|t| {
                let dev = m.with(q, MixedStrategy::pure(q, a.game.action_count(q), t));
                u(a, &dev).of(p).clone()
            })
            .collect();
        own_dev.iter().all(|d| d <= mine) && opp_dev_mine.iter().all(|d| d >= mine)
    })
}

/// Vertices of the intersection of a player's maximin and minimax faces.
pub fn maximin_minimax_vertices(a: &Analysis, p: Player) -> Vec<MixedStrategy> {
    let floors = maximin_constraints(&a.game, p, a.v(p));
    let caps = minimax_constraints(&a.game, p, a.v(p.other()));
    face_vertices(p, a.game.action_count(p), &floors, &caps)
}

pub fn check_saddle_propositions(a: &Analysis) -> PropositionReport {
    let mut r = PropositionReport::default();
    let sec = a.security_vector();
    let both = [maximin_minimax_vertices(a, Player::One), maximin_minimax_vertices(a, Player::Two)];
    let hyp = !both[0].is_empty() && !both[1].is_empty();
    let mut candidates = Vec::new();
    if hyp {
        for x in &both[0] {
            for y in &both[1] {
                candidates.push(Profile { s1: x.clone(), s2: y.clone() });
            }
        }
        let c1 = MixedStrategy::centroid(&both[0]).unwrap();
        let c2 = MixedStrategy::centroid(&both[1]).unwrap();
        candidates.push(Profile { s1: c1, s2: c2 });
    }
    r.push("maximin_minimax_profile_is_equilibrium", "game", hyp, || {
        candidates.iter().find_map(|c| {
            let uc = u(a, c);
            fail_if(!a.game.is_nash(c).unwrap() || uc != sec, || format!("profile {c} pays {uc}"))
        })
    });

    let pairs = a.maximin_pairs();
    for (t, m) in pairs.iter().enumerate() {
        let nash = a.game.is_nash(m).unwrap();
        r.push("maximin_equilibrium_at_security_iff_saddle", format!("maximin pair {t}"), nash, || {
            let at = u(a, m) == sec;
            let saddle = is_saddle(a, m);
            fail_if(at != saddle, || format!("at security {at}, saddle {saddle}"))
        });
    }

    r.push("maximin_rectangle_characterization", "game", true, || {
        let lhs = pairs.iter().all(|m| a.game.is_nash(m).unwrap() && u(a, m) == sec);
        let rhs = Player::BOTH.iter().all(|&p| {
            let face = a.minimax_face(p);
            a.maximin_face(p).vertices.iter().all(|m| face.contains(&a.game, m).unwrap())
        });
        fail_if(lhs != rhs, || format!("equilibrium rectangle {lhs}, maximin inside minimax {rhs}"))
    });

    if a.game.shape() == (2, 2) {
        r.push("no_2x2_maximin_dominates_all_equilibria", "game", true, || {
            let v = classify_analysis(a);
            fail_if(v.in_c_m, || format!("maximin pair {} dominates every equilibrium", v.c_m_witnesses[0]))
        });
    }
    r
}

pub fn check_all(a: &Analysis) -> PropositionReport {
    let mut r = check_basic(a);
    r.extend(check_security_propositions(a));
    r.extend(check_saddle_propositions(a));
    r
}

/// True iff no maximin vertex pair strictly dominates every equilibrium.
pub fn verify_2x2_impossibility(game: &Game) -> Result<bool> {
    if game.shape() != (2, 2) {
        return Err(Error::Dimension(format!("expected a 2x2 game, got {}x{}", game.rows(), game.cols())));
    }
    Ok(!classify_dominance(game).in_c_m)
}
