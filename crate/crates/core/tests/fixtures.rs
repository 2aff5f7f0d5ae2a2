mod common;

use maximin_core::analysis::Analysis;
use maximin_core::dominance::{self, check_all, classify_dominance, classify_dominance_pure, equilibrium_diagnostics};
use maximin_core::dynamics::{self, Rule, Selection};
use maximin_core::fixtures;
use maximin_core::rational::{frac, int, parse, to_decimal};
use maximin_core::solvers::{self, two_by_two};
use maximin_core::{pareto_compare, Game, MixedStrategy, ParetoRelation, PayoffVector, Player, Profile, Rational};

fn q(s: &str) -> Rational {
    parse(s).unwrap()
}

fn strat(owner: Player, w: &[&str]) -> MixedStrategy {
    MixedStrategy::new(owner, w.iter().map(|s| q(s)).collect()).unwrap()
}

fn pv(a: &str, b: &str) -> PayoffVector {
    PayoffVector::new(q(a), q(b))
}

#[test]
fn mixed_3x3_solution() {
    let g = fixtures::mixed_maximin_3x3();
    let a = Analysis::new(&g);
    assert_eq!(a.security, [frac(11, 2), frac(11, 2)]);
    for p in Player::BOTH {
        assert_eq!(a.maximin_face(p).vertices, vec![strat(p, &["0", "5/8", "3/8"])]);
        assert_eq!(a.minimax_face(p).vertices, vec![strat(p, &["1/2", "0", "1/2"])]);
    }
    let eq = &a.equilibria;
    assert!(eq.is_unique() && !eq.degenerate);
    let ne = &eq.extreme_equilibria[0];
    assert_eq!(ne.s1, strat(Player::One, &["1/2", "1/4", "1/4"]));
    assert_eq!(ne.s2, strat(Player::Two, &["1/2", "1/4", "1/4"]));
    assert_eq!(a.payoff(ne), pv("23/4", "23/4"));
    assert_eq!(solvers::nash_guarantee(&g, Player::One, &ne.s1).unwrap(), frac(5, 2));
}

#[test]
fn mixed_3x3_payoff_matches_direct_sum() {
    let g = fixtures::mixed_maximin_3x3();
    let x = vec![frac(1, 2), frac(1, 4), frac(1, 4)];
    let (a, b) = common::summed_payoff(&g, &x, &x);
    assert_eq!((a.clone(), b), (frac(23, 4), frac(23, 4)));
    let u = g.expected_payoff(&Profile::new(strat(Player::One, &["1/2", "1/4", "1/4"]), strat(Player::Two, &["1/2", "1/4", "1/4"])).unwrap()).unwrap();
    assert_eq!(u.u1, a);
}

#[test]
fn mixed_3x3_maximin_pair_is_in_c_m() {
    // Maximin pair pays 49/8 against the unique equilibrium's 23/4.
    let v = classify_dominance(&fixtures::mixed_maximin_3x3());
    assert!(v.in_c_m);
    let g = fixtures::mixed_maximin_3x3();
    assert_eq!(g.expected_payoff(&v.c_m_witnesses[0]).unwrap(), pv("49/8", "49/8"));
}

#[test]
fn relative_payoff_transform() {
    let g = fixtures::mixed_maximin_3x3();
    let r = g.relative_payoff_game();
    let x = g.action_index(Player::One, "x").unwrap();
    let y = g.action_index(Player::Two, "y").unwrap();
    assert_eq!(g.cell(x, y), &(int(9), int(4)));
    assert_eq!(r.cell(x, y), &(int(5), int(-5)));
    for i in 0..3 {
        assert_eq!(r.cell(i, i), &(int(0), int(0)));
        for j in 0..3 {
            let (a, b) = r.cell(i, j);
            assert_eq!(a + b, int(0));
        }
    }
}

#[test]
fn relative_maximin_in_original_payoffs() {
    let g = fixtures::mixed_maximin_3x3();
    let rel = g.relative_payoff_game();
    let face = solvers::maximin_face(&rel, Player::One);
    assert_eq!(face.value, int(0));
    assert_eq!(face.vertices, vec![strat(Player::One, &["3/16", "1/2", "5/16"])]);
    let rule = dynamics::resolve(&g, &Rule::RelativeMaximin, Selection::Centroid).unwrap();
    let u = g.expected_payoff(&Profile::new(rule.strategies[0].clone(), rule.strategies[1].clone()).unwrap()).unwrap();
    assert_eq!(u, pv("761/128", "761/128"));
    assert_eq!(to_decimal(&u.u1, 2), "5.95");
}

#[test]
fn induced_rule_game_matches_printed_matrix() {
    let g = fixtures::mixed_maximin_3x3();
    let rules = dynamics::resolve_all(&g, &[(Rule::Nash, Selection::Centroid), (Rule::Maximin, Selection::Centroid), (Rule::Minimax, Selection::Centroid)]).unwrap();
    let induced = dynamics::induced_rule_game(&g, &rules).unwrap();
    let printed = [
        [("5.75", "5.75"), ("5.625", "5.75"), ("4.5", "5.75")],
        [("5.75", "5.625"), ("6.125", "6.125"), ("5.5", "4.625")],
        [("5.75", "4.5"), ("4.625", "5.5"), ("4.5", "4.5")],
    ];
    let dec = |s: &str| {
        let (w, f) = s.split_once('.').unwrap();
        let d = 10i64.pow(f.len() as u32);
        frac(w.parse::<i64>().unwrap() * d + f.parse::<i64>().unwrap(), d)
    };
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(induced.cell(i, j), &(dec(printed[i][j].0), dec(printed[i][j].1)), "cell ({i},{j})");
        }
    }
}

#[test]
fn mixed_3x3_population_conditions() {
    let g = fixtures::mixed_maximin_3x3();
    let m = dynamics::resolve(&g, &Rule::Maximin, Selection::Centroid).unwrap();
    let n = dynamics::resolve(&g, &Rule::Nash, Selection::Centroid).unwrap();
    let r = dynamics::evo_conditions(&g, &m, &n).unwrap();
    assert!(r.cond_a.holds && r.cond_b.holds && r.cond_c.holds && r.cond_d.holds);
    assert_eq!((r.cond_b.lhs.clone(), r.cond_b.rhs.clone()), (frac(23, 4), frac(45, 8)));
    assert!(r.ess_m && !r.ess_n);
    let q = dynamics::resolve(&g, &Rule::Minimax, Selection::Centroid).unwrap();
    let r = dynamics::evo_conditions(&g, &q, &n).unwrap();
    assert!(!r.cond_a.holds && r.cond_b.holds);
}

#[test]
fn ordinal_3x3_pure_reading() {
    let g = fixtures::ordinal_maximin_3x3();
    let y = g.action_index(Player::One, "y").unwrap();
    let z = g.action_index(Player::One, "z").unwrap();
    assert_eq!(g.pure_nash_equilibria(), vec![(y, y)]);
    assert_eq!(g.cell(y, y), &(int(5), int(5)));
    assert_eq!(g.cell(z, z), &(int(6), int(6)));
    assert_eq!(dominance::pure_maximin_actions(&g, Player::One), vec![z]);
    let pure = |p: Player, k| MixedStrategy::pure(p, 3, k);
    assert_eq!(solvers::nash_guarantee(&g, Player::One, &pure(Player::One, z)).unwrap(), int(4));
    assert_eq!(solvers::nash_guarantee(&g, Player::One, &pure(Player::One, y)).unwrap(), int(3));
    assert_eq!(g.pure_best_responses(Player::One, &pure(Player::Two, z)).unwrap(), vec![0]);
    let v = classify_dominance_pure(&g);
    assert!(v.in_c_m && !v.in_c_n);
    assert_eq!(pareto_compare(&pv("6", "6"), &pv("5", "5")), ParetoRelation::StrictlyDominates);
    let n = dynamics::resolve(&g, &Rule::parse("nash=y", &g).unwrap().0, Selection::Centroid).unwrap();
    let m = dynamics::resolve(&g, &Rule::parse("maximin=z", &g).unwrap().0, Selection::Centroid).unwrap();
    let induced = dynamics::induced_rule_game(&g, &[n.clone(), m.clone()]).unwrap();
    let cells: Vec<_> = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| induced.cell(i, j).clone()).collect();
    assert_eq!(cells, vec![(int(5), int(5)), (int(3), int(4)), (int(4), int(3)), (int(6), int(6))]);
    let r = dynamics::evo_conditions(&g, &m, &n).unwrap();
    assert!(r.cond_a.holds && r.cond_b.holds && r.cond_c.holds && !r.cond_d.holds);
    assert!(r.ess_m && r.ess_n);
    assert!(dynamics::pairwise_beats(&g, z, 0).unwrap() && dynamics::pairwise_beats(&g, z, y).unwrap());
}

#[test]
fn ordinal_3x3_mixed_reading_differs() {
    // With mixing allowed the maximin strategy is (0, 1/2, 1/2) worth 9/2,
    // and the pure equilibrium (5,5) is no longer beaten.
    let g = fixtures::ordinal_maximin_3x3();
    let a = Analysis::new(&g);
    assert_eq!(a.security[0], frac(9, 2));
    assert_eq!(a.maximin_face(Player::One).vertices, vec![strat(Player::One, &["0", "1/2", "1/2"])]);
    assert!(!classify_dominance(&g).in_c_m);
}

#[test]
fn coordination_failure_game() {
    let g = fixtures::coordination_failure_5x5();
    let a = Analysis::new(&g);
    assert_eq!(a.security, [int(2), int(2)]);
    let pure: Vec<_> = a.equilibria.pure().collect();
    let y = g.action_index(Player::One, "y").unwrap();
    let z = g.action_index(Player::One, "z").unwrap();
    assert_eq!(a.equilibria.extreme_equilibria.len(), 2);
    assert!(pure.contains(&(y, y)) && pure.contains(&(z, z)));
    assert_eq!(g.cell(y, y), &(int(4), int(2)));
    assert_eq!(g.cell(z, z), &(int(3), int(5)));
    let x = MixedStrategy::pure(Player::Two, 5, g.action_index(Player::Two, "x").unwrap());
    assert!(a.maximin_face(Player::Two).vertices.contains(&x));
    let cf = dynamics::coordination_failure_payoff(&g).unwrap();
    assert_eq!(cf, pv("7/4", "7/4"));
    assert!(cf.u1 < a.security[0] && cf.u2 < a.security[1]);
    let worst = dynamics::worst_maximin_pair_payoff(&a);
    assert_eq!(pareto_compare(&worst, &cf), ParetoRelation::StrictlyDominates);
}

#[test]
fn unprofitable_game() {
    let g = fixtures::unprofitable_2x2();
    let a = Analysis::new(&g);
    assert_eq!(a.security, [frac(3, 2), frac(8, 5)]);
    assert_eq!(a.maximin_face(Player::One).vertices, vec![strat(Player::One, &["1/4", "3/4"])]);
    assert_eq!(a.maximin_face(Player::Two).vertices, vec![strat(Player::Two, &["2/5", "3/5"])]);
    let ne = &a.equilibria.extreme_equilibria;
    assert_eq!(ne.len(), 1);
    assert_eq!(ne[0].s1, strat(Player::One, &["4/5", "1/5"]));
    assert_eq!(ne[0].s2, strat(Player::Two, &["1/2", "1/2"]));
    assert_eq!(a.payoff(&ne[0]), pv("3/2", "8/5"));
    let d = equilibrium_diagnostics(&g);
    assert_eq!(d[0].attains_security, [true, true]);
    for m in a.maximin_pairs() {
        assert_eq!(a.payoff(&m), pv("3/2", "8/5"));
    }
    // Maximin strategies are best replies to the opponent's equilibrium strategy.
    for p in Player::BOTH {
        let br = g.pure_best_responses(p, ne[0].strategy(p.other())).unwrap();
        assert_eq!(br.len(), 2);
    }
    assert!(check_all(&a).all_passed());
}

#[test]
fn remark_2x3_game() {
    let g = fixtures::maximin_beats_ne_2x3();
    let a = Analysis::new(&g);
    assert_eq!(a.security, [frac(2, 3), int(1)]);
    let ne = &a.equilibria.extreme_equilibria;
    assert_eq!(ne.len(), 1);
    assert_eq!(a.payoff(&ne[0]), pv("3/2", "2"));
    let v = classify_dominance(&g);
    assert!(v.in_c_m);
    assert_eq!(g.expected_payoff(&v.c_m_witnesses[0]).unwrap(), pv("7/3", "7/3"));
}

#[test]
fn extended_seed_game() {
    let g = fixtures::extension_seed_5x5();
    let a = Analysis::new(&g);
    assert_eq!(a.security, [int(1), int(1)]);
    let idx1 = |l| g.action_index(Player::One, l).unwrap();
    let idx2 = |l| g.action_index(Player::Two, l).unwrap();
    let ne = &a.equilibria.extreme_equilibria;
    assert_eq!(ne.len(), 1);
    assert_eq!(ne[0].pure_cell(), Some((idx1("R"), idx2("C"))));
    assert_eq!(a.payoff(&ne[0]), pv("2", "2"));
    let face = &a.maximin_face(Player::One).vertices;
    for l in ["B", "MU1"] {
        assert!(face.contains(&MixedStrategy::pure(Player::One, 5, idx1(l))), "{l}");
    }
    // One further vertex mixes A with MU1.
    assert!(face.contains(&strat(Player::One, &["4/5", "0", "0", "0", "1/5"])));
    assert_eq!(g.cell(idx1("MU1"), idx2("MU2")), &(int(3), int(3)));
    let d = equilibrium_diagnostics(&g);
    assert!(d[0].is_strict);
    assert!(classify_dominance(&g).in_c_m);
}

#[test]
fn classic_games() {
    for o in maximin_core::benchmark::run() {
        assert!(o.mismatches.is_empty(), "{}: {:?}", o.name, o.mismatches);
    }
    let pd = fixtures::prisoners_dilemma();
    let d = equilibrium_diagnostics(&pd);
    assert_eq!(d.len(), 1);
    assert!(d[0].is_strict && d[0].profile.pure_cell() == Some((1, 1)));
    let mp = fixtures::matching_pennies();
    let half = strat(Player::Two, &["1/2", "1/2"]);
    assert_eq!(mp.pure_best_responses(Player::One, &half).unwrap(), vec![0, 1]);
    assert_eq!(solvers::security_level(&mp, Player::One), int(0));
    let bos = fixtures::battle_of_the_sexes();
    assert_eq!(solvers::minimax_face(&bos, Player::One).vertices, vec![strat(Player::One, &["2/3", "1/3"])]);
    let chicken = fixtures::chicken();
    assert!(dominance::verify_2x2_impossibility(&chicken).unwrap());
    assert_eq!(
        dynamics::coordination_failure_payoff(&fixtures::coordination()).unwrap(),
        pv("3/2", "3/2")
    );
}

#[test]
fn closed_form_agrees_on_classics() {
    for (name, g) in fixtures::classics() {
        for p in Player::BOTH {
            assert_eq!(two_by_two::security_level(&g, p), Some(solvers::security_level(&g, p)), "{name}");
        }
        let general = solvers::nash_equilibria(&g).extreme_equilibria;
        if let Some(mut closed) = two_by_two::nash_equilibria(&g) {
            closed.sort();
            assert_eq!(closed, general, "{name}");
        }
    }
}

#[test]
fn every_fixture_passes_every_check() {
    for (name, _) in fixtures::ALL {
        let g: Game = fixtures::by_name(name).unwrap();
        let r = check_all(&Analysis::new(&g));
        assert!(r.all_passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
    }
}
