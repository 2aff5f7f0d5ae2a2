//! Shared test helpers: seeded random games and a brute-force equilibrium
//! oracle that shares no code with the library solvers.
#![allow(dead_code)]

use maximin_core::rational::{frac, int};
use maximin_core::{Game, MixedStrategy, Player, Profile, Rational};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small integers in `-3..=3`; ties and degeneracy are common.
pub fn tie_heavy_game(rng: &mut impl Rng, m: usize, n: usize) -> Game {
    let u = |rng: &mut dyn rand::RngCore| int(rng.gen_range(-3..=3));
    build(rng, m, n, &u)
}

/// Fractions `p/q` with `|p| <= 40`, `q <= 7`; almost always nondegenerate.
pub fn generic_game(rng: &mut impl Rng, m: usize, n: usize) -> Game {
    let u = |rng: &mut dyn rand::RngCore| frac(rng.gen_range(-40..=40), rng.gen_range(1..=7));
    build(rng, m, n, &u)
}

/// Alternates between the two generators.
pub fn mixed_game(rng: &mut impl Rng, m: usize, n: usize, k: usize) -> Game {
    if k % 2 == 0 {
        tie_heavy_game(rng, m, n)
    } else {
        generic_game(rng, m, n)
    }
}

fn build(rng: &mut impl Rng, m: usize, n: usize, u: &dyn Fn(&mut dyn rand::RngCore) -> Rational) -> Game {
    let u1: Vec<Vec<Rational>> = (0..m).map(|_| (0..n).map(|_| u(rng)).collect()).collect();
    let u2: Vec<Vec<Rational>> = (0..m).map(|_| (0..n).map(|_| u(rng)).collect()).collect();
    Game::from_matrices(u1, u2).unwrap()
}

/// Direct double sum over every cell.
pub fn summed_payoff(g: &Game, x: &[Rational], y: &[Rational]) -> (Rational, Rational) {
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let w = &x[i] * &y[j];
            let (p, q) = g.cell(i, j);
            a += &w * p;
            b += &w * q;
        }
    }
    (a, b)
}

/// Unique solution of a square system by Gauss-Jordan, or `None`.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = Rational::one() / &a[c][c];
        for k in 0..n {
            a[c][k] = &a[c][k] * &inv;
        }
        b[c] = &b[c] * &inv;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
                let t = &f * &b[c];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Strategy of the mover on `support` that makes the opponent indifferent
/// over `opp_support`; `pay[own][opp]` is the opponent's payoff.
fn indifference(pay: &[Vec<Rational>], own_len: usize, support: &[usize], opp_support: &[usize]) -> Option<Vec<Rational>> {
    let k = support.len();
    // Unknowns: weights on the support, then the common value.
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &t in opp_support {
        let mut row: Vec<Rational> = support.iter().map(|&s| pay[s][t].clone()).collect();
        row.push(-Rational::one());
        a.push(row);
        b.push(Rational::zero());
    }
    let mut sum = vec![Rational::one(); k];
    sum.push(Rational::zero());
    a.push(sum);
    b.push(Rational::one());
    let sol = solve_square(a, b)?;
    if sol[..k].iter().any(|w| !w.is_positive()) {
        return None;
    }
    let mut w = vec![Rational::zero(); own_len];
    for (i, &s) in support.iter().enumerate() {
        w[s] = sol[i].clone();
    }
    Some(w)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

fn best_reply_ok(g: &Game, x: &[Rational], y: &[Rational]) -> bool {
    let u1: Vec<Rational> = (0..g.rows()).map(|i| (0..g.cols()).map(|j| &y[j] * g.payoff(Player::One, i, j)).sum()).collect();
    let u2: Vec<Rational> = (0..g.cols()).map(|j| (0..g.rows()).map(|i| &x[i] * g.payoff(Player::Two, i, j)).sum()).collect();
    let v1: Rational = (0..g.rows()).map(|i| &x[i] * &u1[i]).sum();
    let v2: Rational = (0..g.cols()).map(|j| &y[j] * &u2[j]).sum();
    u1.iter().all(|u| u <= &v1) && u2.iter().all(|u| u <= &v2)
}

/// Equilibria with equal-size supports whose indifference systems have a
/// unique solution. In a nondegenerate game this is the whole equilibrium
/// set; in any game each of them is an extreme equilibrium.
pub fn support_enumeration(g: &Game) -> Vec<Profile> {
    let (m, n) = g.shape();
    let u1_by_col: Vec<Vec<Rational>> = (0..n).map(|j| (0..m).map(|i| g.payoff(Player::One, i, j).clone()).collect()).collect();
    let u2: Vec<Vec<Rational>> = (0..m).map(|i| (0..n).map(|j| g.payoff(Player::Two, i, j).clone()).collect()).collect();
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        for s1 in subsets(m, k) {
            for s2 in subsets(n, k) {
                let Some(x) = indifference(&u2, m, &s1, &s2) else { continue };
                let Some(y) = indifference(&u1_by_col, n, &s2, &s1) else { continue };
                if best_reply_ok(g, &x, &y) {
                    let p = Profile::new(
                        MixedStrategy::new(Player::One, x).unwrap(),
                        MixedStrategy::new(Player::Two, y).unwrap(),
                    )
                    .unwrap();
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Grid points `k/steps` on the simplex of dimension `len`.
pub fn simplex_grid(len: usize, steps: i64) -> Vec<Vec<Rational>> {
    fn rec(len: usize, left: i64, steps: i64, cur: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) {
        if len == 1 {
            cur.push(frac(left, steps));
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(frac(k, steps));
            rec(len - 1, left - k, steps, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, steps, steps, &mut Vec::new(), &mut out);
    out
}

/// Worst pure-reply payoff of `player` when mixing with `w`.
pub fn guarantee(g: &Game, player: Player, w: &[Rational]) -> Rational {
    let opp = g.action_count(player.other());
    (0..opp)
        .map(|b| (0..w.len()).map(|a| &w[a] * g.payoff_at(player, a, b)).sum::<Rational>())
        .min()
        .unwrap()
}
