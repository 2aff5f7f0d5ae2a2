//! Exhaustive census of strict ordinal symmetric 3x3 games, pure
//! strategies only.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::rational::{self, Rational};

/// Player 1's payoffs, a permutation of `1..=9`; player 2 gets the transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrdinalGame3 {
    a: [[u8; 3]; 3],
}

impl OrdinalGame3 {
    pub fn new(a: [[u8; 3]; 3]) -> Result<OrdinalGame3> {
        let mut seen = [false; 10];
        for &x in a.iter().flatten() {
            if !(1..=9).contains(&x) || seen[x as usize] {
                return Err(Error::InvalidGame(format!("entries must be a permutation of 1..=9, got {a:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(OrdinalGame3 { a })
    }

    fn from_slice(p: &[u8; 9]) -> OrdinalGame3 {
        OrdinalGame3 { a: [[p[0], p[1], p[2]], [p[3], p[4], p[5]], [p[6], p[7], p[8]]] }
    }

    pub fn matrix(&self) -> [[u8; 3]; 3] {
        self.a
    }

    /// Row player's payoff at `(i, j)`.
    pub fn u1(&self, i: usize, j: usize) -> u8 {
        self.a[i][j]
    }

    /// Column player's payoff at `(i, j)`.
    pub fn u2(&self, i: usize, j: usize) -> u8 {
        self.a[j][i]
    }

    /// Relabels actions by `perm` for both players at once.
    pub fn relabel(&self, perm: [usize; 3]) -> OrdinalGame3 {
        let mut b = [[0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                b[perm[i]][perm[j]] = self.a[i][j];
            }
        }
        OrdinalGame3 { a: b }
    }

    pub fn to_game(&self) -> Game {
        let a = self.a.iter().map(|r| r.iter().map(|&x| rational::int(x as i64)).collect()).collect();
        Game::symmetric(vec!["x".into(), "y".into(), "z".into()], a).expect("3x3 symmetric game")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureAnalysis {
    /// Pure equilibria `(row, column)`.
    pub equilibria: Vec<(usize, usize)>,
    pub maximin: usize,
    pub minimax: usize,
    /// Worst payoff of the maximin action.
    pub maximin_guarantee: u8,
    pub minimax_guarantee: u8,
    /// The cap the minimax action places on the opponent's best reply.
    pub minimax_cap: u8,
    /// Worst-case payoff of each player's equilibrium action, for every
    /// equilibrium: `[row guarantee, column guarantee]`.
    pub equilibrium_guarantees: Vec<[u8; 2]>,
}

fn argmax(values: [u8; 3]) -> usize {
    (0..3).max_by_key(|&i| values[i]).unwrap()
}

fn argmin(values: [u8; 3]) -> usize {
    (0..3).min_by_key(|&i| values[i]).unwrap()
}

pub fn pure_analysis(g: &OrdinalGame3) -> PureAnalysis {
    let a = &g.a;
    let row_min = |i: usize| *a[i].iter().min().unwrap();
    let mut equilibria = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let row_best = (0..3).all(|k| g.u1(i, j) >= g.u1(k, j));
            let col_best = (0..3).all(|k| g.u2(i, j) >= g.u2(i, k));
            if row_best && col_best {
                equilibria.push((i, j));
            }
        }
    }
    let maximin = argmax([row_min(0), row_min(1), row_min(2)]);
    // Opponent's best reply against row r is worth max_k a[k][r].
    let cap = |r: usize| (0..3).map(|k| a[k][r]).max().unwrap();
    let minimax = argmin([cap(0), cap(1), cap(2)]);
    let equilibrium_guarantees = equilibria.iter().map(|&(i, j)| [row_min(i), row_min(j)]).collect();
    PureAnalysis {
        maximin,
        minimax,
        maximin_guarantee: row_min(maximin),
        minimax_guarantee: row_min(minimax),
        minimax_cap: cap(minimax),
        equilibria,
        equilibrium_guarantees,
    }
}

pub const STATISTICS: [&str; 9] = [
    "Maximin weakly dominates all NE pay-offs",
    "Maximin strictly dominates all NE pay-offs",
    "Minimax weakly dominates all NE pay-offs",
    "Minimax strictly dominates all NE pay-offs",
    "Some NE strictly dominates maximin profile",
    "Maximin guarantee weakly greater than all NE guarantees",
    "Maximin guarantee strictly greater than all NE guarantees",
    "Minimax guarantee weakly greater than all NE guarantees",
    "Minimax guarantee strictly greater than all NE guarantees",
];

/// The nine comparison statistics, in `STATISTICS` order. Undefined for
/// games without a pure equilibrium.
pub fn table2_predicates(g: &OrdinalGame3) -> Result<[bool; 9]> {
    let p = pure_analysis(g);
    if p.equilibria.is_empty() {
        return Err(Error::Precondition("statistics are conditioned on a pure equilibrium".into()));
    }
    Ok(predicates_of(g, &p))
}

fn predicates_of(g: &OrdinalGame3, p: &PureAnalysis) -> [bool; 9] {
    let ne: Vec<[u8; 2]> = p.equilibria.iter().map(|&(i, j)| [g.u1(i, j), g.u2(i, j)]).collect();
    let diag = |r: usize| g.a[r][r];
    let weak = |x: u8| ne.iter().all(|e| x >= e[0] && x >= e[1]);
    let strict = |x: u8| ne.iter().all(|e| x > e[0] && x > e[1]);
    let m = diag(p.maximin);
    let q = diag(p.minimax);
    let guarantees: Vec<u8> = p.equilibrium_guarantees.iter().flatten().copied().collect();
    let g_weak = |x: u8| guarantees.iter().all(|&y| x >= y);
    let g_strict = |x: u8| guarantees.iter().all(|&y| x > y);
    [
        weak(m),
        strict(m),
        weak(q),
        strict(q),
        ne.iter().any(|e| e[0] > m && e[1] > m),
        g_weak(p.maximin_guarantee),
        g_strict(p.maximin_guarantee),
        g_weak(p.minimax_guarantee),
        g_strict(p.minimax_guarantee),
    ]
}

/// Labeled counts; merging is plain addition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    by_ne_count: [u64; 4],
    /// `stats[k][c]`: games with `c + 1` equilibria satisfying statistic `k`.
    stats: [[u64; 3]; 9],
}

impl Tally {
    fn add(&mut self, g: &OrdinalGame3) {
        let p = pure_analysis(g);
        let n = p.equilibria.len();
        self.by_ne_count[n] += 1;
        if n > 0 {
            for (k, hit) in predicates_of(g, &p).into_iter().enumerate() {
                self.stats[k][n - 1] += hit as u64;
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..4 {
            self.by_ne_count[i] += other.by_ne_count[i];
        }
        for k in 0..9 {
            for c in 0..3 {
                self.stats[k][c] += other.stats[k][c];
            }
        }
        self
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn first_row_prefixes() -> Vec<[u8; 3]> {
    let mut out = Vec::with_capacity(504);
    for a in 1..=9u8 {
        for b in (1..=9).filter(|&b| b != a) {
            for c in (1..=9).filter(|&c| c != a && c != b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn tally_prefix(prefix: [u8; 3]) -> Tally {
    let mut rest: Vec<u8> = (1..=9).filter(|x| !prefix.contains(x)).collect();
    let mut t = Tally::default();
    let mut cells = [0u8; 9];
    cells[..3].copy_from_slice(&prefix);
    loop {
        cells[3..].copy_from_slice(&rest);
        t.add(&OrdinalGame3::from_slice(&cells));
        if !next_permutation(&mut rest) {
            break;
        }
    }
    t
}

/// Calls `f` on every labeled game, in lexicographic order.
pub fn for_each_game(mut f: impl FnMut(&OrdinalGame3)) {
    let mut cells: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];
    loop {
        f(&OrdinalGame3::from_slice(&cells));
        if !next_permutation(&mut cells) {
            break;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub statistic: &'static str,
    /// Unlabeled counts for 1, 2 and 3 equilibria, then all games with one.
    pub counts: [u64; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub labeled_total: u64,
    pub total_games: u64,
    /// Unlabeled game counts by number of pure equilibria (0 to 3).
    pub ne_counts: [u64; 4],
    pub labeled_ne_counts: [u64; 4],
    pub stats: Vec<CensusRow>,
    pub labeled_stats: Vec<CensusRow>,
}

impl CensusReport {
    fn from_tally(t: Tally) -> CensusReport {
        let labeled_total: u64 = t.by_ne_count.iter().sum();
        let unlabel = |x: u64| {
            assert_eq!(x % 6, 0, "labeled counts come in orbits of six");
            x / 6
        };
        let rows = |scale: &dyn Fn(u64) -> u64| {
            STATISTICS
                .iter()
                .zip(t.stats.iter())
                .map(|(name, s)| CensusRow {
                    statistic: name,
                    counts: [scale(s[0]), scale(s[1]), scale(s[2]), scale(s[0] + s[1] + s[2])],
                })
                .collect()
        };
        CensusReport {
            labeled_total,
            total_games: unlabel(labeled_total),
            ne_counts: t.by_ne_count.map(unlabel),
            labeled_ne_counts: t.by_ne_count,
            stats: rows(&unlabel),
            labeled_stats: rows(&|x| x),
        }
    }

    /// Games per column of the statistics table: 1, 2, 3 equilibria, any.
    pub fn column_totals(&self) -> [u64; 4] {
        let n = self.ne_counts;
        [n[1], n[2], n[3], n[1] + n[2] + n[3]]
    }

    /// Exact percentage of games with `k` pure equilibria.
    pub fn ne_share(&self, k: usize) -> Rational {
        percent(self.ne_counts[k], self.total_games)
    }

    pub fn share_with_equilibrium(&self) -> Rational {
        percent(self.column_totals()[3], self.total_games)
    }

    /// Exact percentage for statistic `row` in column `col`.
    pub fn stat_share(&self, row: usize, col: usize) -> Rational {
        percent(self.stats[row].counts[col], self.column_totals()[col])
    }

    pub fn stat_by_name(&self, name: &str) -> Option<usize> {
        self.stats.iter().position(|r| r.statistic == name)
    }

    pub fn render_table1(&self) -> String {
        let mut s = String::from("pure_nash_equilibria,count,share_percent\n");
        for k in 0..4 {
            writeln!(s, "{k},{},{}", self.ne_counts[k], rational::to_decimal(&self.ne_share(k), 2)).unwrap();
        }
        writeln!(s, "total,{},100.00", self.total_games).unwrap();
        s
    }

    pub fn render_table2(&self) -> String {
        let mut s = String::from("statistic,1 NE,2 NE,3 NE,has NE\n");
        for (k, row) in self.stats.iter().enumerate() {
            let cells: Vec<String> = (0..4).map(|c| rational::to_decimal(&self.stat_share(k, c), 2)).collect();
            writeln!(s, "{},{}", row.statistic, cells.join(",")).unwrap();
        }
        s
    }

    /// Exact labeled and unlabeled counts behind both tables.
    pub fn render_raw(&self) -> String {
        let mut s = String::from("table,row,column,labeled,unlabeled\n");
        for k in 0..4 {
            writeln!(s, "ne_counts,{k},count,{},{}", self.labeled_ne_counts[k], self.ne_counts[k]).unwrap();
        }
        let cols = ["1 NE", "2 NE", "3 NE", "has NE"];
        for (row, labeled) in self.stats.iter().zip(&self.labeled_stats) {
            for c in 0..4 {
                writeln!(s, "statistics,{},{},{},{}", row.statistic, cols[c], labeled.counts[c], row.counts[c]).unwrap();
            }
        }
        writeln!(s, "total,all,count,{},{}", self.labeled_total, self.total_games).unwrap();
        s
    }
}

fn percent(count: u64, total: u64) -> Rational {
    if total == 0 {
        return rational::zero();
    }
    rational::frac(count as i64 * 100, total as i64)
}

/// Runs the full census. `threads = Some(k)` uses a dedicated pool of `k`
/// workers; `None` uses the global pool. Output does not depend on `k`.
pub fn run_census(threads: Option<usize>) -> CensusReport {
    let prefixes = first_row_prefixes();
    let work = || prefixes.par_iter().map(|&p| tally_prefix(p)).reduce(Tally::default, Tally::merge);
    let tally = match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };
    CensusReport::from_tally(tally)
}

/// Single-threaded reference run over `for_each_game`.
pub fn run_census_sequential() -> CensusReport {
    let mut t = Tally::default();
    for_each_game(|g| t.add(g));
    CensusReport::from_tally(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_game() -> OrdinalGame3 {
        OrdinalGame3::new([[1, 2, 7], [9, 5, 3], [8, 4, 6]]).unwrap()
    }

    #[test]
    fn ordinal_example() {
        let p = pure_analysis(&figure_game());
        assert_eq!(p.equilibria, vec![(1, 1)]);
        assert_eq!((p.maximin, p.maximin_guarantee), (2, 4));
        assert_eq!(p.equilibrium_guarantees, vec![[3, 3]]);
        assert_eq!((p.minimax, p.minimax_cap), (1, 5));
        let s = table2_predicates(&figure_game()).unwrap();
        assert!(s[1] && s[6]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(OrdinalGame3::new([[1, 1, 2], [3, 4, 5], [6, 7, 8]]).is_err());
        assert!(OrdinalGame3::new([[0, 1, 2], [3, 4, 5], [6, 7, 8]]).is_err());
    }

    #[test]
    fn permutation_walk_covers_all() {
        let mut n = 0;
        for_each_game(|_| n += 1);
        assert_eq!(n, 362_880);
        assert_eq!(first_row_prefixes().len(), 504);
    }
}
