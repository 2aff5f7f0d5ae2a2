//! Exact analysis of finite two-player normal-form games.
//!
//! Everything is computed over exact rationals: security levels and the full
//! maximin/minimax optimal faces, every extreme Nash equilibrium grouped into
//! maximal Nash subsets, Pareto-dominance classes between the two solution
//! concepts, the finite-extension constructions that force either class, the
//! census of strict symmetric 3x3 ordinal games, and induced rule games
//! between decision rules.

pub mod analysis;
pub mod benchmark;
pub mod census;
pub mod dominance;
pub mod dynamics;
pub mod error;
pub mod extensions;
pub mod fixtures;
pub mod format;
pub mod game;
pub mod linalg;
pub mod lp;
pub mod pareto;
pub mod polytope;
pub mod rational;
pub mod report;
pub mod solvers;

pub use error::{Error, Result};
pub use game::{Game, MixedStrategy, PayoffVector, Player, Profile};
pub use pareto::{pareto_compare, ParetoRelation};
pub use rational::Rational;
