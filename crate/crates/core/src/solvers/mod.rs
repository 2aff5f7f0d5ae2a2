//! Exact solvers: security levels, maximin and minimax faces, and the full
//! set of extreme Nash equilibria.

mod nash;
pub(crate) mod security;
pub mod two_by_two;

pub use nash::{nash_equilibria, EquilibriumSet, NashComponent};
pub use security::{
    face_vertices, maximin_face, minimax_face, nash_guarantee, security_level, zero_sum_solution, FaceKind,
    SolutionFace, ZeroSumSolution,
};
