//! Pareto comparisons between payoff vectors.

use std::cmp::Ordering;

use serde::Serialize;

use crate::game::PayoffVector;

/// Relation of `a` to `b`. The three dominance grades nest: a vector that
/// strictly dominates also dominates and weakly dominates, and
/// [`ParetoRelation`] reports the strongest one that applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParetoRelation {
    /// Both components strictly greater.
    StrictlyDominates,
    /// Weakly greater in both, strictly in exactly one.
    Dominates,
    StrictlyDominated,
    Dominated,
    Equal,
    Incomparable,
}

impl ParetoRelation {
    /// Componentwise `>=` (weak Pareto dominance).
    pub fn weakly_dominates(self) -> bool {
        matches!(self, Self::StrictlyDominates | Self::Dominates | Self::Equal)
    }

    /// Weak dominance with at least one strict component.
    pub fn dominates(self) -> bool {
        matches!(self, Self::StrictlyDominates | Self::Dominates)
    }

    pub fn strictly_dominates(self) -> bool {
        self == Self::StrictlyDominates
    }

    pub fn reversed(self) -> ParetoRelation {
        match self {
            Self::StrictlyDominates => Self::StrictlyDominated,
            Self::Dominates => Self::Dominated,
            Self::StrictlyDominated => Self::StrictlyDominates,
            Self::Dominated => Self::Dominates,
            other => other,
        }
    }
}

pub fn pareto_compare(a: &PayoffVector, b: &PayoffVector) -> ParetoRelation {
    use Ordering::*;
    match (a.u1.cmp(&b.u1), a.u2.cmp(&b.u2)) {
        (Equal, Equal) => ParetoRelation::Equal,
        (Greater, Greater) => ParetoRelation::StrictlyDominates,
        (Less, Less) => ParetoRelation::StrictlyDominated,
        (Greater, Equal) | (Equal, Greater) => ParetoRelation::Dominates,
        (Less, Equal) | (Equal, Less) => ParetoRelation::Dominated,
        (Greater, Less) | (Less, Greater) => ParetoRelation::Incomparable,
    }
}

pub fn strictly_dominates(a: &PayoffVector, b: &PayoffVector) -> bool {
    a.u1 > b.u1 && a.u2 > b.u2
}

pub fn weakly_dominates(a: &PayoffVector, b: &PayoffVector) -> bool {
    a.u1 >= b.u1 && a.u2 >= b.u2
}
