//! Built-in games shipped as data files under `fixtures/`.

use crate::format::parse_game;
use crate::game::Game;

macro_rules! fixtures {
    ($($name:ident => $file:literal,)*) => {
        /// `(name, json)` for every shipped fixture.
        pub const ALL: &[(&str, &str)] = &[
            $((stringify!($name), include_str!(concat!("../fixtures/", $file))),)*
        ];

        $(
            pub fn $name() -> Game {
                parse_game(include_str!(concat!("../fixtures/", $file))).expect("shipped fixture parses")
            }
        )*
    };
}

fixtures! {
    mixed_maximin_3x3 => "mixed_maximin_3x3.json",
    ordinal_maximin_3x3 => "ordinal_maximin_3x3.json",
    coordination_failure_5x5 => "coordination_failure_5x5.json",
    unprofitable_2x2 => "unprofitable_2x2.json",
    maximin_beats_ne_2x3 => "maximin_beats_ne_2x3.json",
    prisoners_dilemma => "prisoners_dilemma.json",
    chicken => "chicken.json",
    assurance => "assurance.json",
    battle_of_the_sexes => "battle_of_the_sexes.json",
    harmony => "harmony.json",
    matching_pennies => "matching_pennies.json",
    coordination => "coordination.json",
    extension_seed_2x2 => "extension_seed_2x2.json",
    extension_seed_5x5 => "extension_seed_5x5.json",
}

/// The seven classic 2x2 games in benchmark order.
pub fn classics() -> Vec<(&'static str, Game)> {
    vec![
        ("Prisoner's Dilemma", prisoners_dilemma()),
        ("Chicken (Hawk-Dove)", chicken()),
        ("Assurance (Stag Hunt)", assurance()),
        ("Battle of the Sexes", battle_of_the_sexes()),
        ("Harmony", harmony()),
        ("Matching Pennies", matching_pennies()),
        ("Coordination", coordination()),
    ]
}

pub fn by_name(name: &str) -> Option<Game> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| parse_game(text).expect("shipped fixture parses"))
}
