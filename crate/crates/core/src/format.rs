//! Game file format.
//!
//! A JSON document with three fields:
//!
//! ```json
//! {
//!   "actions_1": ["T", "B"],
//!   "actions_2": ["L", "R"],
//!   "payoffs": [
//!     [["3", "3"], ["0", "4"]],
//!     [["4", "0"], ["1", "1"]]
//!   ]
//! }
//! ```
//!
//! `payoffs[i][j]` is `[u_1, u_2]` for row action `i` against column action
//! `j`; each payoff is a string `"p"` or `"p/q"`. Errors name the offending
//! row, column and player.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::rational::{self, Rational};

fn err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn labels(doc: &serde_json::Map<String, Value>, key: &str) -> Result<Vec<String>> {
    let list = doc.get(key).ok_or_else(|| err(key, "missing field"))?;
    let list = list.as_array().ok_or_else(|| err(key, "expected a list of strings"))?;
    if list.is_empty() {
        return Err(err(key, "needs at least one action"));
    }
    let mut out: Vec<String> = Vec::with_capacity(list.len());
    for (k, v) in list.iter().enumerate() {
        let s = v.as_str().ok_or_else(|| err(format!("{key}[{}]", k + 1), "action label must be a string"))?;
        if out.iter().any(|o| o == s) {
            return Err(err(format!("{key}[{}]", k + 1), format!("duplicate action label {s:?}")));
        }
        out.push(s.to_string());
    }
    Ok(out)
}

pub fn parse_game(text: &str) -> Result<Game> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let doc = doc.as_object().ok_or_else(|| err("document", "expected an object"))?;
    for key in doc.keys() {
        if !matches!(key.as_str(), "actions_1" | "actions_2" | "payoffs") {
            return Err(err(key.as_str(), "unknown field"));
        }
    }
    let actions_1 = labels(doc, "actions_1")?;
    let actions_2 = labels(doc, "actions_2")?;
    let rows = doc.get("payoffs").ok_or_else(|| err("payoffs", "missing field"))?;
    let rows = rows.as_array().ok_or_else(|| err("payoffs", "expected an m x n array"))?;
    if rows.len() != actions_1.len() {
        return Err(err(
            "payoffs",
            format!("{} rows but actions_1 lists {} actions", rows.len(), actions_1.len()),
        ));
    }
    let mut payoffs: Vec<Vec<(Rational, Rational)>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let here = format!("row {} ({})", i + 1, actions_1[i]);
        let row = row.as_array().ok_or_else(|| err(&here, "expected a list of payoff pairs"))?;
        if row.len() != actions_2.len() {
            return Err(err(
                &here,
                format!("{} entries but actions_2 lists {} actions", row.len(), actions_2.len()),
            ));
        }
        let mut cells = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            let here = format!("row {} ({}), column {} ({})", i + 1, actions_1[i], j + 1, actions_2[j]);
            let pair = cell.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                err(&here, "expected a 2-element array [u_1, u_2]")
            })?;
            let mut parsed = Vec::with_capacity(2);
            for (p, v) in pair.iter().enumerate() {
                let here = format!("{here}, player {}", p + 1);
                let s = v.as_str().ok_or_else(|| err(&here, "payoff must be a string \"p\" or \"p/q\""))?;
                parsed.push(rational::parse(s).map_err(|e| err(&here, e.to_string()))?);
            }
            let u2 = parsed.pop().unwrap();
            let u1 = parsed.pop().unwrap();
            cells.push((u1, u2));
        }
        payoffs.push(cells);
    }
    Game::new(actions_1, actions_2, payoffs)
}

pub fn read_game(path: &std::path::Path) -> Result<Game> {
    let text = std::fs::read_to_string(path)?;
    parse_game(&text)
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn quoted_list(items: &[String]) -> String {
    items.iter().map(|s| quote(s)).collect::<Vec<_>>().join(", ")
}

/// Canonical rendering: one payoff row per line, exact `"p/q"` payoffs.
pub fn write_game(game: &Game) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"actions_1\": [{}],\n", quoted_list(game.actions(crate::Player::One))));
    out.push_str(&format!("  \"actions_2\": [{}],\n", quoted_list(game.actions(crate::Player::Two))));
    out.push_str("  \"payoffs\": [\n");
    let rows: Vec<String> = game
        .payoff_rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .map(|(a, b)| format!("[{}, {}]", quote(&rational::to_exact(a)), quote(&rational::to_exact(b))))
                .collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}
