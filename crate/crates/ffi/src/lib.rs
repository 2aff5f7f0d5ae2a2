//! C ABI for `maximin-core`.
//!
//! Games are opaque `MaximinGame` handles. Every function returns a
//! `MaximinStatus`; on failure `maximin_last_error` describes the problem.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with `maximin_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use maximin_core::analysis::Analysis;
use maximin_core::dominance::check_all;
use maximin_core::extensions::{self, EquilibriumParams, ExtensionParams};
use maximin_core::{census, format, rational, report, solvers, Error, Game, Player};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximinStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    PreconditionFailed = 5,
    /// A verified result did not hold. Indicates a bug.
    TheoremViolation = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximinExtensionMode {
    Maximin = 0,
    Equilibrium = 1,
}

/// Opaque game handle.
pub struct MaximinGame {
    game: Game,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Failure(MaximinStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::Parse { .. } => MaximinStatus::ParseError,
            Error::Precondition(_) => MaximinStatus::PreconditionFailed,
            _ => MaximinStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MaximinStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MaximinStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MaximinStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(MaximinStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(MaximinStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(g: *const MaximinGame) -> Result<&'a Game, Failure> {
    g.as_ref().map(|h| &h.game).ok_or_else(|| Failure(MaximinStatus::NullPointer, "game handle is null".into()))
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(MaximinStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(MaximinStatus::InvalidArgument, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn give_game(out: *mut *mut MaximinGame, game: Game) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(MaximinStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(MaximinGame { game }));
    Ok(())
}

fn player(index: u32) -> Result<Player, Failure> {
    match index {
        1 => Ok(Player::One),
        2 => Ok(Player::Two),
        _ => Err(Failure(MaximinStatus::InvalidArgument, format!("player must be 1 or 2, got {index}"))),
    }
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn maximin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a game document (see the game file format).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_game_from_json(json: *const c_char, out: *mut *mut MaximinGame) -> MaximinStatus {
    guard(|| {
        let g = format::parse_game(text(json, "json")?)?;
        give_game(out, g)
    })
}

/// # Safety
/// `game` must come from this library and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn maximin_game_free(game: *mut MaximinGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// # Safety
/// `game` must be a live handle; `rows` and `cols` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_game_shape(game: *const MaximinGame, rows: *mut usize, cols: *mut usize) -> MaximinStatus {
    guard(|| {
        let g = handle(game)?;
        if rows.is_null() || cols.is_null() {
            return Err(Failure(MaximinStatus::NullPointer, "output pointer is null".into()));
        }
        *rows = g.rows();
        *cols = g.cols();
        Ok(())
    })
}

/// Canonical game document.
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_game_to_json(game: *const MaximinGame, out: *mut *mut c_char) -> MaximinStatus {
    guard(|| give_string(out, format::write_game(handle(game)?)))
}

/// Security level of player 1 or 2 as an exact `"p/q"` string.
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_security_level(game: *const MaximinGame, player_index: u32, out: *mut *mut c_char) -> MaximinStatus {
    guard(|| {
        let v = solvers::security_level(handle(game)?, player(player_index)?);
        give_string(out, rational::to_exact(&v))
    })
}

/// Full analysis report as JSON. Returns `TheoremViolation` (with the report
/// still written) if any characterization check fails.
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_analyze_json(game: *const MaximinGame, out: *mut *mut c_char) -> MaximinStatus {
    guard(|| {
        let a = Analysis::new(handle(game)?);
        let props = check_all(&a);
        give_string(out, report::analysis(&a, &props).to_string())?;
        if props.all_passed() {
            Ok(())
        } else {
            Err(Failure(MaximinStatus::TheoremViolation, "a characterization check failed".into()))
        }
    })
}

/// Builds an extension. `params_json` may be NULL for canonical parameters.
/// On success `out_game` receives a new handle and `out_certificate` the
/// certificate JSON; `TheoremViolation` means the certificate failed (both
/// outputs are still written).
///
/// # Safety
/// `game` must be a live handle, `params_json` NULL or NUL-terminated, and
/// both output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_extend(
    game: *const MaximinGame,
    mode: MaximinExtensionMode,
    params_json: *const c_char,
    out_game: *mut *mut MaximinGame,
    out_certificate: *mut *mut c_char,
) -> MaximinStatus {
    guard(|| {
        let g = handle(game)?;
        let params = if params_json.is_null() { None } else { Some(text(params_json, "params_json")?) };
        let bad = |e: serde_json::Error| Failure(MaximinStatus::ParseError, format!("invalid parameters: {e}"));
        let res = match mode {
            MaximinExtensionMode::Maximin => {
                let p: ExtensionParams = match params {
                    Some(s) => serde_json::from_str(s).map_err(bad)?,
                    None => extensions::canonical_params(g),
                };
                extensions::maximin_extension(g, &p)?
            }
            MaximinExtensionMode::Equilibrium => {
                let p: EquilibriumParams = match params {
                    Some(s) => serde_json::from_str(s).map_err(bad)?,
                    None => extensions::canonical_equilibrium_params(g),
                };
                extensions::equilibrium_extension_with(g, &p)?
            }
        };
        let cert = report::extension(&res)["certificate"].to_string();
        let holds = res.certificate.holds();
        give_string(out_certificate, cert)?;
        give_game(out_game, res.extended)?;
        if holds {
            Ok(())
        } else {
            Err(Failure(MaximinStatus::TheoremViolation, "extension certificate failed".into()))
        }
    })
}

/// Runs the ordinal 3x3 census. `threads == 0` uses the default pool.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn maximin_census_json(threads: u32, out: *mut *mut c_char) -> MaximinStatus {
    guard(|| {
        let r = census::run_census((threads > 0).then_some(threads as usize));
        give_string(out, report::census(&r).to_string())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn maximin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
