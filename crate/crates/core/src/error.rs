use crate::game::Player;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid game: {0}")]
    InvalidGame(String),
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("strategy belongs to player {found}, expected player {expected}")]
    WrongOwner { expected: Player, found: Player },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
