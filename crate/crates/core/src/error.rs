use thiserror::Error;

use crate::PlayerId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {{{0}, {1}}} has weight zero")]
    ZeroWeightEdge(PlayerId, PlayerId),
    #[error("edge {{{0}, {1}}} appears more than once")]
    DuplicateEdge(PlayerId, PlayerId),
    #[error("self-loop on player {0}")]
    SelfLoop(PlayerId),
    #[error("unknown player {player} (game has {players} players)")]
    UnknownPlayer { player: PlayerId, players: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid deviation: {0}")]
    InvalidDeviation(String),
    #[error("coalition cap k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },
    #[error("threshold {0} is out of range")]
    ThresholdOutOfRange(String),
    #[error("rule precondition violated: {0}")]
    RulePreconditionViolated(String),
    #[error("{players} players exceeds the enumeration size guard of {limit}")]
    SizeGuard { players: usize, limit: usize },
    #[error("player {player} has {negative} incident negative edges (at most one allowed)")]
    OneEnemyViolation { player: PlayerId, negative: usize },
    #[error("source edge {{{0}, {1}}} must have positive weight")]
    NonPositiveSourceWeight(PlayerId, PlayerId),
    #[error("source edge {{{0}, {1}}} must have integer weight")]
    NonIntegerSourceWeight(PlayerId, PlayerId),
    #[error("reduction record does not match: {0}")]
    RecordMismatch(String),
    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
