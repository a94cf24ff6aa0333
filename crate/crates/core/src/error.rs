use thiserror::Error;

use crate::words::Move;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid peg letter {0:?} (expected 0, 1 or 2)")]
    InvalidPeg(char),
    #[error("invalid move letter {0:?} (expected a, b or c)")]
    InvalidMove(char),
    #[error("malformed coupled configuration {0:?} (expected \"top,bottom\")")]
    MalformedCoupled(String),
    #[error("configurations have different lengths ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("incompatible coupled configurations: common prefix lengths {from} and {to} differ")]
    Incompatible { from: usize, to: usize },
    #[error("coupled configuration {0} is not basic")]
    NotBasic(String),
    #[error("state space of {needed} entries exceeds the budget of {budget}")]
    CapacityExceeded { needed: u64, budget: u64 },
    #[error("word {0} does not lie in the Apollonian subgroup")]
    NotInA(String),
    #[error("word {0} contains adjacent equal letters")]
    NotSquareFree(String),
    #[error("syllable {0} matches no lifting row")]
    UnclassifiedSyllable(String),
    #[error("sequence {word} does not map {from} to {to}")]
    NotAPath { word: String, from: String, to: String },
    #[error("junction square at corner: {0} adjacent to {1}")]
    JunctionSquare(String, Move),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("distance cache: {0}")]
    Cache(String),
    #[error("io: {0}")]
    Io(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
