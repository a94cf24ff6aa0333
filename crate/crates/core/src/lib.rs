//! Hanoi Towers group action on the ternary tree, twin-tower solvers and
//! exhaustive verification at desk scale.

pub mod cli;
pub mod error;
pub mod graphs;
pub mod group;
pub mod solvers;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Config, CoupledConfig, Move, MoveSeq, Order, Peg, PegPerm};
