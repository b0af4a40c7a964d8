//! Brick stacks, ballot sequences and the cycle lemma family, with exact
//! counts and exhaustive checks.

pub mod applications;
pub mod brickstack;
pub mod cli;
pub mod counting;
pub mod cyclelemma;
pub mod error;
pub mod seqcore;
pub mod verify;

pub use error::{Error, Result};
