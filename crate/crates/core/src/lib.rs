//! Rule-based transfer of English negation into Korean.
//!
//! The pipeline analyzes an annotated English sentence, plans the edits
//! that negate a Korean affirmative frame, and realizes the negated Korean
//! sentence through table-driven conjugation.

pub mod analyzer;
pub mod corpus;
pub mod english;
pub mod error;
pub mod generator;
pub mod hangul;
pub mod korean;
pub mod lexicon;
pub mod planner;

pub use error::{Error, Result};
