use std::path::PathBuf;

use thiserror::Error;

use crate::hangul::{Mood, SuffixPattern, Tense};

#[derive(Debug, Error)]
pub enum Error {
    #[error("'{0}' is not a precomposed Hangul syllable")]
    NotHangul(char),

    #[error("empty word")]
    EmptyWord,

    #[error("unsupported conjugation: pattern {pattern}, tense {tense}, mood {mood}")]
    UnsupportedConjugation {
        pattern: SuffixPattern,
        tense: Tense,
        mood: Mood,
    },

    #[error("bad template '{template}': {reason}")]
    Template { template: String, reason: String },

    #[error("{path}:{line}: {reason}")]
    Table {
        path: String,
        line: u64,
        reason: String,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed sentence: {0}")]
    MalformedSentence(String),

    #[error("malformed frame: {0}")]
    MalformedFrame(String),

    #[error("cannot plan a non-negative sentence")]
    NonNegativePlan,

    #[error("constituent {index} ('{text}') has no particle slot to rewrite")]
    NoParticleSlot { index: usize, text: String },

    #[error("record {id}: {reason}")]
    Record { id: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
