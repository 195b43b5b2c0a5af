//! Structured Korean affirmative frames.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hangul::{Mood, ParticleClass, StemClass, Tense};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstituentRole {
    Subject,
    Object,
    Adverbial,
    Attribute,
    PredicateComplement,
}

/// Semantic context used to look up suppletive negatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ContextTag {
    Identity,
    Possession,
    Knowledge,
    General,
}

impl Default for ContextTag {
    fn default() -> Self {
        ContextTag::General
    }
}

impl std::str::FromStr for ContextTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Identity" => Ok(ContextTag::Identity),
            "Possession" => Ok(ContextTag::Possession),
            "Knowledge" => Ok(ContextTag::Knowledge),
            "General" => Ok(ContextTag::General),
            other => Err(format!("unknown context tag '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PredicateClass {
    CopularNoun,
    LexicalVerb,
    Adjective,
    Existential,
}

impl PredicateClass {
    pub fn stem_class(self) -> StemClass {
        match self {
            PredicateClass::CopularNoun => StemClass::Copula,
            PredicateClass::LexicalVerb => StemClass::Verb,
            PredicateClass::Adjective | PredicateClass::Existential => StemClass::Adjective,
        }
    }
}

/// One noun phrase, adverbial or embedded clause of the frame.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    /// Surface without its particle. Empty when `clause` is set.
    #[serde(default)]
    pub text: String,
    pub role: ConstituentRole,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particle: Option<ParticleClass>,
    /// Negative-polarity rendering used when the constituent is negated,
    /// e.g. "그들중 누구" or "그 어떤 {}" (`{}` stands for `text`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub npi: Option<String>,
    /// Index into the record's subordinate clauses; the realized clause
    /// replaces `text`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause: Option<usize>,
}

impl Constituent {
    pub fn new(text: impl Into<String>, role: ConstituentRole, particle: Option<ParticleClass>) -> Self {
        Constituent {
            text: text.into(),
            role,
            particle,
            npi: None,
            clause: None,
        }
    }

    pub fn npi_text(&self) -> Option<String> {
        self.npi.as_ref().map(|n| n.replace("{}", &self.text))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicate {
    /// Pre-segmented stem (달성하, 영향을 받). Copular predicates take their
    /// stem from the complement constituent.
    pub stem: String,
    pub class: PredicateClass,
    pub tense: Tense,
    #[serde(default)]
    pub perfect: bool,
    #[serde(default)]
    pub modal_can: bool,
    #[serde(default)]
    pub mood: Mood,
    /// Conjugated affirmative surface, used verbatim when no negation
    /// is applied. Copular forms attach directly to the complement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affirmative: Option<String>,
}

impl Predicate {
    /// Tense handed to the conjugation table.
    pub fn conjugation_tense(&self) -> Tense {
        if self.perfect && self.tense == Tense::Present {
            Tense::Perfect
        } else {
            self.tense
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoreanAffirmativeFrame {
    pub constituents: Vec<Constituent>,
    pub predicate: Predicate,
    #[serde(default)]
    pub context: ContextTag,
}

impl KoreanAffirmativeFrame {
    pub fn validate(&self) -> Result<()> {
        let complements = self
            .constituents
            .iter()
            .filter(|c| c.role == ConstituentRole::PredicateComplement)
            .count();
        match (self.predicate.class, complements) {
            (PredicateClass::CopularNoun, 1) => {}
            (PredicateClass::CopularNoun, n) => {
                return Err(Error::MalformedFrame(format!(
                    "copular predicate needs exactly one complement, found {n}"
                )))
            }
            (_, 0) => {}
            (_, _) => {
                return Err(Error::MalformedFrame(
                    "complement constituent on a non-copular predicate".into(),
                ))
            }
        }
        if self.predicate.class != PredicateClass::CopularNoun && self.predicate.stem.is_empty() {
            return Err(Error::MalformedFrame("empty predicate stem".into()));
        }
        for (i, c) in self.constituents.iter().enumerate() {
            if c.text.is_empty() && c.clause.is_none() {
                return Err(Error::MalformedFrame(format!("constituent {i} is empty")));
            }
        }
        Ok(())
    }

    pub fn find_role(&self, role: ConstituentRole) -> Option<usize> {
        self.constituents.iter().position(|c| c.role == role)
    }

    pub fn complement(&self) -> Option<&Constituent> {
        self.find_role(ConstituentRole::PredicateComplement)
            .map(|i| &self.constituents[i])
    }
}

/// Where an inserted adverb goes in the realized sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AdverbPosition {
    BeforePredicate,
    SentenceInitial,
    BeforeConstituent(usize),
}
