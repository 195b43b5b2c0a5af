//! Shallow-annotated English input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pos {
    Noun,
    Pronoun,
    Verb,
    Auxiliary,
    Modal,
    Adverb,
    Adjective,
    Determiner,
    Preposition,
    Conjunction,
    Numeral,
    Punctuation,
    Other,
}

/// Grammatical role of a token within the main clause. Tokens of
/// subordinate or coordinated clauses carry `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Subject,
    Predicate,
    Auxiliary,
    Object,
    Adverbial,
    Attribute,
    Other,
}

/// Main-clause position a negative word negates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    Subject,
    Predicate,
    Object,
    Adverbial,
}

impl Slot {
    /// Slot for a negative word heading or modifying a token with `role`.
    /// Attributes and out-of-clause tokens are not negation sites.
    pub fn from_role(role: Role) -> Option<Slot> {
        match role {
            Role::Subject => Some(Slot::Subject),
            Role::Object => Some(Slot::Object),
            Role::Predicate | Role::Auxiliary => Some(Slot::Predicate),
            Role::Adverbial => Some(Slot::Adverbial),
            Role::Attribute | Role::Other => None,
        }
    }

    /// Adverbial negation counts as predicate negation for the
    /// subject/predicate/object structure.
    pub fn negates_predicate(self) -> bool {
        matches!(self, Slot::Predicate | Slot::Adverbial)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(String, Pos, Role)", into = "(String, Pos, Role)")]
pub struct Token {
    pub surface: String,
    pub pos: Pos,
    pub role: Role,
}

impl Token {
    pub fn new(surface: impl Into<String>, pos: Pos, role: Role) -> Self {
        Token {
            surface: surface.into(),
            pos,
            role,
        }
    }

    /// Lowercased surface with clitic negation spelled out.
    pub fn normalized(&self) -> String {
        normalize_word(&self.surface)
    }
}

pub fn normalize_word(word: &str) -> String {
    let lower = word.to_lowercase();
    match lower.as_str() {
        "n't" | "nt" => "not".to_owned(),
        _ => lower,
    }
}

impl From<(String, Pos, Role)> for Token {
    fn from((surface, pos, role): (String, Pos, Role)) -> Self {
        Token { surface, pos, role }
    }
}

impl From<Token> for (String, Pos, Role) {
    fn from(t: Token) -> Self {
        (t.surface, t.pos, t.role)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerbKind {
    Copular,
    Lexical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnglishTense {
    Present,
    Past,
    Future,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Aspect {
    Simple,
    Perfect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateFeatures {
    pub verb_kind: VerbKind,
    pub tense: EnglishTense,
    pub aspect: Aspect,
    #[serde(default)]
    pub modal_can: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedEnglishSentence {
    pub tokens: Vec<Token>,
    pub features: PredicateFeatures,
}

impl AnnotatedEnglishSentence {
    /// Exactly one contiguous run of `Predicate` tokens.
    pub fn validate(&self) -> Result<()> {
        let spans = self
            .tokens
            .iter()
            .enumerate()
            .filter(|(i, t)| {
                t.role == Role::Predicate && (*i == 0 || self.tokens[i - 1].role != Role::Predicate)
            })
            .count();
        match spans {
            1 => Ok(()),
            0 => Err(Error::MalformedSentence("no predicate span".into())),
            n => Err(Error::MalformedSentence(format!(
                "{n} predicate spans, expected one contiguous span"
            ))),
        }
    }

    pub fn text(&self) -> String {
        self.tokens
            .iter()
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn normalized_words(&self) -> Vec<String> {
        self.tokens.iter().map(Token::normalized).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sentence(tokens: Vec<Token>) -> AnnotatedEnglishSentence {
        AnnotatedEnglishSentence {
            tokens,
            features: PredicateFeatures {
                verb_kind: VerbKind::Lexical,
                tense: EnglishTense::Past,
                aspect: Aspect::Simple,
                modal_can: false,
            },
        }
    }

    #[test]
    fn predicate_span_must_be_single() {
        let ok = sentence(vec![
            Token::new("We", Pos::Pronoun, Role::Subject),
            Token::new("said", Pos::Verb, Role::Predicate),
            Token::new("nothing", Pos::Pronoun, Role::Object),
        ]);
        assert!(ok.validate().is_ok());

        let split = sentence(vec![
            Token::new("is", Pos::Verb, Role::Predicate),
            Token::new("not", Pos::Adverb, Role::Adverbial),
            Token::new("true", Pos::Adjective, Role::Predicate),
        ]);
        assert!(split.validate().is_err());

        let none = sentence(vec![Token::new("Nothing", Pos::Pronoun, Role::Subject)]);
        assert!(none.validate().is_err());
    }

    #[test]
    fn token_serializes_as_triple() {
        let t = Token::new("No", Pos::Determiner, Role::Subject);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"["No","Determiner","Subject"]"#);
        let back: Token = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn clitic_normalization() {
        assert_eq!(normalize_word("n't"), "not");
        assert_eq!(normalize_word("Never"), "never");
    }
}
