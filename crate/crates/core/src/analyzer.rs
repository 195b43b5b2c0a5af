//! Negative-sentence detection and classification.
//!
//! A sentence is classified by which of its main-clause subject, predicate
//! and object are negated (six structures), and by the kind of negation:
//! general, partial, intensified or double. Negative words swallowed by an
//! idiom ("for no reason") do not count.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::english::{AnnotatedEnglishSentence, Pos, Role, Slot};
use crate::error::Result;
use crate::lexicon::{Lexicons, NegativePos, NegativeWordEntry, TriggerScope};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectedNegative {
    pub entry: NegativeWordEntry,
    pub slot: Slot,
    /// Token index of the first word.
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Structure {
    #[serde(rename = "NS-AP-AO")]
    NsApAo,
    #[serde(rename = "AS-NP-AO")]
    AsNpAo,
    #[serde(rename = "AS-AP-NO")]
    AsApNo,
    #[serde(rename = "NS-NP-AO")]
    NsNpAo,
    #[serde(rename = "NS-AP-NO")]
    NsApNo,
    #[serde(rename = "AS-NP-NO")]
    AsNpNo,
    /// Subject, predicate and object all negated; none of the six.
    #[serde(rename = "Unmatched")]
    Unmatched,
    #[serde(rename = "NonNegative")]
    NonNegative,
}

impl Structure {
    /// The six negative structures in report column order.
    pub const SIX: [Structure; 6] = [
        Structure::NsApAo,
        Structure::AsNpAo,
        Structure::AsApNo,
        Structure::NsNpAo,
        Structure::NsApNo,
        Structure::AsNpNo,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Structure::NsApAo => "NS-AP-AO",
            Structure::AsNpAo => "AS-NP-AO",
            Structure::AsApNo => "AS-AP-NO",
            Structure::NsNpAo => "NS-NP-AO",
            Structure::NsApNo => "NS-AP-NO",
            Structure::AsNpNo => "AS-NP-NO",
            Structure::Unmatched => "Unmatched",
            Structure::NonNegative => "NonNegative",
        }
    }

    fn from_flags(subject: bool, predicate: bool, object: bool) -> Structure {
        match (subject, predicate, object) {
            (false, false, false) => Structure::NonNegative,
            (true, false, false) => Structure::NsApAo,
            (true, true, false) => Structure::NsNpAo,
            (true, false, true) => Structure::NsApNo,
            (false, false, true) => Structure::AsApNo,
            (false, true, false) => Structure::AsNpAo,
            (false, true, true) => Structure::AsNpNo,
            (true, true, true) => Structure::Unmatched,
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NegationKind {
    General,
    Partial,
    Intensified,
    Double,
    NonNegative,
}

impl NegationKind {
    pub const ALL: [NegationKind; 5] = [
        NegationKind::General,
        NegationKind::Partial,
        NegationKind::Intensified,
        NegationKind::Double,
        NegationKind::NonNegative,
    ];
}

impl fmt::Display for NegationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialTrigger {
    pub word: String,
    pub index: usize,
    /// Slot of the negated constituent the trigger was found in.
    pub slot: Slot,
    pub scope: TriggerScope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegationAnalysis {
    pub negatives: Vec<DetectedNegative>,
    pub structure: Structure,
    pub kind: NegationKind,
    pub partial_trigger: Option<PartialTrigger>,
    pub quasi: bool,
    /// A modal auxiliary carries the negation ("will not", "can not").
    pub modal_negated: bool,
    /// Names of idioms that consumed negative words.
    pub idioms: Vec<String>,
}

impl NegationAnalysis {
    pub fn is_negative(&self) -> bool {
        self.kind != NegationKind::NonNegative
    }

    /// Check the structure/kind consistency rules. Returns a description of
    /// the first violated rule.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.negatives.len();
        if (self.kind == NegationKind::Double) != (n >= 2) {
            return Err(format!("kind {} with {n} negatives", self.kind));
        }
        let non_negative = self.kind == NegationKind::NonNegative;
        if non_negative != (self.structure == Structure::NonNegative) || non_negative != (n == 0) {
            return Err(format!(
                "kind {} / structure {} with {n} negatives",
                self.kind, self.structure
            ));
        }
        if self.kind == NegationKind::General
            && (self.structure != Structure::AsNpAo || self.partial_trigger.is_some())
        {
            return Err("general negation outside AS-NP-AO or with a trigger".into());
        }
        if self.kind == NegationKind::Partial && self.partial_trigger.is_none() {
            return Err("partial negation without a trigger".into());
        }
        if self.quasi != self.negatives.iter().any(|d| d.entry.quasi) {
            return Err("quasi flag disagrees with detected entries".into());
        }
        Ok(())
    }
}

/// Find the main-clause negative words and the slots they negate.
/// Returns the detected words and the names of idioms that consumed others.
pub fn detect_negatives(
    lexicons: &Lexicons,
    sentence: &AnnotatedEnglishSentence,
) -> (Vec<DetectedNegative>, Vec<String>) {
    let words = sentence.normalized_words();
    let mut found = Vec::new();
    let mut idioms = Vec::new();
    let mut i = 0;
    while i < words.len() {
        let token = &sentence.tokens[i];
        let head_pos = NegativePos::from_tag(token.pos);
        let Some(entry) = lexicons.lookup_negative_tagged(&words[i..], head_pos) else {
            i += 1;
            continue;
        };
        let len = entry.words.len();
        if let Some(idiom) = lexicons.match_idiom(&words, i) {
            if !idioms.contains(&idiom.name) {
                idioms.push(idiom.name.clone());
            }
        } else if let Some(slot) = Slot::from_role(token.role) {
            found.push(DetectedNegative {
                entry: entry.clone(),
                slot,
                index: i,
            });
        }
        i += len;
    }
    (found, idioms)
}

pub fn classify_structure(negatives: &[DetectedNegative]) -> Structure {
    let subject = negatives.iter().any(|d| d.slot == Slot::Subject);
    let predicate = negatives.iter().any(|d| d.slot.negates_predicate());
    let object = negatives.iter().any(|d| d.slot == Slot::Object);
    Structure::from_flags(subject, predicate, object)
}

/// First trigger word inside a negated subject/object, or inside the
/// predicate span or immediately after the word negating the predicate.
pub fn detect_partial_trigger(
    lexicons: &Lexicons,
    sentence: &AnnotatedEnglishSentence,
    negatives: &[DetectedNegative],
) -> Option<PartialTrigger> {
    let tokens = &sentence.tokens;
    for neg in negatives {
        let neg_end = neg.index + neg.entry.words.len();
        let role = tokens[neg.index].role;
        let in_scope = |i: usize| -> bool {
            if i >= neg.index && i < neg_end {
                return false;
            }
            match neg.slot {
                Slot::Subject | Slot::Object => tokens[i].role == role,
                Slot::Predicate | Slot::Adverbial => {
                    matches!(tokens[i].role, Role::Predicate | Role::Auxiliary) || i == neg_end
                }
            }
        };
        for (i, token) in tokens.iter().enumerate() {
            if !in_scope(i) {
                continue;
            }
            if let Some(scope) = lexicons.trigger(&token.surface) {
                return Some(PartialTrigger {
                    word: token.normalized(),
                    index: i,
                    slot: neg.slot,
                    scope,
                });
            }
        }
    }
    None
}

/// Precedence: NonNegative, Double, Partial, then General for pure
/// predicate negation and Intensified for a negated subject or object.
pub fn classify_kind(
    structure: Structure,
    negatives: &[DetectedNegative],
    trigger: Option<&PartialTrigger>,
) -> NegationKind {
    if structure == Structure::NonNegative || negatives.is_empty() {
        NegationKind::NonNegative
    } else if negatives.len() >= 2 {
        NegationKind::Double
    } else if trigger.is_some() {
        NegationKind::Partial
    } else if structure == Structure::AsNpAo {
        NegationKind::General
    } else {
        NegationKind::Intensified
    }
}

fn modal_negated(sentence: &AnnotatedEnglishSentence, negatives: &[DetectedNegative]) -> bool {
    negatives.iter().any(|d| {
        d.slot.negates_predicate()
            && d.index > 0
            && sentence.tokens[d.index - 1].pos == Pos::Modal
    })
}

/// Full analysis of one sentence.
pub fn analyze(lexicons: &Lexicons, sentence: &AnnotatedEnglishSentence) -> Result<NegationAnalysis> {
    sentence.validate()?;
    let (negatives, idioms) = detect_negatives(lexicons, sentence);
    let structure = classify_structure(&negatives);
    let trigger = if negatives.is_empty() {
        None
    } else {
        detect_partial_trigger(lexicons, sentence, &negatives)
    };
    let kind = classify_kind(structure, &negatives, trigger.as_ref());
    let analysis = NegationAnalysis {
        quasi: negatives.iter().any(|d| d.entry.quasi),
        modal_negated: modal_negated(sentence, &negatives),
        negatives,
        structure,
        kind,
        partial_trigger: trigger,
        idioms,
    };
    debug_assert_eq!(analysis.check_invariants(), Ok(()));
    Ok(analysis)
}
