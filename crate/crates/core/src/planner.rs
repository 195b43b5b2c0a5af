//! Transfer planning: from a negation analysis and a Korean affirmative
//! frame to the concrete edits that negate the frame.
//!
//! Suffix decision order. The order is inferred from worked examples; no
//! stated algorithm fixes it.
//!
//! 1. partial negation on a modal, or with a degree trigger: ~지는 않다,
//!    or ~수는 없다 when the frame expresses ability
//! 2. other partial negation: ~ㄴ 것은 아니다
//! 3. a suppletive predicate for the frame's context
//! 4. a suffix override carried by the negative word
//! 5. copular noun predicate: ~이 아니다, or ~이 없다 in a possession context
//! 6. ability (can): ~수 없다
//! 7. perfect aspect: ~ㄴ 적이 없다
//! 8. the stem's collocation: ~지 않다 or ~지 못하다
//!
//! Partial negation stops at step 2 so its suffix always marks the partial
//! reading.

use serde::{Deserialize, Serialize};

use crate::analyzer::{DetectedNegative, NegationAnalysis, NegationKind};
use crate::english::Slot;
use crate::error::{Error, Result};
use crate::hangul::{Mood, ParticleClass, StemClass, SuffixPattern, Tense};
use crate::korean::{AdverbPosition, ConstituentRole, ContextTag, KoreanAffirmativeFrame, PredicateClass};
use crate::lexicon::{Lexicons, NegativePos, TriggerScope};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RewriteAction {
    /// Swap the particle, keeping the noun phrase.
    SetParticle(ParticleClass),
    /// Replace the noun phrase with a negative-polarity form and particle.
    Replace { text: String, particle: ParticleClass },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParticleRewrite {
    pub index: usize,
    pub action: RewriteAction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdverbInsert {
    pub adverb: String,
    pub position: AdverbPosition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suppletion {
    pub stem: String,
    pub class: StemClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformPlan {
    pub suffix: SuffixPattern,
    pub suppletion: Option<Suppletion>,
    pub particle_rewrites: Vec<ParticleRewrite>,
    pub adverb_inserts: Vec<AdverbInsert>,
    pub tense: Tense,
    pub mood: Mood,
}

impl TransformPlan {
    /// Exactly one negation locus, and partial-only patterns iff partial.
    pub fn check_invariants(&self, kind: NegationKind) -> std::result::Result<(), String> {
        if self.suppletion.is_some() != (self.suffix == SuffixPattern::Suppletive) {
            return Err(format!(
                "suffix {} with suppletion {:?}",
                self.suffix, self.suppletion
            ));
        }
        match kind {
            NegationKind::Partial if !self.suffix.is_partial() => {
                Err(format!("partial negation planned with {}", self.suffix))
            }
            NegationKind::General | NegationKind::Intensified | NegationKind::Double
                if self.suffix.is_partial() =>
            {
                Err(format!("{kind} negation planned with {}", self.suffix))
            }
            NegationKind::NonNegative => Err("plan for a non-negative sentence".into()),
            _ => Ok(()),
        }
    }

    /// Number of edits the plan applies: the predicate plus each rewrite and
    /// insertion.
    pub fn component_count(&self) -> usize {
        1 + self.particle_rewrites.len() + self.adverb_inserts.len()
    }
}

fn frame_role(slot: Slot) -> Option<ConstituentRole> {
    match slot {
        Slot::Subject => Some(ConstituentRole::Subject),
        Slot::Object => Some(ConstituentRole::Object),
        Slot::Predicate | Slot::Adverbial => None,
    }
}

pub fn select_suffix(
    lexicons: &Lexicons,
    analysis: &NegationAnalysis,
    frame: &KoreanAffirmativeFrame,
) -> Result<(SuffixPattern, Option<Suppletion>)> {
    let pred = &frame.predicate;
    match analysis.kind {
        NegationKind::NonNegative => return Err(Error::NonNegativePlan),
        NegationKind::Partial => {
            let degree = analysis
                .partial_trigger
                .as_ref()
                .is_some_and(|t| t.scope == TriggerScope::Degree);
            let pattern = if analysis.modal_negated || degree {
                if pred.modal_can {
                    SuffixPattern::SuNeunEopda
                } else {
                    SuffixPattern::JiNeunAnta
                }
            } else {
                SuffixPattern::NGeosEunAnida
            };
            return Ok((pattern, None));
        }
        _ => {}
    }
    if let Some(pair) = lexicons.suppletive_form(&pred.stem, frame.context) {
        let suppletion = Suppletion {
            stem: pair.replacement_stem().to_owned(),
            class: pair.class,
        };
        return Ok((SuffixPattern::Suppletive, Some(suppletion)));
    }
    if let Some(pattern) = analysis
        .negatives
        .iter()
        .find_map(|d| d.entry.suffix_override)
        .filter(|p| !p.is_partial())
    {
        return Ok((pattern, None));
    }
    let pattern = match pred.class {
        PredicateClass::CopularNoun if frame.context == ContextTag::Possession => SuffixPattern::IEopda,
        PredicateClass::CopularNoun => SuffixPattern::IAnida,
        _ if pred.modal_can => SuffixPattern::SuEopda,
        PredicateClass::LexicalVerb if pred.perfect => SuffixPattern::NJeokIEopda,
        _ => lexicons.collocation_class(&pred.stem).pattern(),
    };
    Ok((pattern, None))
}

/// Whether a negated subject/object is rendered through a 도-phrase: always
/// for negative pronouns, and for other negatives when the frame supplies a
/// negative-polarity form for the constituent.
fn intensified_rewrite(
    negative: &DetectedNegative,
    frame: &KoreanAffirmativeFrame,
) -> Option<ParticleRewrite> {
    if negative.entry.quasi {
        return None;
    }
    let index = frame.find_role(frame_role(negative.slot)?)?;
    let constituent = &frame.constituents[index];
    let text = match (constituent.npi_text(), negative.entry.pos) {
        (Some(npi), _) => npi,
        (None, NegativePos::Pronoun) => negative
            .entry
            .korean_form
            .clone()
            .unwrap_or_else(|| constituent.text.clone()),
        (None, _) => return None,
    };
    Some(ParticleRewrite {
        index,
        action: RewriteAction::Replace {
            text,
            particle: ParticleClass::Additive,
        },
    })
}

pub fn plan_particles(analysis: &NegationAnalysis, frame: &KoreanAffirmativeFrame) -> Vec<ParticleRewrite> {
    match analysis.kind {
        NegationKind::Partial => {
            // Only a quantified subject ("not all my friends") moves from
            // topic to nominative.
            let Some(trigger) = &analysis.partial_trigger else {
                return Vec::new();
            };
            if trigger.slot != Slot::Subject {
                return Vec::new();
            }
            frame
                .find_role(ConstituentRole::Subject)
                .filter(|&i| frame.constituents[i].particle == Some(ParticleClass::Topic))
                .map(|index| ParticleRewrite {
                    index,
                    action: RewriteAction::SetParticle(ParticleClass::Nominative),
                })
                .into_iter()
                .collect()
        }
        NegationKind::Intensified | NegationKind::Double => {
            let mut rewrites: Vec<ParticleRewrite> = Vec::new();
            for negative in &analysis.negatives {
                if let Some(rw) = intensified_rewrite(negative, frame) {
                    if !rewrites.iter().any(|r| r.index == rw.index) {
                        rewrites.push(rw);
                    }
                }
            }
            rewrites
        }
        NegationKind::General | NegationKind::NonNegative => Vec::new(),
    }
}

/// Related adverb per negative word, tagged with the slot it came from.
/// In a double negative the predicate's own negative word is absorbed into
/// the single Korean negation and contributes nothing.
pub fn plan_adverbs(
    lexicons: &Lexicons,
    analysis: &NegationAnalysis,
    words: &[String],
) -> Vec<(Slot, AdverbInsert)> {
    let mut out: Vec<(Slot, AdverbInsert)> = Vec::new();
    for negative in &analysis.negatives {
        if analysis.kind == NegationKind::Double && negative.slot.negates_predicate() {
            continue;
        }
        if let Some((adverb, position)) = lexicons.related_adverb(&negative.entry, negative.slot, words) {
            if !out.iter().any(|(_, a)| a.adverb == adverb && a.position == position) {
                out.push((negative.slot, AdverbInsert { adverb, position }));
            }
        }
    }
    out
}

pub fn plan(
    lexicons: &Lexicons,
    analysis: &NegationAnalysis,
    words: &[String],
    frame: &KoreanAffirmativeFrame,
) -> Result<TransformPlan> {
    frame.validate()?;
    let (suffix, suppletion) = select_suffix(lexicons, analysis, frame)?;
    let particle_rewrites = plan_particles(analysis, frame);

    let rewritten_roles: Vec<ConstituentRole> = particle_rewrites
        .iter()
        .filter(|r| matches!(r.action, RewriteAction::Replace { .. }))
        .map(|r| frame.constituents[r.index].role)
        .collect();
    let subject = frame.find_role(ConstituentRole::Subject);
    let mut adverb_inserts = Vec::new();
    for (slot, mut insert) in plan_adverbs(lexicons, analysis, words) {
        // A 도-phrase already carries the intensification.
        if frame_role(slot).is_some_and(|r| rewritten_roles.contains(&r)) {
            continue;
        }
        // Quasi-negative subject of an action: "거의 모든 N이 … 못하다";
        // with an existential predicate the adverb stays before 없다.
        let quasi_subject = slot == Slot::Subject
            && analysis
                .negatives
                .iter()
                .any(|d| d.slot == Slot::Subject && d.entry.quasi && d.entry.pos == NegativePos::Determiner);
        if quasi_subject && frame.predicate.class != PredicateClass::Existential {
            if let Some(index) = subject {
                insert.adverb.push_str(" 모든");
                insert.position = AdverbPosition::BeforeConstituent(index);
            }
        }
        adverb_inserts.push(insert);
    }

    let plan = TransformPlan {
        suffix,
        suppletion,
        particle_rewrites,
        adverb_inserts,
        tense: frame.predicate.conjugation_tense(),
        mood: frame.predicate.mood,
    };
    debug_assert_eq!(plan.check_invariants(analysis.kind), Ok(()));
    Ok(plan)
}
