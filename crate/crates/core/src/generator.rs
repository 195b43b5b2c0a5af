//! Surface realization of a Korean frame, negated by a transfer plan or
//! passed through unchanged.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hangul::{attach_particle, Mood, SuffixPattern};
use crate::korean::{AdverbPosition, ConstituentRole, KoreanAffirmativeFrame, PredicateClass};
use crate::lexicon::Lexicons;
use crate::planner::{RewriteAction, TransformPlan};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizedSentence {
    pub text: String,
    /// The predicate as rendered, adverbs included.
    pub predicate: String,
    /// One line per plan component that was applied.
    pub trace: Vec<String>,
}

fn render_constituent(
    frame: &KoreanAffirmativeFrame,
    index: usize,
    plan: Option<&TransformPlan>,
    clauses: &[String],
    trace: &mut Vec<String>,
) -> Result<String> {
    let c = &frame.constituents[index];
    let mut text = match c.clause {
        Some(k) => clauses
            .get(k)
            .cloned()
            .ok_or_else(|| Error::MalformedFrame(format!("constituent {index} refers to missing clause {k}")))?,
        None => c.text.clone(),
    };
    let mut particle = c.particle;
    let rewrite = plan.and_then(|p| p.particle_rewrites.iter().find(|r| r.index == index));
    if let Some(rw) = rewrite {
        if particle.is_none() {
            return Err(Error::NoParticleSlot { index, text });
        }
        match &rw.action {
            RewriteAction::SetParticle(p) => {
                trace.push(format!("particle[{index}]: {:?} -> {p:?}", c.particle.unwrap()));
                particle = Some(*p);
            }
            RewriteAction::Replace { text: t, particle: p } => {
                trace.push(format!("particle[{index}]: '{text}' -> '{t}' + {p:?}"));
                text = t.clone();
                particle = Some(*p);
            }
        }
    }
    match particle {
        Some(p) => attach_particle(&text, p),
        None => Ok(text),
    }
}

/// Realize `frame`, applying `plan` when given. `clauses` holds the already
/// realized subordinate clauses that constituents may refer to.
pub fn realize(
    lexicons: &Lexicons,
    frame: &KoreanAffirmativeFrame,
    plan: Option<&TransformPlan>,
    clauses: &[String],
) -> Result<RealizedSentence> {
    frame.validate()?;
    let mut trace = Vec::new();
    let pred = &frame.predicate;

    let mut before_predicate = Vec::new();
    let mut initial = Vec::new();
    let mut before_constituent: Vec<Vec<String>> = vec![Vec::new(); frame.constituents.len()];
    if let Some(plan) = plan {
        for insert in &plan.adverb_inserts {
            trace.push(format!("adverb: {} {:?}", insert.adverb, insert.position));
            let bucket = match insert.position {
                AdverbPosition::BeforePredicate => &mut before_predicate,
                AdverbPosition::SentenceInitial => &mut initial,
                AdverbPosition::BeforeConstituent(i) => before_constituent.get_mut(i).ok_or_else(|| {
                    Error::MalformedFrame(format!("adverb placed before missing constituent {i}"))
                })?,
            };
            bucket.push(insert.adverb.clone());
        }
    }

    let mut words: Vec<String> = initial;
    for i in 0..frame.constituents.len() {
        if frame.constituents[i].role == ConstituentRole::PredicateComplement {
            continue;
        }
        words.append(&mut before_constituent[i]);
        words.push(render_constituent(frame, i, plan, clauses, &mut trace)?);
    }

    let complement = frame.complement().map(|c| c.text.as_str());
    let predicate = match plan {
        Some(plan) => {
            let (stem, class) = match (&plan.suppletion, complement) {
                (Some(s), _) => {
                    trace.push(format!("suppletion: {} -> {}", pred.stem, s.stem));
                    (s.stem.as_str(), s.class)
                }
                (None, Some(noun)) => (noun, pred.class.stem_class()),
                (None, None) => (pred.stem.as_str(), pred.class.stem_class()),
            };
            trace.push(format!("suffix: {} {} {}", plan.suffix, plan.tense, plan.mood));
            let conjugated = lexicons
                .conjugations()
                .conjugate(stem, class, plan.suffix, plan.tense, plan.mood)?;
            conjugated.with_adverbs(&before_predicate)
        }
        None => {
            let affirmative = pred
                .affirmative
                .as_deref()
                .ok_or_else(|| Error::MalformedFrame("no affirmative form for an unnegated frame".into()))?;
            match (pred.class, complement) {
                (PredicateClass::CopularNoun, Some(noun)) => format!("{noun}{affirmative}"),
                _ => affirmative.to_owned(),
            }
        }
    };
    words.push(predicate.clone());

    let mut text = words.join(" ");
    if pred.mood == Mood::Final {
        text.push('.');
    }
    Ok(RealizedSentence { text, predicate, trace })
}

/// Substrings that identify each pattern in a realized predicate.
pub fn suffix_marker(pattern: SuffixPattern) -> &'static [&'static str] {
    match pattern {
        SuffixPattern::JiAnta => &["지 않"],
        SuffixPattern::JiMotada => &["지 못"],
        SuffixPattern::IAnida => &[" 아니"],
        SuffixPattern::IEopda => &[" 없"],
        SuffixPattern::NJeokIEopda => &["적이 "],
        SuffixPattern::NGeosEunAnida => &["것은 아니"],
        SuffixPattern::JiNeunAnta => &["지는 않"],
        SuffixPattern::SuNeunEopda => &["수는 없"],
        SuffixPattern::SuEopda => &["수 없"],
        SuffixPattern::Suppletive => &[""],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hangul::{ParticleClass, StemClass, Tense};
    use crate::korean::{Constituent, ContextTag, Predicate};
    use crate::planner::{AdverbInsert, ParticleRewrite, Suppletion};

    fn frame() -> KoreanAffirmativeFrame {
        KoreanAffirmativeFrame {
            constituents: vec![
                Constituent::new("누군가", ConstituentRole::Subject, Some(ParticleClass::Nominative)),
                Constituent::new("나의 말", ConstituentRole::Object, Some(ParticleClass::Accusative)),
            ],
            predicate: Predicate {
                stem: "듣".into(),
                class: PredicateClass::LexicalVerb,
                tense: Tense::Past,
                perfect: false,
                modal_can: false,
                mood: Mood::Final,
                affirmative: Some("들었다".into()),
            },
            context: ContextTag::General,
        }
    }

    fn plan(suffix: SuffixPattern) -> TransformPlan {
        TransformPlan {
            suffix,
            suppletion: None,
            particle_rewrites: vec![],
            adverb_inserts: vec![],
            tense: Tense::Past,
            mood: Mood::Final,
        }
    }

    #[test]
    fn passthrough_uses_affirmative() {
        let out = realize(&Lexicons::builtin(), &frame(), None, &[]).unwrap();
        assert_eq!(out.text, "누군가가 나의 말을 들었다.");
        assert!(out.trace.is_empty());
    }

    #[test]
    fn pronoun_rewrite_and_suffix() {
        let mut p = plan(SuffixPattern::JiMotada);
        p.particle_rewrites.push(ParticleRewrite {
            index: 0,
            action: RewriteAction::Replace { text: "그 누구".into(), particle: ParticleClass::Additive },
        });
        let out = realize(&Lexicons::builtin(), &frame(), Some(&p), &[]).unwrap();
        assert_eq!(out.text, "그 누구도 나의 말을 듣지 못하였다.");
        assert_eq!(out.trace.len(), p.component_count());
    }

    #[test]
    fn adverb_positions() {
        let mut p = plan(SuffixPattern::JiAnta);
        p.adverb_inserts = vec![
            AdverbInsert { adverb: "전혀".into(), position: AdverbPosition::BeforePredicate },
            AdverbInsert { adverb: "어제".into(), position: AdverbPosition::SentenceInitial },
            AdverbInsert { adverb: "거의 모든".into(), position: AdverbPosition::BeforeConstituent(1) },
        ];
        let out = realize(&Lexicons::builtin(), &frame(), Some(&p), &[]).unwrap();
        assert_eq!(out.text, "어제 누군가가 거의 모든 나의 말을 전혀 듣지 않았다.");
    }

    #[test]
    fn copular_and_suppletive() {
        let lex = Lexicons::builtin();
        let mut f = frame();
        f.predicate.class = PredicateClass::CopularNoun;
        f.predicate.stem = String::new();
        f.predicate.tense = Tense::Present;
        f.constituents = vec![
            Constituent::new("그 녀자", ConstituentRole::Subject, Some(ParticleClass::Topic)),
            Constituent::new("나의 녀동생", ConstituentRole::PredicateComplement, None),
        ];
        let mut p = plan(SuffixPattern::IAnida);
        p.tense = Tense::Present;
        assert_eq!(realize(&lex, &f, Some(&p), &[]).unwrap().text, "그 녀자는 나의 녀동생이 아니다.");
        f.predicate.affirmative = Some("이다".into());
        assert_eq!(realize(&lex, &f, None, &[]).unwrap().text, "그 녀자는 나의 녀동생이다.");

        let mut f = frame();
        f.predicate.stem = "알".into();
        f.predicate.tense = Tense::Present;
        f.constituents.truncate(1);
        let mut p = plan(SuffixPattern::Suppletive);
        p.tense = Tense::Present;
        p.suppletion = Some(Suppletion { stem: "모르".into(), class: StemClass::Verb });
        assert_eq!(realize(&lex, &f, Some(&p), &[]).unwrap().text, "누군가가 모른다.");
    }

    #[test]
    fn clause_reference_and_causal_mood() {
        let lex = Lexicons::builtin();
        let mut f = frame();
        f.constituents.insert(
            0,
            Constituent { clause: Some(0), ..Constituent::new("", ConstituentRole::Adverbial, None) },
        );
        let out = realize(&lex, &f, None, &["비가 오기때문에".to_owned()]).unwrap();
        assert!(out.text.starts_with("비가 오기때문에 누군가가"));
        assert!(realize(&lex, &f, None, &[]).is_err());

        let mut f = frame();
        f.predicate.mood = Mood::Causal;
        let mut p = plan(SuffixPattern::JiAnta);
        p.tense = Tense::Present;
        p.mood = Mood::Causal;
        let out = realize(&lex, &f, Some(&p), &[]).unwrap();
        assert_eq!(out.text, "누군가가 나의 말을 듣지 않기때문에");
    }

    #[test]
    fn rewrite_without_particle_slot() {
        let mut f = frame();
        f.constituents[0].particle = None;
        let mut p = plan(SuffixPattern::JiAnta);
        p.particle_rewrites.push(ParticleRewrite {
            index: 0,
            action: RewriteAction::SetParticle(ParticleClass::Nominative),
        });
        assert!(matches!(
            realize(&Lexicons::builtin(), &f, Some(&p), &[]),
            Err(Error::NoParticleSlot { index: 0, .. })
        ));
    }

    #[test]
    fn markers_cover_patterns() {
        for &pattern in SuffixPattern::ALL {
            assert!(!suffix_marker(pattern).is_empty());
        }
    }
}
