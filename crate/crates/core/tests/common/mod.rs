#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;

use negation_transfer::analyzer::{analyze, NegationAnalysis};
use negation_transfer::corpus::{load_records, TransferRecord};
use negation_transfer::english::{
    Aspect, AnnotatedEnglishSentence, EnglishTense, Pos, PredicateFeatures, Role, Token, VerbKind,
};
use negation_transfer::generator::{realize, RealizedSentence};
use negation_transfer::hangul::{Mood, ParticleClass, Tense};
use negation_transfer::korean::{
    Constituent, ConstituentRole, ContextTag, KoreanAffirmativeFrame, Predicate, PredicateClass,
};
use negation_transfer::lexicon::Lexicons;
use negation_transfer::planner::{plan, TransformPlan};
use negation_transfer::Result;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/corpus").join(name)
}

pub fn gold() -> Vec<TransferRecord> {
    load_records(&corpus_path("gold.jsonl")).expect("gold corpus loads")
}

pub fn variants() -> Vec<TransferRecord> {
    load_records(&corpus_path("variants.jsonl")).expect("variant corpus loads")
}

/// Korean negation morphemes, including the suppletive 모르다 forms.
const NEGATION_MORPHEMES: [&str; 9] = ["않", "못", "아니", "아닐", "없", "모르", "모른", "모를", "몰"];

pub fn negation_morphemes(text: &str) -> usize {
    NEGATION_MORPHEMES.iter().map(|m| text.matches(m).count()).sum()
}

pub struct MainClause {
    pub analysis: NegationAnalysis,
    pub plan: Option<TransformPlan>,
    pub realized: RealizedSentence,
}

pub fn run_sentence(
    lex: &Lexicons,
    english: &AnnotatedEnglishSentence,
    frame: &KoreanAffirmativeFrame,
    clauses: &[String],
) -> Result<MainClause> {
    let analysis = analyze(lex, english)?;
    let plan = if analysis.is_negative() {
        Some(plan(lex, &analysis, &english.normalized_words(), frame)?)
    } else {
        None
    };
    let realized = realize(lex, frame, plan.as_ref(), clauses)?;
    Ok(MainClause { analysis, plan, realized })
}

/// The main clause of a record, with its subordinate clauses realized first.
pub fn run_record(lex: &Lexicons, record: &TransferRecord) -> Result<MainClause> {
    let mut clauses = Vec::new();
    for clause in &record.clauses {
        clauses.push(run_sentence(lex, &clause.english, &clause.frame, &[])?.realized.text);
    }
    run_sentence(lex, &record.english, &record.frame, &clauses)
}

/// Affirmative rendering built by hand: constituents with their particles,
/// then the stored affirmative predicate.
pub fn manual_passthrough(frame: &KoreanAffirmativeFrame) -> String {
    let mut words = Vec::new();
    let mut complement = String::new();
    for c in &frame.constituents {
        if c.role == ConstituentRole::PredicateComplement {
            complement = c.text.clone();
            continue;
        }
        let mut w = c.text.clone();
        if let Some(p) = c.particle {
            let last = w.chars().last().unwrap() as u32 - 0xAC00;
            let closed = last % 28 != 0;
            w.push_str(match (p, closed) {
                (ParticleClass::Topic, false) => "는",
                (ParticleClass::Topic, true) => "은",
                (ParticleClass::Nominative, false) => "가",
                (ParticleClass::Nominative, true) => "이",
                (ParticleClass::Accusative, false) => "를",
                (ParticleClass::Accusative, true) => "을",
                (ParticleClass::Additive, _) => "도",
                (ParticleClass::Comitative, false) => "와",
                (ParticleClass::Comitative, true) => "과",
            });
        }
        words.push(w);
    }
    words.push(format!("{complement}{}", frame.predicate.affirmative.as_deref().unwrap_or("")));
    words.join(" ") + "."
}

// ---- randomized slot / trigger / negative-word combinations ----

fn tok(spec: &str) -> Vec<Token> {
    spec.split_whitespace()
        .map(|t| {
            let mut it = t.rsplitn(3, '/');
            let role = it.next().unwrap();
            let pos = it.next().unwrap();
            let word = it.next().unwrap();
            let pos = match pos {
                "N" => Pos::Noun,
                "PRP" => Pos::Pronoun,
                "V" => Pos::Verb,
                "AUX" => Pos::Auxiliary,
                "MD" => Pos::Modal,
                "RB" => Pos::Adverb,
                "JJ" => Pos::Adjective,
                "DT" => Pos::Determiner,
                "IN" => Pos::Preposition,
                "CC" => Pos::Conjunction,
                _ => Pos::Other,
            };
            let role = match role {
                "S" => Role::Subject,
                "P" => Role::Predicate,
                "AUX" => Role::Auxiliary,
                "O" => Role::Object,
                "A" => Role::Adverbial,
                _ => Role::Other,
            };
            Token::new(word, pos, role)
        })
        .collect()
}

const SUBJECTS: [&str; 10] = [
    "he/PRP/S",
    "nobody/PRP/S",
    "no/DT/S one/PRP/S",
    "no/DT/S student/N/S",
    "few/DT/S students/N/S",
    "not/RB/S all/DT/S students/N/S",
    "not/RB/S much/PRP/S",
    "none/PRP/S of/IN/S them/PRP/S",
    "little/PRP/S",
    "every/DT/S student/N/S",
];

const PREDICATE_NEGATIONS: [&str; 8] = [
    "",
    "does/AUX/AUX not/RB/P",
    "never/RB/P",
    "can/MD/AUX not/RB/P",
    "will/MD/AUX not/RB/P",
    "can/MD/AUX hardly/RB/P",
    "has/AUX/AUX never/RB/P",
    "is/AUX/AUX nothing/RB/P like/IN/P",
];

const TRIGGERS: [&str; 5] = ["", "always/RB/P", "necessarily/RB/P", "much/RB/P", "worse/JJ/P"];

const OBJECTS: [&str; 8] = [
    "",
    "it/PRP/O",
    "nothing/PRP/O",
    "none/PRP/O of/IN/O them/PRP/O",
    "little/DT/O interest/N/O",
    "no/DT/O knowledge/N/O",
    "all/DT/O answers/N/O",
    "little/PRP/O or/CC/O nothing/PRP/O",
];

const ADVERBIALS: [&str; 5] = [
    "",
    "nowhere/RB/A",
    "for/IN/A no/DT/A reason/N/A",
    "at/IN/A all/DT/A",
    "there/RB/A",
];

const STEMS: [(&str, PredicateClass); 12] = [
    ("믿", PredicateClass::LexicalVerb),
    ("가", PredicateClass::LexicalVerb),
    ("달성하", PredicateClass::LexicalVerb),
    ("알", PredicateClass::LexicalVerb),
    ("듣", PredicateClass::LexicalVerb),
    ("읽", PredicateClass::LexicalVerb),
    ("영향을 받", PredicateClass::LexicalVerb),
    ("좋", PredicateClass::Adjective),
    ("비슷하", PredicateClass::Adjective),
    ("있", PredicateClass::Existential),
    ("학생", PredicateClass::CopularNoun),
    ("기적", PredicateClass::CopularNoun),
];

const CONTEXTS: [ContextTag; 4] = [
    ContextTag::General,
    ContextTag::Identity,
    ContextTag::Possession,
    ContextTag::Knowledge,
];

#[derive(Debug, Clone)]
pub struct FuzzCase {
    pub english: AnnotatedEnglishSentence,
    pub frame: KoreanAffirmativeFrame,
}

pub fn fuzz_case() -> impl Strategy<Value = FuzzCase> {
    let english = (
        0..SUBJECTS.len(),
        0..PREDICATE_NEGATIONS.len(),
        0..TRIGGERS.len(),
        0..OBJECTS.len(),
        0..ADVERBIALS.len(),
        0..3usize,
    );
    let korean = (
        0..STEMS.len(),
        0..4usize,
        any::<bool>(),
        any::<bool>(),
        0..CONTEXTS.len(),
        any::<bool>(),
        prop::option::of(prop::sample::select(vec!["{}", "그 어떤 {}", "하나"])),
        any::<bool>(),
    );
    (english, korean).prop_map(|((s, p, t, o, a, tense), (stem, kt, perfect, can, ctx, topic, npi, with_object))| {
        let spec = [
            SUBJECTS[s],
            PREDICATE_NEGATIONS[p],
            TRIGGERS[t],
            "know/V/P",
            OBJECTS[o],
            ADVERBIALS[a],
            "./O/X",
        ]
        .join(" ");
        let english = AnnotatedEnglishSentence {
            tokens: tok(&spec),
            features: PredicateFeatures {
                verb_kind: VerbKind::Lexical,
                tense: [EnglishTense::Present, EnglishTense::Past, EnglishTense::Future][tense],
                aspect: if perfect { Aspect::Perfect } else { Aspect::Simple },
                modal_can: can,
            },
        };

        let (stem, class) = STEMS[stem];
        let subject_particle = if topic { ParticleClass::Topic } else { ParticleClass::Nominative };
        let mut subject = Constituent::new("학생들", ConstituentRole::Subject, Some(subject_particle));
        subject.npi = npi.map(str::to_owned);
        let mut constituents = vec![
            Constituent::new("어제", ConstituentRole::Adverbial, None),
            subject,
        ];
        if with_object || o != 0 {
            constituents.push(Constituent::new("그 책", ConstituentRole::Object, Some(ParticleClass::Accusative)));
        }
        let (stem, affirmative) = if class == PredicateClass::CopularNoun {
            constituents.push(Constituent::new(stem, ConstituentRole::PredicateComplement, None));
            (String::new(), "이다")
        } else {
            (stem.to_owned(), "했다")
        };
        let frame = KoreanAffirmativeFrame {
            constituents,
            predicate: Predicate {
                stem,
                class,
                tense: [Tense::Present, Tense::Past, Tense::Future, Tense::Present][kt],
                perfect,
                modal_can: can,
                mood: Mood::Final,
                affirmative: Some(affirmative.to_owned()),
            },
            context: CONTEXTS[ctx],
        };
        FuzzCase { english, frame }
    })
}
