//! Table-driven conjugation of negative predicate patterns.
//!
//! Each table row maps `(pattern, tense[, mood])` to a template such as
//! `{stem}{-l}수 없었다`. Templates are literal text interleaved with
//! morphological operations that act on whatever has been emitted so far:
//!
//! | op        | effect                                                         |
//! |-----------|----------------------------------------------------------------|
//! | `{stem}`  | the predicate stem                                             |
//! | `{-n}`    | past adnominal ㄴ/은 (copula: 인)                              |
//! | `{-l}`    | prospective ㄹ/을 (copula: 일)                                 |
//! | `{-adn}`  | present adnominal: verbs 는, adjectives ㄴ/은, copula 인       |
//! | `{-nda}`  | plain present declarative: verbs ㄴ다/는다, others 다          |
//! | `{-i}`    | 이/가 after the preceding syllable                             |
//! | `{-past}` | plain past declarative (았다/었다/하였다, 르-irregular)        |
//! | `{adv}`   | insertion point for predicate adverbs                          |

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    decompose_syllable, last_syllable, SyllableParts, LEAD_HIEUH, LEAD_RIEUL, TAIL_NIEUN,
    TAIL_RIEUL, TAIL_SSANGSIOS, VOWEL_A, VOWEL_EO, VOWEL_EU, VOWEL_I, VOWEL_O,
};
use crate::error::{Error, Result};

const BUILTIN_TABLE: &str = include_str!("../../data/lexicons/conjugations.tsv");

macro_rules! id_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn id(self) -> &'static str {
                match self {
                    $($name::$variant => stringify!($variant)),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.id())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $(stringify!($variant) => Ok($name::$variant),)+
                    other => Err(format!("unknown {} '{}'", stringify!($name), other)),
                }
            }
        }
    };
}

id_enum! {
    /// Negative predicate constructions.
    SuffixPattern {
        JiAnta,
        JiMotada,
        IAnida,
        IEopda,
        NJeokIEopda,
        NGeosEunAnida,
        JiNeunAnta,
        SuNeunEopda,
        SuEopda,
        Suppletive,
    }
}

id_enum! {
    /// Tense of the Korean matrix predicate. `Perfect` is a present-tense
    /// matrix over a completed event ("have read" → 읽은것은 아니다).
    Tense {
        Present,
        Past,
        Future,
        Perfect,
    }
}

id_enum! {
    /// Clause ending: sentence-final declarative or a causal connective
    /// (~기때문에).
    Mood {
        Final,
        Causal,
    }
}

impl Default for Mood {
    fn default() -> Self {
        Mood::Final
    }
}

impl SuffixPattern {
    /// Patterns reserved for partial negation.
    pub fn is_partial(self) -> bool {
        matches!(
            self,
            SuffixPattern::NGeosEunAnida | SuffixPattern::JiNeunAnta | SuffixPattern::SuNeunEopda
        )
    }
}

/// Inflectional class of a stem, which decides the shape of
/// present-tense endings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StemClass {
    Verb,
    Adjective,
    Copula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    PastAdnominal,
    Prospective,
    PresentAdnominal,
    PresentDeclarative,
    CopulaSubject,
    PastDeclarative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Piece {
    Literal(String),
    Stem,
    Op(Op),
    AdverbSlot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Template {
    source: String,
    pieces: Vec<Piece>,
}

impl Template {
    fn parse(source: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Template {
            template: source.to_owned(),
            reason: reason.to_owned(),
        };
        let mut pieces = Vec::new();
        let mut rest = source;
        while !rest.is_empty() {
            match rest.find('{') {
                Some(0) => {
                    let end = rest.find('}').ok_or_else(|| bad("unclosed '{'"))?;
                    let piece = match &rest[1..end] {
                        "stem" => Piece::Stem,
                        "adv" => Piece::AdverbSlot,
                        "-n" => Piece::Op(Op::PastAdnominal),
                        "-l" => Piece::Op(Op::Prospective),
                        "-adn" => Piece::Op(Op::PresentAdnominal),
                        "-nda" => Piece::Op(Op::PresentDeclarative),
                        "-i" => Piece::Op(Op::CopulaSubject),
                        "-past" => Piece::Op(Op::PastDeclarative),
                        other => return Err(bad(&format!("unknown placeholder '{{{other}}}'"))),
                    };
                    pieces.push(piece);
                    rest = &rest[end + 1..];
                }
                Some(i) => {
                    pieces.push(Piece::Literal(rest[..i].to_owned()));
                    rest = &rest[i..];
                }
                None => {
                    pieces.push(Piece::Literal(rest.to_owned()));
                    rest = "";
                }
            }
        }
        if pieces.first() != Some(&Piece::Stem) {
            return Err(bad("template must start with {stem}"));
        }
        if pieces.iter().filter(|p| **p == Piece::AdverbSlot).count() > 1 {
            return Err(bad("more than one {adv} slot"));
        }
        Ok(Template {
            source: source.to_owned(),
            pieces,
        })
    }

    fn render(&self, stem: &str, class: StemClass) -> Result<Conjugated> {
        let mut out = String::new();
        let mut adverb_slot = None;
        for piece in &self.pieces {
            match piece {
                Piece::Literal(text) => out.push_str(text),
                Piece::Stem => out.push_str(stem),
                Piece::AdverbSlot => adverb_slot = Some(out.len()),
                Piece::Op(op) => apply(*op, &mut out, class)?,
            }
        }
        Ok(Conjugated { text: out, adverb_slot })
    }
}

/// Replace the last syllable of `buf` with `parts`.
fn replace_last(buf: &mut String, parts: SyllableParts) {
    buf.pop();
    buf.push(parts.compose());
}

fn apply(op: Op, buf: &mut String, class: StemClass) -> Result<()> {
    let last = last_syllable(buf)?;
    match op {
        Op::PastAdnominal | Op::Prospective if class == StemClass::Copula => {
            buf.push_str(if op == Op::PastAdnominal { "인" } else { "일" });
        }
        Op::PastAdnominal => attach_coda(buf, last, TAIL_NIEUN, "은"),
        Op::Prospective => match last.tail {
            Some(TAIL_RIEUL) => {}
            Some(_) => buf.push_str("을"),
            None => replace_last(buf, last.with_tail(Some(TAIL_RIEUL))),
        },
        Op::PresentAdnominal => match class {
            StemClass::Verb => {
                if last.tail == Some(TAIL_RIEUL) {
                    replace_last(buf, last.with_tail(None));
                }
                buf.push('는');
            }
            StemClass::Adjective => attach_coda(buf, last, TAIL_NIEUN, "은"),
            StemClass::Copula => buf.push('인'),
        },
        Op::PresentDeclarative => {
            if class == StemClass::Verb {
                match last.tail {
                    None | Some(TAIL_RIEUL) => {
                        replace_last(buf, last.with_tail(Some(TAIL_NIEUN)));
                        buf.push('다');
                    }
                    Some(_) => buf.push_str("는다"),
                }
            } else {
                buf.push('다');
            }
        }
        Op::CopulaSubject => buf.push(if last.tail.is_some() { '이' } else { '가' }),
        Op::PastDeclarative => past_declarative(buf, last),
    }
    Ok(())
}

/// Attach a coda consonant to an open syllable (ㄹ-final stems drop the ㄹ),
/// otherwise append the syllabic allomorph.
fn attach_coda(buf: &mut String, last: SyllableParts, tail: u8, syllabic: &str) {
    match last.tail {
        None | Some(TAIL_RIEUL) => replace_last(buf, last.with_tail(Some(tail))),
        Some(_) => buf.push_str(syllabic),
    }
}

fn past_declarative(buf: &mut String, last: SyllableParts) {
    let bright = matches!(last.vowel, VOWEL_A | VOWEL_O);
    if last.tail.is_some() {
        buf.push_str(if bright { "았다" } else { "었다" });
        return;
    }
    if last.lead == LEAD_HIEUH && last.vowel == VOWEL_A {
        buf.push_str("였다");
        return;
    }
    if last.lead == LEAD_RIEUL && last.vowel == VOWEL_EU {
        // 르-irregular: 모르 → 몰랐다
        let chars: Vec<char> = buf.chars().collect();
        if chars.len() >= 2 {
            if let Some(prev) = decompose_syllable(chars[chars.len() - 2]) {
                if prev.tail.is_none() {
                    let bright_prev = matches!(prev.vowel, VOWEL_A | VOWEL_O);
                    buf.pop();
                    buf.pop();
                    buf.push(prev.with_tail(Some(TAIL_RIEUL)).compose());
                    buf.push_str(if bright_prev { "랐다" } else { "렀다" });
                    return;
                }
            }
        }
    }
    match last.vowel {
        VOWEL_A | VOWEL_EO => {
            replace_last(buf, last.with_tail(Some(TAIL_SSANGSIOS)));
            buf.push('다');
        }
        VOWEL_I => buf.push_str("였다"),
        _ => buf.push_str(if bright { "았다" } else { "었다" }),
    }
}

/// A conjugated predicate plus the byte offset where predicate adverbs go,
/// when the template fixes one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugated {
    pub text: String,
    pub adverb_slot: Option<usize>,
}

impl Conjugated {
    /// Insert adverbs (space-separated) at the template's slot, or in front
    /// of the whole predicate when the template has none.
    pub fn with_adverbs(&self, adverbs: &[String]) -> String {
        if adverbs.is_empty() {
            return self.text.clone();
        }
        let joined = adverbs.join(" ");
        match self.adverb_slot {
            Some(at) => format!("{}{} {}", &self.text[..at], joined, &self.text[at..]),
            None => format!("{} {}", joined, self.text),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjugationTable {
    rows: BTreeMap<(SuffixPattern, Tense, Mood), Template>,
}

impl ConjugationTable {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_TABLE, "<builtin conjugations.tsv>")
            .expect("builtin conjugation table is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parse `pattern \t tense \t template [\t mood]` rows. Every pattern
    /// must have a sentence-final row for every tense.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut rows = BTreeMap::new();
        for (line, fields) in crate::lexicon::tsv_records(text, origin)? {
            let err = |reason: String| Error::Table {
                path: origin.to_owned(),
                line,
                reason,
            };
            if fields.len() < 3 || fields.len() > 4 {
                return Err(err(format!("expected 3 or 4 fields, got {}", fields.len())));
            }
            let pattern: SuffixPattern = fields[0].parse().map_err(err)?;
            let tense: Tense = fields[1].parse().map_err(err)?;
            let mood: Mood = match fields.get(3) {
                Some(m) => m.parse().map_err(err)?,
                None => Mood::Final,
            };
            let template = Template::parse(&fields[2])?;
            if rows.insert((pattern, tense, mood), template).is_some() {
                return Err(err(format!("duplicate row for {pattern}/{tense}/{mood}")));
            }
        }
        for &pattern in SuffixPattern::ALL {
            for &tense in Tense::ALL {
                if !rows.contains_key(&(pattern, tense, Mood::Final)) {
                    return Err(Error::Table {
                        path: origin.to_owned(),
                        line: 0,
                        reason: format!("missing row for {pattern}/{tense}"),
                    });
                }
            }
        }
        Ok(ConjugationTable { rows })
    }

    pub fn supports(&self, pattern: SuffixPattern, tense: Tense, mood: Mood) -> bool {
        self.rows.contains_key(&(pattern, tense, mood))
    }

    pub fn template(&self, pattern: SuffixPattern, tense: Tense, mood: Mood) -> Option<&str> {
        self.rows
            .get(&(pattern, tense, mood))
            .map(|t| t.source.as_str())
    }

    pub fn conjugate(
        &self,
        stem: &str,
        class: StemClass,
        pattern: SuffixPattern,
        tense: Tense,
        mood: Mood,
    ) -> Result<Conjugated> {
        let template = self
            .rows
            .get(&(pattern, tense, mood))
            .ok_or(Error::UnsupportedConjugation { pattern, tense, mood })?;
        template.render(stem, class)
    }
}

/// Sentence-final negative form of a verb stem, using the builtin table.
pub fn conjugate_negative(stem: &str, pattern: SuffixPattern, tense: Tense) -> Result<String> {
    let table = ConjugationTable::builtin();
    let conjugated = table.conjugate(stem, StemClass::Verb, pattern, tense, Mood::Final)?;
    Ok(conjugated.text)
}
