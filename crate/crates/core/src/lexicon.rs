//! File-loaded rule tables.
//!
//! A lexicon directory holds six UTF-8, tab-separated files; `#` starts a
//! comment line and `-` marks an empty optional field.
//!
//! * `negatives.tsv`: surface, pos, related adverb (`전혀` or `전혀|at all`
//!   when the adverb needs a cue phrase), quasi flag, Korean negative
//!   pronoun form, suffix override
//! * `idioms.tsv`: token pattern (`*` matches any one token), effect
//! * `collocations.tsv`: Korean stem, `Anta`/`Motada`; stem `*` sets the default
//! * `suppletives.tsv`: stem, context, replacement (dictionary form), stem class
//! * `triggers.tsv`: English word, scope (`Clause` or `Degree`)
//! * `conjugations.tsv`: see [`crate::hangul::ConjugationTable`]

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::english::{normalize_word, Pos, Slot};
use crate::error::{Error, Result};
use crate::hangul::{ConjugationTable, StemClass, SuffixPattern};
use crate::korean::{AdverbPosition, ContextTag};

pub const NEGATIVES_FILE: &str = "negatives.tsv";
pub const IDIOMS_FILE: &str = "idioms.tsv";
pub const COLLOCATIONS_FILE: &str = "collocations.tsv";
pub const SUPPLETIVES_FILE: &str = "suppletives.tsv";
pub const TRIGGERS_FILE: &str = "triggers.tsv";
pub const CONJUGATIONS_FILE: &str = "conjugations.tsv";

macro_rules! builtin {
    ($file:literal) => {
        include_str!(concat!("../data/lexicons/", $file))
    };
}

/// Split a tab-separated table into `(line number, fields)` rows, skipping
/// blank and `#` lines.
pub(crate) fn tsv_records(text: &str, origin: &str) -> Result<Vec<(u64, Vec<String>)>> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .quoting(false)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Table {
            path: origin.to_owned(),
            line: e.position().map_or(0, |p| p.line()),
            reason: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let fields: Vec<String> = record.iter().map(|f| f.trim().to_owned()).collect();
        if fields.iter().all(String::is_empty) {
            continue;
        }
        rows.push((line, fields));
    }
    Ok(rows)
}

fn optional(field: Option<&String>) -> Option<String> {
    field
        .map(|s| s.as_str())
        .filter(|s| !s.is_empty() && *s != "-")
        .map(str::to_owned)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NegativePos {
    Adverb,
    Pronoun,
    Determiner,
}

impl NegativePos {
    pub fn from_tag(pos: Pos) -> Option<Self> {
        match pos {
            Pos::Adverb => Some(NegativePos::Adverb),
            Pos::Pronoun => Some(NegativePos::Pronoun),
            Pos::Determiner => Some(NegativePos::Determiner),
            _ => None,
        }
    }
}

impl std::str::FromStr for NegativePos {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Adverb" => Ok(NegativePos::Adverb),
            "Pronoun" => Ok(NegativePos::Pronoun),
            "Determiner" => Ok(NegativePos::Determiner),
            other => Err(format!("unknown part of speech '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatedAdverb {
    pub adverb: String,
    /// English phrase that must co-occur for the adverb to apply.
    pub cue: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeWordEntry {
    pub surface: String,
    pub words: Vec<String>,
    pub pos: NegativePos,
    pub related_adverb: Option<RelatedAdverb>,
    pub quasi: bool,
    /// Korean negative-polarity pronoun (그 누구, 아무것) that takes 도.
    pub korean_form: Option<String>,
    pub suffix_override: Option<SuffixPattern>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdiomEffect {
    NonNegative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdiomEntry {
    pub name: String,
    /// Lowercased tokens; `None` is a one-token wildcard.
    pub pattern: Vec<Option<String>>,
    pub effect: IdiomEffect,
}

impl IdiomEntry {
    fn matches_at(&self, words: &[String], start: usize) -> bool {
        start + self.pattern.len() <= words.len()
            && self
                .pattern
                .iter()
                .zip(&words[start..])
                .all(|(p, w)| p.as_deref().map_or(true, |p| p == w))
    }
}

/// Korean negative verb a stem collocates with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NegationVerb {
    Anta,
    Motada,
}

impl NegationVerb {
    pub fn pattern(self) -> SuffixPattern {
        match self {
            NegationVerb::Anta => SuffixPattern::JiAnta,
            NegationVerb::Motada => SuffixPattern::JiMotada,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuppletivePair {
    pub stem: String,
    pub context: ContextTag,
    /// Dictionary form, e.g. 모르다.
    pub replacement: String,
    pub class: StemClass,
}

impl SuppletivePair {
    pub fn replacement_stem(&self) -> &str {
        self.replacement.strip_suffix('다').unwrap_or(&self.replacement)
    }
}

/// How a partial-negation trigger shapes the Korean predicate: `Clause`
/// triggers nominalize (~ㄴ 것은 아니다), `Degree` triggers contrast the
/// predicate itself (~지는 않다).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriggerScope {
    Clause,
    Degree,
}

#[derive(Debug, Clone)]
pub struct Lexicons {
    negatives: Vec<NegativeWordEntry>,
    idioms: Vec<IdiomEntry>,
    collocations: HashMap<String, NegationVerb>,
    default_collocation: NegationVerb,
    suppletives: Vec<SuppletivePair>,
    triggers: HashMap<String, TriggerScope>,
    conjugations: ConjugationTable,
}

struct Sources<'a> {
    negatives: (&'a str, &'a str),
    idioms: (&'a str, &'a str),
    collocations: (&'a str, &'a str),
    suppletives: (&'a str, &'a str),
    triggers: (&'a str, &'a str),
    conjugations: (&'a str, &'a str),
}

impl Lexicons {
    /// The tables shipped in `data/lexicons`, compiled into the binary.
    pub fn builtin() -> Self {
        Self::from_sources(Sources {
            negatives: (builtin!("negatives.tsv"), NEGATIVES_FILE),
            idioms: (builtin!("idioms.tsv"), IDIOMS_FILE),
            collocations: (builtin!("collocations.tsv"), COLLOCATIONS_FILE),
            suppletives: (builtin!("suppletives.tsv"), SUPPLETIVES_FILE),
            triggers: (builtin!("triggers.tsv"), TRIGGERS_FILE),
            conjugations: (builtin!("conjugations.tsv"), CONJUGATIONS_FILE),
        })
        .expect("builtin lexicons are valid")
    }

    pub fn load_dir(dir: &Path) -> Result<Self> {
        let read = |name: &str| -> Result<(String, String)> {
            let path = dir.join(name);
            let text = std::fs::read_to_string(&path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            Ok((text, path.display().to_string()))
        };
        let negatives = read(NEGATIVES_FILE)?;
        let idioms = read(IDIOMS_FILE)?;
        let collocations = read(COLLOCATIONS_FILE)?;
        let suppletives = read(SUPPLETIVES_FILE)?;
        let triggers = read(TRIGGERS_FILE)?;
        let conjugations = read(CONJUGATIONS_FILE)?;
        Self::from_sources(Sources {
            negatives: (&negatives.0, &negatives.1),
            idioms: (&idioms.0, &idioms.1),
            collocations: (&collocations.0, &collocations.1),
            suppletives: (&suppletives.0, &suppletives.1),
            triggers: (&triggers.0, &triggers.1),
            conjugations: (&conjugations.0, &conjugations.1),
        })
    }

    fn from_sources(src: Sources<'_>) -> Result<Self> {
        let negatives = parse_negatives(src.negatives.0, src.negatives.1)?;
        let idioms = parse_idioms(src.idioms.0, src.idioms.1, &negatives)?;
        let (collocations, default_collocation) =
            parse_collocations(src.collocations.0, src.collocations.1)?;
        let suppletives = parse_suppletives(src.suppletives.0, src.suppletives.1)?;
        let triggers = parse_triggers(src.triggers.0, src.triggers.1)?;
        let conjugations = ConjugationTable::parse(src.conjugations.0, src.conjugations.1)?;
        Ok(Lexicons {
            negatives,
            idioms,
            collocations,
            default_collocation,
            suppletives,
            triggers,
            conjugations,
        })
    }

    pub fn negatives(&self) -> &[NegativeWordEntry] {
        &self.negatives
    }

    pub fn idioms(&self) -> &[IdiomEntry] {
        &self.idioms
    }

    pub fn conjugations(&self) -> &ConjugationTable {
        &self.conjugations
    }

    pub fn trigger_words(&self) -> impl Iterator<Item = (&str, TriggerScope)> {
        self.triggers.iter().map(|(w, s)| (w.as_str(), *s))
    }

    /// Longest negative word starting at the head of `window`.
    pub fn lookup_negative<S: AsRef<str>>(&self, window: &[S]) -> Option<&NegativeWordEntry> {
        self.lookup_negative_tagged(window, None)
    }

    /// Like [`Self::lookup_negative`]; among entries sharing the longest
    /// surface, prefer the one whose part of speech matches `head_pos`.
    pub fn lookup_negative_tagged<S: AsRef<str>>(
        &self,
        window: &[S],
        head_pos: Option<NegativePos>,
    ) -> Option<&NegativeWordEntry> {
        let words: Vec<String> = window.iter().map(|w| normalize_word(w.as_ref())).collect();
        let longest = self
            .negatives
            .iter()
            .filter(|e| e.words.len() <= words.len() && e.words[..] == words[..e.words.len()])
            .map(|e| e.words.len())
            .max()?;
        let mut candidates = self.negatives.iter().filter(|e| {
            e.words.len() == longest && e.words[..] == words[..longest]
        });
        let first = candidates.clone().next();
        candidates
            .find(|e| head_pos.is_some_and(|p| e.pos == p))
            .or(first)
    }

    /// Idiom whose pattern covers the negative word at `position`; longest
    /// pattern wins, then declaration order.
    pub fn match_idiom<S: AsRef<str>>(&self, tokens: &[S], position: usize) -> Option<&IdiomEntry> {
        let words: Vec<String> = tokens.iter().map(|w| normalize_word(w.as_ref())).collect();
        let word = words.get(position)?;
        let mut best: Option<&IdiomEntry> = None;
        for idiom in &self.idioms {
            let covers = idiom.pattern.iter().enumerate().any(|(k, p)| {
                p.as_deref() == Some(word.as_str())
                    && k <= position
                    && idiom.matches_at(&words, position - k)
            });
            if covers && best.map_or(true, |b| idiom.pattern.len() > b.pattern.len()) {
                best = Some(idiom);
            }
        }
        best
    }

    pub fn collocation_class(&self, stem: &str) -> NegationVerb {
        self.collocations
            .get(stem)
            .copied()
            .unwrap_or(self.default_collocation)
    }

    pub fn suppletive_form(&self, stem: &str, context: ContextTag) -> Option<&SuppletivePair> {
        self.suppletives
            .iter()
            .find(|p| p.stem == stem && p.context == context)
    }

    pub fn trigger(&self, word: &str) -> Option<TriggerScope> {
        self.triggers.get(&normalize_word(word)).copied()
    }

    /// Korean negation-related adverb for `entry` negating `slot`.
    ///
    /// Adverb negatives contribute only when they negate the verb; pronoun
    /// and determiner negatives contribute from any slot. `words` is the
    /// normalized sentence, consulted for cue phrases.
    pub fn related_adverb<S: AsRef<str>>(
        &self,
        entry: &NegativeWordEntry,
        slot: Slot,
        words: &[S],
    ) -> Option<(String, AdverbPosition)> {
        let related = entry.related_adverb.as_ref()?;
        if entry.pos == NegativePos::Adverb && !slot.negates_predicate() {
            return None;
        }
        if let Some(cue) = &related.cue {
            let words: Vec<String> = words.iter().map(|w| normalize_word(w.as_ref())).collect();
            if !words.windows(cue.len()).any(|w| w == &cue[..]) {
                return None;
            }
        }
        Some((related.adverb.clone(), AdverbPosition::BeforePredicate))
    }
}

fn parse_negatives(text: &str, origin: &str) -> Result<Vec<NegativeWordEntry>> {
    let mut entries: Vec<NegativeWordEntry> = Vec::new();
    for (line, fields) in tsv_records(text, origin)? {
        let err = |reason: String| Error::Table {
            path: origin.to_owned(),
            line,
            reason,
        };
        if fields.len() < 4 {
            return Err(err(format!("expected at least 4 fields, got {}", fields.len())));
        }
        let surface = fields[0].to_lowercase();
        let words: Vec<String> = surface.split_whitespace().map(str::to_owned).collect();
        if words.is_empty() {
            return Err(err("empty surface".into()));
        }
        let pos: NegativePos = fields[1].parse().map_err(err)?;
        let related_adverb = optional(fields.get(2)).map(|spec| match spec.split_once('|') {
            Some((adverb, cue)) => RelatedAdverb {
                adverb: adverb.trim().to_owned(),
                cue: Some(cue.split_whitespace().map(|w| w.to_lowercase()).collect()),
            },
            None => RelatedAdverb { adverb: spec, cue: None },
        });
        let quasi = match fields[3].as_str() {
            "yes" | "true" => true,
            "no" | "false" | "-" => false,
            other => return Err(err(format!("bad quasi flag '{other}'"))),
        };
        let korean_form = optional(fields.get(4));
        let suffix_override = optional(fields.get(5))
            .map(|s| s.parse::<SuffixPattern>())
            .transpose()
            .map_err(err)?;
        if entries.iter().any(|e| e.surface == surface && e.pos == pos) {
            return Err(err(format!("duplicate entry '{surface}' ({pos:?})")));
        }
        entries.push(NegativeWordEntry {
            surface,
            words,
            pos,
            related_adverb,
            quasi,
            korean_form,
            suffix_override,
        });
    }
    Ok(entries)
}

fn parse_idioms(
    text: &str,
    origin: &str,
    negatives: &[NegativeWordEntry],
) -> Result<Vec<IdiomEntry>> {
    let mut idioms = Vec::new();
    for (line, fields) in tsv_records(text, origin)? {
        let err = |reason: String| Error::Table {
            path: origin.to_owned(),
            line,
            reason,
        };
        let pattern: Vec<Option<String>> = fields[0]
            .split_whitespace()
            .map(|w| (w != "*").then(|| normalize_word(w)))
            .collect();
        let effect = match fields.get(1).map(String::as_str) {
            None | Some("NonNegative") => IdiomEffect::NonNegative,
            Some(other) => return Err(err(format!("unknown idiom effect '{other}'"))),
        };
        let literal: Vec<&str> = pattern.iter().flatten().map(String::as_str).collect();
        let has_negative = negatives.iter().any(|n| {
            literal
                .windows(n.words.len())
                .any(|w| w.iter().zip(&n.words).all(|(a, b)| *a == b))
        });
        if !has_negative {
            return Err(err(format!("idiom '{}' contains no negative word", fields[0])));
        }
        let name = fields[0]
            .split_whitespace()
            .filter(|w| *w != "*")
            .collect::<Vec<_>>()
            .join("-");
        idioms.push(IdiomEntry { name, pattern, effect });
    }
    Ok(idioms)
}

fn parse_collocations(text: &str, origin: &str) -> Result<(HashMap<String, NegationVerb>, NegationVerb)> {
    let mut map = HashMap::new();
    let mut default = NegationVerb::Anta;
    for (line, fields) in tsv_records(text, origin)? {
        let err = |reason: String| Error::Table {
            path: origin.to_owned(),
            line,
            reason,
        };
        if fields.len() != 2 {
            return Err(err(format!("expected 2 fields, got {}", fields.len())));
        }
        let class = match fields[1].as_str() {
            "Anta" => NegationVerb::Anta,
            "Motada" => NegationVerb::Motada,
            other => return Err(err(format!("unknown collocation class '{other}'"))),
        };
        if fields[0] == "*" {
            default = class;
        } else if map.insert(fields[0].clone(), class).is_some() {
            return Err(err(format!("duplicate stem '{}'", fields[0])));
        }
    }
    Ok((map, default))
}

/// Fragments of the productive negative patterns; a suppletive form must
/// contain none of them.
const PRODUCTIVE_FRAGMENTS: [&str; 4] = ["지 않", "지 못", "않", "못하"];

fn parse_suppletives(text: &str, origin: &str) -> Result<Vec<SuppletivePair>> {
    let mut pairs = Vec::new();
    for (line, fields) in tsv_records(text, origin)? {
        let err = |reason: String| Error::Table {
            path: origin.to_owned(),
            line,
            reason,
        };
        if fields.len() < 3 {
            return Err(err(format!("expected at least 3 fields, got {}", fields.len())));
        }
        let context: ContextTag = fields[1].parse().map_err(err)?;
        let replacement = fields[2].clone();
        if !replacement.ends_with('다') || replacement.contains(' ') {
            return Err(err(format!("'{replacement}' is not a dictionary-form predicate")));
        }
        if PRODUCTIVE_FRAGMENTS.iter().any(|f| replacement.contains(f)) {
            return Err(err(format!("'{replacement}' contains a productive negative suffix")));
        }
        let class = match optional(fields.get(3)).as_deref() {
            None | Some("Verb") => StemClass::Verb,
            Some("Adjective") => StemClass::Adjective,
            Some(other) => return Err(err(format!("unknown stem class '{other}'"))),
        };
        pairs.push(SuppletivePair {
            stem: fields[0].clone(),
            context,
            replacement,
            class,
        });
    }
    Ok(pairs)
}

fn parse_triggers(text: &str, origin: &str) -> Result<HashMap<String, TriggerScope>> {
    let mut map = HashMap::new();
    for (line, fields) in tsv_records(text, origin)? {
        let scope = match optional(fields.get(1)).as_deref() {
            None | Some("Clause") => TriggerScope::Clause,
            Some("Degree") => TriggerScope::Degree,
            Some(other) => {
                return Err(Error::Table {
                    path: origin.to_owned(),
                    line,
                    reason: format!("unknown trigger scope '{other}'"),
                })
            }
        };
        map.insert(normalize_word(&fields[0]), scope);
    }
    Ok(map)
}
