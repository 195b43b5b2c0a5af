//! Transfer records, batch translation, gold comparison and the category
//! census.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analyzer::{analyze, NegationAnalysis, NegationKind, Structure};
use crate::english::AnnotatedEnglishSentence;
use crate::error::{Error, Result};
use crate::generator::realize;
use crate::korean::KoreanAffirmativeFrame;
use crate::lexicon::Lexicons;
use crate::planner::{plan, TransformPlan};

/// A subordinate clause realized before the main clause refers to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubClause {
    pub english: AnnotatedEnglishSentence,
    pub frame: KoreanAffirmativeFrame,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub structure: Structure,
    pub kind: NegationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferRecord {
    pub id: String,
    pub english: AnnotatedEnglishSentence,
    pub frame: KoreanAffirmativeFrame,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clauses: Vec<SubClause>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gold: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// Parse JSONL records line by line, keeping going past malformed lines.
/// Blank lines and lines starting with `#` are skipped. A repeated id or an
/// empty gold is an error for that line.
pub fn read_record_lines(text: &str, origin: &str) -> Vec<Result<TransferRecord>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |reason: String| Error::Table {
            path: origin.to_owned(),
            line: n as u64 + 1,
            reason,
        };
        let record = match serde_json::from_str::<TransferRecord>(line) {
            Ok(r) if !seen.insert(r.id.clone()) => Err(fail(format!("duplicate record id '{}'", r.id))),
            Ok(r) if r.gold.as_deref().is_some_and(|g| g.trim().is_empty()) => {
                Err(fail(format!("record '{}' has an empty gold", r.id)))
            }
            Ok(r) => Ok(r),
            Err(e) => Err(fail(e.to_string())),
        };
        out.push(record);
    }
    out
}

/// Strict variant of [`read_record_lines`]: the first bad line is an error.
pub fn parse_records(text: &str, origin: &str) -> Result<Vec<TransferRecord>> {
    read_record_lines(text, origin).into_iter().collect()
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_record_lines(path: &Path) -> Result<Vec<Result<TransferRecord>>> {
    Ok(read_record_lines(&read_file(path)?, &path.display().to_string()))
}

pub fn load_records(path: &Path) -> Result<Vec<TransferRecord>> {
    parse_records(&read_file(path)?, &path.display().to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Translation {
    pub id: String,
    pub text: String,
    pub analysis: NegationAnalysis,
    pub plan: Option<TransformPlan>,
    pub trace: Vec<String>,
}

fn translate_clause(
    lexicons: &Lexicons,
    english: &AnnotatedEnglishSentence,
    frame: &KoreanAffirmativeFrame,
    clauses: &[String],
) -> Result<(String, NegationAnalysis, Option<TransformPlan>, Vec<String>)> {
    let analysis = analyze(lexicons, english)?;
    let plan = if analysis.is_negative() {
        Some(plan(lexicons, &analysis, &english.normalized_words(), frame)?)
    } else {
        None
    };
    let realized = realize(lexicons, frame, plan.as_ref(), clauses)?;
    Ok((realized.text, analysis, plan, realized.trace))
}

pub fn translate_record(lexicons: &Lexicons, record: &TransferRecord) -> Result<Translation> {
    let wrap = |e: Error| Error::Record {
        id: record.id.clone(),
        reason: e.to_string(),
    };
    let mut clause_texts = Vec::with_capacity(record.clauses.len());
    let mut trace = Vec::new();
    for (k, clause) in record.clauses.iter().enumerate() {
        let (text, _, _, clause_trace) =
            translate_clause(lexicons, &clause.english, &clause.frame, &[]).map_err(wrap)?;
        trace.extend(clause_trace.into_iter().map(|t| format!("clause[{k}] {t}")));
        clause_texts.push(text);
    }
    let (text, analysis, plan, main_trace) =
        translate_clause(lexicons, &record.english, &record.frame, &clause_texts).map_err(wrap)?;
    trace.extend(main_trace);
    Ok(Translation {
        id: record.id.clone(),
        text,
        analysis,
        plan,
        trace,
    })
}

/// Translate every record; failures are reported per record.
pub fn run_translate(lexicons: &Lexicons, records: &[TransferRecord]) -> Vec<Result<Translation>> {
    records.iter().map(|r| translate_record(lexicons, r)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldOutcome {
    pub id: String,
    pub gold: Option<String>,
    /// The produced sentence, or the error message.
    pub produced: std::result::Result<String, String>,
}

impl GoldOutcome {
    pub fn passed(&self) -> bool {
        matches!((&self.gold, &self.produced), (Some(g), Ok(p)) if g == p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldReport {
    pub outcomes: Vec<GoldOutcome>,
}

impl GoldReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed()).count()
    }

    pub fn total(&self) -> usize {
        self.outcomes.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &GoldOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

/// Byte-exact comparison against each record's gold. A record without a
/// gold counts as a failure.
pub fn run_goldtest(lexicons: &Lexicons, records: &[TransferRecord]) -> GoldReport {
    let outcomes = records
        .iter()
        .map(|r| GoldOutcome {
            id: r.id.clone(),
            gold: r.gold.clone(),
            produced: translate_record(lexicons, r)
                .map(|t| t.text)
                .map_err(|e| e.to_string()),
        })
        .collect();
    GoldReport { outcomes }
}

/// Report column labels, the six structures then the remainder.
pub const REPORT_COLUMNS: [&str; 7] = [
    "NS-AP-AO", "AS-NP-AO", "AS-AP-NO", "NS-NP-AO", "NS-AP-NO", "AS-NP-NO", "Others",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryReport {
    /// Counts in `REPORT_COLUMNS` order.
    pub structures: [usize; 7],
    pub kinds: BTreeMap<NegationKind, usize>,
    pub total: usize,
}

impl CategoryReport {
    pub fn from_analyses<'a>(analyses: impl IntoIterator<Item = &'a NegationAnalysis>) -> Self {
        let mut structures = [0; 7];
        let mut kinds: BTreeMap<NegationKind, usize> = NegationKind::ALL.iter().map(|&k| (k, 0)).collect();
        let mut total = 0;
        for a in analyses {
            let column = Structure::SIX.iter().position(|&s| s == a.structure).unwrap_or(6);
            structures[column] += 1;
            *kinds.entry(a.kind).or_default() += 1;
            total += 1;
        }
        CategoryReport { structures, kinds, total }
    }

    pub fn negative(&self) -> usize {
        self.total - self.kinds.get(&NegationKind::NonNegative).copied().unwrap_or(0)
    }

    pub fn negative_percent(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            100.0 * self.negative() as f64 / self.total as f64
        }
    }

    pub fn kind(&self, kind: NegationKind) -> usize {
        self.kinds.get(&kind).copied().unwrap_or(0)
    }
}

impl fmt::Display for CategoryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", REPORT_COLUMNS.join("\t"))?;
        let counts: Vec<String> = self.structures.iter().map(usize::to_string).collect();
        writeln!(f, "{}", counts.join("\t"))?;
        for (kind, n) in &self.kinds {
            writeln!(f, "{kind}\t{n}")?;
        }
        write!(
            f,
            "total\t{}\nnegative\t{} ({:.1}%)",
            self.total,
            self.negative(),
            self.negative_percent()
        )
    }
}

/// Analyze every record's main clause and tally structures and kinds.
pub fn run_report(lexicons: &Lexicons, records: &[TransferRecord]) -> Result<CategoryReport> {
    let analyses = records
        .iter()
        .map(|r| {
            analyze(lexicons, &r.english).map_err(|e| Error::Record {
                id: r.id.clone(),
                reason: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CategoryReport::from_analyses(&analyses))
}

#[cfg(test)]
mod tests {
    use super::*;

    const RECORD: &str = r#"{"id":"r1","english":{"tokens":[["No","Determiner","Subject"],["one","Pronoun","Subject"],["answered","Verb","Predicate"],[".","Punctuation","Other"]],"features":{"verb_kind":"Lexical","tense":"Past","aspect":"Simple"}},"frame":{"constituents":[{"text":"누군가","role":"Subject","particle":"Nominative"}],"predicate":{"stem":"대답하","class":"LexicalVerb","tense":"Past"}},"gold":"그 누구도 대답하지 않았다."}"#;

    #[test]
    fn parse_skips_comments_and_rejects_duplicates() {
        let text = format!("# header\n\n{RECORD}\n");
        let records = parse_records(&text, "t").unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].english.tokens.len(), 4);

        let dup = format!("{RECORD}\n{RECORD}\n");
        assert!(parse_records(&dup, "t").unwrap_err().to_string().contains("duplicate"));
        assert!(parse_records("{not json", "t").is_err());

        let mixed = format!("{{not json\n{RECORD}\n");
        let lines = read_record_lines(&mixed, "t");
        assert_eq!(lines.len(), 2);
        assert!(lines[0].is_err() && lines[1].is_ok());
        let empty_gold = RECORD.replace("그 누구도 대답하지 않았다.", " ");
        assert!(parse_records(&empty_gold, "t").is_err());
    }

    #[test]
    fn translate_and_goldtest() {
        let lex = Lexicons::builtin();
        let records = parse_records(RECORD, "t").unwrap();
        let t = translate_record(&lex, &records[0]).unwrap();
        assert_eq!(t.text, "그 누구도 대답하지 않았다.");
        assert_eq!(t.analysis.kind, NegationKind::Intensified);

        let report = run_goldtest(&lex, &records);
        assert_eq!((report.passed(), report.total()), (1, 1));

        let mut no_gold = records.clone();
        no_gold[0].gold = None;
        assert_eq!(run_goldtest(&lex, &no_gold).passed(), 0);
    }

    #[test]
    fn census_columns() {
        let lex = Lexicons::builtin();
        let records = parse_records(RECORD, "t").unwrap();
        let report = run_report(&lex, &records).unwrap();
        assert_eq!(report.structures, [1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(report.kind(NegationKind::Intensified), 1);
        assert_eq!(report.negative(), 1);
        assert!(report.to_string().starts_with("NS-AP-AO\t"));

        let empty = CategoryReport::from_analyses(&[]);
        assert_eq!(empty.negative_percent(), 0.0);
    }
}
