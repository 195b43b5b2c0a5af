//! Hangul orthography: syllable arithmetic, final-consonant tests and
//! particle allomorphs.
//!
//! Precomposed syllables occupy U+AC00..=U+D7A3 and are laid out as
//! `base + (lead * 21 + vowel) * 28 + tail`, where `tail == 0` means the
//! syllable is open.

mod conjugate;

pub use conjugate::{
    conjugate_negative, ConjugationTable, Conjugated, Mood, StemClass, SuffixPattern, Tense,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SYLLABLE_BASE: u32 = 0xAC00;
pub const LEAD_COUNT: u32 = 19;
pub const VOWEL_COUNT: u32 = 21;
pub const TAIL_COUNT: u32 = 28;
pub const SYLLABLE_COUNT: u32 = LEAD_COUNT * VOWEL_COUNT * TAIL_COUNT;

pub(crate) const TAIL_NIEUN: u8 = 4;
pub(crate) const TAIL_RIEUL: u8 = 8;
pub(crate) const TAIL_SSANGSIOS: u8 = 20;

pub(crate) const LEAD_RIEUL: u8 = 5;
pub(crate) const LEAD_HIEUH: u8 = 18;
pub(crate) const VOWEL_A: u8 = 0;
pub(crate) const VOWEL_EO: u8 = 4;
pub(crate) const VOWEL_O: u8 = 8;
pub(crate) const VOWEL_EU: u8 = 18;
pub(crate) const VOWEL_I: u8 = 20;

/// Jamo indices of one precomposed syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SyllableParts {
    pub lead: u8,
    pub vowel: u8,
    /// Final consonant index in 1..=27, `None` for an open syllable.
    pub tail: Option<u8>,
}

impl SyllableParts {
    pub fn compose(self) -> char {
        let tail = u32::from(self.tail.unwrap_or(0));
        let code = SYLLABLE_BASE
            + (u32::from(self.lead) * VOWEL_COUNT + u32::from(self.vowel)) * TAIL_COUNT
            + tail;
        // In range by construction of the indices.
        char::from_u32(code).expect("valid Hangul syllable")
    }

    pub fn with_tail(self, tail: Option<u8>) -> Self {
        SyllableParts { tail, ..self }
    }
}

/// Arithmetic decomposition; `None` for anything outside the syllable block.
pub fn decompose_syllable(ch: char) -> Option<SyllableParts> {
    let offset = (ch as u32).checked_sub(SYLLABLE_BASE)?;
    if offset >= SYLLABLE_COUNT {
        return None;
    }
    let tail = (offset % TAIL_COUNT) as u8;
    let vowel = ((offset / TAIL_COUNT) % VOWEL_COUNT) as u8;
    let lead = (offset / (TAIL_COUNT * VOWEL_COUNT)) as u8;
    Some(SyllableParts {
        lead,
        vowel,
        tail: (tail != 0).then_some(tail),
    })
}

pub(crate) fn last_syllable(word: &str) -> Result<SyllableParts> {
    let last = word.chars().next_back().ok_or(Error::EmptyWord)?;
    decompose_syllable(last).ok_or(Error::NotHangul(last))
}

/// True iff the last syllable of `word` carries a final consonant.
pub fn has_final_consonant(word: &str) -> Result<bool> {
    Ok(last_syllable(word)?.tail.is_some())
}

/// Case and delimiter particles whose form depends on the preceding syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParticleClass {
    Topic,
    Nominative,
    Accusative,
    Additive,
    Comitative,
}

impl ParticleClass {
    pub const ALL: [ParticleClass; 5] = [
        ParticleClass::Topic,
        ParticleClass::Nominative,
        ParticleClass::Accusative,
        ParticleClass::Additive,
        ParticleClass::Comitative,
    ];

    pub fn after_vowel(self) -> &'static str {
        match self {
            ParticleClass::Topic => "는",
            ParticleClass::Nominative => "가",
            ParticleClass::Accusative => "를",
            ParticleClass::Additive => "도",
            ParticleClass::Comitative => "와",
        }
    }

    pub fn after_consonant(self) -> &'static str {
        match self {
            ParticleClass::Topic => "은",
            ParticleClass::Nominative => "이",
            ParticleClass::Accusative => "을",
            ParticleClass::Additive => "도",
            ParticleClass::Comitative => "과",
        }
    }

    pub fn allomorph(self, after_consonant: bool) -> &'static str {
        if after_consonant {
            self.after_consonant()
        } else {
            self.after_vowel()
        }
    }
}

pub fn attach_particle(word: &str, particle: ParticleClass) -> Result<String> {
    let closed = has_final_consonant(word)?;
    let mut out = String::with_capacity(word.len() + 3);
    out.push_str(word);
    out.push_str(particle.allomorph(closed));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposes_closed_and_open_syllables() {
        // 한 = ㅎ(18) ㅏ(0) ㄴ(4)
        assert_eq!(
            decompose_syllable('한'),
            Some(SyllableParts { lead: 18, vowel: 0, tail: Some(TAIL_NIEUN) })
        );
        // 자 = ㅈ(12) ㅏ(0)
        assert_eq!(
            decompose_syllable('자'),
            Some(SyllableParts { lead: 12, vowel: 0, tail: None })
        );
        assert_eq!(decompose_syllable('a'), None);
        assert_eq!(decompose_syllable('\u{D7A4}'), None);
        assert_eq!(decompose_syllable('\u{1100}'), None);
    }

    #[test]
    fn block_boundaries() {
        let first = decompose_syllable('가').unwrap();
        assert_eq!((first.lead, first.vowel, first.tail), (0, 0, None));
        let last = decompose_syllable('힣').unwrap();
        assert_eq!((last.lead, last.vowel, last.tail), (18, 20, Some(27)));
    }

    #[test]
    fn final_consonant() {
        assert!(has_final_consonant("사람").unwrap());
        assert!(!has_final_consonant("녀자").unwrap());
        assert!(has_final_consonant("친구들").unwrap());
        assert!(matches!(has_final_consonant("abc"), Err(Error::NotHangul('c'))));
        assert!(matches!(has_final_consonant(""), Err(Error::EmptyWord)));
    }

    #[test]
    fn particles() {
        assert_eq!(attach_particle("친구들", ParticleClass::Topic).unwrap(), "친구들은");
        assert_eq!(attach_particle("녀자", ParticleClass::Topic).unwrap(), "녀자는");
        assert_eq!(attach_particle("친구들", ParticleClass::Nominative).unwrap(), "친구들이");
        assert_eq!(attach_particle("사람", ParticleClass::Additive).unwrap(), "사람도");
        assert_eq!(attach_particle("동생", ParticleClass::Comitative).unwrap(), "동생과");
        assert_eq!(attach_particle("사진", ParticleClass::Comitative).unwrap(), "사진과");
        assert_eq!(attach_particle("나의 말", ParticleClass::Accusative).unwrap(), "나의 말을");
        assert_eq!(attach_particle("그 기사", ParticleClass::Accusative).unwrap(), "그 기사를");
        assert!(attach_particle("CPU", ParticleClass::Topic).is_err());
    }
}
