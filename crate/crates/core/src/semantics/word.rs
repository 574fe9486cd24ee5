use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::syntax::is_valid_atom_name;

/// The set of propositions true at one position.
pub type Letter = BTreeSet<String>;

/// An ultimately periodic word `prefix · period^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoWord {
    prefix: Vec<Letter>,
    period: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("the period of a lasso word must contain at least one letter")]
    EmptyPeriod,
    #[error("expected exactly one `|` separating prefix and period")]
    MissingSeparator,
    #[error("malformed letter `{0}`")]
    BadLetter(String),
}

impl LassoWord {
    pub fn new(prefix: Vec<Letter>, period: Vec<Letter>) -> Result<Self, WordError> {
        if period.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        Ok(LassoWord { prefix, period })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Number of distinct positions, `|prefix| + |period|`.
    pub fn span(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    /// Maps any position onto `0..span()`.
    pub fn normalize(&self, i: usize) -> usize {
        let pl = self.prefix.len();
        if i < pl {
            i
        } else {
            pl + (i - pl) % self.period.len()
        }
    }

    pub fn letter_at(&self, i: usize) -> &Letter {
        let j = self.normalize(i);
        let pl = self.prefix.len();
        if j < pl {
            &self.prefix[j]
        } else {
            &self.period[j - pl]
        }
    }

    /// The word `v · self`.
    pub fn prepend(&self, v: &[Letter]) -> LassoWord {
        let mut prefix = v.to_vec();
        prefix.extend(self.prefix.iter().cloned());
        LassoWord {
            prefix,
            period: self.period.clone(),
        }
    }
}

/// Builds a letter from proposition names.
pub fn letter<'a>(props: impl IntoIterator<Item = &'a str>) -> Letter {
    props.into_iter().map(str::to_string).collect()
}

pub(crate) fn write_letter(f: &mut impl fmt::Write, l: &Letter) -> fmt::Result {
    if l.len() == 1 {
        return f.write_str(l.iter().next().unwrap());
    }
    f.write_char('{')?;
    for (i, p) in l.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        f.write_str(p)?;
    }
    f.write_char('}')
}

pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[Letter]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str("; ")?;
        }
        write_letter(f, l)?;
    }
    Ok(())
}

/// Renders a finite letter sequence in word syntax, e.g. `a; {}; {b,c}`.
pub fn format_letters(letters: &[Letter]) -> String {
    let mut s = String::new();
    write_letters(&mut s, letters).unwrap();
    s
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            write_letters(f, &self.prefix)?;
            f.write_char(' ')?;
        }
        f.write_str("| ")?;
        write_letters(f, &self.period)
    }
}

fn parse_letter(text: &str) -> Result<Letter, WordError> {
    let t = text.trim();
    let bad = || WordError::BadLetter(t.to_string());
    if let Some(inner) = t.strip_prefix('{') {
        let inner = inner.strip_suffix('}').ok_or_else(bad)?.trim();
        if inner.is_empty() {
            return Ok(Letter::new());
        }
        inner
            .split(',')
            .map(|p| {
                let p = p.trim();
                if is_valid_atom_name(p) {
                    Ok(p.to_string())
                } else {
                    Err(bad())
                }
            })
            .collect()
    } else if is_valid_atom_name(t) {
        Ok(Letter::from([t.to_string()]))
    } else {
        Err(bad())
    }
}

/// Parses a `;`-separated letter sequence; blank input is the empty sequence.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>, WordError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';').map(parse_letter).collect()
}

impl FromStr for LassoWord {
    type Err = WordError;

    /// `prefix | period`, e.g. `a | c` for `a.c^ω` or `| {a,b}; {}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split('|');
        let (Some(prefix), Some(period), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(WordError::MissingSeparator);
        };
        LassoWord::new(parse_letters(prefix)?, parse_letters(period)?)
    }
}

impl Serialize for LassoWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LassoWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
