//! Syllable words: group elements as sequences of generator powers.
//!
//! A word is a finite sequence of syllables `v^n` with `n != 0`. Raw words
//! may repeat a generator in adjacent syllables; the rewrite engine merges
//! those. The text syntax, shared with the command line, is
//! whitespace-separated atoms `gen` or `gen^k` (`k` a nonzero signed decimal
//! integer), and the empty word is written `1`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{is_identifier, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syllable exponent must be nonzero")]
    ZeroExponent,
    #[error("syllable exponent out of range")]
    ExponentOutOfRange,
}

/// A word syntax error, with a 1-based character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("column {column}: bad identifier `{name}`")]
    BadIdentifier { column: usize, name: String },
    #[error("column {column}: malformed exponent `{text}`")]
    BadExponent { column: usize, text: String },
    #[error("column {column}: exponent must be nonzero")]
    ZeroExponent { column: usize },
    #[error("column {column}: exponent `{text}` out of range")]
    ExponentOutOfRange { column: usize, text: String },
}

impl WordParseError {
    /// True for inputs that scan fine but violate a domain precondition
    /// (zero or out-of-range exponents), as opposed to malformed syntax.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            WordParseError::ZeroExponent { .. } | WordParseError::ExponentOutOfRange { .. }
        )
    }
}

/// A generator power `v^n`, `n != 0`.
///
/// `i64::MIN` is rejected so that negation (inversion) is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    generator: VertexId,
    exponent: i64,
}

impl Syllable {
    pub fn new(generator: VertexId, exponent: i64) -> Result<Self, WordError> {
        if exponent == 0 {
            Err(WordError::ZeroExponent)
        } else if exponent == i64::MIN {
            Err(WordError::ExponentOutOfRange)
        } else {
            Ok(Syllable { generator, exponent })
        }
    }

    pub fn generator(&self) -> &VertexId {
        &self.generator
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn inverse(&self) -> Syllable {
        Syllable {
            generator: self.generator.clone(),
            exponent: -self.exponent,
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^{}", self.generator, self.exponent)
        }
    }
}

/// A finite product of syllables; empty means the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_syllables(syllables: Vec<Syllable>) -> Self {
        Word { syllables }
    }

    /// Convenience constructor from `(name, exponent)` pairs.
    pub fn from_pairs<'a, I>(pairs: I) -> Result<Self, crate::graph::GraphError>
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        let mut syllables = Vec::new();
        for (name, exp) in pairs {
            let id = VertexId::new(name)?;
            let syl = Syllable::new(id, exp).expect("nonzero exponent");
            syllables.push(syl);
        }
        Ok(Word { syllables })
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The formal inverse: reversed syllables with negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(Syllable::inverse).collect(),
        }
    }

    /// Plain concatenation; no normalization is applied.
    pub fn concat(&self, other: &Word) -> Word {
        let mut syllables = self.syllables.clone();
        syllables.extend(other.syllables.iter().cloned());
        Word { syllables }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, syl) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            syl.fmt(f)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "1" {
            return Ok(Word::empty());
        }
        let mut syllables = Vec::new();
        for (column, token) in tokens_with_columns(s) {
            let (name, exp_text) = match token.split_once('^') {
                None => (token, None),
                Some((name, exp)) => (name, Some(exp)),
            };
            if !is_identifier(name) {
                return Err(WordParseError::BadIdentifier { column, name: name.to_owned() });
            }
            let exponent = match exp_text {
                None => 1,
                Some(text) => {
                    let exp_column = column + name.len() + 1;
                    if text.is_empty() || !text.chars().enumerate().all(|(i, c)| c.is_ascii_digit() || (i == 0 && c == '-')) {
                        return Err(WordParseError::BadExponent {
                            column: exp_column,
                            text: text.to_owned(),
                        });
                    }
                    match text.parse::<i64>() {
                        Ok(0) => return Err(WordParseError::ZeroExponent { column: exp_column }),
                        Ok(i64::MIN) => {
                            return Err(WordParseError::ExponentOutOfRange {
                                column: exp_column,
                                text: text.to_owned(),
                            })
                        }
                        Ok(k) => k,
                        Err(_) => {
                            return Err(WordParseError::ExponentOutOfRange {
                                column: exp_column,
                                text: text.to_owned(),
                            })
                        }
                    }
                }
            };
            let generator = VertexId::new(name)
                .map_err(|_| WordParseError::BadIdentifier { column, name: name.to_owned() })?;
            syllables.push(Syllable { generator, exponent });
        }
        Ok(Word { syllables })
    }
}

fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((b + 1, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((b + 1, &s[b..]));
    }
    out
}
