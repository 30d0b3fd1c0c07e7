//! Words over the simple reflections, i.e. elements of the free monoid `S*`.
//!
//! Letters are stored as 0-based generator indices; the text form uses the
//! 1-based labels `"1 2 1"`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses a whitespace-separated list of 1-based labels and checks each
    /// against `rank`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let word: Word = text.parse()?;
        word.validate(rank)?;
        Ok(word)
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&s| s >= rank) {
            Some(&s) => Err(Error::LetterOutOfRange {
                token: (s + 1).to_string(),
                rank,
            }),
            None => Ok(()),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Removes the letter at `index` (0-based).
    pub fn without(&self, index: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(index);
        Word(letters)
    }

    /// Applies a letter map, e.g. a diagram automorphism.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&s| f(s)).collect())
    }

    /// Positions `i` with `w[i] == w[i + 1]`.
    pub fn squares(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.windows(2).enumerate().filter(|(_, p)| p[0] == p[1]).map(|(i, _)| i)
    }

    /// Subword order on `S*`: `self` is obtained from `other` by deleting
    /// letters.
    pub fn is_subword_of(&self, other: &Word) -> bool {
        let mut rest = other.0.iter();
        self.0.iter().all(|s| rest.any(|t| t == s))
    }
}

/// `u ⪯ w` in the subword order.
pub fn word_subword_leq(u: &Word, w: &Word) -> bool {
    u.is_subword_of(w)
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(label) if label >= 1 => Ok(label - 1),
                _ => Err(Error::MalformedToken(tok.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s + 1)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
