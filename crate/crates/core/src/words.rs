//! Alphabets, finite words, and the elementary operations on them.
//!
//! Letters are small indices into an [`Alphabet`]; characters only show up
//! when a word is parsed or rendered.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 16;

/// Index of a symbol in its alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const fn new(index: u8) -> Self {
        Letter(index)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of distinct printable symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Parses an alphabet written as a string of distinct characters, e.g. `"abc"`.
    pub fn parse(symbols: &str) -> Result<Arc<Alphabet>> {
        Self::from_symbols(symbols.chars().collect()).map(Arc::new)
    }

    pub fn from_symbols(symbols: Vec<char>) -> Result<Alphabet> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_control() || c.is_whitespace() {
                return Err(Error::UnprintableSymbol(c));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.symbols.len() as u8).map(Letter)
    }

    pub fn letter(&self, symbol: char) -> Result<Letter> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| Letter(i as u8))
            .ok_or_else(|| Error::UnknownSymbol {
                symbol,
                alphabet: self.to_string(),
            })
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter.index()]
    }

    pub fn check(&self, letter: Letter) -> Result<()> {
        if letter.index() < self.len() {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                index: letter.index(),
                size: self.len(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A maximal block `letter^count` of a run-length encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub letter: Letter,
    pub count: usize,
}

/// A finite word over a fixed alphabet. Immutable once built.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Arc<Alphabet>,
}

impl Word {
    pub fn empty(alphabet: &Arc<Alphabet>) -> Word {
        Word {
            letters: Vec::new(),
            alphabet: Arc::clone(alphabet),
        }
    }

    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word> {
        let letters = text
            .chars()
            .map(|c| alphabet.letter(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            letters,
            alphabet: Arc::clone(alphabet),
        })
    }

    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Result<Word> {
        letters.iter().try_for_each(|&l| alphabet.check(l))?;
        Ok(Word {
            letters,
            alphabet: Arc::clone(alphabet),
        })
    }

    /// Skips the range check; callers guarantee every letter is valid.
    pub(crate) fn from_trusted(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|l| l.index() < alphabet.len()));
        Word {
            letters,
            alphabet: Arc::clone(alphabet),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied()
    }

    pub fn ensure_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        if *self.alphabet == *alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: alphabet.to_string(),
            })
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        other.ensure_alphabet(&self.alphabet)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_trusted(&self.alphabet, letters))
    }

    /// The first `m` letters (the whole word when `m >= len`).
    pub fn prefix(&self, m: usize) -> Word {
        Word::from_trusted(&self.alphabet, self.letters[..m.min(self.len())].to_vec())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// Number of occurrences of `a`.
    pub fn count_letter(&self, a: Letter) -> Result<usize> {
        self.alphabet.check(a)?;
        Ok(self.letters.iter().filter(|&&l| l == a).count())
    }

    pub fn reversal(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_trusted(&self.alphabet, letters)
    }

    pub fn run_length_encode(&self) -> Vec<Run> {
        run_length_encode(&self.letters)
    }

    /// Distinct factors of length `n`; empty when `n` exceeds the word length.
    pub fn factors_of_length(&self, n: usize) -> Result<BTreeSet<Word>> {
        if n == 0 {
            return Err(Error::ZeroFactorLength);
        }
        if n > self.len() {
            return Ok(BTreeSet::new());
        }
        Ok(self
            .letters
            .windows(n)
            .map(|f| Word::from_trusted(&self.alphabet, f.to_vec()))
            .collect())
    }
}

pub fn run_length_encode(letters: &[Letter]) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for &l in letters {
        match runs.last_mut() {
            Some(run) if run.letter == l => run.count += 1,
            _ => runs.push(Run {
                letter: l,
                count: 1,
            }),
        }
    }
    runs
}

pub fn run_length_decode(runs: &[Run]) -> Vec<Letter> {
    runs.iter()
        .flat_map(|r| std::iter::repeat_n(r.letter, r.count))
        .collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|&l| write!(f, "{}", self.alphabet.symbol(l)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
