//! Finite words over small dense integer alphabets.
//!
//! Letters are `0..size`; an [`Alphabet`] may carry a glyph table used only
//! when a word is printed or parsed. Equality, ordering and hashing of
//! [`Word`] look at the letters alone.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::sync::Arc;

use crate::error::{invalid, Error, Result};

pub type Letter = u8;

pub(crate) const BINARY: Alphabet = Alphabet { size: 2, glyphs: None };

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u8,
    glyphs: Option<Arc<[char]>>,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > u8::MAX as usize {
            return invalid(format!("alphabet size {size} outside 1..=255"));
        }
        Ok(Alphabet { size: size as u8, glyphs: None })
    }

    /// Alphabet whose letters print as the given glyphs, in order.
    pub fn with_glyphs(glyphs: &[char]) -> Result<Self> {
        let mut alphabet = Alphabet::new(glyphs.len())?;
        for (i, g) in glyphs.iter().enumerate() {
            if glyphs[..i].contains(g) {
                return invalid(format!("glyph {g:?} used twice"));
            }
        }
        alphabet.glyphs = Some(glyphs.into());
        Ok(alphabet)
    }

    /// The two-letter alphabet `{A, B}` (letters 0 and 1).
    pub fn ab() -> Self {
        Alphabet::with_glyphs(&['A', 'B']).expect("static glyphs")
    }

    pub fn binary() -> Self {
        BINARY
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn letters(&self) -> Range<Letter> {
        0..self.size
    }

    pub fn contains(&self, a: Letter) -> bool {
        a < self.size
    }

    pub fn glyph(&self, a: Letter) -> char {
        match &self.glyphs {
            Some(g) => g[a as usize],
            None => char::from_digit(a as u32, 36).unwrap_or('?'),
        }
    }

    pub fn has_glyphs(&self) -> bool {
        self.glyphs.is_some()
    }

    pub fn letter_of(&self, c: char) -> Option<Letter> {
        let a = match &self.glyphs {
            Some(g) => g.iter().position(|&x| x == c)?,
            None => c.to_digit(36)? as usize,
        };
        (a < self.size()).then_some(a as Letter)
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        letters.iter().map(|&a| self.glyph(a)).collect()
    }
}

#[derive(Clone)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| !alphabet.contains(a)) {
            return Err(Error::AlphabetMismatch(format!("letter {bad} outside alphabet of size {}", alphabet.size())));
        }
        Ok(Word { letters, alphabet })
    }

    pub(crate) fn from_parts(letters: Vec<Letter>, alphabet: Alphabet) -> Self {
        debug_assert!(letters.iter().all(|&a| alphabet.contains(a)));
        Word { letters, alphabet }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word { letters: Vec::new(), alphabet }
    }

    /// Parses glyphs (digits when the alphabet has no glyph table).
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| {
                alphabet.letter_of(c).ok_or_else(|| {
                    Error::AlphabetMismatch(format!("{c:?} is not a letter of an alphabet of size {}", alphabet.size()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters, alphabet: alphabet.clone() })
    }

    /// Parses a digit string over `{0, .., k-1}`.
    pub fn digits(text: &str, k: usize) -> Result<Self> {
        Word::parse(text, &Alphabet::new(k)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet.size() <= 2
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, alphabet: self.alphabet.clone() }
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    pub fn factor(&self, range: Range<usize>) -> Word {
        Word { letters: self.letters[range].to_vec(), alphabet: self.alphabet.clone() }
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.factor(0..n)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters, alphabet: self.alphabet.clone() }
    }

    pub fn push(&mut self, a: Letter) -> Result<()> {
        if !self.alphabet.contains(a) {
            return Err(Error::AlphabetMismatch(format!("letter {a} outside alphabet")));
        }
        self.letters.push(a);
        Ok(())
    }

    pub fn starts_with(&self, other: &[Letter]) -> bool {
        self.letters.starts_with(other)
    }

    pub fn distinct_letters(&self) -> Vec<Letter> {
        let mut seen = vec![false; self.alphabet.size()];
        for &a in &self.letters {
            seen[a as usize] = true;
        }
        self.alphabet.letters().filter(|&a| seen[a as usize]).collect()
    }

    /// Same letters, reinterpreted over another alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Word> {
        Word::new(self.letters.clone(), alphabet)
    }

    /// Shortlex order: by length, then lexicographically by letter value.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

pub fn is_palindrome(letters: &[Letter]) -> bool {
    let n = letters.len();
    (0..n / 2).all(|i| letters[i] == letters[n - 1 - i])
}

/// All positions where `pattern` occurs in `text`, overlapping ones included.
pub fn occurrences(text: &[Letter], pattern: &[Letter]) -> Vec<usize> {
    if pattern.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - pattern.len()).filter(|&i| &text[i..i + pattern.len()] == pattern).collect()
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.render(&self.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "\"{self}\"")
        }
    }
}
