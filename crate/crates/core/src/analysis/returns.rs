use crate::error::{Error, Result};
use crate::generators::PrefixSource;
use crate::morphisms::Morphism;
use crate::word::{occurrences, Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReturnWordReport {
    pub factor: Word,
    /// Distinct return words, ordered by first occurrence.
    pub return_words: Vec<Word>,
    /// `r · factor` for each return word `r`, in the same order.
    pub complete_return_words: Vec<Word>,
    pub depth: usize,
    /// Set when the last new return word first showed up in the second half
    /// of the prefix, so a deeper prefix may still reveal more.
    pub truncated: bool,
}

pub fn return_words(src: &mut dyn PrefixSource, w: &Word, depth: usize) -> Result<ReturnWordReport> {
    let prefix = src.prefix(depth);
    let occ = occurrences(prefix.letters(), w.letters());
    if occ.is_empty() {
        return Err(Error::NotInLanguage(w.to_string()));
    }
    let mut return_words: Vec<Word> = Vec::new();
    let mut last_new = 0;
    for pair in occ.windows(2) {
        let r = prefix.factor(pair[0]..pair[1]);
        if !return_words.contains(&r) {
            return_words.push(r);
            last_new = pair[0];
        }
    }
    let complete_return_words = return_words.iter().map(|r| r.concat(w)).collect();
    Ok(ReturnWordReport {
        factor: w.clone(),
        return_words,
        complete_return_words,
        depth,
        truncated: occ.len() < 2 || 2 * last_new > depth,
    })
}

/// First pair of distinct return words sharing a length.
pub fn equal_length_return_words(report: &ReturnWordReport) -> Option<(Word, Word)> {
    let rw = &report.return_words;
    (0..rw.len()).find_map(|i| rw[i + 1..].iter().find(|r| r.len() == rw[i].len()).map(|r| (rw[i].clone(), r.clone())))
}

/// Recoding of a prefix by the return words of `factor`:
/// `prefix = g · psi(derived) · tail`, where `tail` starts with the last
/// occurrence of `factor`.
#[derive(Clone, Debug)]
pub struct DerivatedWord {
    pub factor: Word,
    pub g: Word,
    /// `k -> k-th return word` (coding letters print as `1..s`).
    pub psi: Morphism,
    pub derived: Word,
    pub tail: Word,
    pub depth: usize,
}

impl DerivatedWord {
    /// `g · psi(derived) · tail`, which equals the analysed prefix.
    pub fn reconstruct(&self) -> Word {
        let body = self.psi.apply(&self.derived).expect("derived word over psi's domain");
        self.g.concat(&body).concat(&self.tail)
    }
}

const CODING_GLYPHS: &str = "123456789abcdefghijklmnopqrstuvwxyz";

pub fn derivated_word(src: &mut dyn PrefixSource, w: &Word, depth: usize) -> Result<DerivatedWord> {
    let prefix = src.prefix(depth);
    let occ = occurrences(prefix.letters(), w.letters());
    if occ.len() < 2 {
        return Err(Error::InsufficientContext(format!(
            "{w:?} occurs {} time(s) in a prefix of length {depth}",
            occ.len()
        )));
    }
    let mut stems: Vec<&[Letter]> = Vec::new();
    let mut coded = Vec::with_capacity(occ.len() - 1);
    for pair in occ.windows(2) {
        let r = &prefix.letters()[pair[0]..pair[1]];
        let code = match stems.iter().position(|&s| s == r) {
            Some(c) => c,
            None => {
                stems.push(r);
                stems.len() - 1
            }
        };
        coded.push(code as Letter);
    }
    let s = stems.len();
    let coding = if s <= CODING_GLYPHS.len() {
        Alphabet::with_glyphs(&CODING_GLYPHS.chars().take(s).collect::<Vec<_>>())?
    } else {
        Alphabet::new(s)?
    };
    let images = stems.iter().map(|r| Word::new(r.to_vec(), prefix.alphabet().clone())).collect::<Result<Vec<_>>>()?;
    let psi = Morphism::new(coding.clone(), prefix.alphabet().clone(), images)?;
    let last = *occ.last().expect("at least two occurrences");
    Ok(DerivatedWord {
        factor: w.clone(),
        g: prefix.prefix(occ[0]),
        psi,
        derived: Word::new(coded, coding)?,
        tail: prefix.factor(last..depth),
        depth,
    })
}
