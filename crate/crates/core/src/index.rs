//! Factor index over a finite word: occurrences, extensions, special factors
//! and bilateral order.
//!
//! Extension sets are *observed* sets: an occurrence at the very start of the
//! source contributes no left extension and one ending at the very end
//! contributes no right extension.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Error, Result};
use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
pub struct FactorIndex {
    source: Word,
    max_len: usize,
    levels: Vec<BTreeMap<Vec<Letter>, Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub factor: Word,
    pub left: BTreeSet<Letter>,
    pub right: BTreeSet<Letter>,
    pub both_sided: BTreeSet<(Letter, Letter)>,
}

impl ExtensionReport {
    /// True when every observed left and right extension is also seen as part
    /// of some both-sided extension. Factors failing this have extension data
    /// cut off by the source boundary.
    pub fn is_fully_witnessed(&self) -> bool {
        self.left.iter().all(|a| self.both_sided.iter().any(|(x, _)| x == a))
            && self.right.iter().all(|b| self.both_sided.iter().any(|(_, y)| y == b))
    }

    pub fn class(&self) -> FactorClass {
        match (self.left.len() >= 2, self.right.len() >= 2) {
            (true, true) => FactorClass::Bispecial,
            (true, false) => FactorClass::LeftSpecial,
            (false, true) => FactorClass::RightSpecial,
            (false, false) => FactorClass::Ordinary,
        }
    }

    /// `#{awb} - #Rext - #Lext + 1`.
    pub fn bilateral_order(&self) -> Result<i64> {
        if self.both_sided.is_empty() {
            return Err(Error::InsufficientContext(format!("no both-sided extension of {:?} observed", self.factor)));
        }
        Ok(self.both_sided.len() as i64 - self.right.len() as i64 - self.left.len() as i64 + 1)
    }

    /// Letters `a` with `afa` observed.
    pub fn palindromic_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.both_sided.iter().filter(|(x, y)| x == y).map(|&(x, _)| x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorClass {
    Ordinary,
    LeftSpecial,
    RightSpecial,
    Bispecial,
}

impl FactorIndex {
    /// Indexes every factor of `source` of length at most `max_len`.
    pub fn build(source: Word, max_len: usize) -> Result<Self> {
        let len = source.len();
        if max_len > len {
            return invalid(format!("index depth {max_len} exceeds word length {len}"));
        }
        let letters = source.letters();
        let mut levels = Vec::with_capacity(max_len + 1);
        levels.push(BTreeMap::from([(Vec::new(), (0..=len).collect())]));
        for n in 1..=max_len {
            let mut level: BTreeMap<Vec<Letter>, Vec<usize>> = BTreeMap::new();
            for i in 0..=len - n {
                let f = &letters[i..i + n];
                match level.get_mut(f) {
                    Some(occ) => occ.push(i),
                    None => {
                        level.insert(f.to_vec(), vec![i]);
                    }
                }
            }
            levels.push(level);
        }
        Ok(FactorIndex { source, max_len, levels })
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    fn check_depth(&self, n: usize) -> Result<()> {
        if n > self.max_len {
            return invalid(format!("length {n} exceeds index depth {}", self.max_len));
        }
        Ok(())
    }

    pub fn contains(&self, f: &[Letter]) -> bool {
        self.levels.get(f.len()).is_some_and(|l| l.contains_key(f))
    }

    /// Strictly increasing start positions of `f`, or `None` if `f` is absent
    /// or longer than the index depth.
    pub fn occurrences(&self, f: &[Letter]) -> Option<&[usize]> {
        self.levels.get(f.len())?.get(f).map(Vec::as_slice)
    }

    /// Distinct factors of length `n` in lexicographic order.
    pub fn factors(&self, n: usize) -> Result<impl Iterator<Item = &[Letter]> + '_> {
        self.check_depth(n)?;
        Ok(self.levels[n].keys().map(Vec::as_slice))
    }

    pub fn word(&self, f: &[Letter]) -> Word {
        Word::from_parts(f.to_vec(), self.source.alphabet().clone())
    }

    pub fn factor_complexity(&self, n: usize) -> Result<usize> {
        self.check_depth(n)?;
        Ok(self.levels[n].len())
    }

    pub fn extensions(&self, f: &Word) -> Result<ExtensionReport> {
        self.extensions_of(f.letters())
    }

    pub fn extensions_of(&self, f: &[Letter]) -> Result<ExtensionReport> {
        self.check_depth(f.len())?;
        let occ = self.occurrences(f).ok_or_else(|| Error::NotInLanguage(self.word(f).to_string()))?;
        let src = self.source.letters();
        let n = f.len();
        let mut report = ExtensionReport {
            factor: self.word(f),
            left: BTreeSet::new(),
            right: BTreeSet::new(),
            both_sided: BTreeSet::new(),
        };
        for &i in occ {
            let left = i.checked_sub(1).map(|j| src[j]);
            let right = src.get(i + n).copied();
            if let Some(a) = left {
                report.left.insert(a);
            }
            if let Some(b) = right {
                report.right.insert(b);
            }
            if let (Some(a), Some(b)) = (left, right) {
                report.both_sided.insert((a, b));
            }
        }
        Ok(report)
    }

    pub fn classify_factor(&self, f: &Word) -> Result<FactorClass> {
        Ok(self.extensions(f)?.class())
    }

    pub fn bilateral_order(&self, f: &Word) -> Result<i64> {
        self.extensions(f)?.bilateral_order()
    }

    /// Bispecial factors of length at most `max_len`, in shortlex order.
    pub fn enumerate_bispecial(&self, max_len: usize) -> Result<Vec<Word>> {
        self.check_depth(max_len)?;
        let mut out = Vec::new();
        for n in 0..=max_len {
            for f in self.levels[n].keys() {
                if self.extensions_of(f)?.class() == FactorClass::Bispecial {
                    out.push(self.word(f));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, k: usize) -> Word {
        Word::digits(s, k).unwrap()
    }

    fn fib(n: usize) -> Word {
        // 0 -> 01, 1 -> 0
        let mut v = vec![0u8];
        while v.len() < n {
            v = v.iter().flat_map(|&a| if a == 0 { vec![0, 1] } else { vec![0] }).collect();
        }
        v.truncate(n);
        Word::new(v, crate::word::Alphabet::binary()).unwrap()
    }

    fn periodic01(reps: usize) -> Word {
        w(&"01".repeat(reps), 2)
    }

    #[test]
    fn aba_factors() {
        let idx = FactorIndex::build(w("010", 2), 3).unwrap();
        let all: Vec<String> = (0..=3)
            .flat_map(|n| idx.factors(n).unwrap().map(|f| idx.word(f).to_string()).collect::<Vec<_>>())
            .collect();
        assert_eq!(all, vec!["", "0", "1", "01", "10", "010"]);
    }

    #[test]
    fn empty_word_index() {
        let idx = FactorIndex::build(w("", 2), 0).unwrap();
        assert_eq!(idx.factor_complexity(0).unwrap(), 1);
        assert!(idx.contains(&[]));
        assert!(matches!(idx.factor_complexity(1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn depth_beyond_length_rejected() {
        assert!(matches!(FactorIndex::build(w("01", 2), 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn periodic_extensions() {
        let idx = FactorIndex::build(periodic01(20), 5).unwrap();
        let r = idx.extensions(&w("0", 2)).unwrap();
        assert_eq!(r.left, BTreeSet::from([1]));
        assert_eq!(r.right, BTreeSet::from([1]));
        assert_eq!(r.both_sided, BTreeSet::from([(1, 1)]));
        assert_eq!(r.class(), FactorClass::Ordinary);
        assert_eq!(r.bilateral_order().unwrap(), 0);
        assert_eq!(idx.factor_complexity(3).unwrap(), 2);
    }

    #[test]
    fn fibonacci_empty_word_extensions() {
        let idx = FactorIndex::build(fib(100), 10).unwrap();
        let r = idx.extensions(&w("", 2)).unwrap();
        assert_eq!(r.both_sided, BTreeSet::from([(0, 0), (0, 1), (1, 0)]));
        assert_eq!(r.class(), FactorClass::Bispecial);
        assert_eq!(r.bilateral_order().unwrap(), 0);
        for n in 1..=10 {
            assert_eq!(idx.factor_complexity(n).unwrap(), n + 1);
        }
    }

    #[test]
    fn single_letter_has_no_context() {
        let idx = FactorIndex::build(w("0", 1), 1).unwrap();
        let r = idx.extensions(&w("0", 1)).unwrap();
        assert!(r.left.is_empty() && r.right.is_empty() && r.both_sided.is_empty());
        assert!(matches!(idx.bilateral_order(&w("0", 1)), Err(Error::InsufficientContext(_))));
    }

    #[test]
    fn absent_factor() {
        let idx = FactorIndex::build(periodic01(5), 3).unwrap();
        assert!(matches!(idx.extensions(&w("00", 2)), Err(Error::NotInLanguage(_))));
        assert!(matches!(idx.classify_factor(&w("11", 2)), Err(Error::NotInLanguage(_))));
    }

    #[test]
    fn bispecial_enumeration() {
        let idx = FactorIndex::build(fib(1000), 8).unwrap();
        let bs: Vec<String> = idx.enumerate_bispecial(8).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(bs, vec!["", "0", "010", "010010"]);

        let zeros = FactorIndex::build(w(&"0".repeat(20), 1), 5).unwrap();
        assert!(zeros.enumerate_bispecial(5).unwrap().is_empty());
    }

    #[test]
    fn classify_long_prefixes() {
        let idx = FactorIndex::build(fib(200), 20).unwrap();
        assert_eq!(idx.classify_factor(&w("0100101001001", 2)).unwrap(), FactorClass::LeftSpecial);
        assert_eq!(idx.classify_factor(&w("0100101001001010010", 2)).unwrap(), FactorClass::Bispecial);
    }
}
