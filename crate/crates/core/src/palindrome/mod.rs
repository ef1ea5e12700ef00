//! Antimorphisms, palindromic closure, palindromic census and defect.

mod eertree;

pub use eertree::PalindromicTree;

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::generators::PrefixSource;
use crate::index::FactorIndex;
use crate::word::{is_palindrome, Alphabet, Letter, Word};

/// The involutory antimorphisms of `H = {id, R, E, RE}` plus their
/// composition. `RE` is `E∘R`, which on binary words is the letter exchange.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AntimorphismKind {
    R,
    E,
    RE,
}

impl AntimorphismKind {
    pub const ALL: [AntimorphismKind; 3] = [AntimorphismKind::R, AntimorphismKind::E, AntimorphismKind::RE];

    fn check(self, alphabet: &Alphabet) -> Result<()> {
        if self != AntimorphismKind::R && alphabet.size() > 2 {
            return Err(Error::AlphabetMismatch(format!(
                "{self} needs a binary alphabet, got size {}",
                alphabet.size()
            )));
        }
        Ok(())
    }

    /// Applies the map to raw letters. Callers have checked the alphabet.
    pub fn map_letters(self, w: &[Letter]) -> Vec<Letter> {
        match self {
            AntimorphismKind::R => w.iter().rev().copied().collect(),
            AntimorphismKind::E => w.iter().rev().map(|&a| 1 - a).collect(),
            AntimorphismKind::RE => w.iter().map(|&a| 1 - a).collect(),
        }
    }

    pub fn is_fixed(self, w: &[Letter]) -> bool {
        let n = w.len();
        match self {
            AntimorphismKind::R => is_palindrome(w),
            AntimorphismKind::E => (0..n).all(|i| w[i] != w[n - 1 - i]),
            AntimorphismKind::RE => n == 0,
        }
    }
}

impl fmt::Display for AntimorphismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AntimorphismKind::R => "R",
            AntimorphismKind::E => "E",
            AntimorphismKind::RE => "RE",
        })
    }
}

impl FromStr for AntimorphismKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(AntimorphismKind::R),
            "E" => Ok(AntimorphismKind::E),
            "RE" | "ER" => Ok(AntimorphismKind::RE),
            _ => invalid(format!("unknown antimorphism {s:?}")),
        }
    }
}

pub fn apply_antimorphism(kind: AntimorphismKind, w: &Word) -> Result<Word> {
    kind.check(w.alphabet())?;
    let alphabet = if kind == AntimorphismKind::R { w.alphabet().clone() } else { binary_of(w.alphabet()) };
    Word::new(kind.map_letters(w.letters()), alphabet)
}

fn binary_of(alphabet: &Alphabet) -> Alphabet {
    if alphabet.size() == 2 {
        alphabet.clone()
    } else {
        Alphabet::binary()
    }
}

pub fn is_psi_palindrome(kind: AntimorphismKind, w: &Word) -> Result<bool> {
    kind.check(w.alphabet())?;
    Ok(kind.is_fixed(w.letters()))
}

pub fn longest_palindromic_suffix(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return invalid("the empty word has no nonempty palindromic suffix");
    }
    let mut tree = PalindromicTree::new(w.alphabet().size());
    for &a in w.letters() {
        tree.push(a);
    }
    let n = tree.longest_suffix_len();
    Ok(w.factor(w.len() - n..w.len()))
}

/// Shortest palindrome having `w` as a prefix.
pub fn palindromic_closure(w: &Word) -> Word {
    if w.is_empty() {
        return w.clone();
    }
    let s = longest_palindromic_suffix(w).expect("nonempty");
    let head = w.prefix(w.len() - s.len());
    w.concat(&head.reversed())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeCensus {
    pub word: Word,
    /// Distinct palindromic factors, the empty word included.
    pub distinct_palindromes: usize,
    pub defect: usize,
    /// `per_length_counts[n]` = distinct palindromic factors of length `n`.
    pub per_length_counts: Vec<usize>,
}

pub fn census(w: &Word) -> PalindromeCensus {
    let mut tree = PalindromicTree::new(w.alphabet().size());
    for &a in w.letters() {
        tree.push(a);
    }
    PalindromeCensus {
        word: w.clone(),
        distinct_palindromes: tree.distinct(),
        defect: tree.defect(),
        per_length_counts: tree.per_length_counts(),
    }
}

pub fn defect(w: &Word) -> usize {
    census(w).defect
}

/// Defect of the length-`n` prefix for each checkpoint `n`.
pub fn defect_profile(src: &mut dyn PrefixSource, checkpoints: &[usize]) -> Result<Vec<(usize, usize)>> {
    if checkpoints.windows(2).any(|p| p[0] >= p[1]) {
        return invalid("checkpoints must be strictly increasing");
    }
    let Some(&last) = checkpoints.last() else {
        return Ok(Vec::new());
    };
    let prefix = src.prefix(last);
    let mut tree = PalindromicTree::new(prefix.alphabet().size());
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut next = checkpoints.iter().peekable();
    while next.peek() == Some(&&0) {
        out.push((0, 0));
        next.next();
    }
    for (i, &a) in prefix.letters().iter().enumerate() {
        tree.push(a);
        if next.peek() == Some(&&(i + 1)) {
            out.push((i + 1, tree.defect()));
            next.next();
        }
    }
    Ok(out)
}

/// Number of `kind`-palindromic factors of length `n`.
pub fn psi_palindromic_complexity(index: &FactorIndex, n: usize, kind: AntimorphismKind) -> Result<usize> {
    kind.check(index.source().alphabet())?;
    Ok(index.factors(n)?.filter(|f| kind.is_fixed(f)).count())
}

/// Distinct palindromic factors of length at most `max_len` centered at
/// `center` (`None` = the empty center, i.e. even lengths, ε included).
pub fn palindromes_centered(index: &FactorIndex, center: Option<Letter>, max_len: usize) -> Result<usize> {
    let mut count = 0;
    for n in 0..=max_len {
        let matches = |f: &[Letter]| match center {
            None => n % 2 == 0,
            Some(c) => n % 2 == 1 && f[n / 2] == c,
        };
        count += index.factors(n)?.filter(|f| matches(f) && is_palindrome(f)).count();
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn w(s: &str) -> Word {
        Word::digits(s, 3).unwrap()
    }
    fn b(s: &str) -> Word {
        Word::digits(s, 2).unwrap()
    }

    fn naive_palindromes(w: &[Letter]) -> HashSet<Vec<Letter>> {
        let mut set = HashSet::new();
        for i in 0..=w.len() {
            for j in i..=w.len() {
                if is_palindrome(&w[i..j]) {
                    set.insert(w[i..j].to_vec());
                }
            }
        }
        set
    }

    fn all_words(k: u8, n: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out.into_iter().flat_map(|v| (0..k).map(move |a| [v.clone(), vec![a]].concat())).collect();
        }
        out
    }

    #[test]
    fn antimorphisms() {
        assert_eq!(apply_antimorphism(AntimorphismKind::E, &b("011")).unwrap(), b("001"));
        let abc = Word::digits("012", 3).unwrap();
        assert_eq!(apply_antimorphism(AntimorphismKind::R, &abc).unwrap().to_string(), "210");
        // E(R(01)) = E(10) = E(0)E(1) = 10
        assert_eq!(apply_antimorphism(AntimorphismKind::RE, &b("01")).unwrap(), b("10"));
        assert!(matches!(apply_antimorphism(AntimorphismKind::E, &abc), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn re_is_e_after_r_and_commutes() {
        for n in 0..8 {
            for v in all_words(2, n) {
                let x = Word::new(v, Alphabet::binary()).unwrap();
                let er = apply_antimorphism(AntimorphismKind::E, &apply_antimorphism(AntimorphismKind::R, &x).unwrap())
                    .unwrap();
                let re = apply_antimorphism(AntimorphismKind::R, &apply_antimorphism(AntimorphismKind::E, &x).unwrap())
                    .unwrap();
                assert_eq!(apply_antimorphism(AntimorphismKind::RE, &x).unwrap(), er);
                assert_eq!(er, re);
                for kind in [AntimorphismKind::R, AntimorphismKind::E] {
                    let twice = apply_antimorphism(kind, &apply_antimorphism(kind, &x).unwrap()).unwrap();
                    assert_eq!(twice, x);
                }
            }
        }
    }

    #[test]
    fn psi_palindromes() {
        assert!(is_psi_palindrome(AntimorphismKind::R, &b("010")).unwrap());
        assert!(is_psi_palindrome(AntimorphismKind::E, &b("01")).unwrap());
        assert!(!is_psi_palindrome(AntimorphismKind::E, &b("00")).unwrap());
        assert!(is_psi_palindrome(AntimorphismKind::E, &b("")).unwrap());
    }

    #[test]
    fn palindromic_suffixes() {
        assert_eq!(longest_palindromic_suffix(&b("0101")).unwrap(), b("101"));
        assert_eq!(longest_palindromic_suffix(&b("0110")).unwrap(), b("0110"));
        assert_eq!(longest_palindromic_suffix(&b("01")).unwrap(), b("1"));
        assert!(matches!(longest_palindromic_suffix(&b("")), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn closures() {
        assert_eq!(palindromic_closure(&b("0101")), b("01010"));
        assert_eq!(palindromic_closure(&w("0102")), w("0102010"));
        assert_eq!(palindromic_closure(&b("0110")), b("0110"));
        assert_eq!(palindromic_closure(&b("")), b(""));
    }

    #[test]
    fn closure_is_shortest_palindromic_extension() {
        for n in 0..=10 {
            for v in all_words(2, n) {
                let x = Word::new(v.clone(), Alphabet::binary()).unwrap();
                let c = palindromic_closure(&x);
                assert!(c.is_palindrome() && c.starts_with(&v));
                // brute force: the shortest palindrome v·t with |t| < |c| - |v| must not exist
                for extra in 0..c.len() - v.len() {
                    for t in all_words(2, extra) {
                        let cand = [v.clone(), t].concat();
                        assert!(!is_palindrome(&cand), "{cand:?} shorter than {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn census_examples() {
        let c = census(&b("0100"));
        assert_eq!(c.distinct_palindromes, 5);
        assert_eq!(c.defect, 0);
        assert_eq!(c.per_length_counts, vec![1, 2, 1, 1]);

        let e = census(&b(""));
        assert_eq!((e.distinct_palindromes, e.defect), (1, 0));

        assert_eq!(defect(&b("110100110010")), 1);
        assert_eq!(defect(&b("01")), 0);
    }

    #[test]
    fn census_matches_naive_enumeration() {
        for (k, max) in [(2u8, 14usize), (3, 9)] {
            for n in 0..=max {
                for v in all_words(k, n) {
                    let x = Word::new(v.clone(), Alphabet::new(k as usize).unwrap()).unwrap();
                    let pals = naive_palindromes(&v);
                    let c = census(&x);
                    assert_eq!(c.distinct_palindromes, pals.len(), "{v:?}");
                    assert_eq!(c.defect, v.len() + 1 - pals.len());
                    assert_eq!(c.per_length_counts.iter().sum::<usize>(), pals.len());
                }
            }
        }
    }

    #[test]
    fn each_letter_adds_at_most_one_palindrome() {
        let mut tree = PalindromicTree::new(3);
        let text = w("0102010010201001020101202");
        let mut prev = tree.distinct();
        for &a in text.letters() {
            tree.push(a);
            assert!(tree.distinct() - prev <= 1);
            prev = tree.distinct();
        }
    }

    #[test]
    fn centered_counts() {
        let idx = FactorIndex::build(b(&"0".repeat(20)), 10).unwrap();
        assert_eq!(palindromes_centered(&idx, Some(1), 10).unwrap(), 0);
        // 0^n for even n in 0..=10
        assert_eq!(palindromes_centered(&idx, None, 10).unwrap(), 6);
        assert_eq!(palindromes_centered(&idx, Some(0), 10).unwrap(), 5);
    }

    #[test]
    fn psi_complexity_examples() {
        let idx = FactorIndex::build(b(&"01".repeat(20)), 6).unwrap();
        assert_eq!(psi_palindromic_complexity(&idx, 2, AntimorphismKind::E).unwrap(), 2);
        for n in [1, 3, 5] {
            assert_eq!(psi_palindromic_complexity(&idx, n, AntimorphismKind::E).unwrap(), 0);
        }
        let ternary = FactorIndex::build(w("0102010"), 3).unwrap();
        assert!(matches!(
            psi_palindromic_complexity(&ternary, 2, AntimorphismKind::E),
            Err(Error::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn profile_rejects_unsorted_checkpoints() {
        let mut src = crate::generators::periodic_source(&b("01")).unwrap();
        assert!(defect_profile(&mut src, &[10, 5]).is_err());
        assert_eq!(defect_profile(&mut src, &[0, 4]).unwrap(), vec![(0, 0), (4, 0)]);
    }
}
