//! Prefix sources for infinite words: standard episturmian words given by a
//! directive sequence, fixed points of prolongable morphisms, periodic words,
//! letterwise images and the binary S-preimage.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::index::FactorIndex;
use crate::morphisms::Morphism;
use crate::palindrome::palindromic_closure;
use crate::word::{Alphabet, Letter, Word};

/// Produces arbitrarily long prefixes of one fixed infinite word.
///
/// `prefix(n)` is always a prefix of `prefix(m)` for `n <= m`.
pub trait PrefixSource: Send {
    fn alphabet(&self) -> &Alphabet;

    /// Makes at least `n` letters available in [`PrefixSource::buffer`].
    fn fill(&mut self, n: usize);

    /// Letters generated so far (possibly more than were requested).
    fn buffer(&self) -> &[Letter];

    fn clone_box(&self) -> Box<dyn PrefixSource>;

    fn prefix(&mut self, n: usize) -> Word {
        self.fill(n);
        Word::from_parts(self.buffer()[..n].to_vec(), self.alphabet().clone())
    }

    fn boxed(self) -> Box<dyn PrefixSource>
    where
        Self: Sized + 'static,
    {
        Box::new(self)
    }
}

impl Clone for Box<dyn PrefixSource> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

impl PrefixSource for Box<dyn PrefixSource> {
    fn alphabet(&self) -> &Alphabet {
        (**self).alphabet()
    }
    fn fill(&mut self, n: usize) {
        (**self).fill(n)
    }
    fn buffer(&self) -> &[Letter] {
        (**self).buffer()
    }
    fn clone_box(&self) -> Box<dyn PrefixSource> {
        (**self).clone_box()
    }
}

/// Seed `w_0` plus an eventually periodic directive sequence
/// `δ_1 δ_2 ... = preperiod · period^ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectiveSpec {
    seed: Word,
    preperiod: Vec<Letter>,
    period: Vec<Letter>,
    alphabet: Alphabet,
}

impl DirectiveSpec {
    /// The alphabet is `{0, .., m}` with `m` the largest letter used.
    pub fn new(seed: &[Letter], preperiod: &[Letter], period: &[Letter]) -> Result<Self> {
        let max = seed.iter().chain(preperiod).chain(period).copied().max().unwrap_or(0);
        Self::with_alphabet(seed, preperiod, period, Alphabet::new(max as usize + 1)?)
    }

    pub fn with_alphabet(seed: &[Letter], preperiod: &[Letter], period: &[Letter], alphabet: Alphabet) -> Result<Self> {
        if period.is_empty() {
            return invalid("directive period must be nonempty");
        }
        let seed = Word::new(seed.to_vec(), alphabet.clone())?;
        Word::new(preperiod.to_vec(), alphabet.clone())?;
        Word::new(period.to_vec(), alphabet.clone())?;
        Ok(DirectiveSpec { seed, preperiod: preperiod.to_vec(), period: period.to_vec(), alphabet })
    }

    /// Directive `period^ω` with empty seed and preperiod.
    pub fn periodic(period: &[Letter]) -> Result<Self> {
        Self::new(&[], &[], period)
    }

    pub fn seed(&self) -> &Word {
        &self.seed
    }

    pub fn preperiod(&self) -> &[Letter] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// `δ_i`, 1-based.
    pub fn letter(&self, i: usize) -> Letter {
        assert!(i >= 1, "directive letters are indexed from 1");
        let i = i - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// Letters `δ_m` for `m > n`, i.e. those still to be used after `w_n`.
    pub fn letters_after(&self, n: usize) -> Vec<Letter> {
        let mut seen = vec![false; self.alphabet.size()];
        for &a in self.preperiod.iter().skip(n).chain(&self.period) {
            seen[a as usize] = true;
        }
        self.alphabet.letters().filter(|&a| seen[a as usize]).collect()
    }

    /// Least `ℓ` such that `δ_1^ℓ` is not a prefix of the directive sequence,
    /// or `None` when the sequence is constant.
    pub fn first_letter_run(&self) -> Option<usize> {
        let d1 = self.letter(1);
        if self.period.iter().all(|&a| a == d1) && self.preperiod.iter().all(|&a| a == d1) {
            return None;
        }
        (1..).find(|&l| self.letter(l) != d1)
    }
}

impl fmt::Display for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |w: &[Letter]| self.alphabet.render(w);
        write!(f, "seed={};pre={};per={}", r(self.seed.letters()), r(&self.preperiod), r(&self.period))
    }
}

/// Standard episturmian word: limit of `w_n = (w_{n-1} δ_n)^R`.
#[derive(Clone, Debug)]
pub struct StandardEpisturmian {
    spec: DirectiveSpec,
    word: Vec<Letter>,
    /// `|w_0|, |w_1|, ..., |w_n|` for the steps done so far.
    pal_lengths: Vec<usize>,
    /// Most recent directive index at which each letter was used.
    last_use: Vec<Option<usize>>,
}

pub fn standard_episturmian(spec: &DirectiveSpec) -> StandardEpisturmian {
    StandardEpisturmian {
        spec: spec.clone(),
        word: spec.seed.letters().to_vec(),
        pal_lengths: vec![spec.seed.len()],
        last_use: vec![None; spec.alphabet.size()],
    }
}

impl StandardEpisturmian {
    pub fn spec(&self) -> &DirectiveSpec {
        &self.spec
    }

    fn step(&mut self) {
        let n = self.pal_lengths.len() - 1;
        let x = self.spec.letter(n + 1);
        if !self.spec.seed.is_empty() {
            // General seeds: iterate the closure directly.
            let mut w = Word::from_parts(std::mem::take(&mut self.word), self.spec.alphabet.clone());
            w.push(x).expect("directive letter in alphabet");
            self.word = palindromic_closure(&w).into_letters();
        } else {
            // With an empty seed, (w_n x)^R = w_n · w_{m-1}^{-1} w_n where m is the
            // last index with δ_m = x, and w_n x w_n if x is new.
            let len = self.word.len();
            match self.last_use[x as usize] {
                None => {
                    self.word.push(x);
                    self.word.extend_from_within(..len);
                }
                Some(m) => {
                    let skip = self.pal_lengths[m - 1];
                    self.word.extend_from_within(skip..len);
                }
            }
        }
        self.last_use[x as usize] = Some(n + 1);
        self.pal_lengths.push(self.word.len());
    }

    /// The palindromic prefix `w_n`.
    pub fn palindromic_prefix(&mut self, n: usize) -> Word {
        while self.pal_lengths.len() <= n {
            self.step();
        }
        Word::from_parts(self.word[..self.pal_lengths[n]].to_vec(), self.spec.alphabet.clone())
    }

    /// Index `n` of the longest palindromic prefix `w_n` no longer than `len`.
    pub fn steps_within(&mut self, len: usize) -> usize {
        self.fill(len + 1);
        self.pal_lengths.iter().rposition(|&l| l <= len).unwrap_or(0)
    }
}

impl PrefixSource for StandardEpisturmian {
    fn alphabet(&self) -> &Alphabet {
        &self.spec.alphabet
    }

    fn fill(&mut self, n: usize) {
        while self.word.len() < n {
            self.step();
        }
    }

    fn buffer(&self) -> &[Letter] {
        &self.word
    }

    fn clone_box(&self) -> Box<dyn PrefixSource> {
        Box::new(self.clone())
    }
}

/// Fixed point of a prolongable, nonerasing morphism starting with a letter.
#[derive(Clone, Debug)]
pub struct FixedPoint {
    morphism: Morphism,
    word: Vec<Letter>,
    cursor: usize,
}

pub fn fixed_point(m: &Morphism, a: Letter) -> Result<FixedPoint> {
    if m.domain() != m.codomain() && m.domain().size() != m.codomain().size() {
        return invalid("fixed points need an endomorphism");
    }
    if !m.domain().contains(a) {
        return Err(Error::AlphabetMismatch(format!("letter {a} outside the domain")));
    }
    let image = m.image(a);
    if image.len() < 2 || image.letters()[0] != a {
        return invalid(format!("morphism is not prolongable at {a}"));
    }
    if m.images().iter().any(Word::is_empty) {
        return invalid("fixed points are only generated for nonerasing morphisms");
    }
    Ok(FixedPoint { morphism: m.clone(), word: image.letters().to_vec(), cursor: 1 })
}

impl PrefixSource for FixedPoint {
    fn alphabet(&self) -> &Alphabet {
        self.morphism.domain()
    }

    fn fill(&mut self, n: usize) {
        while self.word.len() < n {
            let a = self.word[self.cursor];
            self.cursor += 1;
            self.word.extend_from_slice(self.morphism.image(a).letters());
        }
    }

    fn buffer(&self) -> &[Letter] {
        &self.word
    }

    fn clone_box(&self) -> Box<dyn PrefixSource> {
        Box::new(self.clone())
    }
}

/// Letters interleaved with copies of `v_{i-1}` in the recursive word
/// `v_i = v_{i-1} 0 v_{i-1} 1 v_{i-1} 1 v_{i-1} 0 v_{i-1} 2 v_{i-1} 2 v_{i-1} 0 v_{i-1} 1 v_{i-1} 1 v_{i-1} 0 v_{i-1}`.
const EXAMPLE3_TEMPLATE: [Letter; 10] = [0, 1, 1, 0, 2, 2, 0, 1, 1, 0];

/// The ternary rich word `v = lim v_i` whose image under
/// `0 -> 0100, 1 -> 01011, 2 -> 010111` has unbounded defect.
#[derive(Clone, Debug)]
pub struct Example3Source {
    alphabet: Alphabet,
    word: Vec<Letter>,
    level: usize,
}

pub fn example3_word() -> Example3Source {
    Example3Source { alphabet: Alphabet::new(3).expect("ternary"), word: Vec::new(), level: 0 }
}

impl Example3Source {
    fn grow(&mut self) {
        let prev = std::mem::take(&mut self.word);
        let mut next = Vec::with_capacity(11 * prev.len() + 10);
        next.extend_from_slice(&prev);
        for &t in &EXAMPLE3_TEMPLATE {
            next.push(t);
            next.extend_from_slice(&prev);
        }
        self.word = next;
        self.level += 1;
    }

    /// `v_i` (with `v_0 = ε`).
    pub fn level(&mut self, i: usize) -> Word {
        let len = example3_level_len(i);
        self.prefix(len)
    }
}

/// `|v_i| = 11 |v_{i-1}| + 10`, `|v_0| = 0`.
pub fn example3_level_len(i: usize) -> usize {
    (0..i).fold(0, |len, _| 11 * len + 10)
}

impl PrefixSource for Example3Source {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn fill(&mut self, n: usize) {
        while self.word.len() < n {
            self.grow();
        }
    }

    fn buffer(&self) -> &[Letter] {
        &self.word
    }

    fn clone_box(&self) -> Box<dyn PrefixSource> {
        Box::new(self.clone())
    }
}

/// `p^ω`.
#[derive(Clone, Debug)]
pub struct PeriodicSource {
    period: Word,
    word: Vec<Letter>,
}

pub fn periodic_source(p: &Word) -> Result<PeriodicSource> {
    if p.is_empty() {
        return invalid("period must be nonempty");
    }
    Ok(PeriodicSource { period: p.clone(), word: Vec::new() })
}

impl PrefixSource for PeriodicSource {
    fn alphabet(&self) -> &Alphabet {
        self.period.alphabet()
    }

    fn fill(&mut self, n: usize) {
        while self.word.len() < n {
            self.word.extend_from_slice(self.period.letters());
        }
    }

    fn buffer(&self) -> &[Letter] {
        &self.word
    }

    fn clone_box(&self) -> Box<dyn PrefixSource> {
        Box::new(self.clone())
    }
}

/// Letter present in every factor of length 2; the smallest one on ties.
pub fn separating_letter(index: &FactorIndex) -> Result<Option<Letter>> {
    if index.max_len() < 2 {
        return invalid("separating letter needs an index of depth at least 2");
    }
    let k = index.source().alphabet().size();
    let mut candidate = vec![true; k];
    let mut any = false;
    for f in index.factors(2)? {
        any = true;
        for (a, c) in candidate.iter_mut().enumerate() {
            *c &= f.contains(&(a as Letter));
        }
    }
    Ok(any.then(|| candidate.iter().position(|&c| c).map(|a| a as Letter)).flatten())
}

/// Letterwise image `m(u)` of the word produced by `inner`.
#[derive(Clone)]
pub struct ImageSource {
    morphism: Morphism,
    inner: Box<dyn PrefixSource>,
    consumed: usize,
    word: Vec<Letter>,
}

/// Upper bound on consecutive erased letters before the image is declared stuck.
const MAX_ERASED_RUN: usize = 1 << 24;

pub fn image_source(m: &Morphism, src: Box<dyn PrefixSource>) -> Result<ImageSource> {
    if m.domain().size() < src.alphabet().size() {
        return Err(Error::AlphabetMismatch(format!(
            "morphism domain has {} letters, source alphabet {}",
            m.domain().size(),
            src.alphabet().size()
        )));
    }
    if m.images().iter().all(Word::is_empty) {
        return invalid("morphism erases every letter");
    }
    Ok(ImageSource { morphism: m.clone(), inner: src, consumed: 0, word: Vec::new() })
}

impl PrefixSource for ImageSource {
    fn alphabet(&self) -> &Alphabet {
        self.morphism.codomain()
    }

    fn fill(&mut self, n: usize) {
        let mut erased = 0;
        while self.word.len() < n {
            let want = self.consumed + (n - self.word.len()).max(64);
            self.inner.fill(want);
            while self.consumed < want && self.word.len() < n {
                let a = self.inner.buffer()[self.consumed];
                self.consumed += 1;
                let img = self.morphism.image(a).letters();
                if img.is_empty() {
                    erased += 1;
                    assert!(erased < MAX_ERASED_RUN, "image source stalled: input keeps mapping to ε");
                } else {
                    erased = 0;
                }
                self.word.extend_from_slice(img);
            }
        }
    }

    fn buffer(&self) -> &[Letter] {
        &self.word
    }

    fn clone_box(&self) -> Box<dyn PrefixSource> {
        Box::new(self.clone())
    }
}

/// The binary word `w` with `w_0 = first` and `S(w) = v`, where `v` is the
/// word produced by `inner`.
#[derive(Clone)]
pub struct SPreimageSource {
    inner: Box<dyn PrefixSource>,
    word: Vec<Letter>,
}

pub fn s_preimage_source(inner: Box<dyn PrefixSource>, first: Letter) -> Result<SPreimageSource> {
    if inner.alphabet().size() > 2 {
        return Err(Error::AlphabetMismatch("S-preimage needs a binary source".into()));
    }
    if first > 1 {
        return Err(Error::AlphabetMismatch(format!("initial letter {first} is not binary")));
    }
    Ok(SPreimageSource { inner, word: vec![first] })
}

impl PrefixSource for SPreimageSource {
    fn alphabet(&self) -> &Alphabet {
        const BINARY: &Alphabet = &crate::word::BINARY;
        BINARY
    }

    fn fill(&mut self, n: usize) {
        if self.word.len() >= n {
            return;
        }
        self.inner.fill(n - 1);
        let v = self.inner.buffer();
        while self.word.len() < n {
            let i = self.word.len();
            let prev = self.word[i - 1];
            self.word.push(prev ^ v[i - 1]);
        }
    }

    fn buffer(&self) -> &[Letter] {
        &self.word
    }

    fn clone_box(&self) -> Box<dyn PrefixSource> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::binary_projection;

    fn digits(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| b - b'0').collect()
    }

    fn spec(per: &str) -> DirectiveSpec {
        DirectiveSpec::periodic(&digits(per)).unwrap()
    }

    fn closure_chain(spec: &DirectiveSpec, steps: usize) -> Vec<Word> {
        let mut w = spec.seed().clone();
        let mut out = vec![w.clone()];
        for i in 1..=steps {
            w.push(spec.letter(i)).unwrap();
            w = palindromic_closure(&w);
            out.push(w.clone());
        }
        out
    }

    #[test]
    fn fibonacci_directive() {
        let mut s = standard_episturmian(&spec("01"));
        let ws: Vec<String> = (1..=3).map(|n| s.palindromic_prefix(n).to_string()).collect();
        assert_eq!(ws, vec!["0", "010", "010010"]);
        assert_eq!(s.prefix(10).to_string(), "0100101001");
    }

    #[test]
    fn tribonacci_directive() {
        let mut s = standard_episturmian(&spec("012"));
        assert_eq!(s.palindromic_prefix(3).to_string(), "0102010");
        let mut c = standard_episturmian(&spec("0"));
        assert_eq!(c.prefix(12).to_string(), "0".repeat(12));
    }

    #[test]
    fn fast_steps_match_iterated_closure() {
        let specs = [
            DirectiveSpec::periodic(&digits("01")).unwrap(),
            DirectiveSpec::periodic(&digits("0010212")).unwrap(),
            DirectiveSpec::new(&[], &digits("2210"), &digits("30121")).unwrap(),
            DirectiveSpec::new(&[], &digits("000"), &digits("1")).unwrap(),
        ];
        for spec in specs {
            let mut s = standard_episturmian(&spec);
            for (n, w) in closure_chain(&spec, 14).into_iter().enumerate() {
                assert_eq!(s.palindromic_prefix(n), w, "{spec} at step {n}");
            }
        }
    }

    #[test]
    fn nonempty_seed() {
        let seed = digits("01");
        let spec = DirectiveSpec::new(&seed, &[], &digits("0")).unwrap();
        let mut s = standard_episturmian(&spec);
        assert_eq!(s.palindromic_prefix(0).to_string(), "01");
        let chain = closure_chain(&spec, 4);
        for (n, w) in chain.into_iter().enumerate() {
            assert_eq!(s.palindromic_prefix(n), w);
        }
        assert!(s.palindromic_prefix(4).is_palindrome());
    }

    #[test]
    fn directive_helpers() {
        let d = DirectiveSpec::new(&[], &digits("00"), &digits("102")).unwrap();
        assert_eq!((1..=6).map(|i| d.letter(i)).collect::<Vec<_>>(), vec![0, 0, 1, 0, 2, 1]);
        assert_eq!(d.first_letter_run(), Some(3));
        assert_eq!(d.letters_after(1), vec![0, 1, 2]);
        assert_eq!(spec("0").first_letter_run(), None);
        assert_eq!(d.to_string(), "seed=;pre=00;per=102");
        assert!(DirectiveSpec::new(&[], &[0], &[]).is_err());
    }

    #[test]
    fn fixed_points() {
        let fib = Morphism::parse_images(&["01", "0"]).unwrap();
        let mut s = fixed_point(&fib, 0).unwrap();
        assert_eq!(s.prefix(8).to_string(), "01001010");
        let trib = Morphism::parse_images(&["01", "02", "0"]).unwrap();
        assert_eq!(fixed_point(&trib, 0).unwrap().prefix(7).to_string(), "0102010");
        let id = Morphism::parse_images(&["0", "1"]).unwrap();
        assert!(matches!(fixed_point(&id, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(fixed_point(&fib, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn fibonacci_fixed_point_equals_standard_word() {
        let fib = Morphism::parse_images(&["01", "0"]).unwrap();
        let a = fixed_point(&fib, 0).unwrap().prefix(10_000);
        let b = standard_episturmian(&spec("01")).prefix(10_000);
        assert_eq!(a, b);
    }

    #[test]
    fn example3_levels() {
        let mut v = example3_word();
        assert_eq!(v.level(1).to_string(), "0110220110");
        let v1 = v.level(1);
        let v2 = v.level(2);
        assert_eq!(v2.len(), 120);
        assert!(v2.starts_with(v1.concat(&Word::digits("0", 3).unwrap()).concat(&v1).letters()));
        assert_eq!(example3_level_len(3), 1330);
        assert!(v.level(3).is_palindrome());
    }

    #[test]
    fn periodic() {
        let p = Word::digits("001", 2).unwrap();
        assert_eq!(periodic_source(&p).unwrap().prefix(7).to_string(), "0010010");
        assert!(periodic_source(&Word::digits("", 2).unwrap()).is_err());
    }

    #[test]
    fn separating_letters() {
        let mut fib = standard_episturmian(&spec("01"));
        let idx = FactorIndex::build(fib.prefix(500), 3).unwrap();
        assert_eq!(separating_letter(&idx).unwrap(), Some(0));
        let mut trib = standard_episturmian(&spec("012"));
        let idx = FactorIndex::build(trib.prefix(500), 3).unwrap();
        assert_eq!(separating_letter(&idx).unwrap(), Some(0));
        let per = periodic_source(&Word::digits("01", 2).unwrap()).unwrap().prefix(40);
        let idx = FactorIndex::build(per, 2).unwrap();
        assert_eq!(separating_letter(&idx).unwrap(), Some(0));
        let idx = FactorIndex::build(Word::digits("0110", 2).unwrap(), 2).unwrap();
        assert_eq!(separating_letter(&idx).unwrap(), Some(1));
        let idx = FactorIndex::build(Word::digits("0011", 2).unwrap(), 2).unwrap();
        assert_eq!(separating_letter(&idx).unwrap(), None);
        let idx = FactorIndex::build(Word::digits("0110", 2).unwrap(), 1).unwrap();
        assert!(separating_letter(&idx).is_err());
    }

    #[test]
    fn images() {
        let phi = Morphism::parse_images(&["0100", "01011", "010111"]).unwrap();
        let mut s = image_source(&phi, example3_word().boxed()).unwrap();
        assert!(s.prefix(9).to_string() == "010001011");

        let zeta = binary_projection(&Alphabet::new(3).unwrap(), &[1]).unwrap();
        let trib = standard_episturmian(&spec("012"));
        let mut z = image_source(&zeta, trib.boxed()).unwrap();
        assert_eq!(z.prefix(7).to_string(), "BABBBAB");

        let id = Morphism::identity(Alphabet::new(3).unwrap());
        let mut same = image_source(&id, standard_episturmian(&spec("012")).boxed()).unwrap();
        assert_eq!(same.prefix(100), standard_episturmian(&spec("012")).prefix(100));

        let erase = Morphism::parse_images(&["", ""]).unwrap();
        assert!(image_source(&erase, standard_episturmian(&spec("01")).boxed()).is_err());
    }

    #[test]
    fn s_preimages() {
        let v = periodic_source(&Word::digits("01", 2).unwrap()).unwrap();
        let mut w = s_preimage_source(v.boxed(), 0).unwrap();
        assert_eq!(w.prefix(5).to_string(), "00110");
    }

    #[test]
    fn prefixes_are_consistent_and_clones_independent() {
        let mut a = standard_episturmian(&spec("0012"));
        let long = a.prefix(3000);
        let mut b = a.clone_box();
        for n in [0, 1, 17, 400, 2999] {
            assert_eq!(a.prefix(n), long.prefix(n));
            assert_eq!(b.prefix(n), long.prefix(n));
        }
    }
}
