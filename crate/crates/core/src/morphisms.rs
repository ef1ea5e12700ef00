//! Morphisms between small alphabets and the palindromic morphism classes
//! P, standard P and P_ret, plus binary projections, the episturmian
//! morphisms σ_a and the sliding-xor operator S.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::word::{is_palindrome, occurrences, Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(domain: Alphabet, codomain: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.size() {
            return invalid(format!("{} images given for a domain of {} letters", images.len(), domain.size()));
        }
        let images = images.into_iter().map(|w| w.with_alphabet(codomain.clone())).collect::<Result<Vec<_>>>()?;
        Ok(Morphism { domain, codomain, images })
    }

    /// Builds `i -> images[i]` from digit strings. The codomain is
    /// `{0, .., m}` for the largest digit `m` used (at least the domain size
    /// when all images stay inside it, so endomorphisms come out as such).
    pub fn parse_images(images: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<Letter>> = images
            .iter()
            .map(|s| {
                s.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as Letter)
                            .ok_or_else(|| Error::InvalidArgument(format!("{c:?} is not a digit")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let max = parsed.iter().flatten().copied().max().map_or(0, |m| m as usize + 1);
        let domain = Alphabet::new(images.len())?;
        let codomain = Alphabet::new(if max <= images.len() { images.len() } else { max })?;
        let words = parsed.into_iter().map(|v| Word::new(v, codomain.clone())).collect::<Result<Vec<_>>>()?;
        Morphism::new(domain, codomain, words)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.letters().map(|a| Word::from_parts(vec![a], alphabet.clone())).collect();
        Morphism { domain: alphabet.clone(), codomain: alphabet, images }
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a as usize]
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain.size() == self.codomain.size()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.apply_letters(w.letters())
    }

    pub fn apply_letters(&self, w: &[Letter]) -> Result<Word> {
        let mut out = Vec::new();
        for &a in w {
            if !self.domain.contains(a) {
                return Err(Error::AlphabetMismatch(format!(
                    "letter {a} outside a domain of {} letters",
                    self.domain.size()
                )));
            }
            out.extend_from_slice(self.images[a as usize].letters());
        }
        Ok(Word::from_parts(out, self.codomain.clone()))
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.codomain.size() > self.domain.size() {
            return Err(Error::AlphabetMismatch(format!(
                "inner codomain has {} letters, outer domain {}",
                inner.codomain.size(),
                self.domain.size()
            )));
        }
        let images = inner.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        Ok(Morphism { domain: inner.domain.clone(), codomain: self.codomain.clone(), images })
    }

    /// Restriction to the first `k` letters of the domain.
    pub fn restrict(&self, k: usize) -> Result<Morphism> {
        if k == 0 || k > self.domain.size() {
            return invalid(format!("cannot restrict a {}-letter domain to {k}", self.domain.size()));
        }
        Ok(Morphism { domain: Alphabet::new(k)?, codomain: self.codomain.clone(), images: self.images[..k].to_vec() })
    }

    /// `M[a][b]` = number of occurrences of `b` in the image of `a`.
    pub fn incidence_matrix(&self) -> Vec<Vec<usize>> {
        self.images
            .iter()
            .map(|w| {
                let mut row = vec![0; self.codomain.size()];
                for &b in w.letters() {
                    row[b as usize] += 1;
                }
                row
            })
            .collect()
    }

    /// Whether some power of the incidence matrix is strictly positive.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_endomorphism() {
            return invalid("primitivity is defined for endomorphisms only");
        }
        let k = self.domain.size();
        let m: Vec<Vec<bool>> =
            self.incidence_matrix().into_iter().map(|row| row.into_iter().map(|c| c > 0).collect()).collect();
        let mut power = m.clone();
        // Wielandt: a primitive k×k matrix has M^e > 0 for e = (k-1)^2 + 1 <= k^2.
        for _ in 0..k * k {
            if power.iter().flatten().all(|&x| x) {
                return Ok(true);
            }
            power = (0..k).map(|i| (0..k).map(|j| (0..k).any(|l| power[i][l] && m[l][j])).collect()).collect();
        }
        Ok(false)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, w) in self.images.iter().enumerate() {
            if a > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", self.domain.glyph(a as Letter), w)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismClass {
    P,
    StandardP,
    PRet,
}

impl fmt::Display for MorphismClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismClass::P => "P",
            MorphismClass::StandardP => "standardP",
            MorphismClass::PRet => "Pret",
        })
    }
}

/// How one letter image decomposes around the radius `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `φ(a) = r · rest`, `rest` a palindrome.
    Prefixed { rest: Word },
    /// `φ(a) · removed = r`, `removed` a proper palindromic suffix of `r`.
    Truncated { removed: Word },
    /// `φ(a) r` is a palindrome with exactly two occurrences of `r`.
    Return { complete: Word },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassWitness {
    pub class: MorphismClass,
    pub radius: Word,
    pub details: Vec<Decomposition>,
}

impl ClassWitness {
    /// Re-verifies the class conditions from scratch against `m`.
    pub fn recheck(&self, m: &Morphism) -> bool {
        if !self.radius.is_palindrome() || self.details.len() != m.images().len() {
            return false;
        }
        match self.class {
            MorphismClass::PRet => is_pret(m, &self.radius),
            MorphismClass::P | MorphismClass::StandardP => {
                let r = self.radius.letters();
                m.images().iter().zip(&self.details).all(|(img, d)| match d {
                    Decomposition::Prefixed { rest } => {
                        img.letters().strip_prefix(r) == Some(rest.letters()) && rest.is_palindrome()
                    }
                    Decomposition::Truncated { removed } => {
                        self.class == MorphismClass::StandardP
                            && removed.is_palindrome()
                            && removed.len() < r.len()
                            && [img.letters(), removed.letters()].concat() == r
                    }
                    Decomposition::Return { .. } => false,
                })
            }
        }
    }
}

fn prefixed(img: &Word, r: &[Letter]) -> Option<Decomposition> {
    let rest = img.letters().strip_prefix(r)?;
    is_palindrome(rest)
        .then(|| Decomposition::Prefixed { rest: Word::from_parts(rest.to_vec(), img.alphabet().clone()) })
}

/// Longest palindrome `r`, a common prefix of all images, such that every
/// `r^{-1} φ(a)` is a palindrome. Primitivity is not checked here.
pub fn class_p_witness(m: &Morphism) -> Option<ClassWitness> {
    let shortest = m.images().iter().min_by_key(|w| w.len())?;
    (0..=shortest.len()).rev().find_map(|n| {
        let r = &shortest.letters()[..n];
        if !is_palindrome(r) {
            return None;
        }
        let details = m.images().iter().map(|img| prefixed(img, r)).collect::<Option<Vec<_>>>()?;
        Some(ClassWitness {
            class: MorphismClass::P,
            radius: Word::from_parts(r.to_vec(), m.codomain().clone()),
            details,
        })
    })
}

/// Shortest palindrome `r` with every image either `r q` (`q` a palindrome)
/// or `r` with a proper palindromic suffix removed.
pub fn standard_p_witness(m: &Morphism) -> Option<ClassWitness> {
    let longest = m.images().iter().max_by_key(|w| w.len())?.letters();
    let mut candidates: Vec<Vec<Letter>> = (0..=longest.len()).map(|n| longest[..n].to_vec()).collect();
    // Radii longer than every image: palindromes with prefix `longest`.
    for n in longest.len() + 1..=2 * longest.len() {
        let mut r = vec![None; n];
        let consistent = longest.iter().enumerate().all(|(i, &a)| {
            let j = n - 1 - i;
            let ok_i = r[i].is_none_or(|x| x == a);
            r[i] = Some(a);
            let ok_j = r[j].is_none_or(|x| x == a);
            r[j] = Some(a);
            ok_i && ok_j
        });
        if consistent && r.iter().all(Option::is_some) {
            candidates.push(r.into_iter().map(Option::unwrap).collect());
        }
    }
    candidates.into_iter().find_map(|r| {
        if !is_palindrome(&r) {
            return None;
        }
        let details = m
            .images()
            .iter()
            .map(|img| {
                prefixed(img, &r).or_else(|| {
                    let removed = r.strip_prefix(img.letters())?;
                    (removed.len() < r.len() && is_palindrome(removed)).then(|| Decomposition::Truncated {
                        removed: Word::from_parts(removed.to_vec(), m.codomain().clone()),
                    })
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ClassWitness {
            class: MorphismClass::StandardP,
            radius: Word::from_parts(r, m.codomain().clone()),
            details,
        })
    })
}

/// Class P_ret with respect to `r`: `r` is a palindrome, every `φ(b) r` is a
/// palindrome containing `r` exactly twice (as prefix and suffix), and the
/// images are pairwise distinct.
pub fn is_pret(m: &Morphism, r: &Word) -> bool {
    if !r.is_palindrome() {
        return false;
    }
    let r = r.letters();
    let each = m.images().iter().all(|img| {
        let complete = [img.letters(), r].concat();
        is_palindrome(&complete) && occurrences(&complete, r) == [0, img.len()]
    });
    let distinct = m.images().iter().enumerate().all(|(i, a)| m.images()[i + 1..].iter().all(|b| a != b));
    each && distinct
}

pub fn pret_witness(m: &Morphism, r: &Word) -> Option<ClassWitness> {
    is_pret(m, r).then(|| ClassWitness {
        class: MorphismClass::PRet,
        radius: r.clone(),
        details: m.images().iter().map(|img| Decomposition::Return { complete: img.concat(r) }).collect(),
    })
}

/// Shortest `r` with [`is_pret`], searching `|r| <= max image length`. For
/// such lengths `r` is forced to be the prefix of a longest image.
pub fn find_pret_radius(m: &Morphism) -> Option<Word> {
    let longest = m.images().iter().max_by_key(|w| w.len())?;
    (0..=longest.len()).map(|n| longest.prefix(n)).find(|r| is_pret(m, r))
}

/// A word `w` with `w m1(a) = m2(a) w` for every letter, `|w| <= max image length`.
pub fn conjugacy_witness(m1: &Morphism, m2: &Morphism) -> Result<Option<Word>> {
    if m1.domain().size() != m2.domain().size() || m1.codomain().size() != m2.codomain().size() {
        return Err(Error::AlphabetMismatch("conjugacy needs equal domains and codomains".into()));
    }
    let holds = |w: &[Letter]| {
        m1.images().iter().zip(m2.images()).all(|(x, y)| [w, x.letters()].concat() == [y.letters(), w].concat())
    };
    let bound = m1.max_image_len().max(m2.max_image_len());
    // w is a prefix of m2(a) w, hence of m2(a)^ω, for any nonempty m2(a).
    let Some(seed) = m2.images().iter().find(|w| !w.is_empty()) else {
        return Ok(holds(&[]).then(|| Word::empty(m1.codomain().clone())));
    };
    let s = seed.letters();
    Ok((0..=bound)
        .map(|n| (0..n).map(|i| s[i % s.len()]).collect::<Vec<_>>())
        .find(|w| holds(w))
        .map(|w| Word::from_parts(w, m1.codomain().clone())))
}

/// `a -> A` for `a` in `subset`, `a -> B` otherwise; `A`, `B` are letters 0, 1.
pub fn binary_projection(alphabet: &Alphabet, subset: &[Letter]) -> Result<Morphism> {
    if let Some(&bad) = subset.iter().find(|&&a| !alphabet.contains(a)) {
        return Err(Error::AlphabetMismatch(format!("letter {bad} outside the alphabet")));
    }
    let mut inside = vec![false; alphabet.size()];
    for &a in subset {
        inside[a as usize] = true;
    }
    if inside.iter().all(|&x| x) || inside.iter().all(|&x| !x) {
        return invalid("projection subset must be nonempty and proper");
    }
    let ab = Alphabet::ab();
    let images = inside.iter().map(|&x| Word::from_parts(vec![if x { 0 } else { 1 }], ab.clone())).collect();
    Ok(Morphism { domain: alphabet.clone(), codomain: ab, images })
}

/// Episturmian morphism `σ_a: a -> a, b -> ab`.
pub fn sigma(a: Letter, alphabet: &Alphabet) -> Result<Morphism> {
    if !alphabet.contains(a) {
        return Err(Error::AlphabetMismatch(format!("letter {a} outside the alphabet")));
    }
    let images = alphabet
        .letters()
        .map(|b| Word::from_parts(if b == a { vec![a] } else { vec![a, b] }, alphabet.clone()))
        .collect();
    Ok(Morphism { domain: alphabet.clone(), codomain: alphabet.clone(), images })
}

fn check_binary(w: &Word) -> Result<()> {
    if !w.is_binary() {
        return Err(Error::AlphabetMismatch(format!(
            "S acts on binary words, got an alphabet of size {}",
            w.alphabet().size()
        )));
    }
    Ok(())
}

/// `S(w)_i = w_i + w_{i+1} mod 2`.
pub fn s_operator(w: &Word) -> Result<Word> {
    check_binary(w)?;
    if w.is_empty() {
        return invalid("S is undefined on the empty word");
    }
    let out = w.letters().windows(2).map(|p| p[0] ^ p[1]).collect();
    Ok(Word::from_parts(out, Alphabet::binary()))
}

/// The unique `w` with `w_0 = first` and `S(w) = v`.
pub fn s_preimage(v: &Word, first: Letter) -> Result<Word> {
    check_binary(v)?;
    if first > 1 {
        return Err(Error::AlphabetMismatch(format!("initial letter {first} is not binary")));
    }
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(first);
    for &x in v.letters() {
        out.push(out[out.len() - 1] ^ x);
    }
    Ok(Word::from_parts(out, Alphabet::binary()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(images: &[&str]) -> Morphism {
        Morphism::parse_images(images).unwrap()
    }
    fn b(s: &str) -> Word {
        Word::digits(s, 2).unwrap()
    }

    const EXAMPLE3: [&str; 3] = ["0100", "01011", "010111"];
    const FIB_REMARK: [&str; 2] = ["110100110010", "1"];

    #[test]
    fn apply_and_compose() {
        let phi = m(&EXAMPLE3);
        assert_eq!(phi.apply(&Word::digits("01", 3).unwrap()).unwrap(), b("010001011"));
        let k3 = Alphabet::new(3).unwrap();
        let zeta = binary_projection(&k3, &[1]).unwrap();
        assert_eq!(zeta.apply(&Word::digits("012", 3).unwrap()).unwrap().to_string(), "BAB");
        assert!(matches!(phi.apply(&Word::digits("3", 4).unwrap()), Err(Error::AlphabetMismatch(_))));

        let k2 = Alphabet::binary();
        let s0 = sigma(0, &k2).unwrap();
        let ss = s0.compose(&s0).unwrap();
        assert_eq!(ss, m(&["0", "001"]));
        let id = Morphism::identity(k2);
        assert_eq!(id.compose(&s0).unwrap(), s0);
        assert!(matches!(s0.compose(&phi), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn primitivity() {
        assert!(m(&["01", "0"]).is_primitive().unwrap());
        assert!(!m(&["0", "1"]).is_primitive().unwrap());
        assert!(!m(&["01", "1"]).is_primitive().unwrap());
        assert!(m(&["01", "02", "0"]).is_primitive().unwrap());
        assert!(!m(&EXAMPLE3).is_primitive().unwrap());
        assert!(binary_projection(&Alphabet::new(3).unwrap(), &[0]).unwrap().is_primitive().is_err());
    }

    #[test]
    fn class_p() {
        let w = class_p_witness(&m(&["01", "0"])).unwrap();
        assert_eq!(w.radius, b("0"));
        assert!(w.recheck(&m(&["01", "0"])));
        assert!(class_p_witness(&m(&["01", "10"])).is_none());
        let pal = m(&["010", "1"]);
        assert_eq!(class_p_witness(&pal).unwrap().radius, b(""));
        // longest radius wins
        assert_eq!(class_p_witness(&m(&["00", "000"])).unwrap().radius, b("00"));
    }

    #[test]
    fn standard_p() {
        let pi = m(&FIB_REMARK);
        let w = standard_p_witness(&pi).unwrap();
        assert_eq!(w.radius, b("11"));
        assert_eq!(w.details[1], Decomposition::Truncated { removed: b("1") });
        assert!(w.recheck(&pi));
        assert_eq!(standard_p_witness(&m(&["010", "1"])).unwrap().radius, b(""));
        assert!(standard_p_witness(&m(&["01", "10"])).is_none());
    }

    #[test]
    fn pret() {
        let phi = m(&EXAMPLE3);
        assert!(is_pret(&phi, &b("010")));
        assert!(!is_pret(&phi, &b("")));
        assert_eq!(find_pret_radius(&phi), Some(b("010")));
        assert!(find_pret_radius(&m(&["01", "10"])).is_none());
        let w = pret_witness(&phi, &b("010")).unwrap();
        assert!(w.recheck(&phi));

        // π(0)·11 = 11010011001011 has three occurrences of 11
        let pi = m(&FIB_REMARK);
        assert_eq!(occurrences(&[pi.image(0).letters(), &[1, 1]].concat(), &[1, 1]), vec![0, 6, 12]);
        assert!(!is_pret(&pi, &b("11")));
    }

    #[test]
    fn sigma_is_pret() {
        let k3 = Alphabet::new(3).unwrap();
        for a in 0..3 {
            let s = sigma(a, &k3).unwrap();
            assert!(is_pret(&s, &Word::new(vec![a], k3.clone()).unwrap()));
        }
        assert_eq!(sigma(0, &k3).unwrap(), m(&["0", "01", "02"]));
        assert!(sigma(3, &k3).is_err());
    }

    #[test]
    fn conjugacy() {
        let fib = m(&["01", "0"]);
        assert_eq!(conjugacy_witness(&fib, &fib).unwrap(), Some(b("")));
        assert_eq!(conjugacy_witness(&fib, &m(&["10", "0"])).unwrap(), None);
        assert_eq!(conjugacy_witness(&m(&["10", "0"]), &fib).unwrap(), Some(b("0")));
        // 0 -> ab, 1 -> a versus 0 -> ba, 1 -> a (a = 0, b = 1)
        assert_eq!(conjugacy_witness(&m(&["01", "0"]), &m(&["10", "0"])).unwrap(), None);
        assert!(conjugacy_witness(&fib, &m(&["0", "1", "2"])).is_err());
    }

    #[test]
    fn projections() {
        let k3 = Alphabet::new(3).unwrap();
        let z = binary_projection(&k3, &[0]).unwrap();
        assert_eq!(z.to_string(), "0:A,1:B,2:B");
        assert!(binary_projection(&k3, &[0, 1, 2]).is_err());
        assert!(binary_projection(&k3, &[]).is_err());
        let z1 = binary_projection(&k3, &[1]).unwrap();
        assert_eq!(z1.apply(&Word::digits("0102010", 3).unwrap()).unwrap().to_string(), "BABBBAB");
    }

    #[test]
    fn s_operator_examples() {
        assert_eq!(s_operator(&b("00110")).unwrap(), b("0101"));
        assert_eq!(s_operator(&b("1111")).unwrap(), b("000"));
        assert_eq!(s_preimage(&b("0101"), 0).unwrap(), b("00110"));
        assert_eq!(s_preimage(&b(""), 1).unwrap(), b("1"));
        assert!(s_operator(&b("")).is_err());
        assert!(matches!(s_operator(&Word::digits("012", 3).unwrap()), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(m(&EXAMPLE3).to_string(), "0:0100,1:01011,2:010111");
    }
}
