use std::collections::BTreeSet;

use crate::analysis::{CheckOutcome, Counterexample, Verdict};
use crate::error::{invalid, Error, Result};
use crate::index::FactorIndex;
use crate::word::{is_palindrome, Letter, Word};

/// The letter `a` with `awx, xwa` in the language for some `x`: the only
/// right extension of `w` when there is one, otherwise the unique right
/// extension `a` for which `wa` is left special.
pub fn palindromic_extension_letter(index: &FactorIndex, w: &Word) -> Result<Letter> {
    let ext = index.extensions(w)?;
    if ext.right.len() == 1 {
        return Ok(*ext.right.first().expect("one right extension"));
    }
    let candidates: BTreeSet<Letter> =
        ext.right.iter().copied().filter(|&a| ext.both_sided.iter().filter(|&&(_, y)| y == a).count() >= 2).collect();
    match candidates.len() {
        1 => Ok(*candidates.first().expect("one candidate")),
        n => Err(Error::PreconditionViolation(format!("{w:?} has {n} right extensions a with wa left special"))),
    }
}

/// For a palindromic factor `w` and a letter set `e_set` containing the
/// letter `a` of [`palindromic_extension_letter`], every factor starting with
/// an occurrence of `w` preceded by a letter of `e_set`, ending with the next
/// such occurrence, must be a palindrome.
pub fn e_extension_palindromicity(index: &FactorIndex, w: &Word, e_set: &[Letter], a: Letter) -> Result<CheckOutcome> {
    if !e_set.contains(&a) {
        return invalid(format!("letter {a} is not in the letter set {e_set:?}"));
    }
    if !w.is_palindrome() {
        return invalid(format!("{w:?} is not a palindrome"));
    }
    let unique = palindromic_extension_letter(index, w)?;
    if unique != a {
        return Err(Error::PreconditionViolation(format!(
            "the palindromic extension letter of {w:?} is {unique}, not {a}"
        )));
    }
    let src = index.source().letters();
    let n = w.len();
    let occ = index.occurrences(w.letters()).ok_or_else(|| Error::NotInLanguage(w.to_string()))?;
    let framed: Vec<usize> = occ
        .iter()
        .copied()
        .filter(|&p| p >= 1 && p + n < src.len() && e_set.contains(&src[p - 1]) && e_set.contains(&src[p + n]))
        .collect();
    let mut examined = 0;
    for pair in framed.windows(2) {
        examined += 1;
        let window = &src[pair[0]..pair[1] + n];
        if !is_palindrome(window) {
            let c = Counterexample {
                factor: index.word(window),
                position: pair[0],
                reason: format!("window between {e_set:?}-framed occurrences of {w:?} is not a palindrome"),
            };
            return Ok(outcome("e-extension", index, examined, Verdict::Fail(c)));
        }
    }
    Ok(outcome("e-extension", index, examined, Verdict::Pass))
}

/// For a proper nonempty letter subset, the gap `p` in every factor `xpy`
/// with `x, y` in the subset and `p` free of subset letters must be a
/// palindrome.
pub fn letter_gap_palindromicity(index: &FactorIndex, subset: &[Letter]) -> Result<CheckOutcome> {
    let k = index.source().alphabet().size();
    let set: BTreeSet<Letter> = subset.iter().copied().collect();
    if set.is_empty() || set.len() >= k || set.iter().any(|&a| a as usize >= k) {
        return invalid(format!("{subset:?} is not a proper nonempty subset of a {k}-letter alphabet"));
    }
    let src = index.source().letters();
    let positions: Vec<usize> = (0..src.len()).filter(|&i| set.contains(&src[i])).collect();
    let mut examined = 0;
    for pair in positions.windows(2) {
        examined += 1;
        let gap = &src[pair[0] + 1..pair[1]];
        if !is_palindrome(gap) {
            let c = Counterexample {
                factor: index.word(&src[pair[0]..=pair[1]]),
                position: pair[0],
                reason: "gap between subset letters is not a palindrome".to_string(),
            };
            return Ok(outcome("letter-gap", index, examined, Verdict::Fail(c)));
        }
    }
    Ok(outcome("letter-gap", index, examined, Verdict::Pass))
}

fn outcome(check: &'static str, index: &FactorIndex, examined: usize, verdict: Verdict) -> CheckOutcome {
    CheckOutcome { check, depth: index.source().len(), examined, skipped: 0, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{standard_episturmian, DirectiveSpec, PrefixSource};

    fn trib(depth: usize) -> FactorIndex {
        let mut src = standard_episturmian(&DirectiveSpec::periodic(&[0, 1, 2]).unwrap());
        FactorIndex::build(src.prefix(depth), 20).unwrap()
    }

    #[test]
    fn tribonacci_letter_gaps() {
        let idx = trib(5000);
        for subset in [vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2], vec![0, 2]] {
            let out = letter_gap_palindromicity(&idx, &subset).unwrap();
            assert!(out.verdict.is_pass(), "{subset:?}");
        }
        assert!(letter_gap_palindromicity(&idx, &[0, 1, 2]).is_err());
        assert!(letter_gap_palindromicity(&idx, &[]).is_err());
    }

    #[test]
    fn letter_gap_counterexample() {
        let idx = FactorIndex::build(Word::digits("0120210", 3).unwrap(), 1).unwrap();
        let out = letter_gap_palindromicity(&idx, &[0]).unwrap();
        assert_eq!(out.verdict.counterexample().unwrap().factor.to_string(), "0120");
    }

    #[test]
    fn tribonacci_e_extensions() {
        let idx = trib(5000);
        for (text, expected) in [("", 0), ("0", 1), ("010", 2), ("0102010", 0)] {
            let w = Word::digits(text, 3).unwrap();
            let a = palindromic_extension_letter(&idx, &w).unwrap();
            assert_eq!(a, expected, "{w:?}");
            for e in [vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]] {
                if !e.contains(&a) {
                    assert!(matches!(e_extension_palindromicity(&idx, &w, &e, a), Err(Error::InvalidArgument(_))));
                    continue;
                }
                let out = e_extension_palindromicity(&idx, &w, &e, a).unwrap();
                assert!(out.verdict.is_pass(), "{w:?} {e:?}");
                assert!(out.examined > 0);
            }
        }
        let w = Word::digits("0", 3).unwrap();
        assert!(matches!(e_extension_palindromicity(&idx, &w, &[0, 1, 2], 0), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn extension_letter_not_unique() {
        let idx = FactorIndex::build(Word::digits("0102", 3).unwrap(), 2).unwrap();
        let eps = Word::empty(idx.source().alphabet().clone());
        assert!(matches!(palindromic_extension_letter(&idx, &eps), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn extension_letter_without_square() {
        let spec = DirectiveSpec::new(&[], &[2], &[0, 1]).unwrap();
        let idx = FactorIndex::build(standard_episturmian(&spec).prefix(3000), 4).unwrap();
        let eps = Word::empty(idx.source().alphabet().clone());
        assert!(!idx.contains(&[2, 2]));
        assert_eq!(palindromic_extension_letter(&idx, &eps).unwrap(), 2);
        let out = e_extension_palindromicity(&idx, &eps, &[0, 2], 2).unwrap();
        assert!(out.verdict.is_pass());
    }
}
