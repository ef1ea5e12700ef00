use std::collections::BTreeSet;

use crate::analysis::{CheckOutcome, Counterexample, Verdict};
use crate::error::{invalid, Error, Result};
use crate::index::{FactorClass, FactorIndex};
use crate::palindrome::AntimorphismKind;
use crate::word::{is_palindrome, Letter, Word};

/// Whether the factor set up to length `max_len` is closed under `kind`.
pub fn closed_under(index: &FactorIndex, kind: AntimorphismKind, max_len: usize) -> Result<bool> {
    if kind != AntimorphismKind::R && index.source().alphabet().size() > 2 {
        return Err(Error::AlphabetMismatch(format!("{kind} needs a binary alphabet")));
    }
    for n in 0..=max_len {
        if !index.factors(n)?.all(|f| index.contains(&kind.map_letters(f))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Palindromic extensions `apa` of the palindrome `p`.
pub fn pext(index: &FactorIndex, p: &Word) -> Result<BTreeSet<Word>> {
    if !p.is_palindrome() {
        return invalid(format!("{p:?} is not a palindrome"));
    }
    let ext = index.extensions(p)?;
    Ok(ext
        .palindromic_letters()
        .map(|a| {
            let mut letters = Vec::with_capacity(p.len() + 2);
            letters.push(a);
            letters.extend_from_slice(p.letters());
            letters.push(a);
            index.word(&letters)
        })
        .collect())
}

/// Scans consecutive occurrences of `f` or `R(f)` and reports the first
/// window between them that is not a palindrome.
fn first_non_palindromic_window(index: &FactorIndex, f: &[Letter]) -> Option<Counterexample> {
    let src = index.source().letters();
    let n = f.len();
    let mut occ: Vec<usize> = index.occurrences(f).unwrap_or_default().to_vec();
    let rev: Vec<Letter> = f.iter().rev().copied().collect();
    if rev != f {
        occ.extend_from_slice(index.occurrences(&rev).unwrap_or_default());
        occ.sort_unstable();
    }
    occ.windows(2).find_map(|pair| {
        let window = &src[pair[0]..pair[1] + n];
        (!is_palindrome(window)).then(|| Counterexample {
            factor: index.word(window),
            position: pair[0],
            reason: format!("complete return word to {{{}, {}}} is not a palindrome", index.word(f), index.word(&rev)),
        })
    })
}

/// For every nonempty factor `w` with `|w| <= max_len`, every complete return
/// word to `{w, R(w)}` must be a palindrome.
pub fn check_rich_crw(index: &FactorIndex, max_len: usize) -> Result<CheckOutcome> {
    let mut examined = 0;
    for n in 1..=max_len {
        for f in index.factors(n)? {
            let rev: Vec<Letter> = f.iter().rev().copied().collect();
            if rev.as_slice() < f && index.contains(&rev) {
                continue;
            }
            examined += 1;
            if let Some(c) = first_non_palindromic_window(index, f) {
                return Ok(outcome("rich-crw", index, examined, 0, Verdict::Fail(c)));
            }
        }
    }
    Ok(outcome("rich-crw", index, examined, 0, Verdict::Pass))
}

/// Complete return words to palindromes of length in `min_len..=max_len`
/// must be palindromes.
pub fn check_palindrome_returns(index: &FactorIndex, min_len: usize, max_len: usize) -> Result<CheckOutcome> {
    let mut examined = 0;
    for n in min_len.max(1)..=max_len {
        for f in index.factors(n)?.filter(|f| is_palindrome(f)) {
            examined += 1;
            if let Some(c) = first_non_palindromic_window(index, f) {
                return Ok(outcome("palindrome-returns", index, examined, 0, Verdict::Fail(c)));
            }
        }
    }
    Ok(outcome("palindrome-returns", index, examined, 0, Verdict::Pass))
}

/// Bilateral-order test: every bispecial factor `w` with `|w| <= max_len`
/// must satisfy `b(w) = #Pext(w) - 1` when `w` is a palindrome and `b(w) = 0`
/// otherwise. Requires the factor set to be closed under reversal up to
/// `max_len + 2`; bispecials whose extension data touch the prefix boundary
/// are skipped and counted.
pub fn check_rich_bispecial(index: &FactorIndex, max_len: usize) -> Result<CheckOutcome> {
    let closure_len = (max_len + 2).min(index.max_len());
    if !closed_under(index, AntimorphismKind::R, closure_len)? {
        return Err(Error::PreconditionViolation(format!(
            "factors up to length {closure_len} are not closed under reversal"
        )));
    }
    let mut examined = 0;
    let mut skipped = 0;
    for n in 0..=max_len {
        for f in index.factors(n)? {
            let ext = index.extensions_of(f)?;
            if ext.class() != FactorClass::Bispecial {
                continue;
            }
            if !ext.is_fully_witnessed() {
                skipped += 1;
                continue;
            }
            examined += 1;
            let b = ext.bilateral_order()?;
            let expected = if is_palindrome(f) { ext.palindromic_letters().count() as i64 - 1 } else { 0 };
            if b != expected {
                let c = Counterexample {
                    factor: index.word(f),
                    position: index.occurrences(f).map_or(0, |o| o[0]),
                    reason: format!("bilateral order {b}, expected {expected}"),
                };
                return Ok(outcome("rich-bispecial", index, examined, skipped, Verdict::Fail(c)));
            }
        }
    }
    Ok(outcome("rich-bispecial", index, examined, skipped, Verdict::Pass))
}

fn outcome(
    check: &'static str,
    index: &FactorIndex,
    examined: usize,
    skipped: usize,
    verdict: Verdict,
) -> CheckOutcome {
    CheckOutcome { check, depth: index.source().len(), examined, skipped, verdict }
}
