//! Return words, derivated words, richness checkers and the lemma-level
//! property checks.
//!
//! Every checker works on a finite prefix. A [`Verdict::Pass`] is evidence at
//! the stated depth; a [`Verdict::Fail`] carries a concrete counterexample.

mod hrich;
mod lemmas;
mod returns;
mod richness;

pub use hrich::{h_profile, HProfile, HRow};
pub use lemmas::{e_extension_palindromicity, letter_gap_palindromicity, palindromic_extension_letter};
pub use returns::{derivated_word, equal_length_return_words, return_words, DerivatedWord, ReturnWordReport};
pub use richness::{check_palindrome_returns, check_rich_bispecial, check_rich_crw, closed_under, pext};

use std::fmt;

use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub factor: Word,
    pub position: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Counterexample),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(c) => Some(c),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail(_) => f.write_str("FAIL"),
        }
    }
}

/// Result of one checker run over a prefix of length `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub depth: usize,
    /// Number of individual objects (factors, windows) that were verified.
    pub examined: usize,
    /// Objects skipped because their data touch the prefix boundary.
    pub skipped: usize,
    pub verdict: Verdict,
}

impl CheckOutcome {
    pub fn truncated(&self) -> bool {
        self.skipped > 0
    }
}
