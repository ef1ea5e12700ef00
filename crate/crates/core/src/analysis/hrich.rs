use crate::error::{Error, Result};
use crate::index::FactorIndex;
use crate::palindrome::{psi_palindromic_complexity, AntimorphismKind};

use super::closed_under;

/// One row of the complexity/palindromicity comparison at length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HRow {
    pub n: usize,
    /// `C(n+1) - C(n) + 4`.
    pub lhs: usize,
    /// `P^R(n+1) + P^R(n) + P^E(n+1) + P^E(n)`.
    pub rhs: usize,
}

impl HRow {
    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HProfile {
    pub depth: usize,
    pub rows: Vec<HRow>,
}

impl HProfile {
    /// Equality in every computed row.
    pub fn is_h_rich(&self) -> bool {
        self.rows.iter().all(HRow::is_equality)
    }

    /// Lengths where the inequality is strict.
    pub fn strict_rows(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.is_equality()).map(|r| r.n).collect()
    }

    /// Smallest `n0` such that every computed row with `n >= n0` is an
    /// equality.
    pub fn equal_from(&self) -> usize {
        self.rows.iter().rev().find(|r| !r.is_equality()).map_or(1, |r| r.n + 1)
    }
}

/// Profiles a binary prefix closed under `R`, `E` and `RE` up to `n_max + 1`.
pub fn h_profile(index: &FactorIndex, n_max: usize) -> Result<HProfile> {
    if index.source().alphabet().size() > 2 {
        return Err(Error::AlphabetMismatch("H-profile needs a binary alphabet".to_string()));
    }
    for kind in AntimorphismKind::ALL {
        if !closed_under(index, kind, n_max + 1)? {
            return Err(Error::PreconditionViolation(format!(
                "factors up to length {} are not closed under {kind}",
                n_max + 1
            )));
        }
    }
    let pal = |n, kind| psi_palindromic_complexity(index, n, kind);
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let delta = index.factor_complexity(n + 1)? - index.factor_complexity(n)?;
        let rhs = pal(n + 1, AntimorphismKind::R)?
            + pal(n, AntimorphismKind::R)?
            + pal(n + 1, AntimorphismKind::E)?
            + pal(n, AntimorphismKind::E)?;
        rows.push(HRow { n, lhs: delta + 4, rhs });
    }
    Ok(HProfile { depth: index.source().len(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{periodic_source, PrefixSource};
    use crate::word::Word;

    #[test]
    fn constant_word_is_not_closed() {
        let idx = FactorIndex::build(Word::digits("0000000000", 2).unwrap(), 5).unwrap();
        assert!(matches!(h_profile(&idx, 3), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn periodic_01_rows() {
        // C(n) = 2, P^R(n) = 2 for odd n, P^E(n) = 2 for even n.
        let mut src = periodic_source(&Word::digits("01", 2).unwrap()).unwrap();
        let idx = FactorIndex::build(src.prefix(100), 12).unwrap();
        let p = h_profile(&idx, 10).unwrap();
        assert!(p.rows.iter().all(|r| r.lhs == 4 && r.rhs == 4));
        assert!(p.is_h_rich());
        assert_eq!(p.equal_from(), 1);
    }

    #[test]
    fn ternary_rejected() {
        let idx = FactorIndex::build(Word::digits("012", 3).unwrap(), 2).unwrap();
        assert!(matches!(h_profile(&idx, 1), Err(Error::AlphabetMismatch(_))));
    }
}
