//! Episturmian words, palindromic defect, morphism classes and return-word
//! analysis over small integer alphabets.

pub mod analysis;
pub mod error;
pub mod generators;
pub mod index;
pub mod morphisms;
pub mod palindrome;
pub mod word;

pub use error::{Error, Result};
pub use generators::{DirectiveSpec, PrefixSource};
pub use index::{ExtensionReport, FactorClass, FactorIndex};
pub use morphisms::{ClassWitness, Decomposition, Morphism, MorphismClass};
pub use palindrome::AntimorphismKind;
pub use word::{Alphabet, Letter, Word};
