//! Seeded sampling of eventually periodic directive sequences.

use epiword::{Alphabet, DirectiveSpec, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_PREPERIOD: usize = 4;
pub const MAX_PERIOD: usize = 6;

/// Uniform letters over `{0, .., k-1}`; preperiod length in `0..=4`, period
/// length in `k..=max(6, k)`, resampled until every letter occurs in the
/// period.
pub fn sample_directive(rng: &mut impl Rng, k: usize) -> DirectiveSpec {
    assert!((1..=36).contains(&k), "alphabet size {k} out of range");
    let alphabet = Alphabet::new(k).expect("valid size");
    let pre_len = rng.random_range(0..=MAX_PREPERIOD);
    let pre: Vec<Letter> = (0..pre_len).map(|_| rng.random_range(0..k) as Letter).collect();
    loop {
        let per_len = rng.random_range(k..=MAX_PERIOD.max(k));
        let per: Vec<Letter> = (0..per_len).map(|_| rng.random_range(0..k) as Letter).collect();
        if (0..k as Letter).all(|a| per.contains(&a)) {
            return DirectiveSpec::with_alphabet(&[], &pre, &per, alphabet).expect("letters in range");
        }
    }
}

/// `count` specs drawn from a ChaCha stream seeded with `seed`.
pub fn sample_directives(seed: u64, k: usize, count: usize) -> Vec<DirectiveSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_directive(&mut rng, k)).collect()
}

/// Specs with alphabet sizes drawn uniformly from `sizes`.
pub fn sample_mixed(seed: u64, sizes: std::ops::RangeInclusive<usize>, count: usize) -> Vec<DirectiveSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.random_range(sizes.clone());
            sample_directive(&mut rng, k)
        })
        .collect()
}
