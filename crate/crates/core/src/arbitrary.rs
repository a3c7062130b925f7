//! Seeded random regexp trees, for fuzzing and property tests.

use crate::regexp::{Regexp, Symbol};
use crate::wordgen::RandomSource;

/// A random tree of depth at most `max_depth` whose singletons are drawn
/// from `alphabet`. An empty alphabet yields trees built from `Empty` only.
pub fn random_regexp(rng: &mut RandomSource, max_depth: usize, alphabet: &[Symbol]) -> Regexp {
    let leaf = |rng: &mut RandomSource| {
        if alphabet.is_empty() || rng.next_below(8) == 0 {
            Regexp::Empty
        } else {
            Regexp::Singleton(alphabet[rng.next_below(alphabet.len())])
        }
    };
    if max_depth <= 1 {
        return leaf(rng);
    }
    match rng.next_below(10) {
        0..=2 => leaf(rng),
        3..=4 => Regexp::union(
            random_regexp(rng, max_depth - 1, alphabet),
            random_regexp(rng, max_depth - 1, alphabet),
        ),
        5..=7 => Regexp::concat(
            random_regexp(rng, max_depth - 1, alphabet),
            random_regexp(rng, max_depth - 1, alphabet),
        ),
        _ => Regexp::star(random_regexp(rng, max_depth - 1, alphabet)),
    }
}

/// The first `n` symbols of `a b c ...`.
pub fn letters(n: usize) -> Vec<Symbol> {
    ('a'..='z')
        .take(n)
        .map(|c| Symbol::new(c).expect("lowercase letters are symbols"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_and_alphabet_respected() {
        let mut rng = RandomSource::from_seed(1);
        let alphabet = letters(3);
        for _ in 0..500 {
            let r = random_regexp(&mut rng, 6, &alphabet);
            assert!(r.depth() <= 6);
            assert!(r.alphabet().iter().all(|s| alphabet.contains(s)));
        }
    }

    #[test]
    fn every_variant_appears() {
        let mut rng = RandomSource::from_seed(2);
        let mut kinds = std::collections::HashSet::new();
        for _ in 0..200 {
            kinds.insert(random_regexp(&mut rng, 4, &letters(2)).kind());
        }
        assert_eq!(kinds.len(), 5);
    }
}
