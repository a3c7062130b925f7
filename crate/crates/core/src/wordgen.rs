//! Nondeterministic word generation.
//!
//! A regexp doubles as a recipe for building words of its language: pick
//! one branch of a union, generate both halves of a concatenation, and
//! repeat a starred body a random number of times. All randomness comes from
//! a seedable [`RandomSource`] so every generation is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::regexp::{Regexp, Word};

/// Default bound on Kleene-star repetitions.
pub const DEFAULT_MAX_STAR_REPS: usize = 20;

/// Seedable source of uniform choices. Equal seeds yield equal sequences.
#[derive(Debug, Clone)]
pub struct RandomSource {
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn from_seed(seed: u64) -> Self {
        RandomSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn from_entropy() -> Self {
        RandomSource {
            rng: ChaCha8Rng::from_os_rng(),
        }
    }

    /// Uniform integer in `[0, k)`. Panics if `k == 0`.
    pub fn next_below(&mut self, k: usize) -> usize {
        assert!(k > 0, "next_below requires a positive bound");
        self.rng.random_range(0..k)
    }
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub max_star_reps: usize,
    pub rng: RandomSource,
}

impl GenConfig {
    pub fn new(max_star_reps: usize, rng: RandomSource) -> Self {
        GenConfig { max_star_reps, rng }
    }

    pub fn seeded(seed: u64) -> Self {
        GenConfig::new(DEFAULT_MAX_STAR_REPS, RandomSource::from_seed(seed))
    }

    pub fn with_max_star_reps(mut self, max_star_reps: usize) -> Self {
        self.max_star_reps = max_star_reps;
        self
    }
}

/// Flattens the chain of unions rooted at `r` into its alternatives,
/// left to right. Both fields of every nested union are followed.
pub fn union_alternatives(r: &Regexp) -> Vec<&Regexp> {
    let mut out = Vec::new();
    let mut stack = vec![r];
    while let Some(node) = stack.pop() {
        match node {
            Regexp::Union(r1, r2) => {
                stack.push(r2);
                stack.push(r1);
            }
            other => out.push(other),
        }
    }
    out
}

/// Picks one alternative of a union chain uniformly at random.
///
/// Panics if `r` is not a union.
pub fn pick_regexp<'r>(r: &'r Regexp, rng: &mut RandomSource) -> &'r Regexp {
    assert!(r.is_union(), "pick_regexp requires a union regexp");
    let alternatives = union_alternatives(r);
    alternatives[rng.next_below(alternatives.len())]
}

/// Uniform natural number in `[0, n]`.
pub fn pick_reps(n: usize, rng: &mut RandomSource) -> usize {
    rng.next_below(n + 1)
}

/// The one-symbol word of a singleton. Panics on any other variant.
pub fn convert_singleton(r: &Regexp) -> Word {
    Word::from(vec![r.singleton_symbol()])
}

/// Generates a word of `L(r)`.
pub fn gen_word(r: &Regexp, cfg: &mut GenConfig) -> Word {
    let mut out = Word::empty();
    generate_into(r, cfg, &mut out);
    out
}

// Appending into one buffer makes empty words vanish from concatenations
// and star repetitions without special cases.
fn generate_into(r: &Regexp, cfg: &mut GenConfig, out: &mut Word) {
    match r {
        Regexp::Empty => {}
        Regexp::Singleton(a) => out.push(*a),
        Regexp::Union(..) => {
            let choice = pick_regexp(r, &mut cfg.rng);
            generate_into(choice, cfg, out);
        }
        Regexp::Concat(r1, r2) => {
            generate_into(r1, cfg, out);
            generate_into(r2, cfg, out);
        }
        Regexp::KleeneStar(body) => {
            let reps = pick_reps(cfg.max_star_reps, &mut cfg.rng);
            for _ in 0..reps {
                generate_into(body, cfg, out);
            }
        }
    }
}

/// [`gen_word`] with the default repetition bound and a seeded source.
pub fn gen_word_default(r: &Regexp, seed: u64) -> Word {
    gen_word(r, &mut GenConfig::seeded(seed))
}
