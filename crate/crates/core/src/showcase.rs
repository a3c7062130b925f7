//! Worked example languages: words ending in `a`, binary numerals without
//! leading zeros, words containing `fsm`, and a password generator.

use std::sync::LazyLock;

use thiserror::Error;

use crate::regexp::{Regexp, RegexpError, Symbol, Word, SPECIAL_CHARS};
use crate::wordgen::{gen_word, GenConfig, RandomSource};

/// Kleene-star bound used by [`generate_bn`] when none is given.
pub const BIN_NUMS_DEFAULT_REPS: usize = 10;
/// Kleene-star bound used for password generation.
pub const PASSWORD_MAX_STAR_REPS: usize = 5;
pub const PASSWORD_MIN_LEN: usize = 10;
pub const PASSWORD_MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShowcaseError {
    #[error("create-union-regexp: list too short")]
    ListTooShort,
    #[error("no password of length >= {PASSWORD_MIN_LEN} after {0} attempts")]
    AttemptsExhausted(usize),
    #[error(transparent)]
    InvalidSymbol(#[from] RegexpError),
}

fn sing(a: char) -> Regexp {
    Regexp::Singleton(Symbol::new(a).expect("showcase symbols are admissible"))
}

/// `(a U b)*a`
pub static ENDS_WITH_A: LazyLock<Regexp> = LazyLock::new(|| {
    let a = sing('a');
    let b = sing('b');
    let aub_star = Regexp::star(Regexp::union(a.clone(), b));
    Regexp::concat(aub_star, a)
});

/// `(0 U 1(0 U 1)*)`
pub static BIN_NUMS: LazyLock<Regexp> = LazyLock::new(|| {
    let zero = sing('0');
    let one = sing('1');
    let bits_star = Regexp::star(Regexp::union(zero.clone(), one.clone()));
    let starts_with_one = Regexp::concat(one, bits_star);
    Regexp::union(zero, starts_with_one)
});

/// Alphabet of [`CONTAINS_FSM`]: the letters of `fsm` plus two fillers.
pub const CONTAINS_FSM_ALPHABET: [char; 5] = ['f', 's', 'm', 'x', 'y'];

/// Words over [`CONTAINS_FSM_ALPHABET`] containing `fsm` as a factor.
pub static CONTAINS_FSM: LazyLock<Regexp> = LazyLock::new(|| {
    let sigma = CONTAINS_FSM_ALPHABET
        .iter()
        .map(|&c| sing(c))
        .collect::<Vec<_>>();
    let sigma_star = Regexp::star(create_union_regexp(&sigma).expect("five symbols"));
    Regexp::concat(
        sigma_star.clone(),
        Regexp::concat(
            sing('f'),
            Regexp::concat(sing('s'), Regexp::concat(sing('m'), sigma_star)),
        ),
    )
});

pub fn is_ends_with_a(w: &Word) -> bool {
    w.last().is_some_and(|s| s.as_char() == 'a')
}

pub fn is_bin_nums(w: &Word) -> bool {
    let bits = w.symbols();
    let Some(first) = bits.first() else {
        return false;
    };
    let only_bits = bits.iter().all(|s| matches!(s.as_char(), '0' | '1'));
    let no_leading_zero = bits.len() == 1 || first.as_char() == '1';
    only_bits && no_leading_zero
}

/// A binary numeral; the star bound defaults to [`BIN_NUMS_DEFAULT_REPS`].
pub fn generate_bn(seed: u64, max_reps: Option<usize>) -> Word {
    let reps = max_reps.unwrap_or(BIN_NUMS_DEFAULT_REPS);
    gen_word(
        &BIN_NUMS,
        &mut GenConfig::new(reps, RandomSource::from_seed(seed)),
    )
}

/// Right-nested union of two or more regexps.
pub fn create_union_regexp(rs: &[Regexp]) -> Result<Regexp, ShowcaseError> {
    match rs {
        [] | [_] => Err(ShowcaseError::ListTooShort),
        [r1, r2] => Ok(Regexp::union(r1.clone(), r2.clone())),
        [first, rest @ ..] => Ok(Regexp::union(first.clone(), create_union_regexp(rest)?)),
    }
}

/// Which required character class an ordering slot holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharClass {
    Lower,
    Upper,
    Special,
}

impl CharClass {
    pub fn members(self) -> Vec<char> {
        match self {
            CharClass::Lower => ('a'..='z').collect(),
            CharClass::Upper => ('A'..='Z').collect(),
            CharClass::Special => SPECIAL_CHARS.to_vec(),
        }
    }

    pub fn contains(self, ch: char) -> bool {
        match self {
            CharClass::Lower => ch.is_ascii_lowercase(),
            CharClass::Upper => ch.is_ascii_uppercase(),
            CharClass::Special => SPECIAL_CHARS.contains(&ch),
        }
    }

    fn regexp(self) -> Regexp {
        let singles = self.members().into_iter().map(sing).collect::<Vec<_>>();
        create_union_regexp(&singles).expect("every class has several members")
    }
}

use CharClass::{Lower, Special, Upper};

/// The six orders in which the required classes can first appear, in the
/// order they are joined into the password regexp.
pub const PASSWORD_ORDERINGS: [[CharClass; 3]; 6] = [
    [Lower, Upper, Special],
    [Lower, Special, Upper],
    [Special, Lower, Upper],
    [Special, Upper, Lower],
    [Upper, Special, Lower],
    [Upper, Lower, Special],
];

/// Words with at least one lowercase letter, one uppercase letter, and one
/// special character, and no other symbols.
pub fn password_regexp() -> Regexp {
    PASSWD.clone()
}

static PASSWD: LazyLock<Regexp> = LazyLock::new(|| {
    let lower = Lower.regexp();
    let upper = Upper.regexp();
    let special = Special.regexp();
    let arbitrary = Regexp::star(Regexp::union(
        lower.clone(),
        Regexp::union(upper.clone(), special.clone()),
    ));
    let class_regexp = |c: CharClass| match c {
        Lower => lower.clone(),
        Upper => upper.clone(),
        Special => special.clone(),
    };

    // arbitrary · X · arbitrary · Y · arbitrary · Z · arbitrary, right-nested.
    let orderings = PASSWORD_ORDERINGS
        .iter()
        .map(|order| {
            order.iter().rev().fold(arbitrary.clone(), |tail, &class| {
                Regexp::concat(arbitrary.clone(), Regexp::concat(class_regexp(class), tail))
            })
        })
        .collect::<Vec<_>>();
    create_union_regexp(&orderings).expect("six orderings")
});

/// A string satisfying [`is_passwd`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PasswordString(String);

impl PasswordString {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl std::fmt::Display for PasswordString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn generate_password(seed: u64) -> Result<PasswordString, ShowcaseError> {
    generate_password_with(&mut RandomSource::from_seed(seed))
}

/// Draws words from the password regexp until one is long enough.
pub fn generate_password_with(rng: &mut RandomSource) -> Result<PasswordString, ShowcaseError> {
    let mut cfg = GenConfig::new(PASSWORD_MAX_STAR_REPS, rng.clone());
    let result = draw_until_long(&PASSWD, &mut cfg, PASSWORD_MAX_ATTEMPTS);
    *rng = cfg.rng;
    result
}

fn draw_until_long(
    r: &Regexp,
    cfg: &mut GenConfig,
    max_attempts: usize,
) -> Result<PasswordString, ShowcaseError> {
    (0..max_attempts)
        .map(|_| word_to_string(&gen_word(r, cfg)))
        .find(|candidate| candidate.chars().count() >= PASSWORD_MIN_LEN)
        .map(PasswordString)
        .ok_or(ShowcaseError::AttemptsExhausted(max_attempts))
}

pub fn is_passwd(p: &str) -> bool {
    p.chars().count() >= PASSWORD_MIN_LEN
        && [Lower, Upper, Special]
            .iter()
            .all(|class| p.chars().any(|c| class.contains(c)))
}

pub fn word_to_string(w: &Word) -> String {
    w.to_string()
}

pub fn string_to_word(s: &str) -> Result<Word, ShowcaseError> {
    s.chars()
        .map(|c| Symbol::new(c).map_err(ShowcaseError::from))
        .collect()
}
