//! The regular-expression data model.
//!
//! A [`Regexp`] is one of five variants: the empty word, a single symbol,
//! the union of two regexps, the concatenation of two regexps, or the
//! Kleene star of a regexp. Values are immutable once built; children are
//! reference counted so sub-expressions can be shared freely between trees
//! and threads.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Characters that may appear in a singleton regexp besides letters and digits.
pub const SPECIAL_CHARS: [char; 4] = ['$', '&', '!', '*'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegexpError {
    #[error(
        "the input to singleton-regexp {0:?} must be a single letter, digit, or one of $ & ! *"
    )]
    InvalidSymbol(String),
}

/// One alphabet symbol: an ASCII letter, a digit, or one of `$ & ! *`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    pub fn new(ch: char) -> Result<Self, RegexpError> {
        if Self::is_admissible(ch) {
            Ok(Symbol(ch))
        } else {
            Err(RegexpError::InvalidSymbol(ch.to_string()))
        }
    }

    pub fn is_admissible(ch: char) -> bool {
        ch.is_ascii_alphanumeric() || SPECIAL_CHARS.contains(&ch)
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl TryFrom<char> for Symbol {
    type Error = RegexpError;

    fn try_from(ch: char) -> Result<Self, Self::Error> {
        Symbol::new(ch)
    }
}

impl TryFrom<&str> for Symbol {
    type Error = RegexpError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(ch), None) if Symbol::is_admissible(ch) => Ok(Symbol(ch)),
            _ => Err(RegexpError::InvalidSymbol(s.to_string())),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of symbols.
pub type Alphabet = BTreeSet<Symbol>;

/// A possibly empty sequence of symbols. The empty sequence is the empty word.
///
/// Words order by shortlex: shorter words first, then lexicographically by
/// symbol code.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Plain concatenation of the symbols; the empty word prints as nothing.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for sym in &self.0 {
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegexpKind {
    Empty,
    Singleton,
    Union,
    Concat,
    KleeneStar,
}

/// A regular expression over [`Symbol`]s.
///
/// `PartialEq` is structural: two regexps are equal iff their trees are
/// identical node for node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Regexp {
    Empty,
    Singleton(Symbol),
    Union(Arc<Regexp>, Arc<Regexp>),
    Concat(Arc<Regexp>, Arc<Regexp>),
    KleeneStar(Arc<Regexp>),
}

impl Regexp {
    pub fn empty() -> Regexp {
        Regexp::Empty
    }

    /// Builds a singleton from a one-character string.
    pub fn singleton(a: &str) -> Result<Regexp, RegexpError> {
        Symbol::try_from(a).map(Regexp::Singleton)
    }

    pub fn symbol(sym: Symbol) -> Regexp {
        Regexp::Singleton(sym)
    }

    pub fn union(r1: Regexp, r2: Regexp) -> Regexp {
        Regexp::Union(Arc::new(r1), Arc::new(r2))
    }

    pub fn concat(r1: Regexp, r2: Regexp) -> Regexp {
        Regexp::Concat(Arc::new(r1), Arc::new(r2))
    }

    pub fn star(r: Regexp) -> Regexp {
        Regexp::KleeneStar(Arc::new(r))
    }

    pub fn kind(&self) -> RegexpKind {
        match self {
            Regexp::Empty => RegexpKind::Empty,
            Regexp::Singleton(_) => RegexpKind::Singleton,
            Regexp::Union(..) => RegexpKind::Union,
            Regexp::Concat(..) => RegexpKind::Concat,
            Regexp::KleeneStar(_) => RegexpKind::KleeneStar,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Regexp::Empty)
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, Regexp::Singleton(_))
    }

    pub fn is_union(&self) -> bool {
        matches!(self, Regexp::Union(..))
    }

    pub fn is_concat(&self) -> bool {
        matches!(self, Regexp::Concat(..))
    }

    pub fn is_star(&self) -> bool {
        matches!(self, Regexp::KleeneStar(_))
    }

    // Selectors. Calling one on the wrong variant is a programming error.

    pub fn singleton_symbol(&self) -> Symbol {
        match self {
            Regexp::Singleton(a) => *a,
            other => wrong_variant("singleton_symbol", other),
        }
    }

    pub fn union_left(&self) -> &Regexp {
        match self {
            Regexp::Union(r1, _) => r1,
            other => wrong_variant("union_left", other),
        }
    }

    pub fn union_right(&self) -> &Regexp {
        match self {
            Regexp::Union(_, r2) => r2,
            other => wrong_variant("union_right", other),
        }
    }

    pub fn concat_left(&self) -> &Regexp {
        match self {
            Regexp::Concat(r1, _) => r1,
            other => wrong_variant("concat_left", other),
        }
    }

    pub fn concat_right(&self) -> &Regexp {
        match self {
            Regexp::Concat(_, r2) => r2,
            other => wrong_variant("concat_right", other),
        }
    }

    pub fn star_body(&self) -> &Regexp {
        match self {
            Regexp::KleeneStar(r) => r,
            other => wrong_variant("star_body", other),
        }
    }

    /// The set of symbols appearing in singleton leaves.
    pub fn alphabet(&self) -> Alphabet {
        let mut out = Alphabet::new();
        let mut stack = vec![self];
        while let Some(r) = stack.pop() {
            match r {
                Regexp::Empty => {}
                Regexp::Singleton(a) => {
                    out.insert(*a);
                }
                Regexp::Union(r1, r2) | Regexp::Concat(r1, r2) => {
                    stack.push(r1);
                    stack.push(r2);
                }
                Regexp::KleeneStar(r) => stack.push(r),
            }
        }
        out
    }

    /// Node-for-node equality. Same as `==`.
    pub fn structural_eq(&self, other: &Regexp) -> bool {
        self == other
    }

    pub fn depth(&self) -> usize {
        match self {
            Regexp::Empty | Regexp::Singleton(_) => 1,
            Regexp::Union(r1, r2) | Regexp::Concat(r1, r2) => 1 + r1.depth().max(r2.depth()),
            Regexp::KleeneStar(r) => 1 + r.depth(),
        }
    }
}

#[track_caller]
fn wrong_variant(selector: &str, r: &Regexp) -> ! {
    panic!("{selector} called on a {:?} regexp", r.kind())
}

pub fn make_empty() -> Regexp {
    Regexp::empty()
}

pub fn make_singleton(a: &str) -> Result<Regexp, RegexpError> {
    Regexp::singleton(a)
}

pub fn make_union(r1: Regexp, r2: Regexp) -> Regexp {
    Regexp::union(r1, r2)
}

pub fn make_concat(r1: Regexp, r2: Regexp) -> Regexp {
    Regexp::concat(r1, r2)
}

pub fn make_kleenestar(r: Regexp) -> Regexp {
    Regexp::star(r)
}

pub fn alphabet_of(r: &Regexp) -> Alphabet {
    r.alphabet()
}

pub fn structural_equal(r1: &Regexp, r2: &Regexp) -> bool {
    r1.structural_eq(r2)
}
