//! Deterministic semantics for `L(r)`: bounded enumeration and membership.
//!
//! The two procedures are deliberately independent. Enumeration builds word
//! sets bottom up; membership reads the word one symbol at a time, marking
//! the singleton leaves that can match the symbol just read. Tests
//! cross-check one against the other.

use std::collections::BTreeSet;

use crate::regexp::{Regexp, Symbol, Word};

/// Every word of a language up to a length bound, in shortlex order without
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageSample {
    pub words: Vec<Word>,
    pub bound: usize,
}

impl LanguageSample {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }
}

pub fn enumerate_upto(r: &Regexp, max_len: usize) -> LanguageSample {
    LanguageSample {
        words: enumerate_set(r, max_len).into_iter().collect(),
        bound: max_len,
    }
}

// `Word`'s `Ord` is shortlex, so a BTreeSet keeps the canonical order.
fn enumerate_set(r: &Regexp, max_len: usize) -> BTreeSet<Word> {
    match r {
        Regexp::Empty => BTreeSet::from([Word::empty()]),
        Regexp::Singleton(a) => {
            if max_len >= 1 {
                BTreeSet::from([Word::from(vec![*a])])
            } else {
                BTreeSet::new()
            }
        }
        Regexp::Union(r1, r2) => {
            let mut out = enumerate_set(r1, max_len);
            out.extend(enumerate_set(r2, max_len));
            out
        }
        Regexp::Concat(r1, r2) => {
            let left = enumerate_set(r1, max_len);
            let right = by_length(enumerate_set(r2, max_len), max_len);
            concat_sets(&left, &right, max_len)
        }
        Regexp::KleeneStar(body) => {
            let nonempty = enumerate_set(body, max_len)
                .into_iter()
                .filter(|w| !w.is_empty())
                .collect::<BTreeSet<_>>();
            let mut closure = BTreeSet::from([Word::empty()]);
            let mut frontier = closure.clone();
            // Every new word is at least one symbol longer than the frontier
            // word it extends, so this runs at most max_len rounds.
            while !frontier.is_empty() {
                let frontier_by_len = by_length(frontier, max_len);
                let next: BTreeSet<Word> = concat_sets(&nonempty, &frontier_by_len, max_len)
                    .into_iter()
                    .filter(|w| !closure.contains(w))
                    .collect();
                closure.extend(next.iter().cloned());
                frontier = next;
            }
            closure
        }
    }
}

fn by_length(words: BTreeSet<Word>, max_len: usize) -> Vec<Vec<Word>> {
    let mut buckets = vec![Vec::new(); max_len + 1];
    for w in words {
        buckets[w.len()].push(w);
    }
    buckets
}

fn concat_sets(left: &BTreeSet<Word>, right: &[Vec<Word>], max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for u in left {
        for bucket in &right[..=max_len - u.len()] {
            for v in bucket {
                out.insert(u.concat(v));
            }
        }
    }
    out
}

/// Decides `w ∈ L(r)`.
pub fn member(r: &Regexp, w: &Word) -> bool {
    let mut marks = Marks::new(r);
    let mut symbols = w.symbols().iter();
    match symbols.next() {
        None => nullable(r),
        Some(first) => {
            let mut accepted = marks.shift(r, true, *first);
            for &sym in symbols {
                accepted = marks.shift(r, false, sym);
            }
            accepted
        }
    }
}

pub fn lang_equal_upto(r1: &Regexp, r2: &Regexp, max_len: usize) -> bool {
    enumerate_upto(r1, max_len) == enumerate_upto(r2, max_len)
}

/// Whether the empty word is in `L(r)`.
pub fn nullable(r: &Regexp) -> bool {
    match r {
        Regexp::Empty | Regexp::KleeneStar(_) => true,
        Regexp::Singleton(_) => false,
        Regexp::Union(r1, r2) => nullable(r1) || nullable(r2),
        Regexp::Concat(r1, r2) => nullable(r1) && nullable(r2),
    }
}

/// Membership by marking singleton leaves.
///
/// After reading a prefix `u`, a leaf is marked iff some word of `L(r)`
/// can have `u` as a prefix with the last symbol of `u` matched at that
/// leaf. A node is *final* when the prefix read so far can end a match of
/// that node, computed from the marks below it. Nodes are numbered in
/// preorder, which is the order `shift` visits them.
struct Marks {
    nullable: Vec<bool>,
    fin: Vec<bool>,
}

impl Marks {
    fn new(r: &Regexp) -> Self {
        // Preorder ids, nullability filled in on the way back up.
        fn walk(r: &Regexp, out: &mut Vec<bool>) -> bool {
            let id = out.len();
            out.push(false);
            let n = match r {
                Regexp::Empty | Regexp::KleeneStar(_) => {
                    if let Regexp::KleeneStar(body) = r {
                        walk(body, out);
                    }
                    true
                }
                Regexp::Singleton(_) => false,
                Regexp::Union(r1, r2) => walk(r1, out) | walk(r2, out),
                Regexp::Concat(r1, r2) => walk(r1, out) & walk(r2, out),
            };
            out[id] = n;
            n
        }
        let mut nullable_flags = Vec::new();
        walk(r, &mut nullable_flags);
        let n = nullable_flags.len();
        Marks {
            nullable: nullable_flags,
            fin: vec![false; n],
        }
    }

    /// Reads one symbol; `entering` says whether a match may start here.
    /// Returns whether the root is final afterwards.
    fn shift(&mut self, r: &Regexp, entering: bool, sym: Symbol) -> bool {
        let mut next_id = 0;
        self.shift_node(r, entering, sym, &mut next_id)
    }

    fn shift_node(&mut self, r: &Regexp, entering: bool, sym: Symbol, next_id: &mut usize) -> bool {
        let id = *next_id;
        *next_id += 1;
        let fin = match r {
            Regexp::Empty => false,
            Regexp::Singleton(a) => entering && *a == sym,
            Regexp::Union(r1, r2) => {
                let left = self.shift_node(r1, entering, sym, next_id);
                let right = self.shift_node(r2, entering, sym, next_id);
                left || right
            }
            Regexp::Concat(r1, r2) => {
                let left_id = id + 1;
                let left_was_final = self.fin[left_id];
                let left_nullable = self.nullable[left_id];
                let left = self.shift_node(r1, entering, sym, next_id);
                let right_id = *next_id;
                let right_nullable = self.nullable[right_id];
                let right = self.shift_node(
                    r2,
                    (entering && left_nullable) || left_was_final,
                    sym,
                    next_id,
                );
                (left && right_nullable) || right
            }
            Regexp::KleeneStar(body) => {
                let body_was_final = self.fin[id + 1];
                self.shift_node(body, entering || body_was_final, sym, next_id)
            }
        };
        self.fin[id] = fin;
        fin
    }
}
