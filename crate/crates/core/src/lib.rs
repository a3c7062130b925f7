//! Regular expressions as word generators.
//!
//! - [`regexp`]: the five-variant [`Regexp`] type, [`Symbol`] and [`Word`].
//! - [`syntax`]: printable surface syntax and a lossless AST text format.
//! - [`wordgen`]: seeded nondeterministic generation of words in `L(r)`.
//! - [`oracle`]: bounded enumeration and membership, used to check the generator.
//! - [`showcase`]: example languages and a password generator.
//! - [`cli`]: the `regword` command line.

pub mod arbitrary;
pub mod cli;
pub mod oracle;
pub mod regexp;
pub mod showcase;
pub mod syntax;
pub mod wordgen;

pub use oracle::{enumerate_upto, lang_equal_upto, member, LanguageSample};
pub use regexp::{Alphabet, Regexp, RegexpError, RegexpKind, Symbol, Word};
pub use syntax::{parse, parse_ast, render, render_ast, ParseError};
pub use wordgen::{gen_word, gen_word_default, GenConfig, RandomSource};
