//! The `regword` command line.
//!
//! Exit codes: 0 success (or member), 1 non-member, 2 parse or usage error,
//! 3 enumeration bound refused, 4 generation failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::oracle::{enumerate_upto, member};
use crate::regexp::{Regexp, Word};
use crate::showcase::{generate_password_with, string_to_word, word_to_string};
use crate::syntax::{parse, parse_ast, render, render_ast, EMPTY_GLYPH};
use crate::wordgen::{gen_word, GenConfig, RandomSource, DEFAULT_MAX_STAR_REPS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_MEMBER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BOUND_REFUSED: i32 = 3;
pub const EXIT_GENERATION: i32 = 4;

/// Largest `enum --max-len` accepted without `--force`.
pub const ENUM_MAX_LEN_CAP: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "regword",
    version,
    about = "Render, parse, generate from, and enumerate regular expressions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical printable form of a pattern
    Render(PatternArgs),
    /// Print the AST form of a pattern
    Parse(PatternArgs),
    /// Generate random words of the pattern's language
    Gen {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_STAR_REPS)]
        max_reps: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Print the empty word as a blank line instead of ε
        #[arg(long)]
        empty_as_blank: bool,
    },
    /// List every word up to a length, in shortlex order
    Enum {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long)]
        max_len: usize,
        /// Allow --max-len above the default cap
        #[arg(long)]
        force: bool,
    },
    /// Test whether a word belongs to the pattern's language
    Member {
        /// PATTERN WORD, or just WORD when --file is given
        #[arg(num_args = 1..=2, required = true, allow_hyphen_values = true)]
        args: Vec<String>,
        /// Read the pattern in AST form
        #[arg(long)]
        ast: bool,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Generate passwords
    Password {
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Args)]
struct PatternArgs {
    /// Pattern in surface syntax (or AST form with --ast)
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pattern: Option<String>,
    /// Read the pattern in AST form
    #[arg(long)]
    ast: bool,
    /// Read the pattern from a file
    #[arg(long)]
    file: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

/// Runs one invocation and returns its exit code. `require_seed` makes
/// `--seed` mandatory for the generating subcommands.
pub fn run<I, T>(args: I, require_seed: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, require_seed, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "regword: {}", failure.message);
            failure.code
        }
    }
}

fn execute(command: Command, require_seed: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Render(p) => {
            let r = load_pattern(p.pattern.as_deref(), p.file.as_ref(), p.ast)?;
            emit(out, &render(&r))?;
        }
        Command::Parse(p) => {
            let r = load_pattern(p.pattern.as_deref(), p.file.as_ref(), p.ast)?;
            emit(out, &render_ast(&r))?;
        }
        Command::Gen {
            pattern: p,
            count,
            max_reps,
            seed,
            empty_as_blank,
        } => {
            let r = load_pattern(p.pattern.as_deref(), p.file.as_ref(), p.ast)?;
            let rng = random_source(seed, require_seed)?;
            let mut cfg = GenConfig::new(max_reps, rng);
            for _ in 0..count {
                let w = gen_word(&r, &mut cfg);
                emit(out, &display_word(&w, empty_as_blank))?;
            }
        }
        Command::Enum {
            pattern: p,
            max_len,
            force,
        } => {
            let r = load_pattern(p.pattern.as_deref(), p.file.as_ref(), p.ast)?;
            if max_len > ENUM_MAX_LEN_CAP && !force {
                return Err(Failure::new(
                    EXIT_BOUND_REFUSED,
                    format!(
                        "--max-len {max_len} exceeds {ENUM_MAX_LEN_CAP}; pass --force to allow it"
                    ),
                ));
            }
            for w in enumerate_upto(&r, max_len).iter() {
                emit(out, &display_word(w, false))?;
            }
        }
        Command::Member { args, ast, file } => {
            let (pattern, word) = match (file.is_some(), args.as_slice()) {
                (false, [pattern, word]) => (Some(pattern.as_str()), word),
                (true, [word]) => (None, word),
                (false, _) => return Err(Failure::new(EXIT_PARSE, "member expects PATTERN WORD")),
                (true, _) => {
                    return Err(Failure::new(
                        EXIT_PARSE,
                        "member expects only WORD with --file",
                    ))
                }
            };
            let r = load_pattern(pattern, file.as_ref(), ast)?;
            let is_member = parse_word(word).is_some_and(|w| member(&r, &w));
            emit(out, if is_member { "true" } else { "false" })?;
            return Ok(if is_member { EXIT_OK } else { EXIT_NOT_MEMBER });
        }
        Command::Password { count, seed } => {
            let mut rng = random_source(seed, require_seed)?;
            for _ in 0..count {
                let p = generate_password_with(&mut rng)
                    .map_err(|e| Failure::new(EXIT_GENERATION, e.to_string()))?;
                emit(out, p.as_str())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn load_pattern(
    inline: Option<&str>,
    file: Option<&PathBuf>,
    ast: bool,
) -> Result<Regexp, Failure> {
    let text = match (inline, file) {
        (Some(s), _) => s.to_string(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?
            .trim_end_matches(['\n', '\r'])
            .to_string(),
        (None, None) => return Err(Failure::new(EXIT_PARSE, "no pattern given")),
    };
    let parsed = if ast { parse_ast(&text) } else { parse(&text) };
    parsed.map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

fn random_source(seed: Option<u64>, require_seed: bool) -> Result<RandomSource, Failure> {
    match seed {
        Some(s) => Ok(RandomSource::from_seed(s)),
        None if require_seed => Err(Failure::new(
            EXIT_PARSE,
            "--seed is required when CI is set",
        )),
        None => Ok(RandomSource::from_entropy()),
    }
}

/// `ε` and the empty string both denote the empty word. Anything with a
/// non-symbol character is a word of no language.
fn parse_word(s: &str) -> Option<Word> {
    if s == EMPTY_GLYPH.to_string() {
        return Some(Word::empty());
    }
    string_to_word(s).ok()
}

fn display_word(w: &Word, empty_as_blank: bool) -> String {
    if w.is_empty() && !empty_as_blank {
        EMPTY_GLYPH.to_string()
    } else {
        word_to_string(w)
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::new(EXIT_GENERATION, format!("write failed: {e}")))
}
