//! Text forms of a [`Regexp`].
//!
//! The *surface* form is the human-readable printable syntax:
//!
//! | regexp            | printed as                 |
//! |-------------------|----------------------------|
//! | empty             | `ε`                        |
//! | singleton `a`     | `a`                        |
//! | union `r1 r2`     | `(` r1 ` U ` r2 `)`        |
//! | concat `r1 r2`    | r1 r2                      |
//! | star `r`          | r `*`, or `(`r`)*` when r is a concatenation |
//!
//! Symbols that collide with operators (`*` and `U`) are printed with a
//! leading backslash. The parser also accepts `%e` for the empty regexp.
//! Chained unions and concatenations parse right-associated, so parsing a
//! rendered regexp preserves its language but not always its tree shape.
//!
//! The *AST* form is a lossless prefix notation: `(empty)`, `(sing "a")`,
//! `(union X Y)`, `(concat X Y)`, `(star X)`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::regexp::{Regexp, Symbol};

pub const EMPTY_GLYPH: char = 'ε';
pub const EMPTY_ALIAS: &str = "%e";
pub const UNION_SEPARATOR: &str = " U ";

const METACHARS: [char; 7] = ['(', ')', '*', 'U', 'ε', '\\', ' '];

/// A syntax error at a 0-based character offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

pub fn is_metachar(ch: char) -> bool {
    METACHARS.contains(&ch)
}

pub fn render(r: &Regexp) -> String {
    let mut out = String::new();
    render_into(r, &mut out);
    out
}

fn render_into(r: &Regexp, out: &mut String) {
    match r {
        Regexp::Empty => out.push(EMPTY_GLYPH),
        Regexp::Singleton(a) => {
            if is_metachar(a.as_char()) {
                out.push('\\');
            }
            out.push(a.as_char());
        }
        Regexp::Union(r1, r2) => {
            out.push('(');
            render_into(r1, out);
            out.push_str(UNION_SEPARATOR);
            render_into(r2, out);
            out.push(')');
        }
        Regexp::Concat(r1, r2) => {
            render_into(r1, out);
            render_into(r2, out);
        }
        Regexp::KleeneStar(body) => {
            if body.is_concat() {
                out.push('(');
                render_into(body, out);
                out.push(')');
            } else {
                render_into(body, out);
            }
            out.push('*');
        }
    }
}

/// Parses the surface form.
pub fn parse(input: &str) -> Result<Regexp, ParseError> {
    let mut p = SurfaceParser {
        chars: input.chars().collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err(ParseError::new(0, "empty pattern"));
    }
    let r = p.union()?;
    match p.peek() {
        None => Ok(r),
        Some(')') => Err(ParseError::new(
            p.pos,
            "unbalanced parenthesis: unmatched ')'",
        )),
        Some(c) => Err(ParseError::new(p.pos, format!("unexpected {c:?}"))),
    }
}

struct SurfaceParser {
    chars: Vec<char>,
    pos: usize,
}

impl SurfaceParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).copied()
    }

    fn at_separator(&self) -> bool {
        self.peek() == Some(' ') && self.peek_at(1) == Some('U') && self.peek_at(2) == Some(' ')
    }

    fn union(&mut self) -> Result<Regexp, ParseError> {
        let first = self.concat()?;
        if self.peek() == Some(' ') {
            if !self.at_separator() {
                return Err(ParseError::new(
                    self.pos,
                    "expected the union separator \" U \"",
                ));
            }
            self.pos += UNION_SEPARATOR.len();
            let rest = self.union()?;
            return Ok(Regexp::union(first, rest));
        }
        Ok(first)
    }

    fn concat(&mut self) -> Result<Regexp, ParseError> {
        let first = self.starred()?;
        match self.peek() {
            None | Some(')') | Some(' ') => Ok(first),
            Some(_) => Ok(Regexp::concat(first, self.concat()?)),
        }
    }

    fn starred(&mut self) -> Result<Regexp, ParseError> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regexp::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regexp, ParseError> {
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Err(ParseError::new(start, "unexpected end of pattern"));
        };
        match c {
            'ε' => {
                self.pos += 1;
                Ok(Regexp::Empty)
            }
            '%' => {
                if self.peek_at(1) == Some('e') {
                    self.pos += 2;
                    Ok(Regexp::Empty)
                } else {
                    Err(ParseError::new(start, "'%' must be followed by 'e'"))
                }
            }
            '(' => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    return Err(ParseError::new(start, "empty group"));
                }
                let inner = self.union()?;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(ParseError::new(
                        start,
                        "unbalanced parenthesis: '(' is never closed",
                    ))
                }
            }
            ')' => Err(ParseError::new(
                start,
                "unbalanced parenthesis: unmatched ')'",
            )),
            '*' => Err(ParseError::new(
                start,
                "dangling '*' with nothing to repeat",
            )),
            '\\' => {
                let Some(escaped) = self.peek_at(1) else {
                    return Err(ParseError::new(start, "bad escape at end of pattern"));
                };
                if !is_metachar(escaped) {
                    return Err(ParseError::new(
                        start,
                        format!("bad escape: {escaped:?} is not a metacharacter"),
                    ));
                }
                let sym = Symbol::new(escaped).map_err(|_| {
                    ParseError::new(
                        start + 1,
                        format!("bad escape: {escaped:?} is not an alphabet symbol"),
                    )
                })?;
                self.pos += 2;
                Ok(Regexp::Singleton(sym))
            }
            'U' => Err(ParseError::new(start, "stray metacharacter 'U'")),
            ' ' => Err(ParseError::new(start, "stray space")),
            other => {
                let sym = Symbol::new(other).map_err(|_| {
                    ParseError::new(start, format!("{other:?} is not an alphabet symbol"))
                })?;
                self.pos += 1;
                Ok(Regexp::Singleton(sym))
            }
        }
    }
}

pub fn render_ast(r: &Regexp) -> String {
    let mut out = String::new();
    render_ast_into(r, &mut out);
    out
}

fn render_ast_into(r: &Regexp, out: &mut String) {
    match r {
        Regexp::Empty => out.push_str("(empty)"),
        Regexp::Singleton(a) => {
            let _ = write!(out, "(sing \"{a}\")");
        }
        Regexp::Union(r1, r2) => {
            out.push_str("(union ");
            render_ast_into(r1, out);
            out.push(' ');
            render_ast_into(r2, out);
            out.push(')');
        }
        Regexp::Concat(r1, r2) => {
            out.push_str("(concat ");
            render_ast_into(r1, out);
            out.push(' ');
            render_ast_into(r2, out);
            out.push(')');
        }
        Regexp::KleeneStar(body) => {
            out.push_str("(star ");
            render_ast_into(body, out);
            out.push(')');
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum AstToken {
    Open,
    Close,
    Ident(String),
    Str(String),
}

fn tokenize_ast(input: &str) -> Result<Vec<(usize, AstToken)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                tokens.push((i, AstToken::Open));
                i += 1;
            }
            ')' => {
                tokens.push((i, AstToken::Close));
                i += 1;
            }
            '"' => {
                let start = i;
                i += 1;
                let mut s = String::new();
                loop {
                    match chars.get(i) {
                        None => return Err(ParseError::new(start, "unterminated string")),
                        Some('"') => break,
                        Some(&ch) => s.push(ch),
                    }
                    i += 1;
                }
                i += 1;
                tokens.push((start, AstToken::Str(s)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                tokens.push((start, AstToken::Ident(chars[start..i].iter().collect())));
            }
            other => return Err(ParseError::new(i, format!("unexpected {other:?}"))),
        }
    }
    Ok(tokens)
}

/// Parses the AST form.
pub fn parse_ast(input: &str) -> Result<Regexp, ParseError> {
    let tokens = tokenize_ast(input)?;
    let end = input.chars().count();
    let mut p = AstParser {
        tokens,
        pos: 0,
        end,
    };
    let r = p.expr()?;
    if let Some((offset, _)) = p.tokens.get(p.pos) {
        return Err(ParseError::new(*offset, "trailing input after expression"));
    }
    Ok(r)
}

struct AstParser {
    tokens: Vec<(usize, AstToken)>,
    pos: usize,
    end: usize,
}

impl AstParser {
    fn next(&mut self) -> Result<(usize, AstToken), ParseError> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| ParseError::new(self.end, "unexpected end of input"))?;
        self.pos += 1;
        Ok(tok)
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        match self.next()? {
            (_, AstToken::Close) => Ok(()),
            (offset, _) => Err(ParseError::new(offset, "expected ')'")),
        }
    }

    fn expr(&mut self) -> Result<Regexp, ParseError> {
        let (open_at, tok) = self.next()?;
        if tok != AstToken::Open {
            return Err(ParseError::new(open_at, "expected '('"));
        }
        let (name_at, name) = match self.next()? {
            (offset, AstToken::Ident(name)) => (offset, name),
            (offset, _) => return Err(ParseError::new(offset, "expected a node name")),
        };
        let r = match name.as_str() {
            "empty" => Regexp::Empty,
            "sing" => match self.next()? {
                (offset, AstToken::Str(s)) => {
                    Regexp::singleton(&s).map_err(|e| ParseError::new(offset, e.to_string()))?
                }
                (offset, _) => return Err(ParseError::new(offset, "expected a quoted symbol")),
            },
            "union" => {
                let r1 = self.expr()?;
                let r2 = self.expr()?;
                Regexp::union(r1, r2)
            }
            "concat" => {
                let r1 = self.expr()?;
                let r2 = self.expr()?;
                Regexp::concat(r1, r2)
            }
            "star" => Regexp::star(self.expr()?),
            other => return Err(ParseError::new(name_at, format!("unknown node {other:?}"))),
        };
        self.expect_close()?;
        Ok(r)
    }
}
