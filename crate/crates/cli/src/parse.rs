//! Parser and renderer for words, `Symⁿ` expressions and exponent tuples.
//!
//! ```text
//! word    := term+          term := letter ('^' uint)? | '1'
//! class   := '[' word (',' word)* ']'
//! symexpr := class ('*' class)*
//! factors := tuple (',' tuple)*    tuple := '(' uint (',' uint)* ')'
//! ```
//!
//! Whitespace is insignificant. Positions are character offsets.

use std::fmt;

use qweyl_core::{AlgebraId, Word};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub letter: char,
    pub exp: u32,
}

/// A product of letter powers; empty is the unit word `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WordExpr {
    pub terms: Vec<Term>,
}

impl WordExpr {
    pub fn to_word(&self, algebra: AlgebraId) -> Word {
        let letters = self
            .terms
            .iter()
            .flat_map(|t| {
                let l = algebra.letter_index(t.letter).expect("validated by the parser");
                std::iter::repeat(l).take(t.exp as usize)
            })
            .collect();
        Word::new(algebra, letters).expect("validated by the parser")
    }
}

/// `[w_1, ..., w_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassExpr {
    pub words: Vec<WordExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Word(WordExpr),
    Sym { arity: usize, classes: Vec<ClassExpr> },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at position {position}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub position: usize,
    pub message: String,
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(" or "))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    algebra: AlgebraId,
}

impl Parser {
    fn new(src: &str, algebra: AlgebraId) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            algebra,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, position: usize, message: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            position,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn describe(&self, c: Option<char>) -> String {
        match c {
            Some(c) => format!("unexpected '{c}'"),
            None => "unexpected end of input".into(),
        }
    }

    fn letters_hint(&self) -> String {
        let ls: Vec<String> = self
            .algebra
            .letters()
            .iter()
            .map(|c| format!("'{c}'"))
            .collect();
        format!("letter {}", ls.join(", "))
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        let c = self.peek();
        if c == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            let quoted = format!("'{want}'");
            Err(self.error(self.pos, self.describe(c), &[&quoted]))
        }
    }

    fn finish(&mut self, expected: &[&str]) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            c => Err(self.error(self.pos, self.describe(c), expected)),
        }
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            let c = self.chars.get(self.pos).copied();
            return Err(self.error(start, format!("malformed exponent: {}", self.describe(c)), &["unsigned integer"]));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.error(start, format!("malformed exponent: {digits} is too large"), &["unsigned integer"]))
    }

    fn starts_term(&mut self) -> bool {
        self.peek().is_some_and(|c| c == '1' || c.is_alphabetic())
    }

    fn word(&mut self) -> Result<WordExpr, ParseError> {
        let hint = self.letters_hint();
        if !self.starts_term() {
            let c = self.peek();
            return Err(self.error(self.pos, self.describe(c), &[&hint, "'1'"]));
        }
        let mut terms = Vec::new();
        while self.starts_term() {
            let at = self.pos;
            let c = self.chars[at];
            self.pos += 1;
            if c == '1' {
                continue;
            }
            if self.algebra.letter_index(c).is_none() {
                return Err(self.error(
                    at,
                    format!("unknown letter '{c}' for {}", self.algebra),
                    &[&hint],
                ));
            }
            let exp = if self.peek() == Some('^') {
                self.pos += 1;
                self.uint()?
            } else {
                1
            };
            terms.push(Term { letter: c, exp });
        }
        Ok(WordExpr { terms })
    }

    fn class(&mut self, arity: usize) -> Result<ClassExpr, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        self.expect('[')?;
        let mut words = vec![self.word()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            words.push(self.word()?);
        }
        let hint = self.letters_hint();
        if self.peek() != Some(']') {
            let c = self.peek();
            return Err(self.error(self.pos, self.describe(c), &[&hint, "','", "']'"]));
        }
        self.pos += 1;
        if words.len() != arity {
            return Err(self.error(
                start,
                format!("arity mismatch: class has {} words, expected {arity}", words.len()),
                &[],
            ));
        }
        Ok(ClassExpr { words })
    }

    fn symexpr(&mut self, arity: usize) -> Result<Vec<ClassExpr>, ParseError> {
        let mut classes = vec![self.class(arity)?];
        while self.peek() == Some('*') {
            self.pos += 1;
            classes.push(self.class(arity)?);
        }
        self.finish(&["'*'"])?;
        Ok(classes)
    }

    fn tuple(&mut self) -> Result<Vec<u32>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        self.expect('(')?;
        let mut v = vec![self.uint()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            v.push(self.uint()?);
        }
        self.expect(')')?;
        let width = self.algebra.letter_count();
        if v.len() != width {
            return Err(self.error(
                start,
                format!("tuple has {} entries, {} needs {width}", v.len(), self.algebra),
                &[],
            ));
        }
        Ok(v)
    }
}

pub fn parse_word(src: &str, algebra: AlgebraId) -> Result<WordExpr, ParseError> {
    let mut p = Parser::new(src, algebra);
    let w = p.word()?;
    let hint = p.letters_hint();
    p.finish(&[&hint, "'1'"])?;
    Ok(w)
}

pub fn parse_symexpr(src: &str, algebra: AlgebraId, arity: usize) -> Result<Vec<ClassExpr>, ParseError> {
    Parser::new(src, algebra).symexpr(arity)
}

/// A word, or a `Symⁿ` expression when `arity` is given.
pub fn parse(src: &str, algebra: AlgebraId, arity: Option<usize>) -> Result<Expr, ParseError> {
    match arity {
        None => parse_word(src, algebra).map(Expr::Word),
        Some(n) => parse_symexpr(src, algebra, n).map(|classes| Expr::Sym { arity: n, classes }),
    }
}

/// Exponent tuples such as `(0,0,1),(2,0,0)`.
pub fn parse_factors(src: &str, algebra: AlgebraId) -> Result<Vec<Vec<u32>>, ParseError> {
    let mut p = Parser::new(src, algebra);
    let mut out = vec![p.tuple()?];
    while p.peek() == Some(',') {
        p.pos += 1;
        out.push(p.tuple()?);
    }
    p.finish(&["','"])?;
    Ok(out)
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if t.exp == 1 {
                write!(f, "{}", t.letter)?;
            } else {
                write!(f, "{}^{}", t.letter, t.exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", words.join(", "))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Word(w) => write!(f, "{w}"),
            Expr::Sym { classes, .. } => {
                let parts: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
                f.write_str(&parts.join(" * "))
            }
        }
    }
}
