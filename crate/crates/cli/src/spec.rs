//! Matroid expressions on the command line.
//!
//! ```text
//! expr := term ('+' term)*
//! term := 'tr(' expr ')' | 'ext(' expr ')' | '(' expr ')' | atom
//! atom := 'u:' r ',' n | 'g:' name | 'bases:' path | 'graph:' path
//! ```
//!
//! `tr` and `ext` bind tighter than `+`, and `+` is left-associative.
//! Whitespace between tokens is ignored. Paths end at whitespace, `)` or `+`.

use std::fmt;
use std::path::PathBuf;

use topozeta::matroid::io::{parse_bases, parse_graph};
use topozeta::matroid::Validation;
use topozeta::{Graph, Matroid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Uniform { r: usize, n: usize },
    Named(String),
    BasesFile(PathBuf),
    GraphFile(PathBuf),
    Sum(Box<Spec>, Box<Spec>),
    Truncation(Box<Spec>),
    Extension(Box<Spec>),
}

/// A malformed expression, with the byte offset of the problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Why a parsed expression could not be turned into a matroid.
#[derive(Debug)]
pub enum BuildError {
    /// Unreadable or malformed input file, or an unknown graph name.
    Input(String),
    /// A valid expression whose construction is not defined.
    Domain(topozeta::Error),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Input(m) => f.write_str(m),
            BuildError::Domain(e) => write!(f, "{e}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected '{token}'"))
        }
    }

    fn expr(&mut self) -> Result<Spec, ParseError> {
        let mut acc = self.term()?;
        while self.eat("+") {
            let rhs = self.term()?;
            acc = Spec::Sum(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn wrapped(&mut self) -> Result<Spec, ParseError> {
        let inner = self.expr()?;
        self.expect(")")?;
        Ok(inner)
    }

    fn term(&mut self) -> Result<Spec, ParseError> {
        self.skip_ws();
        if self.eat("tr(") {
            return Ok(Spec::Truncation(Box::new(self.wrapped()?)));
        }
        if self.eat("ext(") {
            return Ok(Spec::Extension(Box::new(self.wrapped()?)));
        }
        if self.eat("(") {
            return self.wrapped();
        }
        if self.eat("u:") {
            let r = self.number()?;
            self.expect(",")?;
            let n = self.number()?;
            return Ok(Spec::Uniform { r, n });
        }
        if self.eat("g:") {
            let start = self.pos;
            let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == ',');
            if Graph::named(name).is_none() {
                self.pos = start;
                return self.err(format!("unknown graph name {name:?}"));
            }
            return Ok(Spec::Named(name.to_string()));
        }
        if self.eat("bases:") {
            return Ok(Spec::BasesFile(self.path()?));
        }
        if self.eat("graph:") {
            return Ok(Spec::GraphFile(self.path()?));
        }
        if self.rest().is_empty() {
            self.err("unexpected end of input")
        } else {
            self.err("expected a matroid: u:r,n, g:name, bases:path, graph:path, tr(..), ext(..) or (..)")
        }
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> &'a str {
        let rest = self.rest();
        let end = rest.find(|c| !keep(c)).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected a number")
            }
        }
    }

    fn path(&mut self) -> Result<PathBuf, ParseError> {
        let p = self.take_while(|c| !c.is_whitespace() && c != ')' && c != '+');
        if p.is_empty() {
            return self.err("expected a file path");
        }
        Ok(PathBuf::from(p))
    }
}

impl Spec {
    pub fn parse(src: &str) -> Result<Spec, ParseError> {
        let mut p = Parser { src, pos: 0 };
        let spec = p.expr()?;
        p.skip_ws();
        if !p.rest().is_empty() {
            return p.err("unexpected trailing input");
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Matroid, BuildError> {
        match self {
            Spec::Uniform { r, n } => Matroid::uniform(*r, *n).map_err(BuildError::Domain),
            Spec::Named(name) => Graph::named(name)
                .ok_or_else(|| BuildError::Input(format!("unknown graph name {name:?}")))?
                .matroid()
                .map_err(BuildError::Domain),
            Spec::BasesFile(path) => {
                let text = read(path)?;
                parse_bases(&text, Validation::Full)
                    .map_err(|e| BuildError::Input(format!("{}: {e}", path.display())))
            }
            Spec::GraphFile(path) => {
                let text = read(path)?;
                parse_graph(&text)
                    .map_err(|e| BuildError::Input(format!("{}: {e}", path.display())))?
                    .matroid()
                    .map_err(BuildError::Domain)
            }
            Spec::Sum(a, b) => a
                .build()?
                .direct_sum(&b.build()?)
                .map_err(BuildError::Domain),
            Spec::Truncation(a) => a.build()?.truncation().map_err(BuildError::Domain),
            Spec::Extension(a) => a.build()?.free_extension().map_err(BuildError::Domain),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, BuildError> {
    std::fs::read_to_string(path).map_err(|e| BuildError::Input(format!("{}: {e}", path.display())))
}

/// Canonical, fully parenthesised form; parses back to the same tree.
impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spec::Uniform { r, n } => write!(f, "u:{r},{n}"),
            Spec::Named(name) => write!(f, "g:{name}"),
            Spec::BasesFile(p) => write!(f, "bases:{}", p.display()),
            Spec::GraphFile(p) => write!(f, "graph:{}", p.display()),
            Spec::Sum(a, b) => write!(f, "({a} + {b})"),
            Spec::Truncation(a) => write!(f, "tr({a})"),
            Spec::Extension(a) => write!(f, "ext({a})"),
        }
    }
}
