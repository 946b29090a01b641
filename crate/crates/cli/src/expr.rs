//! Ring expressions: builtin names, `product(X,Y)`, and `file:<path>`.

use std::fmt;
use std::fs;

use ideal_forge::{builtin_ring, direct_product, FiniteRing, ProductRing, RingSpec};

use crate::CliError;

pub const MAX_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Builtin(String),
    File(String),
    Product(Box<RingExpr>, Box<RingExpr>),
}

/// A parsed expression evaluated to a ring; products keep their factors.
#[derive(Debug, Clone)]
pub enum Evaluated {
    Ring(FiniteRing),
    Product(ProductRing),
}

impl Evaluated {
    pub fn ring(&self) -> &FiniteRing {
        match self {
            Evaluated::Ring(r) => r,
            Evaluated::Product(p) => p.carrier(),
        }
    }

    pub fn into_ring(self) -> FiniteRing {
        match self {
            Evaluated::Ring(r) => r,
            Evaluated::Product(p) => p.into_carrier(),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Builtin(name) => write!(f, "{name}"),
            RingExpr::File(path) => write!(f, "file:{path}"),
            RingExpr::Product(l, r) => write!(f, "product({l},{r})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expect(&mut self, token: char) -> Result<(), CliError> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn error(&self, what: &str) -> CliError {
        CliError::Input(format!("bad ring expression `{}` at offset {}: {what}", self.src, self.pos))
    }

    fn expr(&mut self, depth: usize) -> Result<RingExpr, CliError> {
        self.skip_ws();
        if self.rest().starts_with("product(") {
            if depth >= MAX_DEPTH {
                return Err(self.error(&format!("products nest deeper than {MAX_DEPTH}")));
            }
            self.pos += "product(".len();
            let left = self.expr(depth + 1)?;
            self.expect(',')?;
            let right = self.expr(depth + 1)?;
            self.expect(')')?;
            return Ok(RingExpr::Product(Box::new(left), Box::new(right)));
        }
        let token: String = self
            .rest()
            .chars()
            .take_while(|&ch| ch != ',' && ch != ')' && !ch.is_whitespace())
            .collect();
        if token.is_empty() {
            return Err(self.error("expected a ring name"));
        }
        self.pos += token.len();
        Ok(match token.strip_prefix("file:") {
            Some(path) if !path.is_empty() => RingExpr::File(path.to_string()),
            Some(_) => return Err(self.error("empty file path")),
            None => RingExpr::Builtin(token),
        })
    }
}

pub fn parse(src: &str) -> Result<RingExpr, CliError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr(0)?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

pub fn load_spec(path: &str) -> Result<RingSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {path}: {e}")))?;
    RingSpec::from_json(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

impl RingExpr {
    pub fn eval(&self) -> Result<Evaluated, CliError> {
        match self {
            RingExpr::Builtin(name) => builtin_ring(name)
                .map(Evaluated::Ring)
                .map_err(|e| CliError::Input(e.to_string())),
            RingExpr::File(path) => FiniteRing::from_spec(&load_spec(path)?)
                .map(Evaluated::Ring)
                .map_err(|e| CliError::Input(format!("{path}: {e}"))),
            RingExpr::Product(l, r) => {
                let left = l.eval()?.into_ring();
                let right = r.eval()?.into_ring();
                Ok(Evaluated::Product(direct_product(&left, &right)))
            }
        }
    }
}
