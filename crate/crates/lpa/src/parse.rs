//! Recursive-descent parser for algebra expressions.
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := scalar? factor+ | '0'
//! factor := IDENT '*'? | '(' expr ')'
//! scalar := INT ('/' INT)?
//! ```
//!
//! Juxtaposition is multiplication and binds tighter than `+`/`-`; a
//! trailing `*` marks a ghost edge.

use lpa_core::graph::is_identifier;
use lpa_core::{ExprAst, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Star,
    Plus,
    Minus,
    Slash,
    Open,
    Close,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Open => "`(`".into(),
            Tok::Close => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '*' => Some(Tok::Star),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, column));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), column));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), column));
        } else {
            return Err(ParseError { column, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

/// Where each generator occurs, for graph-aware diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenRef {
    pub name: String,
    pub ghost: bool,
    pub column: usize,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    gens: Vec<GenRef>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.column(), message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut terms = Vec::new();
        let mut negate = false;
        if *self.peek() == Tok::Minus {
            self.bump();
            negate = true;
        }
        loop {
            let t = self.term()?;
            terms.push(if negate { negated(t) } else { t });
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { ExprAst::Sum(terms) })
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Open)
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let scalar = match self.peek() {
            Tok::Int(_) => Some(self.scalar()?),
            _ => None,
        };
        if let Some(c) = &scalar {
            if !self.starts_factor() {
                if c == &BigRational::from_integer(0.into()) {
                    return Ok(ExprAst::zero());
                }
                return self.unexpected("a generator or `(` after the scalar");
            }
        }
        let mut factors = Vec::new();
        while self.starts_factor() {
            factors.push(self.factor()?);
        }
        if factors.is_empty() {
            return self.unexpected("a scalar, generator or `(`");
        }
        let body = if factors.len() == 1 { factors.pop().expect("one factor") } else { ExprAst::Product(factors) };
        Ok(match scalar {
            Some(c) => ExprAst::ScalarMul(c, Box::new(body)),
            None => body,
        })
    }

    fn scalar(&mut self) -> Result<BigRational, ParseError> {
        let Tok::Int(num) = self.bump() else { unreachable!("checked by caller") };
        if *self.peek() != Tok::Slash {
            return Ok(BigRational::from_integer(num));
        }
        self.bump();
        let column = self.column();
        match self.bump() {
            Tok::Int(den) if den == BigInt::from(0) => Err(ParseError { column, message: "zero denominator".into() }),
            Tok::Int(den) => Ok(BigRational::new(num, den)),
            _ => {
                self.pos -= 1;
                self.unexpected("a denominator")
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let column = self.column();
        match self.bump() {
            Tok::Ident(name) => {
                let ghost = *self.peek() == Tok::Star;
                if ghost {
                    self.bump();
                }
                self.gens.push(GenRef { name: name.clone(), ghost, column });
                Ok(ExprAst::Gen { name, ghost })
            }
            Tok::Open => {
                let inner = self.expr()?;
                if *self.peek() != Tok::Close {
                    return self.unexpected("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => unreachable!("checked by starts_factor"),
        }
    }
}

fn negated(t: ExprAst) -> ExprAst {
    match t {
        ExprAst::ScalarMul(c, body) => ExprAst::ScalarMul(-c, body),
        ExprAst::Sum(xs) if xs.is_empty() => ExprAst::Sum(xs),
        other => ExprAst::ScalarMul(BigRational::from_integer((-1).into()), Box::new(other)),
    }
}

/// Parses an expression, returning the tree and every generator occurrence.
pub fn parse_expr_with_refs(text: &str) -> Result<(ExprAst, Vec<GenRef>), ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, gens: Vec::new() };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return p.unexpected("`+`, `-` or end of input");
    }
    Ok((ast, p.gens))
}

pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    parse_expr_with_refs(text).map(|(ast, _)| ast)
}

/// Parses and resolves identifiers against `graph`: unknown names and ghost
/// markers on vertices are reported at their column.
pub fn parse_expr_in(graph: &Graph, text: &str) -> Result<ExprAst, ParseError> {
    let (ast, refs) = parse_expr_with_refs(text)?;
    for r in refs {
        debug_assert!(is_identifier(&r.name));
        if graph.vertex(&r.name).is_some() {
            if r.ghost {
                return Err(ParseError { column: r.column, message: format!("ghost marker on vertex `{}`", r.name) });
            }
        } else if graph.edge(&r.name).is_none() {
            return Err(ParseError { column: r.column, message: format!("unknown vertex or edge `{}`", r.name) });
        }
    }
    Ok(ast)
}
