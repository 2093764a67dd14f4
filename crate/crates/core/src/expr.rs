//! Expression trees over the generators `v`, `e`, `e*` of a Leavitt path
//! algebra.
//!
//! `Display` writes the surface syntax read by the `lpa` parser:
//! juxtaposition for products, `+`/`-` between terms, an optional leading
//! rational scalar per term, and `0` for the empty sum.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::scalar::sign_and_abs;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<ExprAst>),
    ScalarMul(BigRational, Box<ExprAst>),
    Product(Vec<ExprAst>),
    Gen { name: String, ghost: bool },
}

impl ExprAst {
    pub fn gen(name: impl Into<String>) -> Self {
        ExprAst::Gen { name: name.into(), ghost: false }
    }

    pub fn ghost(name: impl Into<String>) -> Self {
        ExprAst::Gen { name: name.into(), ghost: true }
    }

    pub fn zero() -> Self {
        ExprAst::Sum(Vec::new())
    }

    /// Generators mentioned anywhere in the tree, in order of appearance.
    pub fn generators(&self) -> Vec<(&str, bool)> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<(&'a str, bool)>) {
        match self {
            ExprAst::Sum(xs) | ExprAst::Product(xs) => xs.iter().for_each(|x| x.collect_generators(out)),
            ExprAst::ScalarMul(_, x) => x.collect_generators(out),
            ExprAst::Gen { name, ghost } => out.push((name, *ghost)),
        }
    }
}

/// A factor inside a product: sums, scalar multiples and nested products
/// need parentheses.
fn write_factor(f: &mut fmt::Formatter<'_>, x: &ExprAst) -> fmt::Result {
    match x {
        ExprAst::Gen { .. } => write!(f, "{x}"),
        ExprAst::Sum(xs) if xs.is_empty() => f.write_str("0"),
        _ => write!(f, "({x})"),
    }
}

/// A term after its scalar: products print bare, anything else as a factor.
fn write_term_body(f: &mut fmt::Formatter<'_>, x: &ExprAst) -> fmt::Result {
    match x {
        ExprAst::Product(xs) if !xs.is_empty() => write_product(f, xs),
        _ => write_factor(f, x),
    }
}

fn write_product(f: &mut fmt::Formatter<'_>, xs: &[ExprAst]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write_factor(f, x)?;
    }
    Ok(())
}

/// Writes one summand; `first` controls whether a positive sign is dropped.
fn write_summand(f: &mut fmt::Formatter<'_>, x: &ExprAst, first: bool) -> fmt::Result {
    let (negative, body, scalar) = match x {
        ExprAst::ScalarMul(c, body) => {
            let (neg, abs) = sign_and_abs(c);
            (neg, body.as_ref(), Some(abs))
        }
        _ => (false, x, None),
    };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if let Some(c) = scalar {
        if !c.is_one() {
            write!(f, "{c} ")?;
        }
    }
    match body {
        ExprAst::Sum(xs) if !xs.is_empty() => write!(f, "({body})"),
        _ => write_term_body(f, body),
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Gen { name, ghost } => {
                f.write_str(name)?;
                if *ghost {
                    f.write_str("*")?;
                }
                Ok(())
            }
            ExprAst::Sum(xs) if xs.is_empty() => f.write_str("0"),
            ExprAst::Sum(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    write_summand(f, x, i == 0)?;
                }
                Ok(())
            }
            ExprAst::ScalarMul(..) => write_summand(f, self, true),
            ExprAst::Product(xs) if xs.is_empty() => f.write_str("1"),
            ExprAst::Product(xs) => write_product(f, xs),
        }
    }
}
