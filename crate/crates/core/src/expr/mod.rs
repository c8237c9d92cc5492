//! A small expression language over forms.
//!
//! ```text
//! expr   := sum ;
//! sum    := prod { ("+"|"-") prod } ;
//! prod   := unary { ("<>" | "^" | "/\" | "_|") unary } ;
//! unary  := call | atom ;
//! call   := ident "(" args ")" ;
//! atom   := rational | blade | frame | "one" | "vol" | "pplus" | "pminus" | "(" expr ")" ;
//! blade  := "e" digits | "e{" int { "," int } "}" ;
//! frame  := "E" int ;
//! ```
//!
//! The four infix products share one precedence level and associate to the
//! left, but a chain may not mix two different products without parentheses.
//! `_|` takes a frame vector `E<k>` on its left.

mod eval;
mod parser;

use std::fmt;

use crate::rational::{self, Rational};
use crate::structure::Sign;

pub use eval::{eval, eval_str};
pub use parser::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    One,
    Vol,
    PPlus,
    PMinus,
}

impl Constant {
    fn name(self) -> &'static str {
        match self {
            Constant::One => "one",
            Constant::Vol => "vol",
            Constant::PPlus => "pplus",
            Constant::PMinus => "pminus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Hodge,
    Reversion,
    Involution,
    ProjectPlus,
    ProjectMinus,
    TruncateLower,
    TruncateUpper,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 7] = [
        UnaryOp::Hodge,
        UnaryOp::Reversion,
        UnaryOp::Involution,
        UnaryOp::ProjectPlus,
        UnaryOp::ProjectMinus,
        UnaryOp::TruncateLower,
        UnaryOp::TruncateUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Hodge => "hodge",
            UnaryOp::Reversion => "rev",
            UnaryOp::Involution => "inv",
            UnaryOp::ProjectPlus => "projp",
            UnaryOp::ProjectMinus => "projm",
            UnaryOp::TruncateLower => "truncL",
            UnaryOp::TruncateUpper => "truncU",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfixOp {
    Graf,
    Wedge,
    Triangle,
    Contract,
}

impl InfixOp {
    pub const ALL: [InfixOp; 4] = [
        InfixOp::Graf,
        InfixOp::Wedge,
        InfixOp::Triangle,
        InfixOp::Contract,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            InfixOp::Graf => "<>",
            InfixOp::Wedge => "^",
            InfixOp::Triangle => "/\\",
            InfixOp::Contract => "_|",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContractedOp {
    Wedge,
    Graf,
}

/// Parsed expression. Scalar literals are non-negative and blade literals
/// list at least one index; the parser never produces anything else.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FormExpr {
    Scalar(Rational),
    /// Indices as written; `e21` evaluates to `-e12`.
    Blade(Vec<u32>),
    Frame(u32),
    Const(Constant),
    Unary(UnaryOp, Box<FormExpr>),
    Add(Box<FormExpr>, Box<FormExpr>),
    Sub(Box<FormExpr>, Box<FormExpr>),
    Product(InfixOp, Box<FormExpr>, Box<FormExpr>),
    Truncated(Sign, Box<FormExpr>, Box<FormExpr>),
    Contracted(ContractedOp, u32, Box<FormExpr>, Box<FormExpr>),
}

impl FormExpr {
    fn is_sum(&self) -> bool {
        matches!(self, FormExpr::Add(..) | FormExpr::Sub(..))
    }
}

impl fmt::Display for FormExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormExpr::Scalar(r) => f.write_str(&rational::render(r)),
            FormExpr::Blade(idx) => {
                if idx.iter().all(|&i| (1..=9).contains(&i)) {
                    f.write_str("e")?;
                    for i in idx {
                        write!(f, "{i}")?;
                    }
                    Ok(())
                } else {
                    let parts: Vec<String> = idx.iter().map(u32::to_string).collect();
                    write!(f, "e{{{}}}", parts.join(","))
                }
            }
            FormExpr::Frame(k) => write!(f, "E{k}"),
            FormExpr::Const(c) => f.write_str(c.name()),
            FormExpr::Unary(op, x) => write!(f, "{}({x})", op.name()),
            FormExpr::Add(l, r) | FormExpr::Sub(l, r) => {
                let op = if matches!(self, FormExpr::Add(..)) {
                    "+"
                } else {
                    "-"
                };
                write!(f, "{l} {op} ")?;
                if r.is_sum() {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            FormExpr::Product(op, l, r) => {
                let wrap_left = match l.as_ref() {
                    FormExpr::Product(inner, ..) => inner != op,
                    other => other.is_sum(),
                };
                let wrap_right = r.is_sum() || matches!(r.as_ref(), FormExpr::Product(..));
                if wrap_left {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                write!(f, " {} ", op.symbol())?;
                if wrap_right {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            FormExpr::Truncated(sign, a, b) => {
                let name = match sign {
                    Sign::Plus => "tgp",
                    Sign::Minus => "tgm",
                };
                write!(f, "{name}({a}, {b})")
            }
            FormExpr::Contracted(op, l, a, b) => {
                let name = match op {
                    ContractedOp::Wedge => "cw",
                    ContractedOp::Graf => "cg",
                };
                write!(f, "{name}({l}, {a}, {b})")
            }
        }
    }
}
