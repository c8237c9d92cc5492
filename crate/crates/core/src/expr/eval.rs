use super::{Constant, ContractedOp, FormExpr, InfixOp, UnaryOp};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::products;
use crate::signature::Signature;
use crate::structure::{self, Sign, Truncation};

/// Evaluates an expression in the given signature.
pub fn eval(expr: &FormExpr, sig: Signature) -> Result<Form> {
    Ok(match expr {
        FormExpr::Scalar(r) => Form::scalar(sig, r.clone()),
        FormExpr::Blade(idx) => Form::from_indices(sig, idx)?,
        FormExpr::Frame(k) => {
            return Err(Error::Eval(format!(
                "frame vector E{k} is not a form; use it as `E{k} _| <form>`"
            )))
        }
        FormExpr::Const(c) => match c {
            Constant::One => Form::one(sig),
            Constant::Vol => structure::volume(sig),
            Constant::PPlus => structure::p_element(Sign::Plus, sig),
            Constant::PMinus => structure::p_element(Sign::Minus, sig),
        },
        FormExpr::Unary(op, x) => {
            let f = eval(x, sig)?;
            match op {
                UnaryOp::Hodge => structure::hodge(&f),
                UnaryOp::Reversion => f.reversion(),
                UnaryOp::Involution => f.involution(),
                UnaryOp::ProjectPlus => structure::project_pm(Sign::Plus, &f),
                UnaryOp::ProjectMinus => structure::project_pm(Sign::Minus, &f),
                UnaryOp::TruncateLower => structure::truncate(Truncation::Lower, &f),
                UnaryOp::TruncateUpper => structure::truncate(Truncation::Upper, &f),
            }
        }
        FormExpr::Add(a, b) => &eval(a, sig)? + &eval(b, sig)?,
        FormExpr::Sub(a, b) => &eval(a, sig)? - &eval(b, sig)?,
        FormExpr::Product(InfixOp::Contract, frame, x) => {
            let FormExpr::Frame(k) = frame.as_ref() else {
                return Err(Error::Eval(format!(
                    "left operand of `_|` must be a frame vector, got `{frame}`"
                )));
            };
            eval(x, sig)?.contract(*k)?
        }
        FormExpr::Product(op, a, b) => {
            let (a, b) = (eval(a, sig)?, eval(b, sig)?);
            match op {
                InfixOp::Graf => products::graf(&a, &b)?,
                InfixOp::Wedge => a.wedge(&b)?,
                InfixOp::Triangle => products::triangle(&a, &b)?,
                InfixOp::Contract => unreachable!("handled above"),
            }
        }
        FormExpr::Truncated(sign, a, b) => {
            products::truncated_graf(*sign, &eval(a, sig)?, &eval(b, sig)?)?
        }
        FormExpr::Contracted(op, l, a, b) => {
            let (a, b) = (eval(a, sig)?, eval(b, sig)?);
            match op {
                ContractedOp::Wedge => products::contracted_wedge(*l, &a, &b)?,
                ContractedOp::Graf => products::contracted_graf(*l, &a, &b)?,
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, sig: Signature) -> Result<Form> {
    eval(&super::parse(src)?, sig)
}
