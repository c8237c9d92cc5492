//! The contracted wedge product, the Graf product and the products built
//! from them.
//!
//! Everything here follows the recursive definitions term by term; the
//! closed-form blade product lives in [`crate::oracle`] and is only used to
//! check these.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::form::Form;
use crate::rational::{self, Rational};
use crate::structure::{self, Sign, Truncation};

/// Product selector used by the table emitter and the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Wedge,
    ContractedWedge(u32),
    Graf,
    ContractedGraf(u32),
    Triangle,
    TruncatedPlus,
    TruncatedMinus,
}

impl ProductKind {
    pub fn apply(self, a: &Form, b: &Form) -> Result<Form> {
        match self {
            ProductKind::Wedge => a.wedge(b),
            ProductKind::ContractedWedge(l) => contracted_wedge(l, a, b),
            ProductKind::Graf => graf(a, b),
            ProductKind::ContractedGraf(l) => contracted_graf(l, a, b),
            ProductKind::Triangle => triangle(a, b),
            ProductKind::TruncatedPlus => truncated_graf(Sign::Plus, a, b),
            ProductKind::TruncatedMinus => truncated_graf(Sign::Minus, a, b),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductKind::Wedge => f.write_str("wedge"),
            ProductKind::ContractedWedge(l) => write!(f, "cw{l}"),
            ProductKind::Graf => f.write_str("graf"),
            ProductKind::ContractedGraf(l) => write!(f, "cg{l}"),
            ProductKind::Triangle => f.write_str("triangle"),
            ProductKind::TruncatedPlus => f.write_str("tgp"),
            ProductKind::TruncatedMinus => f.write_str("tgm"),
        }
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let order = |rest: &str| {
            rest.parse::<u32>()
                .map_err(|_| Error::Eval(format!("bad product order in {s:?}")))
        };
        Ok(match s {
            "wedge" => ProductKind::Wedge,
            "graf" => ProductKind::Graf,
            "triangle" => ProductKind::Triangle,
            "tgp" => ProductKind::TruncatedPlus,
            "tgm" => ProductKind::TruncatedMinus,
            _ if s.starts_with("cw") => ProductKind::ContractedWedge(order(&s[2..])?),
            _ if s.starts_with("cg") => ProductKind::ContractedGraf(order(&s[2..])?),
            _ => {
                return Err(Error::Eval(format!(
                    "unknown product {s:?} (wedge, cw<l>, graf, cg<l>, triangle, tgp, tgm)"
                )))
            }
        })
    }
}

impl Serialize for ProductKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(-1)^exponent / l!`
fn weight(exponent: u32, l: u32) -> Rational {
    rational::signed_inverse_factorial(exponent % 2 == 1, l)
}

// --- contracted wedge ------------------------------------------------------

/// `f1 ∧_l f2`: `∧_0` is the wedge, and
/// `f1 ∧_l f2 = Σ_ij g^{ij} (e_i ⌟ f1) ∧_{l-1} (e_j ⌟ f2)`.
pub fn contracted_wedge(l: u32, a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    Ok(contracted_wedge_raw(l, a, b))
}

pub(crate) fn contracted_wedge_raw(l: u32, a: &Form, b: &Form) -> Form {
    contracted_recursion(l, a, b, &|x, y| x.wedge_raw(y))
}

/// The metric-contracted recursion shared by `∧_l` and `⋄_l`; `base` is the
/// order-0 product.
///
/// Swapping two contractions flips the sign on both sides and a repeated index
/// contracts to zero, so the `l!` orderings of each index set contribute equal
/// terms: the recursion runs over increasing index sequences and is scaled by
/// `l!`.
fn contracted_recursion(l: u32, a: &Form, b: &Form, base: &dyn Fn(&Form, &Form) -> Form) -> Form {
    let out = increasing_contractions(l, a, b, 1, base);
    let orderings = (1..=i64::from(l)).fold(rational::int(1), |acc, k| acc * rational::int(k));
    out.scale(&orderings)
}

fn increasing_contractions(
    l: u32,
    a: &Form,
    b: &Form,
    from: u32,
    base: &dyn Fn(&Form, &Form) -> Form,
) -> Form {
    if l == 0 {
        return base(a, b);
    }
    let sig = a.sig();
    let mut out = Form::zero(sig);
    if a.is_zero() || b.is_zero() {
        return out;
    }
    // g^{ij} is diagonal: only i == j survives
    for i in from..=sig.dim() {
        let ca = a.contract_raw(i);
        if ca.is_zero() {
            continue;
        }
        let cb = b.contract_raw(i);
        if cb.is_zero() {
            continue;
        }
        let inner = increasing_contractions(l - 1, &ca, &cb, i + 1, base);
        out.accumulate(&inner, &rational::int(sig.metric(i).into()));
    }
    out
}

// --- Graf product ----------------------------------------------------------

/// The Graf product `a ⋄ b`, extended bilinearly over grade components.
pub fn graf(a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    Ok(graf_raw(a, b))
}

pub(crate) fn graf_raw(a: &Form, b: &Form) -> Form {
    let mut out = Form::zero(a.sig());
    let right = b.grade_components();
    for (r, x) in a.grade_components() {
        for (s, y) in &right {
            let piece = if r <= *s {
                forward_sum(&x, r, y)
            } else {
                reversed_sum(y, *s, &x, r)
            };
            out.accumulate(&piece, &Rational::one());
        }
    }
    out
}

/// `f1 ⋄ f2 = Σ_{l=0}^{r} (-1)^{l(r-l)+[l/2]} / l! · f1 ∧_l f2`, for `f1` of
/// grade `r` and `f2` of grade `s >= r`.
fn forward_sum(f1: &Form, r: u32, f2: &Form) -> Form {
    let mut out = Form::zero(f1.sig());
    for l in 0..=r {
        let term = contracted_wedge_raw(l, f1, f2);
        out.accumulate(&term, &weight(l * (r - l) + l / 2, l));
    }
    out
}

/// `f2 ⋄ f1 = (-1)^{rs} Σ_{l=0}^{r} (-1)^{l(r-l+1)+[l/2]} / l! · f1 ∧_l f2`,
/// for `f1` of grade `r` and `f2` of grade `s >= r`.
fn reversed_sum(f1: &Form, r: u32, f2: &Form, s: u32) -> Form {
    let mut out = Form::zero(f1.sig());
    for l in 0..=r {
        let term = contracted_wedge_raw(l, f1, f2);
        out.accumulate(&term, &weight(r * s + l * (r - l + 1) + l / 2, l));
    }
    out
}

fn homogeneous_pair(f1: &Form, f2: &Form) -> Result<(u32, u32)> {
    f1.same_sig(f2)?;
    let grade = |f: &Form| {
        if f.is_zero() {
            Ok(0)
        } else {
            f.homogeneous_grade()
                .ok_or(Error::Eval("formula needs homogeneous operands".into()))
        }
    };
    let (r, s) = (grade(f1)?, grade(f2)?);
    if r > s {
        return Err(Error::Eval(format!(
            "formula needs grade(f1) <= grade(f2), got {r} > {s}"
        )));
    }
    Ok((r, s))
}

/// `f1 ⋄ f2` evaluated by the forward formula only (homogeneous, `r <= s`).
pub fn graf_forward_formula(f1: &Form, f2: &Form) -> Result<Form> {
    let (r, _) = homogeneous_pair(f1, f2)?;
    Ok(forward_sum(f1, r, f2))
}

/// `f2 ⋄ f1` evaluated by the reversed-order formula only (homogeneous,
/// `r <= s`).
pub fn graf_reversed_formula(f1: &Form, f2: &Form) -> Result<Form> {
    let (r, s) = homogeneous_pair(f1, f2)?;
    Ok(reversed_sum(f1, r, f2, s))
}

// --- contracted Graf and triangle ------------------------------------------

/// `f1 ⋄_l f2`: `⋄_0` is the Graf product, and
/// `f1 ⋄_l f2 = Σ_ij g^{ij} (e_i ⌟ f1) ⋄_{l-1} (e_j ⌟ f2)`.
pub fn contracted_graf(l: u32, a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    Ok(contracted_graf_raw(l, a, b))
}

fn contracted_graf_raw(l: u32, a: &Form, b: &Form) -> Form {
    contracted_recursion(l, a, b, &graf_raw)
}

/// `f1 △ f2 = Σ_{l=0}^{r} (-1)^{l(r-l+1)+[l/2]} / l! · f1 ⋄_l f2`.
///
/// Only defined when every grade of `a` is at most every grade of `b` it
/// meets; other component pairs are rejected.
pub fn triangle(a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    let mut out = Form::zero(a.sig());
    let right = b.grade_components();
    for (r, x) in a.grade_components() {
        for (s, y) in &right {
            if r > *s {
                return Err(Error::TriangleGradeOrder { left: r, right: *s });
            }
            for l in 0..=r {
                let term = contracted_graf_raw(l, &x, y);
                out.accumulate(&term, &weight(l * (r - l + 1) + l / 2, l));
            }
        }
    }
    Ok(out)
}

// --- truncated Graf product ------------------------------------------------

/// `a ◆± b = 2 P_L(P±(a) ⋄ P±(b))`; always lands in the lower truncation.
pub fn truncated_graf(sign: Sign, a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    let pa = structure::project_pm(sign, a);
    let pb = structure::project_pm(sign, b);
    let prod = graf_raw(&pa, &pb);
    Ok(structure::truncate(Truncation::Lower, &prod).scale(&rational::int(2)))
}
