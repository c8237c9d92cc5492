//! Volume element, Hodge operator, the projectors `P±`, the lower and upper
//! truncations and the isomorphism between `(Γ_L, ◆±)` and `(Γ±, ⋄)`.

use std::fmt;

use serde::Serialize;

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::form::Form;
use crate::products::{contracted_wedge_raw, graf_raw};
use crate::rational;
use crate::signature::{Mod8Class, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truncation {
    /// Grades `0..=floor(n/2)`.
    Lower,
    /// Grades `floor(n/2)+1..=n`.
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SplitMembership {
    GammaPlus,
    GammaMinus,
    GammaL,
    GammaU,
    None,
}

/// `v = e^{1...n}`.
pub fn volume(sig: Signature) -> Form {
    Form::blade(sig, Blade::top(sig.dim()))
}

/// `v ⋄ v`, evaluated through the Graf product.
pub fn volume_square(sig: Signature) -> Form {
    let v = volume(sig);
    graf_raw(&v, &v)
}

/// `(-1)^{[n/2] + q} 1_Γ`.
pub fn volume_square_closed_form(sig: Signature) -> Form {
    Form::scalar(sig, rational::int(Mod8Class::closed_form_sign(sig).into()))
}

/// `⋆f = f ⋄ v`.
pub fn hodge(f: &Form) -> Form {
    graf_raw(f, &volume(f.sig()))
}

/// `⋆f` on each grade-`r` component as `(1/r!) (-1)^{[r/2]} f ∧_r v`.
pub fn hodge_via_contraction(f: &Form) -> Form {
    let sig = f.sig();
    let v = volume(sig);
    let mut out = Form::zero(sig);
    for (r, part) in f.grade_components() {
        let w = rational::signed_inverse_factorial((r / 2) % 2 == 1, r);
        out.accumulate(&contracted_wedge_raw(r, &part, &v), &w);
    }
    out
}

/// `p± = ½(1_Γ ± v)`.
pub fn p_element(sign: Sign, sig: Signature) -> Form {
    let half = rational::ratio(1, 2);
    let mut f = Form::scalar(sig, half.clone());
    f.add_term(Blade::top(sig.dim()), half * rational::int(sign.value()));
    f
}

/// `P±(f) = ½(f ± ⋆f)`.
pub fn project_pm(sign: Sign, f: &Form) -> Form {
    let star = hodge(f);
    let sum = match sign {
        Sign::Plus => f + &star,
        Sign::Minus => f - &star,
    };
    sum.scale(&rational::ratio(1, 2))
}

/// `P_L` or `P_U`. The boundary grade `floor(n/2)` belongs to the lower part.
pub fn truncate(which: Truncation, f: &Form) -> Form {
    let half = f.sig().half();
    match which {
        Truncation::Lower => f.filter_grades(|k| k <= half),
        Truncation::Upper => f.filter_grades(|k| k > half),
    }
}

fn require_splitting(sig: Signature) -> Result<()> {
    if sig.class().splitting_exists {
        Ok(())
    } else {
        Err(Error::UnsupportedSignature {
            sig,
            reason: "real splitting needs (p-q) mod 8 in {0,1,4,5}",
        })
    }
}

fn require_truncation_regime(sig: Signature) -> Result<()> {
    require_splitting(sig)?;
    if sig.dim() % 2 == 1 {
        Ok(())
    } else {
        Err(Error::UnsupportedSignature {
            sig,
            reason: "isomorphism needs odd dimension",
        })
    }
}

fn in_gamma_pm(sign: Sign, f: &Form) -> bool {
    let star = hodge(f);
    match sign {
        Sign::Plus => star == *f,
        Sign::Minus => star == -f,
    }
}

/// Whether `f` lies in the given subspace. `Γ±` membership (`⋆f = ±f`) is
/// only meaningful when the splitting exists.
pub fn contains(space: SplitMembership, f: &Form) -> Result<bool> {
    let half = f.sig().half();
    Ok(match space {
        SplitMembership::GammaL => f.terms().all(|(b, _)| b.grade() <= half),
        SplitMembership::GammaU => f.terms().all(|(b, _)| b.grade() > half),
        SplitMembership::GammaPlus => {
            require_splitting(f.sig())?;
            in_gamma_pm(Sign::Plus, f)
        }
        SplitMembership::GammaMinus => {
            require_splitting(f.sig())?;
            in_gamma_pm(Sign::Minus, f)
        }
        SplitMembership::None => false,
    })
}

/// First subspace containing `f`, checked in the order `Γ+`, `Γ-`, `Γ_L`, `Γ_U`.
pub fn membership(f: &Form) -> SplitMembership {
    let mut order = vec![SplitMembership::GammaL, SplitMembership::GammaU];
    if f.sig().class().splitting_exists {
        order.splice(
            0..0,
            [SplitMembership::GammaPlus, SplitMembership::GammaMinus],
        );
    }
    order
        .into_iter()
        .find(|s| contains(*s, f).unwrap_or(false))
        .unwrap_or(SplitMembership::None)
}

/// `f = P+(f) + P-(f)` with `⋆P±(f) = ±P±(f)`.
pub fn split_reconstruct(f: &Form) -> Result<(Form, Form)> {
    require_splitting(f.sig())?;
    Ok((project_pm(Sign::Plus, f), project_pm(Sign::Minus, f)))
}

/// `P±` restricted to `Γ_L`.
pub fn iso_to_gamma_pm(sign: Sign, f: &Form) -> Result<Form> {
    require_truncation_regime(f.sig())?;
    if !contains(SplitMembership::GammaL, f)? {
        return Err(Error::NotInSubspace { space: "Γ_L" });
    }
    Ok(project_pm(sign, f))
}

/// `2 P_L` restricted to `Γ±`.
pub fn iso_to_gamma_l(sign: Sign, f: &Form) -> Result<Form> {
    require_truncation_regime(f.sig())?;
    if !in_gamma_pm(sign, f) {
        return Err(Error::NotInSubspace {
            space: match sign {
                Sign::Plus => "Γ+",
                Sign::Minus => "Γ-",
            },
        });
    }
    Ok(truncate(Truncation::Lower, f).scale(&rational::int(2)))
}

/// `f ⋄ v == v ⋄ f`.
pub fn centrality_check(f: &Form) -> bool {
    let v = volume(f.sig());
    graf_raw(f, &v) == graf_raw(&v, f)
}

/// A basis blade that does not commute with `v`, if any.
pub fn noncentral_witness(sig: Signature) -> Option<Blade> {
    Blade::basis(sig.dim())
        .into_iter()
        .find(|b| !centrality_check(&Form::blade(sig, *b)))
}

/// A blade pair `(a, b)` with `P±(a ⋄ b) != P±(a) ⋄ P±(b)`, if any.
pub fn endomorphism_counterexample(sign: Sign, sig: Signature) -> Option<(Blade, Blade)> {
    let basis = Blade::basis(sig.dim());
    for &a in &basis {
        let fa = Form::blade(sig, a);
        let pa = project_pm(sign, &fa);
        for &b in &basis {
            let fb = Form::blade(sig, b);
            let lhs = project_pm(sign, &graf_raw(&fa, &fb));
            let rhs = graf_raw(&pa, &project_pm(sign, &fb));
            if lhs != rhs {
                return Some((a, b));
            }
        }
    }
    None
}
