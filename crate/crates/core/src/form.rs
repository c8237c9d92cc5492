//! Forms: sparse rational combinations of basis blades over a fixed signature,
//! with the metric-free operations (wedge, contraction, grade projection and
//! the two involutions).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::blade::{reorder_sign, Blade};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::signature::Signature;

/// A form `Σ f_I e^I` with constant rational coefficients.
///
/// Zero coefficients are never stored and iteration follows the blade order
/// (grade, then lexicographic), so structural equality is algebraic equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    sig: Signature,
    terms: BTreeMap<Blade, Rational>,
}

impl Form {
    pub fn zero(sig: Signature) -> Self {
        Form {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, c: Rational) -> Self {
        Self::term(sig, Blade::ONE, c)
    }

    pub fn term(sig: Signature, blade: Blade, c: Rational) -> Self {
        let mut f = Self::zero(sig);
        f.add_term(blade, c);
        f
    }

    pub fn blade(sig: Signature, blade: Blade) -> Self {
        Self::term(sig, blade, Rational::one())
    }

    /// The 1-form `e^i`.
    pub fn vector(sig: Signature, i: u32) -> Result<Self> {
        sig.check_index(i)?;
        Ok(Self::blade(sig, Blade::vector(i)))
    }

    /// `e^{i1} ∧ ... ∧ e^{ik}` for indices in any order; repeats give zero.
    pub fn from_indices(sig: Signature, indices: &[u32]) -> Result<Self> {
        let mut bits = 0u32;
        let mut sign = 1;
        for &i in indices {
            sig.check_index(i)?;
            let bit = 1u32 << (i - 1);
            if bits & bit != 0 {
                return Ok(Self::zero(sig));
            }
            sign *= reorder_sign(bits, bit);
            bits |= bit;
        }
        Ok(Self::term(
            sig,
            Blade::from_bits(bits),
            rational::int(sign.into()),
        ))
    }

    /// Builds a form from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        let mut f = Self::zero(sig);
        let limit = sig.basis_len() as u64;
        for (b, c) in terms {
            if b.bits() as u64 >= limit {
                let index = 32 - b.bits().leading_zeros();
                return Err(Error::IndexOutOfRange {
                    index,
                    n: sig.dim(),
                });
            }
            f.add_term(b, c);
        }
        Ok(f)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Distinct grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    /// `Some(k)` if every term has grade `k` (zero counts as homogeneous of
    /// no particular grade and yields `None`).
    pub fn homogeneous_grade(&self) -> Option<u32> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Rebuilds the canonical representation from scratch.
    pub fn canonical(&self) -> Self {
        let mut f = Self::zero(self.sig);
        for (b, c) in self.terms() {
            f.add_term(b, c.clone());
        }
        f
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(blade) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn accumulate(&mut self, other: &Form, factor: &Rational) {
        for (b, c) in other.terms() {
            self.add_term(b, c * factor);
        }
    }

    pub fn same_sig(&self, other: &Form) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.sig);
        }
        Form {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    fn map_by_grade(&self, sign: impl Fn(u32) -> bool) -> Form {
        Form {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if sign(b.grade()) { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub(crate) fn filter_grades(&self, keep: impl Fn(u32) -> bool) -> Form {
        Form {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b.grade()))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Homogeneous components, ascending by grade.
    pub fn grade_components(&self) -> Vec<(u32, Form)> {
        self.grades()
            .into_iter()
            .map(|k| (k, self.filter_grades(|g| g == k)))
            .collect()
    }

    // --- metric-free operations --------------------------------------------

    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.same_sig(other)?;
        Ok(self.wedge_raw(other))
    }

    pub(crate) fn wedge_raw(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.sig);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.bits() & b.bits() != 0 {
                    continue;
                }
                let prod = x * y;
                let blade = Blade::from_bits(a.bits() | b.bits());
                if reorder_sign(a.bits(), b.bits()) < 0 {
                    out.add_term(blade, -prod);
                } else {
                    out.add_term(blade, prod);
                }
            }
        }
        out
    }

    /// Left contraction `e_i ⌟ f`.
    pub fn contract(&self, i: u32) -> Result<Form> {
        self.sig.check_index(i)?;
        Ok(self.contract_raw(i))
    }

    pub(crate) fn contract_raw(&self, i: u32) -> Form {
        let bit = 1u32 << (i - 1);
        let below = bit - 1;
        let mut out = Form::zero(self.sig);
        for (b, c) in &self.terms {
            if b.bits() & bit == 0 {
                continue;
            }
            let rest = Blade::from_bits(b.bits() & !bit);
            // sign (-1)^(number of indices before i)
            if (b.bits() & below).count_ones() % 2 == 1 {
                out.add_term(rest, -c);
            } else {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub fn grade_part(&self, k: u32) -> Result<Form> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                n: self.sig.dim(),
            });
        }
        Ok(self.filter_grades(|g| g == k))
    }

    /// Grade involution `#`: grade-k part times `(-1)^k`.
    pub fn involution(&self) -> Form {
        self.map_by_grade(|k| k % 2 == 1)
    }

    /// Reversion `~`: grade-k part times `(-1)^(k(k-1)/2)`.
    pub fn reversion(&self) -> Form {
        self.map_by_grade(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// An expression-language string that evaluates back to this form.
    pub fn to_expr(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let n = self.sig.dim();
        // lead with a positive term when there is one, the grammar has no unary minus
        let mut ordered: Vec<(&Blade, &Rational)> = self.terms.iter().collect();
        if let Some(pos) = ordered.iter().position(|(_, c)| !rational::is_negative(c)) {
            let lead = ordered.remove(pos);
            ordered.insert(0, lead);
        }
        let mut s = String::new();
        for (k, (b, c)) in ordered.into_iter().enumerate() {
            let neg = rational::is_negative(c);
            if k == 0 && neg {
                s.push_str("0 - ");
            } else if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = if neg { -c.clone() } else { c.clone() };
            let blade = b.render(n);
            match (mag.is_one(), *b == Blade::ONE) {
                (_, true) => s.push_str(&rational::render(&mag)),
                (true, false) => s.push_str(&blade),
                (false, false) => {
                    s.push_str(&rational::render(&mag));
                    s.push_str(" <> ");
                    s.push_str(&blade);
                }
            }
        }
        s
    }
}

/// Signed term list, e.g. `+1*e12 -1/2*e3`; `0` for the zero form.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let n = self.sig.dim();
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let r = rational::render(c);
            if rational::is_negative(c) {
                write!(f, "{r}*{}", b.render(n))?;
            } else {
                write!(f, "+{r}*{}", b.render(n))?;
            }
        }
        Ok(())
    }
}

impl Add for &Form {
    type Output = Form;

    /// Panics on mismatched signatures.
    fn add(self, rhs: &Form) -> Form {
        self.same_sig(rhs).expect("adding forms");
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl Sub for &Form {
    type Output = Form;

    fn sub(self, rhs: &Form) -> Form {
        self.same_sig(rhs).expect("subtracting forms");
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, -c);
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;

    fn neg(self) -> Form {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Form> for &Rational {
    type Output = Form;

    fn mul(self, rhs: &Form) -> Form {
        rhs.scale(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Form {
            type Output = Form;
            fn $m(self, rhs: Form) -> Form {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for Form {
    type Output = Form;

    fn neg(self) -> Form {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, idx: &[u32]) -> Form {
        Form::from_indices(s, idx).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let s = sig(3, 0);
        assert_eq!(e(s, &[1]).wedge(&e(s, &[2])).unwrap(), e(s, &[1, 2]));
        assert!(e(s, &[1]).wedge(&e(s, &[1])).unwrap().is_zero());
        assert_eq!(e(s, &[2]).wedge(&e(s, &[1])).unwrap(), -e(s, &[1, 2]));
    }

    #[test]
    fn wedge_signature_mismatch() {
        let a = e(sig(2, 0), &[1]);
        let b = e(sig(1, 1), &[2]);
        assert!(matches!(a.wedge(&b), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn contract_examples() {
        let s = sig(2, 0);
        let e12 = e(s, &[1, 2]);
        assert_eq!(e12.contract(1).unwrap(), e(s, &[2]));
        assert_eq!(e12.contract(2).unwrap(), -e(s, &[1]));
        assert!(e(sig(3, 0), &[1, 2]).contract(3).unwrap().is_zero());
        assert!(matches!(
            e12.contract(3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(e12.contract(0).is_err());
    }

    #[test]
    fn grade_part_examples() {
        let s = sig(3, 0);
        let f = &e(s, &[1]) + &e(s, &[1, 2]);
        assert_eq!(f.grade_part(1).unwrap(), e(s, &[1]));
        assert_eq!(Form::one(s).grade_part(0).unwrap(), Form::one(s));
        let g = &e(s, &[1]) + &e(s, &[1, 2]).scale(&int(3));
        assert_eq!(g.grade_part(2).unwrap(), e(s, &[1, 2]).scale(&int(3)));
        assert!(g.grade_part(4).is_err());
    }

    #[test]
    fn involution_examples() {
        let s = sig(3, 0);
        assert_eq!(e(s, &[1]).involution(), -e(s, &[1]));
        assert_eq!(e(s, &[1, 2]).involution(), e(s, &[1, 2]));
        let f = &Form::one(s) + &e(s, &[1, 2, 3]);
        assert_eq!(f.involution(), &Form::one(s) - &e(s, &[1, 2, 3]));
    }

    #[test]
    fn reversion_examples() {
        let s = sig(4, 0);
        assert_eq!(e(s, &[1, 2]).reversion(), -e(s, &[1, 2]));
        assert_eq!(e(s, &[1]).reversion(), e(s, &[1]));
        assert_eq!(e(s, &[1, 2, 3, 4]).reversion(), e(s, &[1, 2, 3, 4]));
    }

    #[test]
    fn from_indices_sorts_with_sign() {
        let s = sig(3, 0);
        assert_eq!(e(s, &[3, 1]), -e(s, &[1, 3]));
        assert_eq!(e(s, &[3, 1, 2]), e(s, &[1, 2, 3]));
        assert!(e(s, &[2, 2]).is_zero());
        assert!(Form::from_indices(s, &[4]).is_err());
    }

    #[test]
    fn display_and_expr() {
        let s = sig(3, 0);
        let f = &e(s, &[1, 2]) - &e(s, &[3]).scale(&ratio(1, 2));
        assert_eq!(f.to_string(), "-1/2*e3 +1*e12");
        assert_eq!(f.to_expr(), "e12 - 1/2 <> e3");
        assert_eq!(Form::zero(s).to_string(), "0");
        assert_eq!((-Form::one(s)).to_expr(), "0 - 1");
    }

    #[test]
    fn zero_coefficients_dropped() {
        let s = sig(2, 0);
        let f = &e(s, &[1]) - &e(s, &[1]);
        assert!(f.is_zero());
        let g =
            Form::from_terms(s, [(Blade::vector(1), int(0)), (Blade::vector(2), int(2))]).unwrap();
        assert_eq!(g.len(), 1);
        assert!(Form::from_terms(s, [(Blade::vector(3), int(1))]).is_err());
    }
}
