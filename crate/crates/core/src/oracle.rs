//! Reference implementations used as ground truth for the kernel.
//!
//! These work directly on blade bitmasks: the Clifford product is a symmetric
//! difference with a transposition-parity sign and a metric factor, and the
//! contracted wedge is the unfolded contraction sum over shared index subsets.
//! None of it goes through [`crate::products`].

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::form::Form;
use crate::products;
use crate::rational::{self, Rational};
use crate::signature::Signature;

/// Largest dimension `full_sweep` accepts.
pub const SWEEP_MAX_DIM: u32 = 10;

/// Number of adjacent swaps needed to sort the concatenation `a b`.
fn swap_count(a: u32, b: u32) -> u32 {
    let mut shifted = a >> 1;
    let mut count = 0;
    while shifted != 0 {
        count += (shifted & b).count_ones();
        shifted >>= 1;
    }
    count
}

fn metric_product(sig: Signature, bits: u32) -> i64 {
    // directions p+1..n square to -1
    let negative_mask = !((1u32 << sig.p()) - 1);
    if (bits & negative_mask).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Clifford product of two orthonormal basis blades: `(blade, ±1)`.
pub fn oracle_clifford_blades(a: Blade, b: Blade, sig: Signature) -> (Blade, i64) {
    let (x, y) = (a.bits(), b.bits());
    let mut sign = if swap_count(x, y).is_multiple_of(2) { 1 } else { -1 };
    sign *= metric_product(sig, x & y);
    (Blade::from_bits(x ^ y), sign)
}

/// Clifford product extended bilinearly to forms.
pub fn oracle_clifford(a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    let sig = a.sig();
    let mut acc = std::collections::BTreeMap::<Blade, Rational>::new();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            let (blade, sign) = oracle_clifford_blades(x, y, sig);
            *acc.entry(blade).or_insert_with(Rational::zero) += cx * cy * rational::int(sign);
        }
    }
    Form::from_terms(sig, acc)
}

/// Sign of contracting the indices of `subset` out of `blade` one by one in
/// increasing order.
fn removal_sign(blade: u32, subset: u32) -> i64 {
    let mut current = blade;
    let mut parity = 0;
    let mut rest = subset;
    while rest != 0 {
        let low = rest & rest.wrapping_neg();
        parity += (current & (low - 1)).count_ones();
        current &= !low;
        rest &= !low;
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

fn factorial(l: u32) -> Rational {
    (1..=l as i64).fold(Rational::one(), |acc, k| acc * rational::int(k))
}

/// `a ∧_l b` as the fully unfolded sum over ordered `l`-tuples of metric
/// contractions. Tuples with repeats vanish and the `l!` orderings of a
/// shared index set contribute identically, so each set is visited once.
pub fn oracle_contracted_wedge(l: u32, a: &Form, b: &Form) -> Result<Form> {
    a.same_sig(b)?;
    let sig = a.sig();
    let weight = factorial(l);
    let mut acc = std::collections::BTreeMap::<Blade, Rational>::new();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            let common = x.bits() & y.bits();
            if common.count_ones() < l {
                continue;
            }
            // every subset of `common` with exactly l elements
            let mut subset = common;
            loop {
                if subset.count_ones() == l {
                    let left = x.bits() & !subset;
                    let right = y.bits() & !subset;
                    if left & right == 0 {
                        let mut sign = removal_sign(x.bits(), subset)
                            * removal_sign(y.bits(), subset)
                            * metric_product(sig, subset);
                        if swap_count(left, right) % 2 == 1 {
                            sign = -sign;
                        }
                        *acc.entry(Blade::from_bits(left | right))
                            .or_insert_with(Rational::zero) +=
                            cx * cy * &weight * rational::int(sign);
                    }
                }
                if subset == 0 {
                    break;
                }
                subset = (subset - 1) & common;
            }
        }
    }
    Form::from_terms(sig, acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub left: String,
    pub right: String,
    pub kernel: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub signature: Signature,
    pub pairs_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
}

impl OracleReport {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the Graf product with the reference Clifford product on every
/// ordered pair of basis blades.
pub fn full_sweep(sig: Signature) -> Result<OracleReport> {
    let n = sig.dim();
    if n > SWEEP_MAX_DIM {
        return Err(Error::Budget {
            n,
            max: SWEEP_MAX_DIM,
        });
    }
    let basis = Blade::basis(n);
    let mismatches: Vec<Mismatch> = basis
        .par_iter()
        .flat_map_iter(|&a| {
            let fa = Form::blade(sig, a);
            let basis = &basis;
            basis.iter().filter_map(move |&b| {
                let fb = Form::blade(sig, b);
                let kernel = products::graf(&fa, &fb).ok()?;
                let (blade, sign) = oracle_clifford_blades(a, b, sig);
                let oracle = Form::term(sig, blade, rational::int(sign));
                (kernel != oracle).then(|| Mismatch {
                    left: a.render(n),
                    right: b.render(n),
                    kernel: kernel.to_string(),
                    oracle: oracle.to_string(),
                })
            })
        })
        .collect();
    let pairs = (basis.len() * basis.len()) as u64;
    Ok(OracleReport {
        signature: sig,
        pairs_checked: pairs,
        passed: mismatches.is_empty(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, idx: &[u32]) -> Form {
        Form::from_indices(s, idx).unwrap()
    }

    #[test]
    fn clifford_examples() {
        let s = sig(1, 0);
        assert_eq!(
            oracle_clifford(&e(s, &[1]), &e(s, &[1])).unwrap(),
            Form::one(s)
        );

        let s = sig(3, 0);
        assert_eq!(
            oracle_clifford(&e(s, &[1, 2]), &e(s, &[2, 3])).unwrap(),
            e(s, &[1, 3])
        );
        for b in Blade::basis(3) {
            let f = Form::blade(s, b);
            assert_eq!(oracle_clifford(&Form::one(s), &f).unwrap(), f);
        }
    }

    #[test]
    fn clifford_generator_relations() {
        let s = sig(2, 2);
        for i in 1..=4 {
            let ei = e(s, &[i]);
            let g = rational::int(s.metric(i).into());
            assert_eq!(oracle_clifford(&ei, &ei).unwrap(), Form::scalar(s, g));
            for j in (i + 1)..=4 {
                let ej = e(s, &[j]);
                assert_eq!(
                    oracle_clifford(&ei, &ej).unwrap(),
                    -oracle_clifford(&ej, &ei).unwrap()
                );
            }
        }
    }

    #[test]
    fn contracted_wedge_examples() {
        let s = sig(2, 1);
        let a = &e(s, &[1]) + &e(s, &[2, 3]);
        let b = e(s, &[3]);
        assert_eq!(
            oracle_contracted_wedge(0, &a, &b).unwrap(),
            a.wedge(&b).unwrap()
        );

        let s = sig(0, 1);
        assert_eq!(
            oracle_contracted_wedge(1, &e(s, &[1]), &e(s, &[1])).unwrap(),
            -Form::one(s)
        );

        let s = sig(1, 1);
        let e12 = e(s, &[1, 2]);
        assert_eq!(
            oracle_contracted_wedge(2, &e12, &e12).unwrap(),
            Form::scalar(s, rational::int(-2))
        );
    }

    #[test]
    fn removal_signs() {
        // e_2 ⌟ e12 = -e1
        assert_eq!(removal_sign(0b011, 0b010), -1);
        // e_1 then e_3 out of e123: e_1 ⌟ e123 = e23, e_3 ⌟ e23 = -e2
        assert_eq!(removal_sign(0b111, 0b101), -1);
    }

    #[test]
    fn sweep_counts() {
        for ((p, q), pairs) in [((3, 0), 64), ((1, 1), 16), ((2, 2), 256)] {
            let report = full_sweep(sig(p, q)).unwrap();
            assert!(report.passes(), "{:?}", report.mismatches);
            assert_eq!(report.pairs_checked, pairs);
        }
    }

    #[test]
    fn sweep_budget() {
        assert!(matches!(full_sweep(sig(11, 0)), Err(Error::Budget { .. })));
    }
}
