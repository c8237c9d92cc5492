//! Metric signatures of an orthonormal coframe and their mod-8 class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the dimension; every dense table is `2^n x 2^n`.
pub const MAX_DIM: u32 = 16;

/// Signature `(p, q)`: coframe directions `1..=p` square to `+1`, the
/// remaining `p+1..=n` square to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidSignature { p, q, max: MAX_DIM });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn dim(self) -> u32 {
        self.p + self.q
    }

    /// Diagonal metric entry `g^{ii}` for a 1-based coframe index.
    pub fn metric(self, i: u32) -> i32 {
        debug_assert!(i >= 1 && i <= self.dim());
        if i <= self.p {
            1
        } else {
            -1
        }
    }

    pub fn check_index(self, i: u32) -> Result<()> {
        if i == 0 || i > self.dim() {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.dim(),
            })
        } else {
            Ok(())
        }
    }

    /// Number of basis blades, `2^n`.
    pub fn basis_len(self) -> usize {
        1usize << self.dim()
    }

    /// Highest grade kept by the lower truncation.
    pub fn half(self) -> u32 {
        self.dim() / 2
    }

    pub fn class(self) -> Mod8Class {
        Mod8Class::of(self)
    }

    /// All signatures with `1 <= p+q <= max_n`, ordered by `n` then `p`.
    pub fn all_up_to(max_n: u32) -> Vec<Signature> {
        (1..=max_n.min(MAX_DIM))
            .flat_map(|n| (0..=n).map(move |p| Signature { p, q: n - p }))
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Classification of a signature by `(p - q) mod 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mod8Class {
    /// `(p - q) mod 8`, in `0..8`.
    pub s: u32,
    /// Sign of `v ⋄ v`.
    pub v_square_sign: i32,
    /// Whether the real splitting into `Γ+ ⊕ Γ-` exists.
    pub splitting_exists: bool,
    /// Whether the volume element is central (odd dimension).
    pub v_central: bool,
}

impl Mod8Class {
    pub fn of(sig: Signature) -> Self {
        let s = (sig.p as i64 - sig.q as i64).rem_euclid(8) as u32;
        let plus = matches!(s, 0 | 1 | 4 | 5);
        Mod8Class {
            s,
            v_square_sign: if plus { 1 } else { -1 },
            splitting_exists: plus,
            v_central: sig.dim() % 2 == 1,
        }
    }

    /// The sign `(-1)^(floor(n/2) + q)`, computed independently of `s`.
    pub fn closed_form_sign(sig: Signature) -> i32 {
        if (sig.half() + sig.q).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True when `n` is odd and the splitting exists: the regime where the
    /// projectors are algebra endomorphisms and the truncated algebra is unital.
    pub fn truncation_regime(&self) -> bool {
        self.v_central && self.splitting_exists
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(Signature::new(0, 0).is_err());
        assert!(Signature::new(17, 0).is_err());
        assert!(Signature::new(8, 8).is_ok());
    }

    #[test]
    fn metric_layout() {
        let sig = Signature::new(2, 3).unwrap();
        let g: Vec<i32> = (1..=5).map(|i| sig.metric(i)).collect();
        assert_eq!(g, vec![1, 1, -1, -1, -1]);
        assert!(sig.check_index(0).is_err());
        assert!(sig.check_index(6).is_err());
    }

    #[test]
    fn class_characterizations_agree() {
        for p in 0..=8 {
            for q in 0..=8 {
                let Ok(sig) = Signature::new(p, q) else {
                    continue;
                };
                let c = sig.class();
                assert_eq!(c.v_square_sign, Mod8Class::closed_form_sign(sig), "{sig}");
            }
        }
    }

    #[test]
    fn signature_count() {
        // (n+1) signatures per dimension n
        assert_eq!(Signature::all_up_to(6).len(), 27);
    }
}
