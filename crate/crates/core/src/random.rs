//! Seeded random forms with small rational coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::Blade;
use crate::form::Form;
use crate::rational::{self, Rational};
use crate::signature::Signature;

pub struct FormSampler {
    rng: ChaCha8Rng,
    max_terms: usize,
}

impl FormSampler {
    pub fn new(seed: u64, max_terms: usize) -> Self {
        FormSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_terms: max_terms.max(1),
        }
    }

    /// Seed derived from the signature so every suite run is reproducible.
    pub fn for_signature(sig: Signature, salt: u64, max_terms: usize) -> Self {
        let seed = (u64::from(sig.p()) << 40) ^ (u64::from(sig.q()) << 20) ^ salt;
        Self::new(seed, max_terms)
    }

    pub fn coefficient(&mut self) -> Rational {
        let mut num = self.rng.random_range(-9i64..=8);
        if num >= 0 {
            num += 1;
        }
        rational::ratio(num, self.rng.random_range(1i64..=4))
    }

    /// Up to `max_terms` random blades of any grade.
    pub fn form(&mut self, sig: Signature) -> Form {
        self.form_where(sig, |_| true)
    }

    /// Random form whose blades all satisfy `keep`.
    pub fn form_where(&mut self, sig: Signature, keep: impl Fn(Blade) -> bool) -> Form {
        let pool: Vec<Blade> = Blade::basis(sig.dim())
            .into_iter()
            .filter(|b| keep(*b))
            .collect();
        let count = self.rng.random_range(1..=self.max_terms);
        let mut f = Form::zero(sig);
        for _ in 0..count {
            let b = pool[self.rng.random_range(0..pool.len())];
            f.add_term(b, self.coefficient());
        }
        f
    }

    pub fn homogeneous(&mut self, sig: Signature, grade: u32) -> Form {
        self.form_where(sig, |b| b.grade() == grade)
    }

    /// A dense 1-form `Σ c_i e^i`.
    pub fn vector(&mut self, sig: Signature) -> Form {
        let mut f = Form::zero(sig);
        for i in 1..=sig.dim() {
            let c = self.coefficient();
            f.add_term(Blade::vector(i), c);
        }
        f
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}
