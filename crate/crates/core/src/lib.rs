//! Exact-arithmetic kernel for the Graf–Clifford algebra of differential
//! forms over an orthonormal coframe of signature `(p, q)`.
//!
//! Forms carry their [`Signature`] and rational coefficients. The Graf product
//! [`graf`] is built from the contracted wedge products [`contracted_wedge`];
//! [`oracle`] holds an independent bit-level Clifford product used to check it.

pub mod blade;
pub mod checks;
pub mod error;
pub mod expr;
pub mod form;
pub mod oracle;
pub mod products;
pub mod random;
pub mod rational;
pub mod signature;
pub mod structure;
pub mod table;

pub use blade::Blade;
pub use error::{Error, Result};
pub use form::Form;
pub use products::{
    contracted_graf, contracted_wedge, graf, triangle, truncated_graf, ProductKind,
};
pub use rational::Rational;
pub use signature::{Mod8Class, Signature};
pub use structure::{Sign, SplitMembership, Truncation};
