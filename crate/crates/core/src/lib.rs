//! Skew constacyclic codes over finite fields.
//!
//! The crate covers four layers, each usable on its own:
//!
//! - [`field`]: GF(p^r) arithmetic, discrete logarithms, and the Frobenius
//!   powers `sigma(a) = a^(p^s)` with their norms `N_i`.
//! - [`skew`]: the skew polynomial ring `F_q[x, sigma]` with twisted
//!   multiplication, right division and right evaluation.
//! - [`equivalence`]: the `(n, sigma)`-equivalence of shift constants, its
//!   class count `gcd([n]_s, q - 1)`, witnesses and canonical representatives.
//! - [`code`]: codes generated by right divisors of `x^n - lambda`, their
//!   generator matrices, distances, and the isometries between equivalent
//!   families.
//!
//! ```
//! use std::sync::Arc;
//! use skewcode::{Automorphism, EquivalenceContext, FiniteField};
//!
//! let f8 = Arc::new(FiniteField::new(2, 3, None).unwrap());
//! let theta = Arc::new(Automorphism::frobenius(f8, 1).unwrap());
//! assert_eq!(EquivalenceContext::new(&theta, 3).unwrap().class_count(), 7);
//! assert_eq!(EquivalenceContext::new(&theta, 4).unwrap().class_count(), 1);
//! ```

pub mod cli;
pub mod code;
pub mod equivalence;
pub mod error;
pub mod field;
mod linalg;
pub mod skew;

pub use code::{
    apply_isometry, check_isometry, enumerate_codes, enumerate_right_divisors, CodeContext,
    Codeword, EnumerationBudget, Shift, SkewConstacyclicCode,
};
pub use equivalence::{binary_class_count, EquivalenceContext, EquivalenceReport};
pub use error::{Error, Result};
pub use field::{Automorphism, Elem, FiniteField};
pub use linalg::RowSpace;
pub use skew::SkewPolynomial;
