//! Exact symbolic computation around the Hessian determinant of homogeneous
//! forms.
//!
//! The crate is built on a single universal value type, [`MultiPoly`]: a
//! sparse multivariate polynomial with exact coefficients, either arbitrary
//! precision rationals or elements of a cyclotomic field Q(zeta_d). On top of
//! it sit Hessian matrices and their exact determinants, the differential of
//! the Hessian map as an exact linear map on coefficient space, binary-form
//! calculus (resultants, singularity tests, the coefficient-forcing
//! classification of singular forms with central-monomial Hessians), explicit
//! counterexample families to the "monomial Hessian implies sum of powers"
//! question, generalized permutation groups G(d,e,n) acting through roots of
//! unity, Jacobian rings with exact smoothness tests, and a desk-scale
//! equivalence pipeline for the Fermat polynomial.
//!
//! Everything is exact: there is no floating point anywhere, and all
//! comparisons are decidable equalities in Q or Q(zeta_d). The crate is
//! `no_std` (with `alloc`); IO, file formats and the command line live in the
//! companion `hessmap-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod binary;
pub mod cyclotomic;
pub mod differential;
pub mod error;
pub mod families;
pub mod groups;
pub mod hessian;
pub mod jacobian;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod pipeline;
pub mod poly;
pub mod rational;
pub mod rng;
pub mod scalar;
pub mod text;
pub(crate) mod upoly;
pub mod verify;

pub use binary::{BinaryForm, SingularClassification, SingularVerdict};
pub use cyclotomic::CycNumber;
pub use differential::{KernelReport, LinearMapMatrix};
pub use error::Error;
pub use families::{CounterexampleRecord, CounterexampleSpec};
pub use groups::{GenPermElement, GroupSpec};
pub use hessian::MonomialHessianReport;
pub use jacobian::{MonomialIdeal, SmoothnessReport};
pub use matrix::{PolyMatrix, ScalarMatrix};
pub use monomial::Monomial;
pub use pipeline::{ExplorationHit, KayalResult, KayalStage, KayalStatus};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use scalar::{Scalar, ScalarKind};
