//! Computational algebra for 3-dimensional Bol algebras, Lie triple systems,
//! and their enveloping Lie algebras, together with numeric validation of the
//! local analytic Bol loop composition laws they generate.
//!
//! The crate is organized around exactness: every axiom check, embedding,
//! classification, and catalog entry lives over the rationals, while the
//! `loops` module evaluates composition laws in `f64` and checks loop
//! identities statistically at configurable tolerances.
//!
//! Modules:
//! - [`structures`]: tensors, algebra types, identity verifiers, derived
//!   series, invariants.
//! - [`envelope`]: enveloping Lie algebras of Lie triple systems and Bol
//!   algebras, canonical quotients, radicals.
//! - [`classify`]: isomorphism types of low-dimensional Lie triple systems
//!   and Bol algebras, isocline algebras, isotopy witnesses.
//! - [`loops`]: analytic loop composition laws (closed-form and
//!   BCH-generated), loop identity checks, jet extraction.
//! - [`catalog`]: every classified object shipped as data with provenance.

pub mod catalog;
pub mod classify;
pub mod envelope;
pub mod linalg;
pub mod loops;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod structures;

pub use scalar::Scalar;
