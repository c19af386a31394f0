//! Exact computational algebra for finite-dimensional Hopf algebras given by
//! structure constants.
//!
//! The crate computes the largest commutative quotient `H_ab`, the free
//! commutative Hopf algebra `S(t_H)_Θ` with its `H_ab`-coaction, explicit
//! Laurent/polynomial presentations of the generic base algebra of pointed
//! Hopf algebras, the invariant-theory side for the regular representation of
//! a finite group, and the universal comodule-algebra map `μ` from the tensor
//! algebra. Every computation is exact: scalars live in cyclotomic fields
//! `ℚ(ζ_N)` with arbitrary-precision rational coordinates.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod freehopf;
pub mod genbase;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod noether;
pub mod pitheory;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{CycScalar, Rational};
