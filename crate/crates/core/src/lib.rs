//! Cohomotopy sets `[X, S^n]` of smooth closed oriented 4-manifolds,
//! computed from homological data.
//!
//! The crate is `no_std` (it needs `alloc`). All arithmetic is exact.
//!
//! * [`abelian`]: Smith Normal Form, finitely generated abelian groups,
//!   presentations, homomorphisms and subgroups.
//! * [`extension`]: central `Z_2`-extensions classified by functionals on
//!   the 2-torsion, with a brute-force oracle.
//! * [`manifold`]: the homological input model and a catalog of examples.
//! * [`classify`]: parity and type, the framed link group `π³(X)`, and the
//!   torsor fibers of `π²(X)` over classes of self-intersection zero.
#![no_std]

extern crate alloc;

pub mod abelian;
pub mod classify;
mod error;
pub mod extension;
pub mod int;
pub mod manifold;
pub mod matrix;

pub use error::{Error, Result};
pub use int::Int;
pub use matrix::IntMatrix;
