//! Exact Cayley-Dickson algebras `A_n` built by the doubling product, with
//! the Hopf construction map, zero-divisor search, the Stiefel-type frame
//! sets inside `A_n x A_n`, the circle, torus and 3-sphere actions on them,
//! and algebra monomorphisms out of the quaternions and octonions.
//!
//! All arithmetic is over exact rationals; every identity checked by the
//! [`suites`] is an equality with zero tolerance. The only floating-point
//! code is the numeric zero-divisor finder in [`hopf_zero::numeric`].

pub mod error;
pub mod scalar;
pub mod element;
pub mod table;
pub mod linalg;
pub mod sample;
pub mod report;
pub mod frames;
pub mod hopf_zero;
pub mod actions;
pub mod mono;
pub mod suites;
pub mod cli;

pub use element::{associator, conj, hat, inner, mul, tilde, trace, Element};
pub use error::{Error, Result};
pub use frames::FramePair;
pub use report::Report;
pub use scalar::Scalar;
pub use table::{build_table, mul_via_table, BasisTable};
