//! Exact-arithmetic invariants of finite-dimensional algebras given by
//! quivers with relations: global dimension, dominant dimension,
//! ν-dominant dimension, the strongly projective-injective classification
//! and the associated self-injective centraliser subalgebra, together with
//! a partition/abacus engine for the closed-form dimension formulas of
//! q-Schur algebras and their blocks.
//!
//! All linear algebra is exact, over ℚ (arbitrary-precision rationals) or
//! over a prime field 𝔽_p. Nothing here rounds.
//!
//! The main layers, bottom up:
//! - [`field`] / [`matrix`]: exact scalars and dense matrices (rank, kernel,
//!   solve, minimal polynomials).
//! - [`algebra`]: split basic algebras from bound quiver presentations;
//!   opposites and centraliser subalgebras eAe.
//! - [`module`] / [`decompose`] / [`resolution`]: finite-dimensional modules,
//!   hom spaces, Krull–Schmidt decomposition, minimal projective/injective
//!   resolutions, Ext dimensions, projective and global dimension.
//! - [`dominant`]: the Nakayama map on vertices, dominant and ν-dominant
//!   dimension, Müller's centraliser characterisation, class predicates
//!   (self-injective, symmetric, Morita, almost self-injective,
//!   gendo-symmetric).
//! - [`endo`]: endomorphism algebras of module direct sums as new
//!   [`algebra::BasicAlgebra`] values.
//! - [`schur`]: partitions, ℓ-cores and weights via the abacus, d_{ℓ,p},
//!   and the dimension formulas for S_q(n,r) and its blocks.
//! - [`parse`] / [`report`]: the algebra file format and the invariant
//!   report produced by the CLI.

pub mod algebra;
pub mod decompose;
pub mod dominant;
pub mod endo;
pub mod error;
pub mod field;
pub mod matrix;
pub mod module;
pub mod parse;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod schur;

pub use algebra::{BasicAlgebra, Presentation, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use module::{Module, ModuleMap, Side};
pub use resolution::{HomDim, InfiniteReason, Resolution, ResolutionKind, ResolutionStatus};
