//! Exact computations with representations of bound quivers.
//!
//! The crate is organised bottom-up: [`field`] and [`linalg`] provide exact
//! arithmetic, [`algebra`] turns a quiver with relations into a based
//! algebra, [`modrep`] handles right modules and their morphisms, and the
//! remaining modules build homological algebra, relative exact structures,
//! cotilting checks and endomorphism algebras on top.

pub mod algebra;
pub mod endfunctor;
pub mod error;
pub mod field;
pub mod homological;
pub mod linalg;
pub mod modrep;
pub mod relexact;
pub mod standard;
pub mod tilting;

pub use algebra::{build_based_algebra, Arrow, BasedAlgebra, PathWord, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational, F1009, F2, F3};
pub use linalg::Mat;
pub use modrep::{ModuleMap, ModuleRep, ShortExactSeq};

/// Matrices over the rationals.
pub type QMat = Mat<Rational>;
/// Matrices over the default prime field.
pub type PMat = Mat<F1009>;
