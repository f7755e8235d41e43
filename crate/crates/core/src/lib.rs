//! Derivations of finite group algebras over finite fields.
//!
//! A derivation of KG is fixed by its values on the generators of a
//! presentation `G = <S | T>`; a map `f: S -> KG` extends to one exactly when
//! its word extension `f*` vanishes on every relator. This crate builds that
//! extension, solves for the full derivation space as a linear system,
//! catalogs closed-form bases for abelian and dihedral groups, and turns a
//! derivation's image into a linear code.

pub mod codes;
pub mod derfile;
pub mod derivations;
pub mod error;
pub mod gf;
pub mod groupring;
pub mod groups;
pub mod linalg;
pub mod structure;
mod text;

pub use codes::{EnumOptions, LinearCode, Permutation};
pub use derivations::{Derivation, GeneratorImageMap, SkewElement};
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldSpec};
pub use groupring::{GroupAlgebra, GroupRingElement};
pub use groups::{Family, FiniteGroup, FreeWord, Letter, Presentation};
pub use linalg::MatrixGF;
pub use structure::BasisCatalog;
