//! Exact computation of the derivation algebra of the group algebra
//! `F[V_8n]` over `Q` and `F_p` (odd `p`), with inner/outer classification.

pub mod algebra;
pub mod anticentralizer;
pub mod derivation;
pub mod error;
pub mod field;
pub mod group;
pub mod json;
pub mod linalg;
pub mod verify;

pub use algebra::{AlgebraElement, SubgroupSpec};
pub use anticentralizer::AntiCentralizerTarget;
pub use derivation::{
    Classification, DerivationPair, DerivationSpace, FreeWord, GeneratorImages, Letter,
};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use group::{ConjugacyClass, GroupElement, GroupParams};
pub use linalg::{Matrix, Subspace};
