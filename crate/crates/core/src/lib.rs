//! Crystal bases of classical Lie algebras in three combinatorial models.
//!
//! Kashiwara–Nakashima tableaux, reverse tableaux and (for type `B`) Young
//! walls, with the maps between them and tools to check that the models are
//! isomorphic crystals.

pub mod crystal;
pub mod error;
pub mod fill;
pub mod graph;
pub mod kn;
pub mod letters;
pub mod lie;
pub mod reverse;
pub mod scalar;
pub mod signature;
pub mod tableau;
pub mod walls;
pub mod correspondence;

pub use error::{Error, Result};
pub use lie::{weyl_dim, Family, LieType, Weight};
pub use scalar::{Scalar, WeightOf, Q};
