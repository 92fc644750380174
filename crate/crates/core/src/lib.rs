//! Exact computation of Koszul (co)homology, Ext groups, Koszul grade and the
//! small finitistic dimension of commutative rings over prime fields.
//!
//! Two backends share one [`ring::CommRing`] interface:
//!
//! * [`finalg::FiniteAlgebra`]: finite-dimensional commutative `F_p`-algebras
//!   given by structure constants. Everything here is decided by exact linear
//!   algebra, and whole ideal lattices can be swept.
//! * [`polyalg::PolyQuotient`]: `F_p[x_1..x_n]` modulo an optional relation
//!   ideal, driven by Groebner bases of ideals and submodules.
//!
//! On top of these sit the Koszul engine ([`koszul`]), free resolutions and
//! Ext ([`homology`]), and the ring classifiers ([`classify`]): GV-ideals,
//! DW-rings, strong w-modules, Pruefer conditions and self-injective
//! dimension. The [`cli`] module backs the `fpdim` binary and its JSON
//! formats.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exactla;
pub mod finalg;
pub mod homology;
pub mod koszul;
pub mod polyalg;
pub mod ring;

pub use error::{Error, Result};
