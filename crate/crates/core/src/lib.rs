//! Exact computation of graded prime and primary spectra of finitely generated
//! graded modules over `Z` or `Z/n` (ring concentrated in the identity degree),
//! together with the Zariski-type topologies on them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod maps;
pub mod model;
pub mod module;
pub mod quotient;
pub mod ring;
pub mod spectra;
pub mod submodule;
pub mod topology;

pub use enumerate::{enumerate_graded_submodules, DEFAULT_ENUM_BOUND};
pub use error::{Error, Result};
pub use group::{Degree, GradingGroup};
pub use model::Model;
pub use module::{Factor, GradedModule, ModuleElement};
pub use quotient::{quotient_module, FactorPermutation, GradedEpimorphism, QuotientMap};
pub use ring::{BaseRing, Ideal};
pub use spectra::{
    graded_radical_submodule, in_primary_spectrum, is_cancellation, is_graded_primary, is_graded_prime,
    is_multiplication, ModuleCatalog, PointKind, RadicalResult, Trilean,
};
pub use submodule::GradedSubmodule;
