//! Finite models of categories enriched over strict monoidal bases.
//!
//! The crate builds explicit tables for finite categories, strict monoidal
//! structures, enriched categories and left-tensored categories, enumerates
//! enriched presheaf categories, checks the enriched Yoneda lemma cell by
//! cell, and computes weighted colimits over the skeletal category of finite
//! sets together with the `Ext`/`Res` pair between diagrams and
//! colimit-preserving functors out of presheaves.
//!
//! Everything here is allocation-only (`alloc`), free of IO, and deterministic:
//! identical inputs produce identical tables and enumeration orders.

#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop, clippy::too_many_arguments, clippy::type_complexity)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod category;
pub mod enriched;
pub mod fincat;
pub mod finset;
pub mod instances;
pub mod mfunctor;
pub mod monoidal;
pub mod presheaf;
pub mod tensored;
pub mod wcolim;

pub use category::{Category, Cocomplete, Enriched, Finite, LeftModule, Monoidal};
pub use enriched::{EnrichedError, MCat, SetEnriched};
pub use fincat::{CatError, FinCat, FinFunctor, RawCat};
pub use finset::{FinSets, SetError, SkMap, SkSet};
pub use mfunctor::{MFunET, MFunError, MFunMor, MFunTT};
pub use monoidal::{MonStr, MonoidalError};
pub use presheaf::{Presheaf, PresheafCat, PresheafError, PresheafMor, Presheaves};
pub use tensored::{LTensored, ModuleError};
pub use wcolim::{ColimError, Ext, WCocone, WColimit};

/// Resource caps applied by every exhaustive search and colimit construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_objects: usize,
    pub max_morphisms: usize,
    /// Raw candidate count for functor searches, and node budget for backtracking enumerations.
    pub max_candidates: u64,
    /// Largest cardinality any finite-set construction may produce.
    pub max_card: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 64,
            max_morphisms: 4096,
            max_candidates: 10_000_000,
            max_card: 1_000_000,
        }
    }
}

/// Any error raised by the validators and constructions of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
    #[error(transparent)]
    Enriched(#[from] EnrichedError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    MFun(#[from] MFunError),
    #[error(transparent)]
    Presheaf(#[from] PresheafError),
    #[error(transparent)]
    Colim(#[from] ColimError),
}

impl Error {
    /// True for cap violations, which callers report separately from law violations.
    pub fn is_size_bound(&self) -> bool {
        matches!(
            self,
            Error::Cat(CatError::SizeBound { .. })
                | Error::Set(SetError::Overflow { .. })
                | Error::MFun(MFunError::SizeBound { .. })
                | Error::Presheaf(PresheafError::SizeBound { .. })
                | Error::Colim(ColimError::SizeBound { .. })
        )
    }
}
