//! Irreducible sets, the irreducibly-derived (SI) topology, I-closure and the
//! strong completion of finite T₀ spaces, plus decision procedures for a small
//! catalog of countably infinite spaces.
//!
//! The crate is `no_std` and needs only `alloc`. Parsing, serialization and
//! the command-line front end live in the `sctop` crate.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod completion;
pub mod error;
pub mod homeo;
pub mod maps;
pub mod poset;
pub mod space;
pub mod subset;
pub mod verify;

pub use completion::{strong_completion, CompletionResult, GammaSi};
pub use error::{Error, Result};
pub use maps::{ContinuityReport, SpaceMap, Witness};
pub use poset::FinPoset;
pub use space::{FinSpace, IrrAnalysis, IrrMethod, DEFAULT_CAP};
pub use subset::{Subset, SubsetFamily};
