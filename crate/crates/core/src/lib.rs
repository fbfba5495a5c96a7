//! Finite involutive quantales, the `D*(Q)` quantaloid, categories enriched
//! in it, presheaf constructions and the powerset monad on symmetric
//! enriched categories (quantale-valued sets).
//!
//! Everything is finite and exact: quantale elements are indices into
//! explicit tables, and the Lawvere quantale uses exact rationals. Law
//! checks return a [`report::LawReport`] with counterexample witnesses.

// Matrix code reads best with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod demo;
pub mod error;
pub mod monad;
pub mod monadicity;
pub mod presheaf;
pub mod qcat;
pub mod quantale;
pub mod quantaloid;
pub mod report;

pub use error::{Error, Result};
pub use quantale::{Elem, FiniteQuantale, Quantale};
pub use quantaloid::{build_dstar, validate_quantaloid, Obj, Quantaloid};
pub use report::{LawCheck, LawReport, Method, Status, Witness};
