//! A workbench for finite additively idempotent semirings: operation-table
//! algebra, matrix semirings with lazy or materialized carriers, terms and
//! identities over the free algebra, satisfaction checking, embeddings, and
//! replayable equational derivations.
//!
//! Start with [`catalog::catalog`] for the named semirings,
//! [`matrix::matrix_semiring`] to build `M_n(S)`, and [`satisfy::satisfies`]
//! to decide identities. The `examples/` directory walks through every major
//! capability.

pub mod catalog;
pub mod cli;
pub mod derive;
pub mod error;
pub mod matrix;
pub mod satisfy;
pub mod semiring;
pub mod tables;
pub mod term;

pub use error::{Error, Result};
