//! Exact computations in affine Weyl groups and affine 0-Hecke algebras.

#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod cocenter;
pub mod conjugacy;
pub mod context;
pub mod error;
pub mod field;
pub mod hecke;
pub mod laurent;
pub mod lattice;
pub mod linalg;
pub mod nodeset;
pub mod parse;
pub mod representations;
pub mod rootdatum;
pub mod verify;

pub use error::{Error, Result};
