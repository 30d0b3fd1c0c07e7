//! Twisted finite Coxeter groups and a certificate-producing reduction of
//! words over simple reflections to minimal length elements of
//! `F`-conjugacy classes.
//!
//! The crate is organised bottom-up:
//!
//! - [`coxeter`]: finite crystallographic systems, exact element arithmetic,
//!   lengths, reduced words, Bruhat order, coset representatives;
//! - [`twist`]: diagram automorphisms `F` and the registry of twisted types;
//! - [`word`] and [`braid`]: the free monoid `S*`, the positive braid monoid
//!   and its greedy normal form, braid-move paths;
//! - [`fconj`]: `F`-conjugacy classes, cyclic shifts, minimal length elements;
//! - [`invariants`]: `F`-support, irreducibility, component counts,
//!   dimension, strata and smoothness certificates of tuples;
//! - [`reduction`]: the reduction engine and its independent trace verifier;
//! - [`cli`]: the `cxkit` command-line front end and JSON reports.

pub mod braid;
pub mod cli;
pub mod coxeter;
mod error;
pub mod fconj;
pub mod invariants;
pub mod poly;
pub mod reduction;
pub mod twist;
pub mod word;

pub use coxeter::{CoxeterSystem, GeneratorSubset, WeylElement};
pub use error::{Error, Result};
pub use poly::QPolynomial;
pub use twist::Twist;
pub use word::Word;
