//! Finite crystallographic Coxeter systems with exact root-lattice arithmetic.

mod cartan;
mod subset;
mod system;

pub use cartan::{parse_descriptor, Family, TypeFactor};
pub use subset::GeneratorSubset;
pub use system::{CoxeterSystem, ElementDisplay, Root, WeylElement, DEFAULT_MAX_ORDER};
