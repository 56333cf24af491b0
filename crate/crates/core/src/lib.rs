//! Relative monads, relative distributive laws and the Beck correspondences
//! over categories of described sets and finitely presented categories.
//!
//! Everything is checked rather than assumed: each structure comes with a
//! law checker returning a [`LawReport`], and each conversion can be
//! re-verified on its output.

pub mod algebras;
pub mod cat;
pub mod cells;
pub mod distributive;
pub mod error;
pub mod fixtures;
pub mod instances;
pub mod kleisli;
pub mod monad;
pub mod mutants;
pub mod operators;
pub mod relmonad;
pub mod report;
pub mod semiring;
pub mod sets;
pub mod suite;
pub mod tabulate;
pub mod value;

pub use error::{Error, Result};
pub use report::{LawReport, Verdict, Witness};
pub use semiring::Semiring;
pub use sets::{Bounds, SetDesc};
pub use value::Value;
