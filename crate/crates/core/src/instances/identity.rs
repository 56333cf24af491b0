//! Identity baselines: the identity relative monad on finite sets and the
//! identity law over the identity pair.

use std::sync::Arc;

use crate::cat::{CatHandle, SetCategory, Universe};
use crate::distributive::RelDistLaw;
use crate::error::Result;
use crate::relmonad::RelativeMonad;
use crate::sets::Bounds;

/// Finite sets on numerals `0..=n`.
pub fn finsets(n: usize, bounds: Bounds) -> CatHandle {
    Arc::new(SetCategory::numerals(Universe::Finite, n, bounds).with_label(format!("FinSet<={n}")))
}

pub fn identity_relmonad(n: usize, bounds: Bounds) -> RelativeMonad {
    RelativeMonad::identity(finsets(n, bounds))
}

pub fn identity_law(n: usize, bounds: Bounds) -> Result<RelDistLaw> {
    RelDistLaw::identity(&identity_relmonad(n, bounds))
}
