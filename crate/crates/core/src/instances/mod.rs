//! The instance zoo: power sets and free monoids, semiring vector spaces and
//! pointed sets, plus identity baselines.

use std::sync::Arc;

use crate::cat::{CatHandle, Functor, Mor, Obj, SetCategory, Universe};
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

pub mod degenerate;
pub mod freemonoid;
pub mod identity;
pub mod pointed;
pub mod powerset;
pub mod vecspace;

pub use powerset::{powerset_over, powerset_relmonad};
pub use vecspace::{vecspace_over, vecspace_relmonad};

/// A function between described sets.
pub fn set_map(
    dom: &SetDesc,
    cod: &SetDesc,
    f: impl Fn(&Value) -> Value + Send + Sync + 'static,
) -> Mor {
    Mor::map(Obj::Set(dom.clone()), Obj::Set(cod.clone()), f)
}

/// The inclusion of `small` into `big`, which must share test objects.
pub fn inclusion(small: SetCategory, big: SetCategory) -> Functor {
    let small: CatHandle = Arc::new(small);
    let big: CatHandle = Arc::new(big);
    Functor::inclusion("I", small, big)
}

/// `I: C₀ -> C` for a pair of universes over numerals `0..=n`.
pub fn numeral_inclusion(small: Universe, big: Universe, n: usize, bounds: Bounds) -> Functor {
    let tag = format!("<={n}");
    let label = |u: Universe| {
        let s = SetCategory::numerals(u, n, bounds);
        let name = s.label();
        let short = name.split('[').next().unwrap_or_default().to_string();
        s.with_label(format!("{short}{tag}"))
    };
    inclusion(label(small), label(big))
}

use crate::cat::Category;
