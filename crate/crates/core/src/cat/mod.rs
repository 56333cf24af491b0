//! Categories, functors and natural transformations in two tiers.
//!
//! *Presented* categories are finite tables and are checked exhaustively.
//! *Computable* categories (sets and functions, Kleisli and EM categories)
//! enumerate a bounded test domain; morphisms are compared extensionally over
//! the enumerated elements of their domain.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Result};
use crate::report::Witness;
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

pub mod comma;
pub mod export;
pub mod functor;
pub mod laws;
pub mod presented;
pub mod setcat;

pub use comma::{comma_category, CommaCategory, CommaObject};
pub use export::export_presented;
pub use functor::{Functor, NatTrans};
pub use laws::{check_category, check_functor, check_nat_trans};
pub use presented::{PresentedCategory, PresentedDoc};
pub use setcat::{SetCategory, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Presented,
    Computable,
}

/// An object of some category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obj {
    Named(String),
    Set(SetDesc),
    /// A relative EM-algebra: carrier plus its action table on the test domain.
    Algebra {
        carrier: Box<Obj>,
        structure: Value,
    },
}

impl Obj {
    pub fn named(s: impl Into<String>) -> Obj {
        Obj::Named(s.into())
    }

    pub fn numeral(n: usize) -> Obj {
        Obj::Set(SetDesc::numeral(n))
    }

    pub fn as_set(&self) -> Option<&SetDesc> {
        match self {
            Obj::Set(d) => Some(d),
            _ => None,
        }
    }

    pub fn set(&self) -> Result<&SetDesc> {
        self.as_set()
            .ok_or_else(|| structural(format!("object {self} is not a described set")))
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Obj::Named(n) => Some(n),
            _ => None,
        }
    }
}

fn digest(text: &str) -> u64 {
    // FNV-1a: stable across runs and platforms.
    text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Named(n) => f.write_str(n),
            Obj::Set(d) => write!(f, "{d}"),
            Obj::Algebra { carrier, structure } => {
                write!(f, "alg({carrier}#{:016x})", digest(&structure.to_string()))
            }
        }
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type MapFn = Arc<dyn Fn(&Value) -> Value + Send + Sync>;

#[derive(Clone)]
pub enum Body {
    /// A named morphism of a presented category.
    Named(String),
    /// A function between described sets.
    Map(MapFn),
    /// A morphism of an underlying category, retyped (Kleisli and EM homs).
    Wrap(Box<Mor>),
}

/// A morphism with explicit domain and codomain.
#[derive(Clone)]
pub struct Mor {
    pub dom: Obj,
    pub cod: Obj,
    pub body: Body,
}

impl Mor {
    pub fn named(name: impl Into<String>, dom: Obj, cod: Obj) -> Mor {
        Mor {
            dom,
            cod,
            body: Body::Named(name.into()),
        }
    }

    pub fn map(dom: Obj, cod: Obj, f: impl Fn(&Value) -> Value + Send + Sync + 'static) -> Mor {
        Mor {
            dom,
            cod,
            body: Body::Map(Arc::new(f)),
        }
    }

    pub fn wrap(dom: Obj, cod: Obj, inner: Mor) -> Mor {
        Mor {
            dom,
            cod,
            body: Body::Wrap(Box::new(inner)),
        }
    }

    /// A function given by its graph over a finite domain.
    pub fn table(dom: Obj, cod: Obj, graph: impl IntoIterator<Item = (Value, Value)>) -> Mor {
        let graph: std::collections::HashMap<Value, Value> = graph.into_iter().collect();
        Mor::map(dom, cod, move |v| match graph.get(v) {
            Some(x) => x.clone(),
            None => panic!("table function applied outside its domain at {v}"),
        })
    }

    pub fn name(&self) -> Option<&str> {
        match &self.body {
            Body::Named(n) => Some(n),
            Body::Wrap(m) => m.name(),
            Body::Map(_) => None,
        }
    }

    /// The underlying morphism of a wrapped one; `self` otherwise.
    pub fn inner(&self) -> &Mor {
        match &self.body {
            Body::Wrap(m) => m,
            _ => self,
        }
    }

    /// Evaluates a function morphism at an element.
    ///
    /// Panics on named morphisms; callers only evaluate morphisms of
    /// set-valued categories.
    pub fn apply(&self, v: &Value) -> Value {
        match &self.body {
            Body::Map(f) => f(v),
            Body::Wrap(m) => m.apply(v),
            Body::Named(n) => panic!("named morphism {n} has no element action"),
        }
    }

    pub fn is_function(&self) -> bool {
        match &self.body {
            Body::Map(_) => true,
            Body::Wrap(m) => m.is_function(),
            Body::Named(_) => false,
        }
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Named(n) => write!(f, "{n}: {} -> {}", self.dom, self.cod),
            Body::Map(_) => write!(f, "<fn>: {} -> {}", self.dom, self.cod),
            Body::Wrap(m) => write!(f, "[{m:?}]: {} -> {}", self.dom, self.cod),
        }
    }
}

/// Where two parallel morphisms disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff {
    /// The element at which they differ (computable tier only).
    pub at: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Diff {
    pub fn into_witness(self) -> Witness {
        let w = Witness::new(self.lhs, self.rhs);
        match self.at {
            Some(at) => w.with("at", at),
            None => w,
        }
    }
}

/// A category with a finite test domain.
///
/// `hom` lists every morphism when the codomain is finite and a bounded test
/// family otherwise; laws are instantiated over the
/// test objects and their hom-sets, subject to the instance budget in
/// [`Bounds`].
pub trait Category: Send + Sync {
    fn label(&self) -> String;
    fn tier(&self) -> Tier;
    fn bounds(&self) -> Bounds;
    /// The objects over which laws are instantiated.
    fn test_objects(&self) -> Vec<Obj>;
    fn contains(&self, a: &Obj) -> bool;
    /// The hom-set, or for an infinite one the morphisms in the test domain.
    fn hom(&self, a: &Obj, b: &Obj) -> Result<Arc<Vec<Mor>>>;
    /// Whether `hom(a, b)` lists every morphism.
    fn exhaustive(&self, _a: &Obj, _b: &Obj) -> bool {
        true
    }
    fn identity(&self, a: &Obj) -> Result<Mor>;
    /// `g ∘ f`.
    fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor>;
    /// First disagreement between two morphisms with equal dom/cod.
    fn compare(&self, f: &Mor, g: &Mor) -> Result<Option<Diff>>;
    /// Canonical key; equal keys iff equal morphisms.
    fn key(&self, f: &Mor) -> Result<Value>;
    fn show(&self, f: &Mor) -> String;
    /// Checks that `f` is a well-typed morphism of this category.
    fn validate(&self, f: &Mor) -> Result<()>;
}

pub type CatHandle = Arc<dyn Category>;

/// Equality as a witness: `None` when equal.
pub fn same(cat: &dyn Category, lhs: &Mor, rhs: &Mor) -> Result<Option<Witness>> {
    if lhs.dom != rhs.dom || lhs.cod != rhs.cod {
        return Ok(Some(Witness::new(
            format!("{}: {} -> {}", cat.show(lhs), lhs.dom, lhs.cod),
            format!("{}: {} -> {}", cat.show(rhs), rhs.dom, rhs.cod),
        )));
    }
    Ok(cat.compare(lhs, rhs)?.map(Diff::into_witness))
}

pub fn equal(cat: &dyn Category, lhs: &Mor, rhs: &Mor) -> Result<bool> {
    Ok(same(cat, lhs, rhs)?.is_none())
}

pub(crate) fn expect_dom_cod(f: &Mor, dom: &Obj, cod: &Obj, what: &str) -> Result<()> {
    if &f.dom != dom || &f.cod != cod {
        return Err(structural(format!(
            "{what}: expected {dom} -> {cod}, got {} -> {}",
            f.dom, f.cod
        )));
    }
    Ok(())
}

/// Same category, by label.
pub fn same_category(a: &CatHandle, b: &CatHandle) -> bool {
    Arc::ptr_eq(a, b) || a.label() == b.label()
}
