//! Builtin instances by name and the full battery of checkers for each.

use std::fmt;

use serde::Serialize;

use crate::algebras::check_em_relative_adjunction;
use crate::cat::{check_category, Obj};
use crate::distributive::*;
use crate::error::{structural, Result};
use crate::instances::degenerate::pointed_over_itself;
use crate::instances::freemonoid::{freemonoid_pair, freemonoid_powerset_law};
use crate::instances::identity::{finsets, identity_law};
use crate::instances::pointed::{pointed_lifting, pointed_monad, pointed_pair};
use crate::instances::vecspace::space;
use crate::instances::{powerset_relmonad, vecspace_relmonad};
use crate::kleisli::{check_kleisli_relative_adjunction, kleisli_category};
use crate::monad::embed_monad;
use crate::relmonad::{check_relative_monad, RelativeMonad};
use crate::report::LawReport;
use crate::semiring::Semiring;
use crate::sets::Bounds;
use crate::tabulate::{tabulate_law, tabulate_lifting, Tabulation};

/// Size parameters shared by every builtin.
#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub kappa: usize,
    pub max_word: usize,
    pub max_dim: usize,
    pub semiring: Semiring,
    #[serde(skip)]
    pub bounds: Bounds,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            kappa: 3,
            max_word: 3,
            max_dim: 3,
            semiring: Semiring::boolean(),
            bounds: Bounds::default(),
        }
    }
}

impl Params {
    fn bounds(&self) -> Bounds {
        self.bounds.with_max_word(self.max_word)
    }
}

pub const BUILTINS: [&str; 9] = [
    "identity",
    "powerset",
    "pointed",
    "vecspace",
    "freemonoid-pair",
    "freemonoid-powerset",
    "pointed-pair",
    "pointed-lifting",
    "degenerate",
];

/// Whether a builtin depends on the semiring parameter.
pub fn uses_semiring(name: &str) -> bool {
    matches!(name, "vecspace" | "pointed-lifting")
}

/// A builtin in the form it is defined in.
#[derive(Clone)]
pub enum Native {
    /// A relative monad, and optionally a restriction of it with the
    /// carriers its algebras are enumerated on.
    RelMonad(RelativeMonad, Option<(RelativeMonad, Vec<Obj>)>),
    Pair(CompatiblePair),
    Law(RelDistLaw),
    Lifting(LiftingToAlgebras),
}

impl fmt::Debug for Native {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Native::RelMonad(t, _) => write!(f, "relative monad {}", t.label),
            Native::Pair(p) => write!(f, "compatible pair {p:?}"),
            Native::Law(l) => write!(f, "law {l:?}"),
            Native::Lifting(l) => write!(f, "{l:?}"),
        }
    }
}

/// Largest dimension whose algebras are enumerated.
pub const EM_DIM: usize = 2;

/// The spaces `R^n`, `n ≤ maxdim`, whose actions on `R^maxdim` fit the
/// enumeration cap.
pub fn vecspace_em_pool(r: &Semiring, maxdim: usize, bounds: &Bounds) -> Vec<Obj> {
    let q = r.elements.len() as f64;
    (0..=maxdim)
        .filter(|&n| q.powf(q.powi(maxdim as i32) * n as f64) <= bounds.max_enum as f64)
        .map(|n| Obj::Set(space(n, r)))
        .collect()
}

pub fn load(name: &str, p: &Params) -> Result<Native> {
    let b = p.bounds();
    Ok(match name {
        "identity" => Native::Law(identity_law(2, b)?),
        "powerset" => Native::RelMonad(powerset_relmonad(p.kappa, b)?, None),
        "pointed" => {
            let t = embed_monad(&pointed_monad("S", finsets(p.max_dim, b)))?;
            let small = embed_monad(&pointed_monad("S", finsets(p.max_dim.min(EM_DIM), b)))?;
            let pool = (0..=p.max_dim.min(EM_DIM)).map(Obj::numeral).collect();
            Native::RelMonad(t, Some((small, pool)))
        }
        "vecspace" => {
            let t = vecspace_relmonad(p.semiring.clone(), p.max_dim, b)?;
            let em = vecspace_relmonad(p.semiring.clone(), p.max_dim.min(EM_DIM), b)?;
            Native::RelMonad(
                t,
                Some((em, vecspace_em_pool(&p.semiring, p.max_dim.min(EM_DIM), &b))),
            )
        }
        "freemonoid-pair" => Native::Pair(freemonoid_pair(p.kappa, b)?),
        "freemonoid-powerset" => Native::Law(freemonoid_powerset_law(p.kappa, b)?),
        "pointed-pair" => Native::Pair(pointed_pair(p.max_dim, b)?),
        "pointed-lifting" => Native::Lifting(pointed_lifting(p.semiring.clone(), p.max_dim, b)?),
        "degenerate" => Native::Law(pointed_over_itself(p.max_dim.min(2), b)?),
        other => {
            return Err(structural(format!(
                "unknown builtin `{other}`; expected one of {}",
                BUILTINS.join(", ")
            )))
        }
    })
}

/// The relative monad a builtin is built on, with the restriction and pool
/// its algebras are enumerated over when it has one.
pub fn relmonad_of(n: &Native) -> Option<(RelativeMonad, Option<(RelativeMonad, Vec<Obj>)>)> {
    match n {
        Native::RelMonad(t, em) => Some((t.clone(), em.clone())),
        Native::Law(l) => Some((l.t.clone(), None)),
        Native::Lifting(l) => Some((l.t.clone(), None)),
        Native::Pair(_) => None,
    }
}

/// Every checker applicable to the structure.
pub fn check(n: &Native) -> Result<LawReport> {
    match n {
        Native::RelMonad(t, em) => check_relmonad_suite(t, em.as_ref()),
        Native::Pair(p) => check_compatible_pair(p),
        Native::Law(l) => check_law_suite(l),
        Native::Lifting(l) => {
            let mut r = LawReport::new(format!("{l:?}"));
            r.absorb("lifting", check_lifting(l)?);
            let d = lifting_to_distr(l)?;
            check_liftings_equal(&mut r, "round-trip-B", &distr_to_lifting(&d), l)?;
            r.absorb("", check_law_suite(&d)?);
            Ok(r)
        }
    }
}

fn check_relmonad_suite(
    t: &RelativeMonad,
    em: Option<&(RelativeMonad, Vec<Obj>)>,
) -> Result<LawReport> {
    let mut r = LawReport::new(format!("relative monad {}", t.label));
    r.absorb("relmonad", check_relative_monad(t)?);
    r.absorb("kleisli", check_category(kleisli_category(t).cat.as_ref())?);
    r.absorb("kleisli-adjunction", check_kleisli_relative_adjunction(t)?);
    if let Some((small, pool)) = em {
        r.absorb("em-adjunction", check_em_relative_adjunction(small, pool)?);
    }
    Ok(r)
}

/// The law, its monad of relative monads, both converted forms and the
/// round trips through them.
pub fn check_law_suite(l: &RelDistLaw) -> Result<LawReport> {
    let mut r = LawReport::new(format!("law {l:?}"));
    r.absorb("pair", check_compatible_pair(&l.pair)?);
    r.absorb("law", check_rel_dist_law(l)?);
    r.absorb("monad", check_law_as_monad(l)?);
    let lift = distr_to_lifting(l);
    r.absorb("lifting", check_lifting(&lift)?);
    check_laws_equal(&mut r, "round-trip-A", &lifting_to_distr(&lift)?, l)?;
    let e = distr_to_kleisli_extension(l);
    r.absorb("extension", check_kleisli_extension(&e)?);
    let back = kleisli_extension_to_distr(&e)?;
    check_laws_equal(&mut r, "round-trip-C/law", &back, l)?;
    check_extensions_equal(
        &mut r,
        "round-trip-C/extension",
        &distr_to_kleisli_extension(&back),
        &e,
    )?;
    Ok(r)
}

/// The defining tabulation of a law or lifting builtin.
pub fn tabulate(n: &Native) -> Result<Tabulation> {
    match n {
        Native::Law(l) => tabulate_law(l),
        Native::Lifting(l) => tabulate_lifting(l),
        other => Err(structural(format!("{other:?} has no tabulation"))),
    }
}
