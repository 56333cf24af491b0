//! Ordinary monads `(S, m, s)` and their embedding as relative monads over
//! the identity.

use std::fmt;
use std::sync::Arc;

use crate::cat::functor::CompFn;
use crate::cat::laws::TestDomain;
use crate::cat::{
    check_functor, check_nat_trans, expect_dom_cod, same, CatHandle, Functor, Mor, NatTrans, Obj,
};
use crate::error::Result;
use crate::relmonad::{check_relative_monad, RelativeMonad};
use crate::report::{Blocks, LawReport};
use crate::value::Value;

/// Writes `w ∈ S x` as `S(letters)(shape)` with `shape ∈ S n` and
/// `letters: n -> x` listed as values.
pub type DecomposeFn =
    Arc<dyn Fn(&Obj, &Value) -> Result<(usize, Vec<Value>, Value)> + Send + Sync>;

#[derive(Clone)]
pub struct Monad {
    pub label: String,
    pub functor: Functor,
    unit: CompFn,
    mult: CompFn,
    decompose: Option<DecomposeFn>,
}

impl fmt::Debug for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "monad {} on {}", self.label, self.functor.src.label())
    }
}

impl Monad {
    pub fn new(
        label: impl Into<String>,
        functor: Functor,
        unit: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
        mult: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        Monad {
            label: label.into(),
            functor,
            unit: Arc::new(unit),
            mult: Arc::new(mult),
            decompose: None,
        }
    }

    /// Attaches a container decomposition (see [`DecomposeFn`]).
    pub fn with_decomposition(
        mut self,
        f: impl Fn(&Obj, &Value) -> Result<(usize, Vec<Value>, Value)> + Send + Sync + 'static,
    ) -> Self {
        self.decompose = Some(Arc::new(f));
        self
    }

    pub fn cat(&self) -> &CatHandle {
        &self.functor.src
    }

    pub fn on_obj(&self, x: &Obj) -> Result<Obj> {
        self.functor.on_obj(x)
    }

    pub fn on_mor(&self, f: &Mor) -> Result<Mor> {
        self.functor.on_mor(f)
    }

    /// `s_x: x -> Sx`.
    pub fn unit(&self, x: &Obj) -> Result<Mor> {
        (self.unit)(x)
    }

    /// `m_x: SSx -> Sx`.
    pub fn mult(&self, x: &Obj) -> Result<Mor> {
        (self.mult)(x)
    }

    pub fn decomposition(&self) -> Option<&DecomposeFn> {
        self.decompose.as_ref()
    }

    pub fn unit_nat(&self) -> NatTrans {
        let m = self.clone();
        NatTrans::new(
            format!("s of {}", self.label),
            Functor::identity(self.cat().clone()),
            self.functor.clone(),
            move |x| m.unit(x),
        )
    }

    pub fn mult_nat(&self) -> Result<NatTrans> {
        let m = self.clone();
        Ok(NatTrans::new(
            format!("m of {}", self.label),
            Functor::compose(&self.functor, &self.functor)?,
            self.functor.clone(),
            move |x| m.mult(x),
        ))
    }

    pub fn identity(c: CatHandle) -> Self {
        let (c1, c2) = (c.clone(), c.clone());
        Monad::new(
            format!("Id_{}", c.label()),
            Functor::identity(c),
            move |x| c1.identity(x),
            move |x| c2.identity(x),
        )
        .with_decomposition(|_, w| Ok((1, vec![w.clone()], Value::int(0))))
    }
}

/// Functoriality, naturality of unit and multiplication, and the three
/// monad laws at every test object.
pub fn check_monad(m: &Monad) -> Result<LawReport> {
    let c = m.cat().as_ref();
    let mut r = LawReport::new(format!("monad {}", m.label));
    r.absorb("functor", check_functor(&m.functor)?);
    r.absorb("unit-naturality", check_nat_trans(&m.unit_nat())?);
    r.absorb("mult-naturality", check_nat_trans(&m.mult_nat()?)?);
    let objs = TestDomain::of(c)?.objects;
    let budget = c.bounds().max_instances;
    let mut blocks = Blocks::new();
    blocks.push(vec![objs.len()]);

    let parts = |x: &Obj| -> Result<(Obj, Obj, Mor)> {
        let sx = m.on_obj(x)?;
        let ssx = m.on_obj(&sx)?;
        let mx = m.mult(x)?;
        expect_dom_cod(&mx, &ssx, &sx, &format!("multiplication at {x}"))?;
        Ok((sx, ssx, mx))
    };
    r.check_family("unit-left", &blocks, budget, |_, idx| {
        let x = &objs[idx[0]];
        let (sx, _, mx) = parts(x)?;
        let lhs = c.compose(&mx, &m.unit(&sx)?)?;
        Ok(same(c, &lhs, &c.identity(&sx)?)?.map(|w| w.under("x", x)))
    })?;
    r.check_family("unit-right", &blocks, budget, |_, idx| {
        let x = &objs[idx[0]];
        let (sx, _, mx) = parts(x)?;
        let lhs = c.compose(&mx, &m.on_mor(&m.unit(x)?)?)?;
        Ok(same(c, &lhs, &c.identity(&sx)?)?.map(|w| w.under("x", x)))
    })?;
    r.check_family("mult-assoc", &blocks, budget, |_, idx| {
        let x = &objs[idx[0]];
        let (sx, _, mx) = parts(x)?;
        let lhs = c.compose(&mx, &m.mult(&sx)?)?;
        let rhs = c.compose(&mx, &m.on_mor(&mx)?)?;
        Ok(same(c, &lhs, &rhs)?.map(|w| w.under("x", x)))
    })?;
    Ok(r)
}

/// `(S, s, k ↦ m_y ∘ Sk)` over the identity, without checking.
pub fn embed_monad_unchecked(m: &Monad) -> RelativeMonad {
    let (m1, m2, m3) = (m.clone(), m.clone(), m.clone());
    RelativeMonad::new(
        m.label.clone(),
        Functor::identity(m.cat().clone()),
        move |x| m1.on_obj(x),
        move |x| m2.unit(x),
        move |_, y, k| m3.cat().compose(&m3.mult(y)?, &m3.on_mor(k)?),
    )
}

/// Embeds a monad as a relative monad over the identity, failing with the
/// law report if the embedding is not lawful.
pub fn embed_monad(m: &Monad) -> Result<RelativeMonad> {
    let t = embed_monad_unchecked(m);
    check_relative_monad(&t)?.into_result()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::PresentedCategory;

    #[test]
    fn identity_monad_is_lawful_and_embeds() {
        let c: CatHandle =
            Arc::new(PresentedCategory::from_preorder("2", &["a", "b"], |i, j| i <= j).unwrap());
        let m = Monad::identity(c);
        assert!(check_monad(&m).unwrap().passed());
        assert!(embed_monad(&m).is_ok());
    }
}
