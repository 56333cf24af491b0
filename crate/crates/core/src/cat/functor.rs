//! Functors and natural transformations as code, plus table-backed versions
//! for presented categories.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{same_category, CatHandle, Mor, Obj, PresentedCategory};
use crate::error::{structural, Result};

pub type ObjFn = Arc<dyn Fn(&Obj) -> Result<Obj> + Send + Sync>;
pub type MorFn = Arc<dyn Fn(&Mor) -> Result<Mor> + Send + Sync>;
pub type CompFn = Arc<dyn Fn(&Obj) -> Result<Mor> + Send + Sync>;

#[derive(Clone)]
pub struct Functor {
    pub label: String,
    pub src: CatHandle,
    pub dst: CatHandle,
    obj: ObjFn,
    mor: MorFn,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {}",
            self.label,
            self.src.label(),
            self.dst.label()
        )
    }
}

/// Name-to-name maps for a functor between presented categories.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

impl Functor {
    pub fn new(
        label: impl Into<String>,
        src: CatHandle,
        dst: CatHandle,
        obj: impl Fn(&Obj) -> Result<Obj> + Send + Sync + 'static,
        mor: impl Fn(&Mor) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        Functor {
            label: label.into(),
            src,
            dst,
            obj: Arc::new(obj),
            mor: Arc::new(mor),
        }
    }

    pub fn on_obj(&self, a: &Obj) -> Result<Obj> {
        (self.obj)(a)
    }

    pub fn on_mor(&self, f: &Mor) -> Result<Mor> {
        (self.mor)(f)
    }

    pub fn identity(c: CatHandle) -> Self {
        Self::inclusion(format!("1_{}", c.label()), c.clone(), c)
    }

    /// Acts as the identity on data; `src` must be a subcategory of `dst`.
    pub fn inclusion(label: impl Into<String>, src: CatHandle, dst: CatHandle) -> Self {
        Self::new(label, src, dst, |a| Ok(a.clone()), |f| Ok(f.clone()))
    }

    /// `g ∘ f`.
    pub fn compose(g: &Functor, f: &Functor) -> Result<Functor> {
        if !same_category(&f.dst, &g.src) {
            return Err(structural(format!(
                "cannot compose {} after {}: {} is not {}",
                g.label,
                f.label,
                f.dst.label(),
                g.src.label()
            )));
        }
        let (f1, g1, f2, g2) = (f.clone(), g.clone(), f.clone(), g.clone());
        Ok(Functor::new(
            format!("{}{}", g.label, f.label),
            f.src.clone(),
            g.dst.clone(),
            move |a| g1.on_obj(&f1.on_obj(a)?),
            move |m| g2.on_mor(&f2.on_mor(m)?),
        ))
    }

    /// Table-backed functor between presented categories.
    pub fn from_doc(
        label: impl Into<String>,
        src: CatHandle,
        dst: Arc<PresentedCategory>,
        doc: FunctorDoc,
    ) -> Self {
        let objects = doc.objects;
        let morphisms = doc.morphisms;
        let d = dst.clone();
        Functor::new(
            label,
            src,
            dst,
            move |a| {
                let n = a
                    .name()
                    .ok_or_else(|| structural(format!("{a} is not a named object")))?;
                objects
                    .get(n)
                    .map(Obj::named)
                    .ok_or_else(|| structural(format!("functor table has no object {n}")))
            },
            move |f| {
                let n = f
                    .name()
                    .ok_or_else(|| structural("functor tables act on named morphisms"))?;
                let image = morphisms
                    .get(n)
                    .ok_or_else(|| structural(format!("functor table has no morphism {n}")))?;
                d.morphism(image)
            },
        )
    }

    /// Tabulates a functor out of a presented category.
    pub fn to_doc(&self, src: &PresentedCategory) -> Result<FunctorDoc> {
        let mut doc = FunctorDoc {
            objects: BTreeMap::new(),
            morphisms: BTreeMap::new(),
        };
        for o in &src.doc().objects {
            let image = self.on_obj(&Obj::named(o))?;
            let name = image.name().ok_or_else(|| {
                structural("tabulated functors must land in a presented category")
            })?;
            doc.objects.insert(o.clone(), name.to_string());
        }
        for m in src.morphisms() {
            let image = self.on_mor(&m)?;
            let name = image.name().ok_or_else(|| {
                structural("tabulated functors must land in a presented category")
            })?;
            doc.morphisms
                .insert(m.name().unwrap_or_default().to_string(), name.to_string());
        }
        Ok(doc)
    }

    /// Sends everything to one object and its identity.
    pub fn constant(
        label: impl Into<String>,
        src: CatHandle,
        dst: CatHandle,
        z: Obj,
    ) -> Result<Self> {
        let id = dst.identity(&z)?;
        Ok(Functor::new(
            label,
            src,
            dst,
            move |_| Ok(z.clone()),
            move |_| Ok(id.clone()),
        ))
    }
}

#[derive(Clone)]
pub struct NatTrans {
    pub label: String,
    pub src: Functor,
    pub dst: Functor,
    comp: CompFn,
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} => {}",
            self.label, self.src.label, self.dst.label
        )
    }
}

impl NatTrans {
    pub fn new(
        label: impl Into<String>,
        src: Functor,
        dst: Functor,
        comp: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        NatTrans {
            label: label.into(),
            src,
            dst,
            comp: Arc::new(comp),
        }
    }

    /// The component at `a`.
    pub fn at(&self, a: &Obj) -> Result<Mor> {
        (self.comp)(a)
    }

    pub fn identity(f: &Functor) -> Self {
        let g = f.clone();
        NatTrans::new(format!("1_{}", f.label), f.clone(), f.clone(), move |a| {
            g.dst.identity(&g.on_obj(a)?)
        })
    }

    /// `Gα : GF ⇒ GF'`.
    pub fn whisker_left(g: &Functor, alpha: &NatTrans) -> Result<NatTrans> {
        let src = Functor::compose(g, &alpha.src)?;
        let dst = Functor::compose(g, &alpha.dst)?;
        let (g, a) = (g.clone(), alpha.clone());
        Ok(NatTrans::new(
            format!("{}{}", g.label, a.label),
            src,
            dst,
            move |x| g.on_mor(&a.at(x)?),
        ))
    }

    /// `αH : FH ⇒ F'H`.
    pub fn whisker_right(alpha: &NatTrans, h: &Functor) -> Result<NatTrans> {
        let src = Functor::compose(&alpha.src, h)?;
        let dst = Functor::compose(&alpha.dst, h)?;
        let (a, h) = (alpha.clone(), h.clone());
        Ok(NatTrans::new(
            format!("{}{}", a.label, h.label),
            src,
            dst,
            move |x| a.at(&h.on_obj(x)?),
        ))
    }

    /// `β · α`.
    pub fn vertical(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
        if !same_category(&alpha.src.src, &beta.src.src)
            || !same_category(&alpha.src.dst, &beta.src.dst)
        {
            return Err(structural(format!(
                "{} and {} are not composable",
                beta.label, alpha.label
            )));
        }
        let (a, b) = (alpha.clone(), beta.clone());
        Ok(NatTrans::new(
            format!("{}.{}", b.label, a.label),
            alpha.src.clone(),
            beta.dst.clone(),
            move |x| a.src.dst.compose(&b.at(x)?, &a.at(x)?),
        ))
    }
}
