//! Comma categories `F/G` of presented functors.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::presented::{CompEntry, MorDecl};
use super::{
    equal, CatHandle, Category, Functor, Mor, NatTrans, Obj, PresentedCategory, PresentedDoc, Tier,
};
use crate::error::{structural, Error, Result};

/// An object `(x, y, α: Fx -> Gy)`.
#[derive(Clone, Debug)]
pub struct CommaObject {
    pub x: Obj,
    pub y: Obj,
    pub arrow: Mor,
}

/// `F/G` with its projections and universal 2-cell `ρ: F p_X ⇒ G p_Y`.
pub struct CommaCategory {
    pub cat: Arc<PresentedCategory>,
    pub left: Functor,
    pub right: Functor,
    pub proj_x: Functor,
    pub proj_y: Functor,
    pub rho: NatTrans,
    pub objects: Vec<CommaObject>,
    index: Arc<HashMap<String, usize>>,
    parts: Arc<HashMap<String, (Mor, Mor)>>,
    by_parts: HashMap<(usize, usize, String, String), String>,
}

fn name(m: &Mor) -> Result<&str> {
    m.name()
        .ok_or_else(|| Error::UnsupportedTier("comma categories need named morphisms".into()))
}

pub fn object_name(x: &Obj, y: &Obj, arrow: &Mor) -> String {
    format!("({x},{y},{})", arrow.name().unwrap_or("?"))
}

fn require_presented(c: &CatHandle) -> Result<()> {
    if c.tier() != Tier::Presented {
        return Err(Error::UnsupportedTier(format!(
            "comma categories are built for presented categories only; {} is computable",
            c.label()
        )));
    }
    Ok(())
}

pub fn comma_category(f: &Functor, g: &Functor) -> Result<CommaCategory> {
    for c in [&f.src, &g.src, &f.dst, &g.dst] {
        require_presented(c)?;
    }
    if !super::same_category(&f.dst, &g.dst) {
        return Err(structural(format!(
            "{} and {} have different codomains",
            f.label, g.label
        )));
    }
    let (xc, yc, zc) = (f.src.as_ref(), g.src.as_ref(), f.dst.as_ref());
    let mut objects = Vec::new();
    for x in xc.test_objects() {
        for y in yc.test_objects() {
            for a in zc.hom(&f.on_obj(&x)?, &g.on_obj(&y)?)?.iter() {
                objects.push(CommaObject {
                    x: x.clone(),
                    y: y.clone(),
                    arrow: a.clone(),
                });
            }
        }
    }
    let names: Vec<String> = objects
        .iter()
        .map(|o| object_name(&o.x, &o.y, &o.arrow))
        .collect();
    let index: HashMap<String, usize> = names
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, n)| (n, i))
        .collect();

    let mut doc = PresentedDoc {
        objects: names.clone(),
        morphisms: Vec::new(),
        identities: BTreeMap::new(),
        composition: Vec::new(),
    };
    let mut parts = HashMap::new();
    let mut by_parts = HashMap::new();
    let mut outgoing: Vec<Vec<(usize, String)>> = vec![Vec::new(); objects.len()];
    for (i, o1) in objects.iter().enumerate() {
        for (j, o2) in objects.iter().enumerate() {
            for u in xc.hom(&o1.x, &o2.x)?.iter() {
                for v in yc.hom(&o1.y, &o2.y)?.iter() {
                    let lhs = zc.compose(&g.on_mor(v)?, &o1.arrow)?;
                    let rhs = zc.compose(&o2.arrow, &f.on_mor(u)?)?;
                    if !equal(zc, &lhs, &rhs)? {
                        continue;
                    }
                    let m = format!("({},{}):{}=>{}", name(u)?, name(v)?, names[i], names[j]);
                    doc.morphisms.push(MorDecl {
                        name: m.clone(),
                        dom: names[i].clone(),
                        cod: names[j].clone(),
                    });
                    parts.insert(m.clone(), (u.clone(), v.clone()));
                    by_parts.insert(
                        (i, j, name(u)?.to_string(), name(v)?.to_string()),
                        m.clone(),
                    );
                    outgoing[i].push((j, m));
                }
            }
        }
    }
    for (i, o) in objects.iter().enumerate() {
        let (ix, iy) = (xc.identity(&o.x)?, yc.identity(&o.y)?);
        let id = by_parts
            .get(&(i, i, name(&ix)?.to_string(), name(&iy)?.to_string()))
            .ok_or_else(|| structural(format!("no identity square at {}", names[i])))?;
        doc.identities.insert(names[i].clone(), id.clone());
    }
    for (i, out) in outgoing.iter().enumerate() {
        for (j, m1) in out {
            for (k, m2) in &outgoing[*j] {
                let (u1, v1) = &parts[m1];
                let (u2, v2) = &parts[m2];
                let u = xc.compose(u2, u1)?;
                let v = yc.compose(v2, v1)?;
                let r = by_parts
                    .get(&(i, *k, name(&u)?.to_string(), name(&v)?.to_string()))
                    .ok_or_else(|| {
                        structural(format!("composite of {m1} then {m2} is not a square"))
                    })?;
                doc.composition.push(CompEntry {
                    first: m1.clone(),
                    second: m2.clone(),
                    result: r.clone(),
                });
            }
        }
    }
    let cat = Arc::new(PresentedCategory::from_doc(
        format!("{}/{}", f.label, g.label),
        doc,
    )?);
    let handle: CatHandle = cat.clone();
    let index = Arc::new(index);
    let parts = Arc::new(parts);
    let objs = Arc::new(objects.clone());

    let lookup = {
        let (index, objs) = (index.clone(), objs.clone());
        move |o: &Obj| -> Result<CommaObject> {
            o.name()
                .and_then(|n| index.get(n))
                .map(|&i| objs[i].clone())
                .ok_or_else(|| structural(format!("{o} is not a comma object")))
        }
    };
    let split = {
        let parts = parts.clone();
        move |m: &Mor| -> Result<(Mor, Mor)> {
            m.name()
                .and_then(|n| parts.get(n))
                .cloned()
                .ok_or_else(|| structural(format!("{m:?} is not a comma morphism")))
        }
    };
    let (l1, s1) = (lookup.clone(), split.clone());
    let proj_x = Functor::new(
        format!("p_{}", xc.label()),
        handle.clone(),
        f.src.clone(),
        move |o| Ok(l1(o)?.x),
        move |m| Ok(s1(m)?.0),
    );
    let (l2, s2) = (lookup.clone(), split);
    let proj_y = Functor::new(
        format!("p_{}", yc.label()),
        handle.clone(),
        g.src.clone(),
        move |o| Ok(l2(o)?.y),
        move |m| Ok(s2(m)?.1),
    );
    let rho = NatTrans::new(
        "rho",
        Functor::compose(f, &proj_x)?,
        Functor::compose(g, &proj_y)?,
        move |o| Ok(lookup(o)?.arrow),
    );
    Ok(CommaCategory {
        cat,
        left: f.clone(),
        right: g.clone(),
        proj_x,
        proj_y,
        rho,
        objects,
        index,
        parts,
        by_parts,
    })
}

impl CommaCategory {
    pub fn handle(&self) -> CatHandle {
        self.cat.clone()
    }

    pub fn object(&self, o: &Obj) -> Result<&CommaObject> {
        o.name()
            .and_then(|n| self.index.get(n))
            .map(|&i| &self.objects[i])
            .ok_or_else(|| structural(format!("{o} is not an object of {}", self.cat.label())))
    }

    /// The object `(x, y, α)`.
    pub fn find_object(&self, x: &Obj, y: &Obj, arrow: &Mor) -> Result<Obj> {
        let n = object_name(x, y, arrow);
        if self.index.contains_key(&n) {
            Ok(Obj::Named(n))
        } else {
            Err(structural(format!(
                "{n} is not an object of {}",
                self.cat.label()
            )))
        }
    }

    /// The pair `(u, v)` underlying a morphism.
    pub fn components(&self, m: &Mor) -> Result<(Mor, Mor)> {
        m.name()
            .and_then(|n| self.parts.get(n))
            .cloned()
            .ok_or_else(|| structural(format!("{m:?} is not a morphism of {}", self.cat.label())))
    }

    /// The square `(u, v)` from `dom` to `cod`.
    pub fn find_morphism(&self, dom: &Obj, cod: &Obj, u: &Mor, v: &Mor) -> Result<Mor> {
        let idx = |o: &Obj| {
            o.name()
                .and_then(|n| self.index.get(n))
                .copied()
                .ok_or_else(|| structural(format!("{o} is not a comma object")))
        };
        let key = (
            idx(dom)?,
            idx(cod)?,
            name(u)?.to_string(),
            name(v)?.to_string(),
        );
        let m = self
            .by_parts
            .get(&key)
            .ok_or_else(|| structural(format!("({u:?},{v:?}) is not a square {dom} -> {cod}")))?;
        self.cat.morphism(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_category, check_nat_trans};

    #[test]
    fn terminal_comma_has_one_object() {
        let c: CatHandle = Arc::new(PresentedCategory::terminal());
        let id = Functor::identity(c);
        let k = comma_category(&id, &id).unwrap();
        assert_eq!(k.objects.len(), 1);
        assert!(check_category(k.cat.as_ref()).unwrap().passed());
    }

    #[test]
    fn arrow_category_counts_morphisms_and_is_lawful() {
        let p = PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap();
        let n = p.doc().morphisms.len();
        let c: CatHandle = Arc::new(p);
        let id = Functor::identity(c);
        let k = comma_category(&id, &id).unwrap();
        assert_eq!(k.objects.len(), n);
        assert!(check_category(k.cat.as_ref()).unwrap().passed());
        assert!(check_nat_trans(&k.rho).unwrap().passed());
    }

    #[test]
    fn computable_tier_is_rejected() {
        use crate::cat::{SetCategory, Universe};
        use crate::sets::Bounds;
        let c: CatHandle = Arc::new(SetCategory::numerals(
            Universe::Finite,
            1,
            Bounds::default(),
        ));
        let id = Functor::identity(c);
        assert!(matches!(
            comma_category(&id, &id),
            Err(Error::UnsupportedTier(_))
        ));
    }
}
