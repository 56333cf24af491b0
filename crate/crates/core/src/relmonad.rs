//! Relative monads as Kleisli triples over a base functor `I: C₀ -> C`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::cat::functor::{CompFn, ObjFn};
use crate::cat::laws::TestDomain;
use crate::cat::{expect_dom_cod, same, same_category, CatHandle, Functor, Mor, NatTrans, Obj};
use crate::error::{structural, Result};
use crate::operators::{check_operator, check_relative_adjunction, HomOperator};
use crate::report::{Blocks, LawReport};
use crate::value::Value;

pub type ExtFn = Arc<dyn Fn(&Obj, &Obj, &Mor) -> Result<Mor> + Send + Sync>;

/// `(T, t, (-)†)` relative to `base = I`: `t_x: Ix -> Tx` and, for
/// `k: Ix -> Ty`, `k†: Tx -> Ty`.
#[derive(Clone)]
pub struct RelativeMonad {
    pub label: String,
    pub base: Functor,
    obj: ObjFn,
    unit: CompFn,
    ext: ExtFn,
}

impl fmt::Debug for RelativeMonad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relative monad {} over {:?}", self.label, self.base)
    }
}

impl RelativeMonad {
    pub fn new(
        label: impl Into<String>,
        base: Functor,
        obj: impl Fn(&Obj) -> Result<Obj> + Send + Sync + 'static,
        unit: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
        ext: impl Fn(&Obj, &Obj, &Mor) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        RelativeMonad {
            label: label.into(),
            base,
            obj: Arc::new(obj),
            unit: Arc::new(unit),
            ext: Arc::new(ext),
        }
    }

    /// `C₀`.
    pub fn src(&self) -> &CatHandle {
        &self.base.src
    }

    /// `C`.
    pub fn dst(&self) -> &CatHandle {
        &self.base.dst
    }

    pub fn on_obj(&self, x: &Obj) -> Result<Obj> {
        (self.obj)(x)
    }

    pub fn unit(&self, x: &Obj) -> Result<Mor> {
        (self.unit)(x)
    }

    /// `k†` for `k: Ix -> Ty`.
    pub fn ext(&self, x: &Obj, y: &Obj, k: &Mor) -> Result<Mor> {
        expect_dom_cod(
            k,
            &self.base.on_obj(x)?,
            &self.on_obj(y)?,
            &format!("argument of {}†", self.label),
        )?;
        let out = (self.ext)(x, y, k)?;
        expect_dom_cod(
            &out,
            &self.on_obj(x)?,
            &self.on_obj(y)?,
            &format!("result of {}†", self.label),
        )?;
        Ok(out)
    }

    /// The derived functor `T: C₀ -> C`, `Tu = (t_y ∘ Iu)†`.
    pub fn functor(&self) -> Functor {
        let (t1, t2) = (self.clone(), self.clone());
        Functor::new(
            self.label.clone(),
            self.src().clone(),
            self.dst().clone(),
            move |x| t1.on_obj(x),
            move |u| {
                let c = t2.dst();
                t2.ext(
                    &u.dom,
                    &u.cod,
                    &c.compose(&t2.unit(&u.cod)?, &t2.base.on_mor(u)?)?,
                )
            },
        )
    }

    /// The unit as a transformation `I ⇒ T`.
    pub fn unit_nat(&self) -> NatTrans {
        let t = self.clone();
        NatTrans::new(
            format!("unit of {}", self.label),
            self.base.clone(),
            self.functor(),
            move |x| t.unit(x),
        )
    }

    /// The extension as an operator `[I, T] -> [T, T]`.
    pub fn ext_operator(&self) -> HomOperator {
        let t = self.functor();
        let m = self.clone();
        HomOperator::new(
            format!("({})†", self.label),
            (self.base.clone(), t.clone()),
            (t.clone(), t),
            move |x, y, k| m.ext(x, y, k),
        )
    }

    /// The identity monad relative to the identity functor.
    pub fn identity(c: CatHandle) -> Self {
        let (c1, c2) = (c.clone(), c.clone());
        RelativeMonad::new(
            format!("Id_{}", c.label()),
            Functor::identity(c),
            |x| Ok(x.clone()),
            move |x| c1.identity(x),
            move |_, _, k| {
                c2.identity(&k.dom)?;
                Ok(k.clone())
            },
        )
    }
}

/// Unit typing, naturality of the extension operator, then the three laws:
/// `k† ∘ t_x = k`, `t_x† = id`, `(l† ∘ k)† = l† ∘ k†`.
pub fn check_relative_monad(t: &RelativeMonad) -> Result<LawReport> {
    let (c0, c) = (t.src().as_ref(), t.dst().as_ref());
    let objs = TestDomain::of(c0)?.objects;
    let budget = c0.bounds().max_instances;
    let mut r = LawReport::new(format!("relative monad {}", t.label));
    let mut units = Vec::new();
    let mut ix = Vec::new();
    let mut tx = Vec::new();
    for x in &objs {
        let (a, b) = (t.base.on_obj(x)?, t.on_obj(x)?);
        if !c.contains(&b) {
            return Err(structural(format!(
                "T{x} = {b} is not an object of {}",
                c.label()
            )));
        }
        let u = t.unit(x)?;
        expect_dom_cod(&u, &a, &b, &format!("unit at {x}"))?;
        units.push(u);
        ix.push(a);
        tx.push(b);
    }
    r.absorb("ext-operator", check_operator(&t.ext_operator())?);

    // kl[i][j] = C(I x_i, T x_j)
    let kl = ix
        .iter()
        .map(|a| tx.iter().map(|b| c.hom(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let n = objs.len();

    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for i in 0..n {
        for j in 0..n {
            blocks.push(vec![kl[i][j].len()]);
            keys.push((i, j));
        }
    }
    r.check_family("left-unit", &blocks, budget, |b, idx| {
        let (i, j) = keys[b];
        let k = &kl[i][j][idx[0]];
        let lhs = c.compose(&t.ext(&objs[i], &objs[j], k)?, &units[i])?;
        Ok(same(c, &lhs, k)?.map(|w| w.under("k", c.show(k))))
    })?;

    let mut blocks = Blocks::new();
    blocks.push(vec![n]);
    r.check_family("right-unit", &blocks, budget, |_, idx| {
        let i = idx[0];
        let lhs = t.ext(&objs[i], &objs[i], &units[i])?;
        let rhs = c.identity(&tx[i])?;
        Ok(same(c, &lhs, &rhs)?.map(|w| w.under("x", &objs[i])))
    })?;

    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                blocks.push(vec![kl[i][j].len(), kl[j][k].len()]);
                keys.push((i, j, k));
            }
        }
    }
    r.check_family("assoc", &blocks, budget, |b, idx| {
        let (i, j, l) = keys[b];
        let k = &kl[i][j][idx[0]];
        let m = &kl[j][l][idx[1]];
        let (x, y, z) = (&objs[i], &objs[j], &objs[l]);
        let mdag = t.ext(y, z, m)?;
        let lhs = t.ext(x, z, &c.compose(&mdag, k)?)?;
        let rhs = c.compose(&mdag, &t.ext(x, y, k)?)?;
        Ok(same(c, &lhs, &rhs)?.map(|w| w.under("l", c.show(m)).under("k", c.show(k))))
    })?;
    Ok(r)
}

/// The relative monad `(GF, ι, k ↦ G(k♭))` of a relative adjunction, where
/// `k♭` is the unique preimage of `k` under `f ↦ G(f) ∘ ι_x`.
pub fn relmonad_from_adjunction(
    f: &Functor,
    g: &Functor,
    iota: &NatTrans,
) -> Result<RelativeMonad> {
    let i = iota.src.clone();
    if !same_category(&f.src, &i.src)
        || !same_category(&f.dst, &g.src)
        || !same_category(&g.dst, &i.dst)
    {
        return Err(structural(
            "relative adjunction data is not typed F: C0 -> D, G: D -> C, iota: I => GF",
        ));
    }
    type Table = Arc<HashMap<Value, Mor>>;
    let cache: Arc<Mutex<HashMap<(Obj, Obj), Table>>> = Arc::default();
    let (f1, g1, g2, iota1, iota2) = (f.clone(), g.clone(), g.clone(), iota.clone(), iota.clone());
    let gf = Functor::compose(g, f)?;
    Ok(RelativeMonad::new(
        format!("{}{}", g.label, f.label),
        i,
        move |x| gf.on_obj(x),
        move |x| iota1.at(x),
        move |x, y, k| {
            let (c, d) = (g1.dst.as_ref(), g1.src.as_ref());
            let key = (x.clone(), y.clone());
            let hit = cache
                .lock()
                .expect("adjunction cache poisoned")
                .get(&key)
                .cloned();
            let table = match hit {
                Some(t) => t,
                None => {
                    let (fx, fy) = (f1.on_obj(x)?, f1.on_obj(y)?);
                    let unit = iota2.at(x)?;
                    let mut t = HashMap::new();
                    for m in d.hom(&fx, &fy)?.iter() {
                        let image = c.compose(&g1.on_mor(m)?, &unit)?;
                        if t.insert(c.key(&image)?, m.clone()).is_some() {
                            return Err(structural(format!(
                                "adjunction map at ({x}, {y}) is not injective"
                            )));
                        }
                    }
                    let t = Arc::new(t);
                    cache
                        .lock()
                        .expect("adjunction cache poisoned")
                        .insert(key, t.clone());
                    t
                }
            };
            let flat = table.get(&c.key(k)?).ok_or_else(|| {
                structural(format!(
                    "{} has no preimage under the adjunction",
                    c.show(k)
                ))
            })?;
            g2.on_mor(flat)
        },
    ))
}

/// Records whether two relative monads over the same base agree on objects,
/// units and extensions over the test domain.
pub fn check_relmonads_equal(
    r: &mut LawReport,
    id: &str,
    a: &RelativeMonad,
    b: &RelativeMonad,
) -> Result<()> {
    let (c0, c) = (a.src().as_ref(), a.dst().as_ref());
    let objs = c0.test_objects();
    let mut ws = Vec::new();
    let mut n = 0u64;
    for x in &objs {
        n += 1;
        let (ax, bx) = (a.on_obj(x)?, b.on_obj(x)?);
        if ax != bx {
            ws.push(crate::Witness::new(&ax, &bx).with("object", x));
            continue;
        }
        if let Some(w) = same(c, &a.unit(x)?, &b.unit(x)?)? {
            ws.push(w.under("unit at", x));
        }
    }
    r.record(&format!("{id}/objects-and-units"), n, n, ws);
    let ix: Vec<Obj> = objs
        .iter()
        .map(|x| a.base.on_obj(x))
        .collect::<Result<_>>()?;
    let tx: Vec<Obj> = objs.iter().map(|x| a.on_obj(x)).collect::<Result<_>>()?;
    let kl = ix
        .iter()
        .map(|p| tx.iter().map(|q| c.hom(p, q)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            blocks.push(vec![kl[i][j].len()]);
            keys.push((i, j));
        }
    }
    r.check_family(
        &format!("{id}/extension"),
        &blocks,
        c0.bounds().max_instances,
        |blk, idx| {
            let (i, j) = keys[blk];
            let k = &kl[i][j][idx[0]];
            let (x, y) = (&objs[i], &objs[j]);
            Ok(same(c, &a.ext(x, y, k)?, &b.ext(x, y, k)?)?.map(|w| w.under("k", c.show(k))))
        },
    )?;
    Ok(())
}

/// Shorthand: the adjunction check followed by the induced monad.
pub fn checked_relmonad_from_adjunction(
    f: &Functor,
    g: &Functor,
    iota: &NatTrans,
) -> Result<RelativeMonad> {
    check_relative_adjunction(f, g, iota)?.into_result()?;
    relmonad_from_adjunction(f, g, iota)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_functor, check_nat_trans, PresentedCategory};

    #[test]
    fn identity_relative_monad_is_lawful() {
        let c: CatHandle = Arc::new(
            PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap(),
        );
        let t = RelativeMonad::identity(c);
        assert!(check_relative_monad(&t).unwrap().passed());
        assert!(check_functor(&t.functor()).unwrap().passed());
        assert!(check_nat_trans(&t.unit_nat()).unwrap().passed());
    }

    #[test]
    fn identity_adjunction_gives_identity_monad() {
        let c: CatHandle =
            Arc::new(PresentedCategory::from_preorder("2", &["a", "b"], |i, j| i <= j).unwrap());
        let id = Functor::identity(c.clone());
        let t = checked_relmonad_from_adjunction(&id, &id, &NatTrans::identity(&id)).unwrap();
        let mut r = LawReport::new("recovered");
        check_relmonads_equal(&mut r, "identity", &t, &RelativeMonad::identity(c)).unwrap();
        assert!(r.passed(), "{r}");
    }
}
