//! Hom-indexed operators between cospans of functors, their naturality
//! checks, the correspondence with functors between comma categories, and
//! relative adjunctions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::cat::laws::TestDomain;
use crate::cat::{
    comma_category, expect_dom_cod, same, same_category, CommaCategory, Functor, Mor, NatTrans, Obj,
};
use crate::error::{structural, Result};
use crate::report::{Blocks, LawReport, Witness};

pub type ActionFn = Arc<dyn Fn(&Obj, &Obj, &Mor) -> Result<Mor> + Send + Sync>;

/// A family `Z(Fx, Gy) -> Z'(F'x, G'y)` indexed by objects `x` of the common
/// domain of `F, F'` and `y` of the common domain of `G, G'`.
#[derive(Clone)]
pub struct HomOperator {
    pub label: String,
    pub src: (Functor, Functor),
    pub dst: (Functor, Functor),
    action: ActionFn,
}

impl fmt::Debug for HomOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: [{}, {}] -> [{}, {}]",
            self.label, self.src.0.label, self.src.1.label, self.dst.0.label, self.dst.1.label
        )
    }
}

impl HomOperator {
    pub fn new(
        label: impl Into<String>,
        src: (Functor, Functor),
        dst: (Functor, Functor),
        action: impl Fn(&Obj, &Obj, &Mor) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        HomOperator {
            label: label.into(),
            src,
            dst,
            action: Arc::new(action),
        }
    }

    /// The action at `(x, y)`, with both ends type-checked.
    pub fn apply(&self, x: &Obj, y: &Obj, f: &Mor) -> Result<Mor> {
        let (fl, gl) = &self.src;
        let (fr, gr) = &self.dst;
        expect_dom_cod(
            f,
            &fl.on_obj(x)?,
            &gl.on_obj(y)?,
            &format!("argument of {}", self.label),
        )?;
        let out = (self.action)(x, y, f)?;
        expect_dom_cod(
            &out,
            &fr.on_obj(x)?,
            &gr.on_obj(y)?,
            &format!("result of {}", self.label),
        )?;
        Ok(out)
    }

    /// The identity operator on `[F, G]`.
    pub fn identity(f: &Functor, g: &Functor) -> Self {
        HomOperator::new(
            format!("1[{},{}]", f.label, g.label),
            (f.clone(), g.clone()),
            (f.clone(), g.clone()),
            |_, _, m| Ok(m.clone()),
        )
    }

    /// Post-whiskering `T(-): [F, G] -> [TF, TG]`.
    pub fn whisker(t: &Functor, f: &Functor, g: &Functor) -> Result<Self> {
        let tf = Functor::compose(t, f)?;
        let tg = Functor::compose(t, g)?;
        let t2 = t.clone();
        Ok(HomOperator::new(
            format!("{}(-)", t.label),
            (f.clone(), g.clone()),
            (tf, tg),
            move |_, _, m| t2.on_mor(m),
        ))
    }
}

/// Left and right naturality over the test domains of the indexing
/// categories.
pub fn check_operator(op: &HomOperator) -> Result<LawReport> {
    let (f, g) = &op.src;
    let (f2, g2) = &op.dst;
    if !same_category(&f.src, &f2.src) || !same_category(&g.src, &g2.src) {
        return Err(structural(format!(
            "{}: cospans are indexed differently",
            op.label
        )));
    }
    if !same_category(&f.dst, &g.dst) || !same_category(&f2.dst, &g2.dst) {
        return Err(structural(format!(
            "{}: a cospan does not share its codomain",
            op.label
        )));
    }
    let (xc, yc, z, z2) = (
        f.src.as_ref(),
        g.src.as_ref(),
        f.dst.as_ref(),
        f2.dst.as_ref(),
    );
    let xs = TestDomain::of(xc)?;
    let ys = TestDomain::of(yc)?;
    let budget = xc.bounds().max_instances;
    let mut r = LawReport::new(format!("operator {}", op.label));

    // Z(Fx, Gy) for all test x, y
    let mut zhom = Vec::new();
    for x in &xs.objects {
        let row = ys
            .objects
            .iter()
            .map(|y| z.hom(&f.on_obj(x)?, &g.on_obj(y)?))
            .collect::<Result<Vec<_>>>()?;
        zhom.push(row);
    }

    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for xp in 0..xs.len() {
        for x in 0..xs.len() {
            for y in 0..ys.len() {
                blocks.push(vec![xs.homs[xp][x].len(), zhom[x][y].len()]);
                keys.push((xp, x, y));
            }
        }
    }
    r.check_family("left-naturality", &blocks, budget, |b, idx| {
        let (xp, x, y) = keys[b];
        let alpha = &xs.homs[xp][x][idx[0]];
        let m = &zhom[x][y][idx[1]];
        let (xo, xpo, yo) = (&xs.objects[x], &xs.objects[xp], &ys.objects[y]);
        let lhs = op.apply(xpo, yo, &z.compose(m, &f.on_mor(alpha)?)?)?;
        let rhs = z2.compose(&op.apply(xo, yo, m)?, &f2.on_mor(alpha)?)?;
        Ok(same(z2, &lhs, &rhs)?.map(|w| w.under("f", z.show(m)).under("alpha", xc.show(alpha))))
    })?;

    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for x in 0..xs.len() {
        for y in 0..ys.len() {
            for yp in 0..ys.len() {
                blocks.push(vec![ys.homs[y][yp].len(), zhom[x][y].len()]);
                keys.push((x, y, yp));
            }
        }
    }
    r.check_family("right-naturality", &blocks, budget, |b, idx| {
        let (x, y, yp) = keys[b];
        let beta = &ys.homs[y][yp][idx[0]];
        let m = &zhom[x][y][idx[1]];
        let (xo, yo, ypo) = (&xs.objects[x], &ys.objects[y], &ys.objects[yp]);
        let lhs = op.apply(xo, ypo, &z.compose(&g.on_mor(beta)?, m)?)?;
        let rhs = z2.compose(&g2.on_mor(beta)?, &op.apply(xo, yo, m)?)?;
        Ok(same(z2, &lhs, &rhs)?.map(|w| w.under("f", z.show(m)).under("beta", yc.show(beta))))
    })?;
    Ok(r)
}

/// Records whether two operators with the same cospans agree on every
/// argument in the test domain.
pub fn check_operators_equal(
    r: &mut LawReport,
    id: &str,
    a: &HomOperator,
    b: &HomOperator,
) -> Result<()> {
    let (f, g) = &a.src;
    let z = f.dst.as_ref();
    let z2 = a.dst.0.dst.as_ref();
    let mut ws = Vec::new();
    let mut n = 0u64;
    for x in f.src.test_objects() {
        for y in g.src.test_objects() {
            for m in z.hom(&f.on_obj(&x)?, &g.on_obj(&y)?)?.iter() {
                n += 1;
                if let Some(w) = same(z2, &a.apply(&x, &y, m)?, &b.apply(&x, &y, m)?)? {
                    ws.push(w.under("f", z.show(m)).under("y", &y).under("x", &x));
                }
            }
        }
    }
    r.record(id, n, n, ws);
    Ok(())
}

/// The functor `H: F/G -> F'/G'` of an operator, `H(x, y, α) = (x, y, α#)`.
pub struct CommaFunctor {
    pub src: CommaCategory,
    pub dst: CommaCategory,
    pub functor: Functor,
}

pub fn operator_to_comma_functor(op: &HomOperator) -> Result<CommaFunctor> {
    let src = comma_category(&op.src.0, &op.src.1)?;
    let dst = comma_category(&op.dst.0, &op.dst.1)?;
    let functor = comma_functor(&src, &dst, op)?;
    Ok(CommaFunctor { src, dst, functor })
}

fn comma_functor(src: &CommaCategory, dst: &CommaCategory, op: &HomOperator) -> Result<Functor> {
    // Tabulate on the (finite) presented comma category.
    let mut objs = HashMap::new();
    for o in &src.objects {
        let name = crate::cat::comma::object_name(&o.x, &o.y, &o.arrow);
        let image = dst.find_object(&o.x, &o.y, &op.apply(&o.x, &o.y, &o.arrow)?)?;
        objs.insert(name, image);
    }
    let mut mors = HashMap::new();
    for m in src.cat.morphisms() {
        let (u, v) = src.components(&m)?;
        let d = &objs[m.dom.name().unwrap_or_default()];
        let c = &objs[m.cod.name().unwrap_or_default()];
        let image = dst.find_morphism(d, c, &u, &v)?;
        mors.insert(m.name().unwrap_or_default().to_string(), image);
    }
    let objs = Arc::new(objs);
    let mors = Arc::new(mors);
    Ok(Functor::new(
        format!("H[{}]", op.label),
        src.handle(),
        dst.handle(),
        move |o| {
            o.name()
                .and_then(|n| objs.get(n))
                .cloned()
                .ok_or_else(|| structural(format!("{o} is not a comma object")))
        },
        move |m| {
            m.name()
                .and_then(|n| mors.get(n))
                .cloned()
                .ok_or_else(|| structural(format!("{m:?} is not a comma morphism")))
        },
    ))
}

/// Reads an operator off a functor between comma categories that commutes
/// with both projections on the nose.
pub fn comma_functor_to_operator(h: &CommaFunctor) -> Result<HomOperator> {
    let (src, dst) = (&h.src, &h.dst);
    let x_cat = src.proj_x.dst.as_ref();
    let y_cat = src.proj_y.dst.as_ref();
    for o in &src.objects {
        let so = src.find_object(&o.x, &o.y, &o.arrow)?;
        let image = dst.object(&h.functor.on_obj(&so)?)?;
        if image.x != o.x || image.y != o.y {
            return Err(structural(format!(
                "{} does not commute with the projections at {so}",
                h.functor.label
            )));
        }
    }
    for m in src.cat.morphisms() {
        let (u, v) = src.components(&m)?;
        let (u2, v2) = dst.components(&h.functor.on_mor(&m)?)?;
        if same(x_cat, &u, &u2)?.is_some() || same(y_cat, &v, &v2)?.is_some() {
            return Err(structural(format!(
                "{} does not commute with the projections at {}",
                h.functor.label,
                m.name().unwrap_or_default()
            )));
        }
    }
    let (s, d, func) = (
        Arc::new(src_lookup(src)),
        Arc::new(dst_lookup(dst)),
        h.functor.clone(),
    );
    Ok(HomOperator::new(
        format!("op[{}]", h.functor.label),
        (src.left.clone(), src.right.clone()),
        (dst.left.clone(), dst.right.clone()),
        move |x, y, f| {
            let name = crate::cat::comma::object_name(x, y, f);
            let o = s
                .get(&name)
                .ok_or_else(|| structural(format!("{name} is not a comma object")))?;
            let image = func.on_obj(o)?;
            d.get(image.name().unwrap_or_default())
                .cloned()
                .ok_or_else(|| structural(format!("{image} is not a comma object")))
        },
    ))
}

fn src_lookup(c: &CommaCategory) -> HashMap<String, Obj> {
    c.objects
        .iter()
        .map(|o| {
            let n = crate::cat::comma::object_name(&o.x, &o.y, &o.arrow);
            (n.clone(), Obj::Named(n))
        })
        .collect()
}

fn dst_lookup(c: &CommaCategory) -> HashMap<String, Mor> {
    c.objects
        .iter()
        .map(|o| {
            (
                crate::cat::comma::object_name(&o.x, &o.y, &o.arrow),
                o.arrow.clone(),
            )
        })
        .collect()
}

/// Checks that `f ↦ G(f) ∘ ι_x` is a bijection `D(Fx, b) -> C(Ix, Gb)` for
/// all test objects `x` of `C₀` and `b` of `D`.
pub fn check_relative_adjunction(f: &Functor, g: &Functor, iota: &NatTrans) -> Result<LawReport> {
    let i = &iota.src;
    if !same_category(&f.src, &i.src)
        || !same_category(&f.dst, &g.src)
        || !same_category(&g.dst, &i.dst)
    {
        return Err(structural(
            "relative adjunction data is not typed F: C0 -> D, G: D -> C, iota: I => GF",
        ));
    }
    let (c0, d, c) = (f.src.as_ref(), f.dst.as_ref(), g.dst.as_ref());
    let mut r = LawReport::new(format!(
        "relative adjunction {} -|_{} {}",
        f.label, i.label, g.label
    ));
    let (mut n, mut inj, mut sur) = (0u64, Vec::new(), Vec::new());
    for x in c0.test_objects() {
        let (fx, ix) = (f.on_obj(&x)?, i.on_obj(&x)?);
        let unit = iota.at(&x)?;
        for b in d.test_objects() {
            let gb = g.on_obj(&b)?;
            if !d.exhaustive(&fx, &b) || !c.exhaustive(&ix, &gb) {
                return Err(crate::Error::Unsupported(format!(
                    "hom-sets at ({x}, {b}) are not finite, so bijectivity is not decidable"
                )));
            }
            n += 1;
            let mut image: HashMap<crate::Value, Mor> = HashMap::new();
            for m in d.hom(&fx, &b)?.iter() {
                let gm = c.compose(&g.on_mor(m)?, &unit)?;
                if let Some(prev) = image.insert(c.key(&gm)?, m.clone()) {
                    inj.push(
                        Witness::new(d.show(&prev), d.show(m))
                            .with("x", &x)
                            .with("b", &b)
                            .with("image", c.show(&gm)),
                    );
                }
            }
            for k in c.hom(&ix, &gb)?.iter() {
                if !image.contains_key(&c.key(k)?) {
                    sur.push(
                        Witness::new("no preimage", c.show(k))
                            .with("x", &x)
                            .with("b", &b),
                    );
                }
            }
        }
    }
    r.record("adjunction-injective", n, n, inj);
    r.record("adjunction-surjective", n, n, sur);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{CatHandle, Category, PresentedCategory};

    fn chain() -> CatHandle {
        Arc::new(PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap())
    }

    #[test]
    fn identity_operator_is_natural_and_returns_its_argument() {
        let c = chain();
        let id = Functor::identity(c.clone());
        let op = HomOperator::identity(&id, &id);
        let f = c.hom(&Obj::named("a"), &Obj::named("b")).unwrap()[0].clone();
        assert_eq!(
            op.apply(&Obj::named("a"), &Obj::named("b"), &f)
                .unwrap()
                .name(),
            Some("a->b")
        );
        assert!(check_operator(&op).unwrap().passed());
    }

    #[test]
    fn wrong_argument_type_is_structural() {
        let c = chain();
        let id = Functor::identity(c.clone());
        let op = HomOperator::identity(&id, &id);
        let f = c.hom(&Obj::named("a"), &Obj::named("b")).unwrap()[0].clone();
        assert!(matches!(
            op.apply(&Obj::named("a"), &Obj::named("c"), &f),
            Err(crate::Error::Structural(_))
        ));
    }

    #[test]
    fn identity_operator_gives_identity_comma_functor() {
        let c = chain();
        let id = Functor::identity(c);
        let op = HomOperator::identity(&id, &id);
        let h = operator_to_comma_functor(&op).unwrap();
        for o in h.src.cat.test_objects() {
            assert_eq!(h.functor.on_obj(&o).unwrap(), o);
        }
        let back = comma_functor_to_operator(&h).unwrap();
        let mut r = LawReport::new("round trip");
        check_operators_equal(&mut r, "same", &op, &back).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn identity_adjunction_passes() {
        let c = chain();
        let id = Functor::identity(c);
        let r = check_relative_adjunction(&id, &id, &NatTrans::identity(&id)).unwrap();
        assert!(r.passed(), "{r}");
    }
}
