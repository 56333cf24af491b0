//! Law checkers for categories, functors and natural transformations.

use std::sync::Arc;

use super::{expect_dom_cod, same, same_category, Category, Functor, Mor, NatTrans, Obj};
use crate::error::{structural, Result};
use crate::report::{Blocks, LawReport, Witness};

/// Test objects and the hom-sets between them, `homs[i][j] = C(o_i, o_j)`.
pub struct TestDomain {
    pub objects: Vec<Obj>,
    pub homs: Vec<Vec<Arc<Vec<Mor>>>>,
}

impl TestDomain {
    pub fn of(c: &dyn Category) -> Result<Self> {
        Self::over(c, c.test_objects())
    }

    pub fn over(c: &dyn Category, objects: Vec<Obj>) -> Result<Self> {
        if objects.is_empty() {
            return Err(structural(format!(
                "{} has an empty test domain",
                c.label()
            )));
        }
        let mut homs = Vec::with_capacity(objects.len());
        for a in &objects {
            let row = objects
                .iter()
                .map(|b| c.hom(a, b))
                .collect::<Result<Vec<_>>>()?;
            homs.push(row);
        }
        Ok(TestDomain { objects, homs })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// One block per ordered pair of objects.
    pub fn pairs(&self) -> (Blocks, Vec<(usize, usize)>) {
        let mut blocks = Blocks::new();
        let mut keys = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                blocks.push(vec![self.homs[i][j].len()]);
                keys.push((i, j));
            }
        }
        (blocks, keys)
    }

    /// One block per composable pair of hom-sets `o_i -> o_j -> o_k`.
    pub fn paths2(&self) -> (Blocks, Vec<(usize, usize, usize)>) {
        let mut blocks = Blocks::new();
        let mut keys = Vec::new();
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    blocks.push(vec![self.homs[i][j].len(), self.homs[j][k].len()]);
                    keys.push((i, j, k));
                }
            }
        }
        (blocks, keys)
    }

    /// One block per composable triple of hom-sets.
    pub fn paths3(&self) -> (Blocks, Vec<(usize, usize, usize, usize)>) {
        let mut blocks = Blocks::new();
        let mut keys = Vec::new();
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        blocks.push(vec![
                            self.homs[i][j].len(),
                            self.homs[j][k].len(),
                            self.homs[k][l].len(),
                        ]);
                        keys.push((i, j, k, l));
                    }
                }
            }
        }
        (blocks, keys)
    }
}

pub fn check_category(c: &dyn Category) -> Result<LawReport> {
    let dom = TestDomain::of(c)?;
    let budget = c.bounds().max_instances;
    let mut r = LawReport::new(format!("category {}", c.label()));
    let ids = dom
        .objects
        .iter()
        .map(|a| {
            let id = c.identity(a)?;
            expect_dom_cod(&id, a, a, "identity")?;
            Ok(id)
        })
        .collect::<Result<Vec<_>>>()?;

    let (blocks, keys) = dom.pairs();
    r.check_family("identity-left", &blocks, budget, |b, idx| {
        let (i, j) = keys[b];
        let f = &dom.homs[i][j][idx[0]];
        let lhs = c.compose(&ids[j], f)?;
        expect_dom_cod(&lhs, &f.dom, &f.cod, "composite")?;
        Ok(same(c, &lhs, f)?.map(|w| w.under("f", c.show(f))))
    })?;
    r.check_family("identity-right", &blocks, budget, |b, idx| {
        let (i, j) = keys[b];
        let f = &dom.homs[i][j][idx[0]];
        let lhs = c.compose(f, &ids[i])?;
        expect_dom_cod(&lhs, &f.dom, &f.cod, "composite")?;
        Ok(same(c, &lhs, f)?.map(|w| w.under("f", c.show(f))))
    })?;

    let (blocks, keys) = dom.paths3();
    r.check_family("assoc", &blocks, budget, |b, idx| {
        let (i, j, k, l) = keys[b];
        let f = &dom.homs[i][j][idx[0]];
        let g = &dom.homs[j][k][idx[1]];
        let h = &dom.homs[k][l][idx[2]];
        let gf = c.compose(g, f)?;
        expect_dom_cod(&gf, &f.dom, &g.cod, "composite")?;
        let hg = c.compose(h, g)?;
        expect_dom_cod(&hg, &g.dom, &h.cod, "composite")?;
        let lhs = c.compose(h, &gf)?;
        let rhs = c.compose(&hg, f)?;
        Ok(same(c, &lhs, &rhs)?.map(|w| {
            w.under("h", c.show(h))
                .under("g", c.show(g))
                .under("f", c.show(f))
        }))
    })?;
    Ok(r)
}

pub fn check_functor(func: &Functor) -> Result<LawReport> {
    let (src, dst) = (func.src.as_ref(), func.dst.as_ref());
    let dom = TestDomain::of(src)?;
    let budget = src.bounds().max_instances;
    let mut r = LawReport::new(format!("functor {}", func.label));
    let images = dom
        .objects
        .iter()
        .map(|a| {
            let fa = func.on_obj(a)?;
            if !dst.contains(&fa) {
                return Err(structural(format!(
                    "{} sends {a} to {fa}, not an object of {}",
                    func.label,
                    dst.label()
                )));
            }
            Ok(fa)
        })
        .collect::<Result<Vec<_>>>()?;
    let image = |i: usize, j: usize, f: &Mor| -> Result<Mor> {
        let ff = func.on_mor(f)?;
        expect_dom_cod(
            &ff,
            &images[i],
            &images[j],
            &format!("{} on a morphism", func.label),
        )?;
        Ok(ff)
    };

    let mut blocks = Blocks::new();
    blocks.push(vec![dom.len()]);
    r.check_family("functor-id", &blocks, budget, |_, idx| {
        let i = idx[0];
        let a = &dom.objects[i];
        let lhs = image(i, i, &src.identity(a)?)?;
        let rhs = dst.identity(&images[i])?;
        Ok(same(dst, &lhs, &rhs)?.map(|w| w.under("object", a)))
    })?;

    let (blocks, keys) = dom.paths2();
    r.check_family("functor-comp", &blocks, budget, |b, idx| {
        let (i, j, k) = keys[b];
        let f = &dom.homs[i][j][idx[0]];
        let g = &dom.homs[j][k][idx[1]];
        let lhs = image(i, k, &src.compose(g, f)?)?;
        let rhs = dst.compose(&image(j, k, g)?, &image(i, j, f)?)?;
        Ok(same(dst, &lhs, &rhs)?.map(|w| w.under("g", src.show(g)).under("f", src.show(f))))
    })?;
    Ok(r)
}

pub fn check_nat_trans(alpha: &NatTrans) -> Result<LawReport> {
    let (f, g) = (&alpha.src, &alpha.dst);
    if !same_category(&f.src, &g.src) || !same_category(&f.dst, &g.dst) {
        return Err(structural(format!(
            "{}: {} and {} are not parallel",
            alpha.label, f.label, g.label
        )));
    }
    let (src, dst) = (f.src.as_ref(), f.dst.as_ref());
    let dom = TestDomain::of(src)?;
    let budget = src.bounds().max_instances;
    let mut r = LawReport::new(format!("transformation {}", alpha.label));
    let comps = dom
        .objects
        .iter()
        .map(|a| {
            let c = alpha.at(a).map_err(|e| {
                structural(format!(
                    "{} has no usable component at {a}: {e}",
                    alpha.label
                ))
            })?;
            expect_dom_cod(
                &c,
                &f.on_obj(a)?,
                &g.on_obj(a)?,
                &format!("component of {} at {a}", alpha.label),
            )?;
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;

    let (blocks, keys) = dom.pairs();
    r.check_family("naturality", &blocks, budget, |b, idx| {
        let (i, j) = keys[b];
        let u = &dom.homs[i][j][idx[0]];
        let lhs = dst.compose(&g.on_mor(u)?, &comps[i])?;
        let rhs = dst.compose(&comps[j], &f.on_mor(u)?)?;
        Ok(same(dst, &lhs, &rhs)?.map(|w| w.under("u", src.show(u))))
    })?;
    Ok(r)
}

/// Records whether two parallel functors agree on the test domain of their
/// source, objects and morphisms.
pub fn check_functors_equal(r: &mut LawReport, id: &str, f: &Functor, g: &Functor) -> Result<()> {
    let src = f.src.as_ref();
    let dst = f.dst.as_ref();
    let dom = TestDomain::of(src)?;
    let mut ws = Vec::new();
    let mut checked = 0u64;
    for a in &dom.objects {
        checked += 1;
        let (fa, ga) = (f.on_obj(a)?, g.on_obj(a)?);
        if fa != ga {
            ws.push(Witness::new(&fa, &ga).with("object", a));
        }
    }
    let (blocks, keys) = dom.pairs();
    let budget = src.bounds().max_instances;
    let mut sub = LawReport::new("");
    sub.check_family(id, &blocks, budget, |b, idx| {
        let (i, j) = keys[b];
        let u = &dom.homs[i][j][idx[0]];
        Ok(same(dst, &f.on_mor(u)?, &g.on_mor(u)?)?.map(|w| w.under("u", src.show(u))))
    })?;
    r.record(id, checked, checked, ws);
    r.absorb("", sub);
    Ok(())
}

/// Records whether two parallel transformations have equal components on
/// the test objects of their source.
pub fn check_transformations_equal(
    r: &mut LawReport,
    id: &str,
    a: &NatTrans,
    b: &NatTrans,
) -> Result<()> {
    let dst = a.src.dst.as_ref();
    let objects = a.src.src.test_objects();
    let mut ws = Vec::new();
    for x in &objects {
        if let Some(w) = same(dst, &a.at(x)?, &b.at(x)?)? {
            ws.push(w.under("object", x));
        }
    }
    r.record(id, objects.len() as u64, objects.len() as u64, ws);
    Ok(())
}
