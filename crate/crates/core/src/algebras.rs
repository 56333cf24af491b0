//! Relative EM-algebras, their category over a finite carrier pool, and the
//! EM relative adjunction.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::cat::laws::TestDomain;
use crate::cat::{expect_dom_cod, same, CatHandle, Category, Diff, Functor, Mor, Obj, Tier};
use crate::error::{structural, Result};
use crate::relmonad::RelativeMonad;
use crate::report::{Blocks, LawReport, Witness};
use crate::sets::Bounds;
use crate::value::Value;

/// `(a, h: Ia -> M) ↦ h^m: Ta -> M`.
pub type ActionFn = Arc<dyn Fn(&Obj, &Mor) -> Result<Mor> + Send + Sync>;

/// An algebra with a single carrier `M ∈ C` and an action
/// `C(Ia, M) -> C(Ta, M)` for every `a ∈ C₀`.
#[derive(Clone)]
pub struct RelAlgebra {
    pub monad: RelativeMonad,
    pub carrier: Obj,
    act: ActionFn,
}

impl fmt::Debug for RelAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-algebra on {}", self.monad.label, self.carrier)
    }
}

impl RelAlgebra {
    pub fn new(
        monad: RelativeMonad,
        carrier: Obj,
        act: impl Fn(&Obj, &Mor) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        RelAlgebra {
            monad,
            carrier,
            act: Arc::new(act),
        }
    }

    /// `h^m`, type checked on both sides.
    pub fn act(&self, a: &Obj, h: &Mor) -> Result<Mor> {
        let ia = self.monad.base.on_obj(a)?;
        expect_dom_cod(h, &ia, &self.carrier, "algebra action input")?;
        let out = (self.act)(a, h)?;
        expect_dom_cod(
            &out,
            &self.monad.on_obj(a)?,
            &self.carrier,
            "algebra action output",
        )?;
        Ok(out)
    }
}

/// `(Ta, (-)†)`.
pub fn free_algebra(t: &RelativeMonad, a: &Obj) -> Result<RelAlgebra> {
    let carrier = t.on_obj(a)?;
    let (t1, a1) = (t.clone(), a.clone());
    Ok(RelAlgebra::new(t.clone(), carrier, move |x, h| {
        t1.ext(x, &a1, h)
    }))
}

/// `(h^m ∘ k)^m = h^m ∘ k†` and `h^m ∘ t_a = h` over the test domain.
pub fn check_rel_algebra(alg: &RelAlgebra) -> Result<LawReport> {
    let t = &alg.monad;
    let c = t.dst().as_ref();
    let objs = TestDomain::of(t.src().as_ref())?.objects;
    let budget = c.bounds().max_instances;
    let mut r = LawReport::new(format!("{alg:?}"));

    let into_m = objs
        .iter()
        .map(|a| c.hom(&t.base.on_obj(a)?, &alg.carrier))
        .collect::<Result<Vec<_>>>()?;
    let mut blocks = Blocks::new();
    for h in &into_m {
        blocks.push(vec![h.len()]);
    }
    r.check_family("unit", &blocks, budget, |i, idx| {
        let (a, h) = (&objs[i], &into_m[i][idx[0]]);
        let lhs = c.compose(&alg.act(a, h)?, &t.unit(a)?)?;
        Ok(same(c, &lhs, h)?.map(|w| w.under("a", a).under("h", c.show(h))))
    })?;

    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    let mut kl = HashMap::new();
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            let ks = c.hom(&t.base.on_obj(&objs[i])?, &t.on_obj(&objs[j])?)?;
            blocks.push(vec![ks.len(), into_m[j].len()]);
            kl.insert((i, j), ks);
            keys.push((i, j));
        }
    }
    r.check_family("assoc", &blocks, budget, |blk, idx| {
        let (i, j) = keys[blk];
        let (a, b) = (&objs[i], &objs[j]);
        let (k, h) = (&kl[&(i, j)][idx[0]], &into_m[j][idx[1]]);
        let hm = alg.act(b, h)?;
        let lhs = c.compose(&hm, &t.ext(a, b, k)?)?;
        let rhs = alg.act(a, &c.compose(&hm, k)?)?;
        Ok(same(c, &lhs, &rhs)?.map(|w| w.under("k", c.show(k)).under("h", c.show(h))))
    })?;
    Ok(r)
}

/// `f: M -> N` with `f ∘ h^m = (f ∘ h)^n`.
#[derive(Clone, Debug)]
pub struct RelAlgebraMorphism {
    pub src: RelAlgebra,
    pub dst: RelAlgebra,
    pub f: Mor,
}

pub fn check_rel_algebra_morphism(m: &RelAlgebraMorphism) -> Result<LawReport> {
    let t = &m.src.monad;
    let c = t.dst().as_ref();
    expect_dom_cod(&m.f, &m.src.carrier, &m.dst.carrier, "algebra morphism")?;
    let mut r = LawReport::new(format!(
        "algebra morphism {} -> {}",
        m.src.carrier, m.dst.carrier
    ));
    let mut ws = Vec::new();
    let mut n = 0u64;
    for a in TestDomain::of(t.src().as_ref())?.objects {
        for h in c.hom(&t.base.on_obj(&a)?, &m.src.carrier)?.iter() {
            n += 1;
            if let Some(w) = commutes(c, &m.src, &m.dst, &m.f, &a, h)? {
                ws.push(w);
            }
        }
    }
    r.record("commutes", n, n, ws);
    Ok(r)
}

fn commutes(
    c: &dyn Category,
    src: &RelAlgebra,
    dst: &RelAlgebra,
    f: &Mor,
    a: &Obj,
    h: &Mor,
) -> Result<Option<Witness>> {
    let lhs = c.compose(f, &src.act(a, h)?)?;
    let rhs = dst.act(a, &c.compose(f, h)?)?;
    Ok(same(c, &lhs, &rhs)?.map(|w| w.under("a", a).under("h", c.show(h))))
}

/// One slot of an action table: test object `a` and `h: Ia -> M`.
struct Slots {
    objs: Vec<Obj>,
    /// `C(Ia, M)` per test object.
    inputs: Vec<Arc<Vec<Mor>>>,
    input_index: Vec<HashMap<Value, usize>>,
    /// `C(Ta, M)` per test object.
    outputs: Vec<Arc<Vec<Mor>>>,
    /// Unit-law candidates per slot, as indices into `outputs`.
    candidates: Vec<Vec<Vec<usize>>>,
}

impl Slots {
    fn new(t: &RelativeMonad, objs: &[Obj], carrier: &Obj) -> Result<Self> {
        let c = t.dst().as_ref();
        let mut s = Slots {
            objs: objs.to_vec(),
            inputs: Vec::new(),
            input_index: Vec::new(),
            outputs: Vec::new(),
            candidates: Vec::new(),
        };
        for a in objs {
            let (ia, ta) = (t.base.on_obj(a)?, t.on_obj(a)?);
            if !c.exhaustive(&ia, carrier) || !c.exhaustive(&ta, carrier) {
                return Err(structural(format!(
                    "carrier {carrier} needs finite hom-sets from {ia} and {ta}"
                )));
            }
            let inputs = c.hom(&ia, carrier)?;
            let outputs = c.hom(&ta, carrier)?;
            let unit = t.unit(a)?;
            let mut index = HashMap::new();
            for (i, h) in inputs.iter().enumerate() {
                index.insert(c.key(h)?, i);
            }
            let mut cands = vec![Vec::new(); inputs.len()];
            for (v, out) in outputs.iter().enumerate() {
                let h = c.key(&c.compose(out, &unit)?)?;
                if let Some(&i) = index.get(&h) {
                    cands[i].push(v);
                }
            }
            s.inputs.push(inputs);
            s.input_index.push(index);
            s.outputs.push(outputs);
            s.candidates.push(cands);
        }
        Ok(s)
    }
}

/// Every action table on `carrier` satisfying the unit and associativity
/// laws over the test objects, found by backtracking with forward
/// propagation of the associativity law.
fn enumerate_actions(t: &RelativeMonad, s: &Slots) -> Result<Vec<Vec<Vec<usize>>>> {
    let c = t.dst().as_ref();
    let bounds = c.bounds();
    let objs = &s.objs;
    let n = objs.len();
    // kls[a][b] = [(k, k†)] for k: Ia -> Tb.
    let mut kls = vec![Vec::new(); n];
    for (i, a) in objs.iter().enumerate() {
        let ia = t.base.on_obj(a)?;
        for b in objs {
            let ks = c.hom(&ia, &t.on_obj(b)?)?;
            let pairs = ks
                .iter()
                .map(|k| Ok((k.clone(), t.ext(a, b, k)?)))
                .collect::<Result<Vec<_>>>()?;
            kls[i].push(pairs);
        }
    }
    let out_keys: Vec<HashMap<Value, usize>> = s
        .outputs
        .iter()
        .map(|outs| {
            outs.iter()
                .enumerate()
                .map(|(i, v)| Ok((c.key(v)?, i)))
                .collect::<Result<HashMap<_, _>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut assign: Vec<Vec<Option<usize>>> =
        s.inputs.iter().map(|h| vec![None; h.len()]).collect();
    let order: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..s.inputs[a].len()).map(move |h| (a, h)))
        .collect();
    let mut found = Vec::new();

    // Assigns (a, h) := v and everything it forces; returns the trail or None on conflict.
    let propagate = |assign: &mut Vec<Vec<Option<usize>>>,
                     a: usize,
                     h: usize,
                     v: usize|
     -> Result<Option<Vec<(usize, usize)>>> {
        let mut trail = Vec::new();
        let mut queue = vec![(a, h, v)];
        while let Some((b, h, v)) = queue.pop() {
            match assign[b][h] {
                Some(w) if w == v => continue,
                Some(_) => {
                    undo(assign, &trail);
                    return Ok(None);
                }
                None => {
                    if !s.candidates[b][h].contains(&v) {
                        undo(assign, &trail);
                        return Ok(None);
                    }
                    assign[b][h] = Some(v);
                    trail.push((b, h));
                }
            }
            let act = &s.outputs[b][v];
            for (a2, row) in kls.iter().enumerate() {
                for (k, kd) in &row[b] {
                    let target = s.input_index[a2][&c.key(&c.compose(act, k)?)?];
                    let value = out_keys[a2][&c.key(&c.compose(act, kd)?)?];
                    queue.push((a2, target, value));
                }
            }
        }
        Ok(Some(trail))
    };

    fn undo(assign: &mut [Vec<Option<usize>>], trail: &[(usize, usize)]) {
        for &(a, h) in trail {
            assign[a][h] = None;
        }
    }

    fn search(
        pos: usize,
        order: &[(usize, usize)],
        assign: &mut Vec<Vec<Option<usize>>>,
        s: &Slots,
        found: &mut Vec<Vec<Vec<usize>>>,
        bounds: &Bounds,
        propagate: &dyn Fn(
            &mut Vec<Vec<Option<usize>>>,
            usize,
            usize,
            usize,
        ) -> Result<Option<Vec<(usize, usize)>>>,
    ) -> Result<()> {
        let Some(&(a, h)) = order[pos..].iter().find(|&&(a, h)| assign[a][h].is_none()) else {
            found.push(
                assign
                    .iter()
                    .map(|row| row.iter().map(|v| v.expect("complete")).collect())
                    .collect(),
            );
            bounds.guard(|| "algebra structures".to_string(), found.len() as u128)?;
            return Ok(());
        };
        let next = order
            .iter()
            .position(|&p| p == (a, h))
            .expect("slot in order");
        for &v in &s.candidates[a][h] {
            if let Some(trail) = propagate(assign, a, h, v)? {
                search(next + 1, order, assign, s, found, bounds, propagate)?;
                undo(assign, &trail);
            }
        }
        Ok(())
    }

    search(0, &order, &mut assign, s, &mut found, &bounds, &propagate)?;
    Ok(found)
}

/// The algebra with a tabulated action over the test objects.
fn tabulated(
    t: &RelativeMonad,
    s: &Arc<Slots>,
    carrier: &Obj,
    table: Vec<Vec<usize>>,
) -> RelAlgebra {
    let (s, t1) = (s.clone(), t.clone());
    RelAlgebra::new(t.clone(), carrier.clone(), move |a, h| {
        let i = s
            .objs
            .iter()
            .position(|o| o == a)
            .ok_or_else(|| structural(format!("{a} is outside the tabulated test domain")))?;
        let key = t1.dst().key(h)?;
        let j = s.input_index[i].get(&key).ok_or_else(|| {
            structural(format!(
                "{} is not a morphism into the carrier",
                t1.dst().show(h)
            ))
        })?;
        Ok(s.outputs[i][table[i][*j]].clone())
    })
}

/// `Obj::Algebra` for an algebra, keyed by its action table over `objs`.
pub fn algebra_object(alg: &RelAlgebra, objs: &[Obj]) -> Result<Obj> {
    let t = &alg.monad;
    let c = t.dst().as_ref();
    let mut rows = Vec::new();
    for a in objs {
        let mut row = Vec::new();
        for h in c.hom(&t.base.on_obj(a)?, &alg.carrier)?.iter() {
            row.push(c.key(&alg.act(a, h)?)?);
        }
        rows.push(Value::Tuple(row));
    }
    Ok(Obj::Algebra {
        carrier: Box::new(alg.carrier.clone()),
        structure: Value::Tuple(rows),
    })
}

/// The category of algebras whose carriers lie in a declared pool, with
/// morphisms the underlying maps commuting with the actions.
pub struct EmCategory {
    t: RelativeMonad,
    objs: Vec<Obj>,
    algebras: Vec<(Obj, RelAlgebra)>,
    index: HashMap<Obj, usize>,
    homs: Mutex<HashMap<(usize, usize), Arc<Vec<Mor>>>>,
}

impl fmt::Debug for EmCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} algebras)", self.label(), self.algebras.len())
    }
}

impl EmCategory {
    pub fn monad(&self) -> &RelativeMonad {
        &self.t
    }

    pub fn algebras(&self) -> impl Iterator<Item = (&Obj, &RelAlgebra)> {
        self.algebras.iter().map(|(o, a)| (o, a))
    }

    pub fn algebra(&self, o: &Obj) -> Result<&RelAlgebra> {
        self.index
            .get(o)
            .map(|&i| &self.algebras[i].1)
            .ok_or_else(|| structural(format!("{o} is not an algebra of {}", self.label())))
    }

    /// The object of `alg`, if its carrier is in the pool.
    pub fn find(&self, alg: &RelAlgebra) -> Result<Option<Obj>> {
        let o = algebra_object(alg, &self.objs)?;
        Ok(self.index.contains_key(&o).then_some(o))
    }

    fn pair(&self, f: &Mor) -> Result<(usize, usize)> {
        let i = *self
            .index
            .get(&f.dom)
            .ok_or_else(|| structural(format!("{} is not an algebra", f.dom)))?;
        let j = *self
            .index
            .get(&f.cod)
            .ok_or_else(|| structural(format!("{} is not an algebra", f.cod)))?;
        Ok((i, j))
    }

    fn is_morphism(&self, src: &RelAlgebra, dst: &RelAlgebra, f: &Mor) -> Result<bool> {
        let c = self.t.dst().as_ref();
        for a in &self.objs {
            for h in c.hom(&self.t.base.on_obj(a)?, &src.carrier)?.iter() {
                if commutes(c, src, dst, f, a, h)?.is_some() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl Category for EmCategory {
    fn label(&self) -> String {
        format!("Alg({})", self.t.label)
    }

    fn tier(&self) -> Tier {
        Tier::Computable
    }

    fn bounds(&self) -> Bounds {
        self.t.dst().bounds()
    }

    fn test_objects(&self) -> Vec<Obj> {
        self.algebras.iter().map(|(o, _)| o.clone()).collect()
    }

    fn contains(&self, a: &Obj) -> bool {
        self.index.contains_key(a)
    }

    fn hom(&self, a: &Obj, b: &Obj) -> Result<Arc<Vec<Mor>>> {
        let (i, j) = (
            *self
                .index
                .get(a)
                .ok_or_else(|| structural(format!("{a} is not an algebra")))?,
            *self
                .index
                .get(b)
                .ok_or_else(|| structural(format!("{b} is not an algebra")))?,
        );
        if let Some(h) = self.homs.lock().expect("hom cache poisoned").get(&(i, j)) {
            return Ok(h.clone());
        }
        let (src, dst) = (&self.algebras[i].1, &self.algebras[j].1);
        let mut out = Vec::new();
        for f in self.t.dst().hom(&src.carrier, &dst.carrier)?.iter() {
            if self.is_morphism(src, dst, f)? {
                out.push(Mor::wrap(a.clone(), b.clone(), f.clone()));
            }
        }
        let h = Arc::new(out);
        self.homs
            .lock()
            .expect("hom cache poisoned")
            .insert((i, j), h.clone());
        Ok(h)
    }

    fn identity(&self, a: &Obj) -> Result<Mor> {
        let alg = self.algebra(a)?;
        Ok(Mor::wrap(
            a.clone(),
            a.clone(),
            self.t.dst().identity(&alg.carrier)?,
        ))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        if f.cod != g.dom {
            return Err(structural(format!(
                "cannot compose algebra maps {} -> {} after {} -> {}",
                g.dom, g.cod, f.dom, f.cod
            )));
        }
        let under = self.t.dst().compose(g.inner(), f.inner())?;
        Ok(Mor::wrap(f.dom.clone(), g.cod.clone(), under))
    }

    fn compare(&self, f: &Mor, g: &Mor) -> Result<Option<Diff>> {
        expect_dom_cod(g, &f.dom, &f.cod, "comparison")?;
        self.t.dst().compare(f.inner(), g.inner())
    }

    fn key(&self, f: &Mor) -> Result<Value> {
        self.t.dst().key(f.inner())
    }

    fn show(&self, f: &Mor) -> String {
        self.t.dst().show(f.inner())
    }

    fn validate(&self, f: &Mor) -> Result<()> {
        if !matches!(f.body, crate::cat::Body::Wrap(_)) {
            return Err(structural("algebra morphisms wrap an underlying morphism"));
        }
        let (i, j) = self.pair(f)?;
        let (src, dst) = (&self.algebras[i].1, &self.algebras[j].1);
        expect_dom_cod(f.inner(), &src.carrier, &dst.carrier, "algebra morphism")?;
        self.t.dst().validate(f.inner())?;
        if !self.is_morphism(src, dst, f.inner())? {
            return Err(structural(format!(
                "{} does not commute with the actions",
                self.show(f)
            )));
        }
        Ok(())
    }
}

/// The algebra category over `pool` with its forgetful functor `U`.
#[derive(Clone)]
pub struct Em {
    pub cat: Arc<EmCategory>,
    pub u: Functor,
}

impl fmt::Debug for Em {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&*self.cat, f)
    }
}

impl Em {
    pub fn handle(&self) -> CatHandle {
        self.cat.clone()
    }
}

/// Enumerates every algebra on each pool carrier over the test objects of
/// `C₀`. Pools larger than the enumeration cap are a resource error.
pub fn em_category(t: &RelativeMonad, pool: &[Obj]) -> Result<Em> {
    let c = t.dst();
    let bounds = c.bounds();
    bounds.guard(|| "carrier pool".to_string(), pool.len() as u128)?;
    for m in pool {
        if !c.contains(m) {
            return Err(structural(format!(
                "pool carrier {m} is not an object of {}",
                c.label()
            )));
        }
    }
    let objs = TestDomain::of(t.src().as_ref())?.objects;
    let mut algebras = Vec::new();
    for m in pool {
        let slots = Arc::new(Slots::new(t, &objs, m)?);
        for table in enumerate_actions(t, &slots)? {
            let alg = tabulated(t, &slots, m, table);
            algebras.push((algebra_object(&alg, &objs)?, alg));
        }
        bounds.guard(
            || "algebras in the pool".to_string(),
            algebras.len() as u128,
        )?;
    }
    let index = algebras
        .iter()
        .enumerate()
        .map(|(i, (o, _))| (o.clone(), i))
        .collect();
    let cat = Arc::new(EmCategory {
        t: t.clone(),
        objs,
        algebras,
        index,
        homs: Mutex::new(HashMap::new()),
    });
    let handle: CatHandle = cat.clone();
    let cat1 = cat.clone();
    let u = Functor::new(
        "U",
        handle,
        c.clone(),
        move |a| Ok(cat1.algebra(a)?.carrier.clone()),
        |f| Ok(f.inner().clone()),
    );
    Ok(Em { cat, u })
}

/// The bijection `Alg(Fx, N) ≅ C(Ix, UN)` given by `f̄ ↦ f̄ ∘ t_x` and
/// `f ↦ f^n`, `UF = T` on objects, and recovery of `T` as `k ↦ U(k♭)`.
/// Only test objects `x` with `Tx` in the pool are covered; the report notes
/// the others.
pub fn check_em_relative_adjunction(t: &RelativeMonad, pool: &[Obj]) -> Result<LawReport> {
    let em = em_category(t, pool)?;
    let c = t.dst().as_ref();
    let cat = &em.cat;
    let mut r = LawReport::new(format!("EM relative adjunction of {}", t.label));
    let objs = TestDomain::of(t.src().as_ref())?.objects;
    let mut free = Vec::new();
    let mut missing = Vec::new();
    for x in &objs {
        let fx = free_algebra(t, x)?;
        match cat.find(&fx)? {
            Some(o) => free.push((x.clone(), o)),
            None if pool.contains(&fx.carrier) => {
                missing.push(Witness::new("free algebra missing", &fx.carrier).under("x", x));
            }
            None => r.note(format!(
                "{x}: free carrier {} outside the pool, not covered",
                fx.carrier
            )),
        }
    }
    let n = (free.len() + missing.len()) as u64;
    r.record("free-in-pool", n, n, missing);

    let (mut n1, mut w1) = (0u64, Vec::new());
    let (mut n2, mut w2) = (0u64, Vec::new());
    let (mut n3, mut w3) = (0u64, Vec::new());
    for (x, fx) in &free {
        let ix = t.base.on_obj(x)?;
        let tx = t.unit(x)?;
        if cat.algebra(fx)?.carrier != t.on_obj(x)? {
            r.record(
                "UF=T",
                1,
                1,
                vec![Witness::new(&cat.algebra(fx)?.carrier, t.on_obj(x)?).under("x", x)],
            );
        } else {
            r.record("UF=T", 1, 1, vec![]);
        }
        for (nobj, nalg) in cat.algebras() {
            let maps = cat.hom(fx, nobj)?;
            let keys: HashMap<Value, usize> = maps
                .iter()
                .enumerate()
                .map(|(i, f)| Ok((cat.key(f)?, i)))
                .collect::<Result<_>>()?;
            for fbar in maps.iter() {
                n1 += 1;
                let sharp = c.compose(fbar.inner(), &tx)?;
                let back = nalg.act(x, &sharp)?;
                if let Some(w) = same(c, &back, fbar.inner())? {
                    w1.push(w.under("x", x).under("N", nobj));
                }
            }
            for f in c.hom(&ix, &nalg.carrier)?.iter() {
                n2 += 1;
                let flat = nalg.act(x, f)?;
                if !keys.contains_key(&c.key(&flat)?) {
                    w2.push(
                        Witness::new(c.show(&flat), "no algebra morphism")
                            .under("f", c.show(f))
                            .under("N", nobj),
                    );
                    continue;
                }
                if let Some(w) = same(c, &c.compose(&flat, &tx)?, f)? {
                    w2.push(w.under("f", c.show(f)).under("N", nobj));
                }
            }
        }
        // Recovered extension: k ↦ U(k♭) for k: Iy -> Tx, computed in Fx.
        let falg = cat.algebra(fx)?;
        for y in &objs {
            for k in c.hom(&t.base.on_obj(y)?, &falg.carrier)?.iter() {
                n3 += 1;
                if let Some(w) = same(c, &falg.act(y, k)?, &t.ext(y, x, k)?)? {
                    w3.push(w.under("k", c.show(k)));
                }
            }
        }
    }
    r.record("flat-sharp", n1, n1, w1);
    r.record("sharp-flat", n2, n2, w2);
    r.record("recovers-T", n3, n3, w3);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{powerset_relmonad, vecspace_relmonad};
    use crate::semiring::Semiring;
    use crate::sets::SetDesc;

    #[test]
    fn free_algebras_are_lawful() {
        let t = powerset_relmonad(2, Bounds::default()).unwrap();
        for a in t.src().test_objects() {
            let r = check_rel_algebra(&free_algebra(&t, &a).unwrap()).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn powerset_free_algebra_acts_by_union() {
        let t = powerset_relmonad(2, Bounds::default()).unwrap();
        let two = Obj::numeral(2);
        let alg = free_algebra(&t, &two).unwrap();
        let c = t.dst();
        for f in c.hom(&two, &alg.carrier).unwrap().iter() {
            let act = alg.act(&two, f).unwrap();
            for a in SetDesc::pow(SetDesc::numeral(2))
                .elements(&Bounds::default())
                .unwrap()
                .iter()
            {
                let mut union = std::collections::BTreeSet::new();
                for i in a.as_set().unwrap() {
                    union.extend(f.apply(i).as_set().unwrap().iter().cloned());
                }
                assert_eq!(act.apply(a), Value::Set(union));
            }
        }
    }

    #[test]
    fn zero_action_fails_unit() {
        let r = Semiring::zmod(2);
        let t = vecspace_relmonad(r.clone(), 1, Bounds::default()).unwrap();
        let m = Obj::Set(crate::instances::vecspace::space(1, &r));
        let m1 = m.clone();
        let alg = RelAlgebra::new(t.clone(), m.clone(), move |a, _| {
            let ta = crate::instances::vecspace::space(a.set()?.as_numeral().unwrap(), &r);
            Ok(Mor::map(Obj::Set(ta), m1.clone(), |_| {
                crate::instances::vecspace::vector(&[0])
            }))
        });
        let rep = check_rel_algebra(&alg).unwrap();
        assert!(rep.failed("unit"));
    }
}
