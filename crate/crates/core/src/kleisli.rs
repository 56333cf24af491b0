//! Kleisli categories of relative monads, relative right modules, and the
//! Kleisli relative adjunction.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::cat::laws::{check_functors_equal, TestDomain};
use crate::cat::{
    expect_dom_cod, same, CatHandle, Category, Diff, Functor, Mor, NatTrans, Obj, Tier,
};
use crate::error::{structural, Result};
use crate::operators::check_relative_adjunction;
use crate::relmonad::{check_relmonads_equal, relmonad_from_adjunction, RelativeMonad};
use crate::report::{Blocks, LawReport};
use crate::sets::Bounds;
use crate::value::Value;

/// `Kl(T)`: objects of `C₀`, `Kl(x, y) = C(Ix, Ty)`, identities `t_x`,
/// composition `g† ∘ f`. Morphisms wrap their underlying `C`-morphism.
pub struct KleisliCategory {
    t: RelativeMonad,
    homs: Mutex<HashMap<(Obj, Obj), Arc<Vec<Mor>>>>,
}

impl KleisliCategory {
    pub fn new(t: RelativeMonad) -> Self {
        KleisliCategory {
            t,
            homs: Mutex::new(HashMap::new()),
        }
    }

    pub fn monad(&self) -> &RelativeMonad {
        &self.t
    }

    /// Retypes `k: Ix -> Ty` as a Kleisli morphism `x -> y`.
    pub fn lift(&self, x: &Obj, y: &Obj, k: Mor) -> Result<Mor> {
        expect_dom_cod(
            &k,
            &self.t.base.on_obj(x)?,
            &self.t.on_obj(y)?,
            "Kleisli morphism",
        )?;
        Ok(Mor::wrap(x.clone(), y.clone(), k))
    }
}

impl Category for KleisliCategory {
    fn label(&self) -> String {
        format!("Kl({})", self.t.label)
    }

    fn tier(&self) -> Tier {
        Tier::Computable
    }

    fn bounds(&self) -> Bounds {
        self.t.src().bounds()
    }

    fn test_objects(&self) -> Vec<Obj> {
        self.t.src().test_objects()
    }

    fn contains(&self, a: &Obj) -> bool {
        self.t.src().contains(a)
    }

    fn hom(&self, a: &Obj, b: &Obj) -> Result<Arc<Vec<Mor>>> {
        let key = (a.clone(), b.clone());
        if let Some(h) = self.homs.lock().expect("hom cache poisoned").get(&key) {
            return Ok(h.clone());
        }
        let under = self
            .t
            .dst()
            .hom(&self.t.base.on_obj(a)?, &self.t.on_obj(b)?)?;
        let h = Arc::new(
            under
                .iter()
                .map(|k| Mor::wrap(a.clone(), b.clone(), k.clone()))
                .collect::<Vec<_>>(),
        );
        self.homs
            .lock()
            .expect("hom cache poisoned")
            .insert(key, h.clone());
        Ok(h)
    }

    fn exhaustive(&self, a: &Obj, b: &Obj) -> bool {
        match (self.t.base.on_obj(a), self.t.on_obj(b)) {
            (Ok(ia), Ok(tb)) => self.t.dst().exhaustive(&ia, &tb),
            _ => false,
        }
    }

    fn identity(&self, a: &Obj) -> Result<Mor> {
        Ok(Mor::wrap(a.clone(), a.clone(), self.t.unit(a)?))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        if f.cod != g.dom {
            return Err(structural(format!(
                "cannot compose Kleisli {} -> {} after {} -> {}",
                g.dom, g.cod, f.dom, f.cod
            )));
        }
        let gdag = self.t.ext(&g.dom, &g.cod, g.inner())?;
        let under = self.t.dst().compose(&gdag, f.inner())?;
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
            return Err(structural("Kleisli morphisms wrap an underlying morphism"));
        }
        expect_dom_cod(
            f.inner(),
            &self.t.base.on_obj(&f.dom)?,
            &self.t.on_obj(&f.cod)?,
            "Kleisli morphism",
        )?;
        self.t.dst().validate(f.inner())
    }
}

/// `Kl(T)` with `J₀: C₀ -> Kl(T)`, `U: Kl(T) -> C` and `t: I ⇒ UJ₀`.
#[derive(Clone)]
pub struct Kleisli {
    pub cat: Arc<KleisliCategory>,
    pub j0: Functor,
    pub u: Functor,
    pub unit: NatTrans,
}

impl fmt::Debug for Kleisli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cat.label())
    }
}

impl Kleisli {
    pub fn handle(&self) -> CatHandle {
        self.cat.clone()
    }

    pub fn monad(&self) -> &RelativeMonad {
        self.cat.monad()
    }
}

pub fn kleisli_category(t: &RelativeMonad) -> Kleisli {
    let cat = Arc::new(KleisliCategory::new(t.clone()));
    let handle: CatHandle = cat.clone();
    let (t1, t2, t3, t4) = (t.clone(), t.clone(), t.clone(), t.clone());
    let j0 = Functor::new(
        "J0",
        t.src().clone(),
        handle.clone(),
        |x| Ok(x.clone()),
        move |u| {
            let under = t1.dst().compose(&t1.unit(&u.cod)?, &t1.base.on_mor(u)?)?;
            Ok(Mor::wrap(u.dom.clone(), u.cod.clone(), under))
        },
    );
    let u = Functor::new(
        "U",
        handle,
        t.dst().clone(),
        move |x| t2.on_obj(x),
        move |f| t3.ext(&f.dom, &f.cod, f.inner()),
    );
    let unit = NatTrans::new(
        "t",
        t.base.clone(),
        Functor::compose(&u, &j0).expect("U after J0 is typed"),
        move |x| t4.unit(x),
    );
    Kleisli { cat, j0, u, unit }
}

pub type ActFn = Arc<dyn Fn(&Obj, &Obj, &Mor) -> Result<Mor> + Send + Sync>;

/// A right `T`-module: `M: C₀ -> K` with `(−)_m: C(Ia, Tb) -> K(Ma, Mb)`.
#[derive(Clone)]
pub struct RelRightModule {
    pub label: String,
    pub monad: RelativeMonad,
    pub m: Functor,
    act: ActFn,
}

impl RelRightModule {
    pub fn new(
        label: impl Into<String>,
        monad: RelativeMonad,
        m: Functor,
        act: impl Fn(&Obj, &Obj, &Mor) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        RelRightModule {
            label: label.into(),
            monad,
            m,
            act: Arc::new(act),
        }
    }

    pub fn act(&self, a: &Obj, b: &Obj, k: &Mor) -> Result<Mor> {
        let out = (self.act)(a, b, k)?;
        expect_dom_cod(
            &out,
            &self.m.on_obj(a)?,
            &self.m.on_obj(b)?,
            &format!("action of {}", self.label),
        )?;
        Ok(out)
    }

    pub fn target(&self) -> &CatHandle {
        &self.m.dst
    }

    /// `J₀` with the action `k ↦ k` retyped into `Kl(T)`.
    pub fn tautological(kl: &Kleisli) -> Self {
        RelRightModule::new("J0", kl.monad().clone(), kl.j0.clone(), |a, b, k| {
            Ok(Mor::wrap(a.clone(), b.clone(), k.clone()))
        })
    }

    /// `(NT, N(−)†)` for a functor `N: C -> K`.
    pub fn of_functor(t: &RelativeMonad, n: &Functor) -> Result<Self> {
        let (t1, n1) = (t.clone(), n.clone());
        Ok(RelRightModule::new(
            format!("{}T", n.label),
            t.clone(),
            Functor::compose(n, &t.functor())?,
            move |a, b, k| n1.on_mor(&t1.ext(a, b, k)?),
        ))
    }
}

/// `act(t_a) = id_{Ma}` and `act(k) ∘ act(h) = act(k† ∘ h)`.
pub fn check_right_module(m: &RelRightModule) -> Result<LawReport> {
    let t = &m.monad;
    let (c0, c, k) = (t.src().as_ref(), t.dst().as_ref(), m.target().as_ref());
    let objs = TestDomain::of(c0)?.objects;
    let budget = c0.bounds().max_instances;
    let mut r = LawReport::new(format!("right module {}", m.label));
    let mut ws = Vec::new();
    for a in &objs {
        let lhs = m.act(a, a, &t.unit(a)?)?;
        if let Some(w) = same(k, &lhs, &k.identity(&m.m.on_obj(a)?)?)? {
            ws.push(w.under("a", a));
        }
    }
    r.record("unit", objs.len() as u64, objs.len() as u64, ws);

    let kl = objs
        .iter()
        .map(|a| {
            let ia = t.base.on_obj(a)?;
            objs.iter()
                .map(|b| c.hom(&ia, &t.on_obj(b)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let n = objs.len();
    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                blocks.push(vec![kl[i][j].len(), kl[j][l].len()]);
                keys.push((i, j, l));
            }
        }
    }
    r.check_family("assoc", &blocks, budget, |blk, idx| {
        let (i, j, l) = keys[blk];
        let (a, b, cc) = (&objs[i], &objs[j], &objs[l]);
        let h = &kl[i][j][idx[0]];
        let g = &kl[j][l][idx[1]];
        let lhs = k.compose(&m.act(b, cc, g)?, &m.act(a, b, h)?)?;
        let rhs = m.act(a, cc, &c.compose(&t.ext(b, cc, g)?, h)?)?;
        Ok(same(k, &lhs, &rhs)?.map(|w| w.under("k", c.show(g)).under("h", c.show(h))))
    })?;
    Ok(r)
}

/// `M̄: Kl(T) -> K`, `M̄x = Mx`, `M̄f = f_m`.
pub fn module_to_functor(m: &RelRightModule, kl: &Kleisli) -> Functor {
    let (m1, m2) = (m.clone(), m.clone());
    Functor::new(
        format!("{}-bar", m.label),
        kl.handle(),
        m.target().clone(),
        move |x| m1.m.on_obj(x),
        move |f| m2.act(&f.dom, &f.cod, f.inner()),
    )
}

/// `M = M̄J₀` with the action of `M̄` on Kleisli morphisms.
pub fn functor_to_module(mbar: &Functor, kl: &Kleisli) -> Result<RelRightModule> {
    if mbar.src.label() != kl.cat.label() {
        return Err(structural(format!(
            "{} is not a functor out of {}",
            mbar.label,
            kl.cat.label()
        )));
    }
    let m1 = mbar.clone();
    Ok(RelRightModule::new(
        format!("{}J0", mbar.label),
        kl.monad().clone(),
        Functor::compose(mbar, &kl.j0)?,
        move |a, b, k| m1.on_mor(&Mor::wrap(a.clone(), b.clone(), k.clone())),
    ))
}

/// Records whether two modules agree: the functors and the actions.
pub fn check_modules_equal(
    r: &mut LawReport,
    id: &str,
    a: &RelRightModule,
    b: &RelRightModule,
) -> Result<()> {
    check_functors_equal(r, &format!("{id}/functor"), &a.m, &b.m)?;
    let t = &a.monad;
    let (c0, c, k) = (t.src().as_ref(), t.dst().as_ref(), a.target().as_ref());
    let objs = c0.test_objects();
    let mut ws = Vec::new();
    let mut n = 0u64;
    for x in &objs {
        for y in &objs {
            for h in c.hom(&t.base.on_obj(x)?, &t.on_obj(y)?)?.iter() {
                n += 1;
                if let Some(w) = same(k, &a.act(x, y, h)?, &b.act(x, y, h)?)? {
                    ws.push(w.under("k", c.show(h)));
                }
            }
        }
    }
    r.record(&format!("{id}/action"), n, n, ws);
    Ok(())
}

/// `J₀ ⊣_I U` as a relative adjunction, and recovery of `T` from it.
pub fn check_kleisli_relative_adjunction(t: &RelativeMonad) -> Result<LawReport> {
    let kl = kleisli_category(t);
    let mut r = LawReport::new(format!("Kleisli relative adjunction of {}", t.label));
    r.absorb(
        "adjunction",
        check_relative_adjunction(&kl.j0, &kl.u, &kl.unit)?,
    );
    if r.passed() {
        let back = relmonad_from_adjunction(&kl.j0, &kl.u, &kl.unit)?;
        check_relmonads_equal(&mut r, "recovers-T", &back, t)?;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_category, check_functor, PresentedCategory};

    #[test]
    fn identity_monad_kleisli_is_the_base() {
        let c: CatHandle = Arc::new(
            PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap(),
        );
        let t = RelativeMonad::identity(c.clone());
        let kl = kleisli_category(&t);
        assert!(check_category(kl.cat.as_ref()).unwrap().passed());
        assert!(check_functor(&kl.j0).unwrap().passed());
        assert!(check_functor(&kl.u).unwrap().passed());
        for a in c.test_objects() {
            for b in c.test_objects() {
                assert_eq!(
                    kl.cat.hom(&a, &b).unwrap().len(),
                    c.hom(&a, &b).unwrap().len()
                );
            }
        }
        assert!(check_kleisli_relative_adjunction(&t).unwrap().passed());
    }

    #[test]
    fn tautological_module_round_trips() {
        let c: CatHandle =
            Arc::new(PresentedCategory::from_preorder("2", &["a", "b"], |i, j| i <= j).unwrap());
        let t = RelativeMonad::identity(c);
        let kl = kleisli_category(&t);
        let m = RelRightModule::tautological(&kl);
        assert!(check_right_module(&m).unwrap().passed());
        let mbar = module_to_functor(&m, &kl);
        assert!(check_functor(&mbar).unwrap().passed());
        let back = functor_to_module(&mbar, &kl).unwrap();
        let mut r = LawReport::new("round trip");
        check_modules_equal(&mut r, "module", &m, &back).unwrap();
        assert!(r.passed(), "{r}");
    }
}
