//! Compatible monad pairs, relative distributive laws, liftings to algebras
//! and extensions to the Kleisli category, with the conversions between them.

use std::fmt;
use std::sync::Arc;

use crate::cat::laws::{check_functors_equal, TestDomain};
use crate::cat::{
    check_nat_trans, expect_dom_cod, same, same_category, Functor, Mor, NatTrans, Obj,
};
use crate::cells::{RelMonadMorphism, RelMonadTransformation};
use crate::error::{structural, Result};
use crate::monad::{check_monad, Monad};
use crate::relmonad::RelativeMonad;
use crate::report::{Blocks, LawReport};

pub mod extension;
pub mod lifting;

pub use extension::{
    check_extensions_equal, check_kleisli_extension, distr_to_kleisli_extension,
    kleisli_extension_to_distr, KleisliExtension,
};
pub use lifting::{
    check_lifting, check_liftings_equal, distr_to_lifting, enumerate_algebras, lifting_to_distr,
    LiftingToAlgebras, S0Algebra,
};

/// Monads `S` on `C` and `S₀` on `C₀` glued along `I` with `SI = IS₀`,
/// `mI = Im₀` and `sI = Is₀`. `pool` lists the `S₀`-algebras used to test
/// liftings.
#[derive(Clone)]
pub struct CompatiblePair {
    pub base: Functor,
    pub s: Monad,
    pub s0: Monad,
    pub pool: Vec<S0Algebra>,
}

impl fmt::Debug for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) along {}",
            self.s.label, self.s0.label, self.base.label
        )
    }
}

impl CompatiblePair {
    pub fn new(base: Functor, s: Monad, s0: Monad, pool: Vec<S0Algebra>) -> Result<Self> {
        if !same_category(s.cat(), &base.dst) || !same_category(s0.cat(), &base.src) {
            return Err(structural(format!(
                "monads {} on {} and {} on {} do not sit along {}",
                s.label,
                s.cat().label(),
                s0.label,
                s0.cat().label(),
                base.label
            )));
        }
        Ok(CompatiblePair { base, s, s0, pool })
    }

    /// `(S₀A, m₀A)`.
    pub fn free(&self, a: &Obj) -> Result<S0Algebra> {
        Ok(S0Algebra {
            carrier: self.s0.on_obj(a)?,
            structure: self.s0.mult(a)?,
        })
    }
}

/// Both monads' laws and the three gluing equations.
pub fn check_compatible_pair(p: &CompatiblePair) -> Result<LawReport> {
    let mut r = LawReport::new(format!("compatible pair {p:?}"));
    r.absorb("S", check_monad(&p.s)?);
    r.absorb("S0", check_monad(&p.s0)?);
    check_functors_equal(
        &mut r,
        "SI=IS0",
        &Functor::compose(&p.s.functor, &p.base)?,
        &Functor::compose(&p.base, &p.s0.functor)?,
    )?;
    let c = p.s.cat().as_ref();
    let objs = TestDomain::of(p.s0.cat().as_ref())?.objects;
    let (mut wm, mut ws) = (Vec::new(), Vec::new());
    for a in &objs {
        let ia = p.base.on_obj(a)?;
        if let Some(w) = same(c, &p.s.mult(&ia)?, &p.base.on_mor(&p.s0.mult(a)?)?)? {
            wm.push(w.under("A", a));
        }
        if let Some(w) = same(c, &p.s.unit(&ia)?, &p.base.on_mor(&p.s0.unit(a)?)?)? {
            ws.push(w.under("A", a));
        }
    }
    let n = objs.len() as u64;
    r.record("mI=Im0", n, n, wm);
    r.record("sI=Is0", n, n, ws);
    Ok(r)
}

pub type ComponentFn = Arc<dyn Fn(&Obj) -> Result<Mor> + Send + Sync>;

/// `d_A: S(TA) -> T(S₀A)`.
#[derive(Clone)]
pub struct RelDistLaw {
    pub label: String,
    pub t: RelativeMonad,
    pub pair: CompatiblePair,
    d: ComponentFn,
}

impl fmt::Debug for RelDistLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}{} => {}{}",
            self.label, self.pair.s.label, self.t.label, self.t.label, self.pair.s0.label
        )
    }
}

impl RelDistLaw {
    pub fn new(
        label: impl Into<String>,
        t: RelativeMonad,
        pair: CompatiblePair,
        d: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
    ) -> Result<Self> {
        if !same_category(t.src(), &pair.base.src) || !same_category(t.dst(), &pair.base.dst) {
            return Err(structural(format!(
                "{} and the pair {pair:?} do not share a base",
                t.label
            )));
        }
        Ok(RelDistLaw {
            label: label.into(),
            t,
            pair,
            d: Arc::new(d),
        })
    }

    /// `d_A`, type checked.
    pub fn at(&self, a: &Obj) -> Result<Mor> {
        let d = (self.d)(a)?;
        let dom = self.pair.s.on_obj(&self.t.on_obj(a)?)?;
        let cod = self.t.on_obj(&self.pair.s0.on_obj(a)?)?;
        expect_dom_cod(
            &d,
            &dom,
            &cod,
            &format!("component of {} at {a}", self.label),
        )?;
        Ok(d)
    }

    /// `d` as a transformation `S∘T ⇒ T∘S₀`.
    pub fn nat(&self) -> Result<NatTrans> {
        let tf = self.t.functor();
        let l = self.clone();
        Ok(NatTrans::new(
            self.label.clone(),
            Functor::compose(&self.pair.s.functor, &tf)?,
            Functor::compose(&tf, &self.pair.s0.functor)?,
            move |a| l.at(a),
        ))
    }

    /// `ST ⇒ TS₀` given by the identity, for `S = S₀ = Id`.
    pub fn identity(t: &RelativeMonad) -> Result<Self> {
        let pair = CompatiblePair::new(
            t.base.clone(),
            Monad::identity(t.dst().clone()),
            Monad::identity(t.src().clone()),
            Vec::new(),
        )?;
        let t1 = t.clone();
        Self::new(format!("1_{}", t.label), t.clone(), pair, move |a| {
            t1.dst().identity(&t1.on_obj(a)?)
        })
    }
}

/// Naturality of `d` (its own axiom ids) followed by D1–D4 at every test
/// object, with D3 quantified over all `f: IA -> TB`.
pub fn check_rel_dist_law(l: &RelDistLaw) -> Result<LawReport> {
    let (t, s, s0) = (&l.t, &l.pair.s, &l.pair.s0);
    let c = t.dst().as_ref();
    let mut r = LawReport::new(format!("relative distributive law {l:?}"));
    r.absorb("naturality", check_nat_trans(&l.nat()?)?);
    let objs = TestDomain::of(t.src().as_ref())?.objects;
    let tf = t.functor();
    let (mut w1, mut w2, mut w4) = (Vec::new(), Vec::new(), Vec::new());
    for a in &objs {
        let (ta, s0a) = (t.on_obj(a)?, s0.on_obj(a)?);
        let da = l.at(a)?;
        // D1: Tm₀ ∘ dS₀ ∘ Sd = d ∘ mT
        let lhs = c.compose(
            &tf.on_mor(&s0.mult(a)?)?,
            &c.compose(&l.at(&s0a)?, &s.on_mor(&da)?)?,
        )?;
        let rhs = c.compose(&da, &s.mult(&ta)?)?;
        if let Some(w) = same(c, &lhs, &rhs)? {
            w1.push(w.under("A", a));
        }
        // D2: d ∘ sT = Ts₀
        let lhs = c.compose(&da, &s.unit(&ta)?)?;
        if let Some(w) = same(c, &lhs, &tf.on_mor(&s0.unit(a)?)?)? {
            w2.push(w.under("A", a));
        }
        // D4: d ∘ St = tS₀, both out of S(IA) = I(S₀A)
        let lhs = c.compose(&da, &s.on_mor(&t.unit(a)?)?)?;
        if let Some(w) = same(c, &lhs, &t.unit(&s0a)?)? {
            w4.push(w.under("A", a));
        }
    }
    let n = objs.len() as u64;
    r.record("D1", n, n, w1);
    r.record("D2", n, n, w2);

    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    let mut homs = Vec::new();
    for (i, a) in objs.iter().enumerate() {
        let ia = t.base.on_obj(a)?;
        for (j, b) in objs.iter().enumerate() {
            let h = c.hom(&ia, &t.on_obj(b)?)?;
            blocks.push(vec![h.len()]);
            keys.push((i, j));
            homs.push(h);
        }
    }
    let budget = c.bounds().max_instances;
    r.check_family("D3", &blocks, budget, |blk, idx| {
        let (i, j) = keys[blk];
        let (a, b) = (&objs[i], &objs[j]);
        let f = &homs[blk][idx[0]];
        let db = l.at(b)?;
        // dB ∘ S(f†) = (dB ∘ Sf)† ∘ dA
        let lhs = c.compose(&db, &s.on_mor(&t.ext(a, b, f)?)?)?;
        let inner = c.compose(&db, &s.on_mor(f)?)?;
        let rhs = c.compose(&t.ext(&s0.on_obj(a)?, &s0.on_obj(b)?, &inner)?, &l.at(a)?)?;
        Ok(same(c, &lhs, &rhs)?.map(|w| w.under("f", c.show(f))))
    })?;
    r.record("D4", n, n, w4);
    Ok(r)
}

/// Records whether two laws have equal components at every test object.
pub fn check_laws_equal(r: &mut LawReport, id: &str, a: &RelDistLaw, b: &RelDistLaw) -> Result<()> {
    let c = a.t.dst().as_ref();
    let objs = TestDomain::of(a.t.src().as_ref())?.objects;
    let mut ws = Vec::new();
    for x in &objs {
        if let Some(w) = same(c, &a.at(x)?, &b.at(x)?)? {
            ws.push(w.under("A", x));
        }
    }
    r.record(id, objs.len() as u64, objs.len() as u64, ws);
    Ok(())
}

/// `(S, S₀, d)` as an endo-1-cell of `T` in the 2-category of relative monads.
pub fn law_morphism(l: &RelDistLaw) -> Result<RelMonadMorphism> {
    let l1 = l.clone();
    RelMonadMorphism::new(
        format!("({},{},{})", l.pair.s.label, l.pair.s0.label, l.label),
        l.t.clone(),
        l.t.clone(),
        l.pair.s.functor.clone(),
        l.pair.s0.functor.clone(),
        move |a| l1.at(a),
    )
}

/// `(m, m₀): (S, S₀, d)² ⇒ (S, S₀, d)`.
pub fn law_multiplication(l: &RelDistLaw) -> Result<RelMonadTransformation> {
    let one = law_morphism(l)?;
    let two = crate::cells::compose_relmonad_morphisms(&one, &one)?;
    Ok(RelMonadTransformation {
        label: format!("({},{})", l.pair.s.label, l.pair.s0.label),
        src: two,
        dst: one,
        p: l.pair.s.mult_nat()?,
        p0: l.pair.s0.mult_nat()?,
    })
}

/// `(s, s₀): 1 ⇒ (S, S₀, d)`.
pub fn law_unit(l: &RelDistLaw) -> Result<RelMonadTransformation> {
    Ok(RelMonadTransformation {
        label: format!("({},{}) units", l.pair.s.label, l.pair.s0.label),
        src: RelMonadMorphism::identity(&l.t)?,
        dst: law_morphism(l)?,
        p: l.pair.s.unit_nat(),
        p0: l.pair.s0.unit_nat(),
    })
}

/// The 1-cell and both 2-cells of the monad a law determines, checked.
pub fn check_law_as_monad(l: &RelDistLaw) -> Result<LawReport> {
    let mut r = LawReport::new(format!("{} as a monad of relative monads", l.label));
    r.absorb(
        "1-cell",
        crate::cells::check_relmonad_morphism(&law_morphism(l)?)?,
    );
    r.absorb(
        "mult",
        crate::cells::check_relmonad_transformation(&law_multiplication(l)?)?,
    );
    r.absorb(
        "unit",
        crate::cells::check_relmonad_transformation(&law_unit(l)?)?,
    );
    Ok(r)
}
