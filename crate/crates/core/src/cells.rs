//! Morphisms and transformations of relative monads.

use std::fmt;

use crate::cat::laws::{check_functors_equal, check_transformations_equal, TestDomain};
use crate::cat::{check_nat_trans, same, same_category, Functor, NatTrans, Obj};
use crate::error::{structural, Result};
use crate::relmonad::RelativeMonad;
use crate::report::{Blocks, LawReport};

/// `(F, F₀, φ): (X, I, S) -> (Y, J, T)` with `φ: FS ⇒ TF₀`.
#[derive(Clone)]
pub struct RelMonadMorphism {
    pub label: String,
    pub src: RelativeMonad,
    pub dst: RelativeMonad,
    pub f: Functor,
    pub f0: Functor,
    pub phi: NatTrans,
}

impl fmt::Debug for RelMonadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {}",
            self.label, self.src.label, self.dst.label
        )
    }
}

impl RelMonadMorphism {
    pub fn new(
        label: impl Into<String>,
        src: RelativeMonad,
        dst: RelativeMonad,
        f: Functor,
        f0: Functor,
        phi: impl Fn(&Obj) -> Result<crate::cat::Mor> + Send + Sync + 'static,
    ) -> Result<Self> {
        let label = label.into();
        let fs = Functor::compose(&f, &src.functor())?;
        let tf0 = Functor::compose(&dst.functor(), &f0)?;
        let phi = NatTrans::new(format!("phi of {label}"), fs, tf0, phi);
        Ok(RelMonadMorphism {
            label,
            src,
            dst,
            f,
            f0,
            phi,
        })
    }

    pub fn identity(t: &RelativeMonad) -> Result<Self> {
        let tt = t.clone();
        Self::new(
            format!("1_{}", t.label),
            t.clone(),
            t.clone(),
            Functor::identity(t.dst().clone()),
            Functor::identity(t.src().clone()),
            move |a| tt.dst().identity(&tt.on_obj(a)?),
        )
    }
}

/// `FI = JF₀`, naturality of `φ`, the unit law `φ ∘ Fs = tF₀` and the
/// extension law `φ_B ∘ F(k†) = (φ_B ∘ Fk)† ∘ φ_A`.
pub fn check_relmonad_morphism(m: &RelMonadMorphism) -> Result<LawReport> {
    let (s, t) = (&m.src, &m.dst);
    if !same_category(&m.f.src, s.dst()) || !same_category(&m.f.dst, t.dst()) {
        return Err(structural(format!("{}: F is not typed X -> Y", m.label)));
    }
    if !same_category(&m.f0.src, s.src()) || !same_category(&m.f0.dst, t.src()) {
        return Err(structural(format!("{}: F0 is not typed X0 -> Y0", m.label)));
    }
    let (x, y) = (s.dst().as_ref(), t.dst().as_ref());
    let mut r = LawReport::new(format!("relative monad morphism {}", m.label));
    check_functors_equal(
        &mut r,
        "FI=JF0",
        &Functor::compose(&m.f, &s.base)?,
        &Functor::compose(&t.base, &m.f0)?,
    )?;
    r.absorb("phi-naturality", check_nat_trans(&m.phi)?);

    let objs = TestDomain::of(s.src().as_ref())?.objects;
    let budget = x.bounds().max_instances;
    let mut ws = Vec::new();
    for a in &objs {
        let lhs = y.compose(&m.phi.at(a)?, &m.f.on_mor(&s.unit(a)?)?)?;
        let rhs = t.unit(&m.f0.on_obj(a)?)?;
        if let Some(w) = same(y, &lhs, &rhs)? {
            ws.push(w.under("A", a));
        }
    }
    r.record("unit", objs.len() as u64, objs.len() as u64, ws);

    let kl = objs
        .iter()
        .map(|a| {
            let ia = s.base.on_obj(a)?;
            objs.iter()
                .map(|b| x.hom(&ia, &s.on_obj(b)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            blocks.push(vec![kl[i][j].len()]);
            keys.push((i, j));
        }
    }
    r.check_family("extension", &blocks, budget, |blk, idx| {
        let (i, j) = keys[blk];
        let (a, b) = (&objs[i], &objs[j]);
        let k = &kl[i][j][idx[0]];
        let phi_b = m.phi.at(b)?;
        let lhs = y.compose(&phi_b, &m.f.on_mor(&s.ext(a, b, k)?)?)?;
        let inner = y.compose(&phi_b, &m.f.on_mor(k)?)?;
        let rhs = y.compose(
            &t.ext(&m.f0.on_obj(a)?, &m.f0.on_obj(b)?, &inner)?,
            &m.phi.at(a)?,
        )?;
        Ok(same(y, &lhs, &rhs)?.map(|w| w.under("k", x.show(k))))
    })?;
    Ok(r)
}

/// `(G, G₀, ψ) ∘ (F, F₀, φ) = (GF, G₀F₀, ψF₀ ∘ Gφ)`.
pub fn compose_relmonad_morphisms(
    g: &RelMonadMorphism,
    f: &RelMonadMorphism,
) -> Result<RelMonadMorphism> {
    if !same_category(f.dst.dst(), g.src.dst())
        || !same_category(f.dst.src(), g.src.src())
        || f.dst.label != g.src.label
    {
        return Err(structural(format!(
            "cannot compose {} after {}",
            g.label, f.label
        )));
    }
    let (g1, f1) = (g.clone(), f.clone());
    RelMonadMorphism::new(
        format!("{}.{}", g.label, f.label),
        f.src.clone(),
        g.dst.clone(),
        Functor::compose(&g.f, &f.f)?,
        Functor::compose(&g.f0, &f.f0)?,
        move |a| {
            let y = g1.dst.dst();
            y.compose(
                &g1.phi.at(&f1.f0.on_obj(a)?)?,
                &g1.f.on_mor(&f1.phi.at(a)?)?,
            )
        },
    )
}

/// `(p, p₀): (F, F₀, φ) ⇒ (G, G₀, ψ)`.
#[derive(Clone)]
pub struct RelMonadTransformation {
    pub label: String,
    pub src: RelMonadMorphism,
    pub dst: RelMonadMorphism,
    pub p: NatTrans,
    pub p0: NatTrans,
}

impl RelMonadTransformation {
    pub fn identity(m: &RelMonadMorphism) -> Self {
        RelMonadTransformation {
            label: format!("1_{}", m.label),
            src: m.clone(),
            dst: m.clone(),
            p: NatTrans::identity(&m.f),
            p0: NatTrans::identity(&m.f0),
        }
    }
}

/// Naturality of `p, p₀`, `Jp₀ = pI` and `Tp₀ ∘ φ = ψ ∘ pS`.
pub fn check_relmonad_transformation(t: &RelMonadTransformation) -> Result<LawReport> {
    let (f, g) = (&t.src, &t.dst);
    let s = &f.src;
    let tm = &f.dst;
    let y = tm.dst().as_ref();
    let mut r = LawReport::new(format!("relative monad transformation {}", t.label));
    r.absorb("p-naturality", check_nat_trans(&t.p)?);
    r.absorb("p0-naturality", check_nat_trans(&t.p0)?);
    let objs = TestDomain::of(s.src().as_ref())?.objects;
    let tfun = tm.functor();
    let (mut w1, mut w2) = (Vec::new(), Vec::new());
    for a in &objs {
        let lhs = tm.base.on_mor(&t.p0.at(a)?)?;
        let rhs = t.p.at(&s.base.on_obj(a)?)?;
        if let Some(w) = same(y, &lhs, &rhs)? {
            w1.push(w.under("A", a));
        }
        let lhs = y.compose(&tfun.on_mor(&t.p0.at(a)?)?, &f.phi.at(a)?)?;
        let rhs = y.compose(&g.phi.at(a)?, &t.p.at(&s.on_obj(a)?)?)?;
        if let Some(w) = same(y, &lhs, &rhs)? {
            w2.push(w.under("A", a));
        }
    }
    let n = objs.len() as u64;
    r.record("Jp0=pI", n, n, w1);
    r.record("square", n, n, w2);
    Ok(r)
}

/// `(Gp, G₀p₀): g∘f ⇒ g∘f'`.
pub fn whisker_left(
    g: &RelMonadMorphism,
    t: &RelMonadTransformation,
) -> Result<RelMonadTransformation> {
    Ok(RelMonadTransformation {
        label: format!("{}{}", g.label, t.label),
        src: compose_relmonad_morphisms(g, &t.src)?,
        dst: compose_relmonad_morphisms(g, &t.dst)?,
        p: NatTrans::whisker_left(&g.f, &t.p)?,
        p0: NatTrans::whisker_left(&g.f0, &t.p0)?,
    })
}

/// `(pH, p₀H₀): f∘h ⇒ f'∘h`.
pub fn whisker_right(
    t: &RelMonadTransformation,
    h: &RelMonadMorphism,
) -> Result<RelMonadTransformation> {
    Ok(RelMonadTransformation {
        label: format!("{}{}", t.label, h.label),
        src: compose_relmonad_morphisms(&t.src, h)?,
        dst: compose_relmonad_morphisms(&t.dst, h)?,
        p: NatTrans::whisker_right(&t.p, &h.f)?,
        p0: NatTrans::whisker_right(&t.p0, &h.f0)?,
    })
}

/// Records whether two morphisms agree: functors and `φ` on the test domain.
pub fn check_morphisms_equal(
    r: &mut LawReport,
    id: &str,
    a: &RelMonadMorphism,
    b: &RelMonadMorphism,
) -> Result<()> {
    check_functors_equal(r, &format!("{id}/F"), &a.f, &b.f)?;
    check_functors_equal(r, &format!("{id}/F0"), &a.f0, &b.f0)?;
    check_transformations_equal(r, &format!("{id}/phi"), &a.phi, &b.phi)
}

/// Records whether two transformations have equal components.
pub fn check_cells_equal(
    r: &mut LawReport,
    id: &str,
    a: &RelMonadTransformation,
    b: &RelMonadTransformation,
) -> Result<()> {
    check_transformations_equal(r, &format!("{id}/p"), &a.p, &b.p)?;
    check_transformations_equal(r, &format!("{id}/p0"), &a.p0, &b.p0)
}
