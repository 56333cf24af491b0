//! Extensions of `S` to the Kleisli category of a relative monad.

use std::fmt;

use super::{CompatiblePair, RelDistLaw};
use crate::cat::laws::{check_functors_equal, TestDomain};
use crate::cat::{same, Category, Functor, Mor, Obj};
use crate::error::{structural, Result};
use crate::kleisli::{kleisli_category, Kleisli};
use crate::monad::{check_monad, Monad};
use crate::relmonad::RelativeMonad;
use crate::report::{Blocks, LawReport, Witness};
use crate::value::Value;

/// A monad `S̃` on `Kl(T)` meant to restrict to `S₀` along `J₀` and to `S`
/// along `U`.
#[derive(Clone)]
pub struct KleisliExtension {
    pub label: String,
    pub t: RelativeMonad,
    pub pair: CompatiblePair,
    pub kl: Kleisli,
    pub stilde: Monad,
}

impl fmt::Debug for KleisliExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "extension {} to {:?}", self.label, self.kl)
    }
}

impl KleisliExtension {
    /// `S̃` with `S̃x = S₀x`, the given morphism action, `s̃ = J₀s₀` and
    /// `m̃ = J₀m₀`.
    pub fn new(
        label: impl Into<String>,
        t: &RelativeMonad,
        pair: CompatiblePair,
        on_mor: impl Fn(&Mor) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        let kl = kleisli_category(t);
        let label = label.into();
        let s0 = pair.s0.clone();
        let (j1, j2) = (kl.j0.clone(), kl.j0.clone());
        let (s1, s2) = (s0.clone(), s0.clone());
        let functor = Functor::new(
            format!("{label}~"),
            kl.handle(),
            kl.handle(),
            move |x| s0.on_obj(x),
            on_mor,
        );
        let stilde = Monad::new(
            format!("{label}~"),
            functor,
            move |x| j1.on_mor(&s1.unit(x)?),
            move |x| j2.on_mor(&s2.mult(x)?),
        );
        KleisliExtension {
            label,
            t: t.clone(),
            pair,
            kl,
            stilde,
        }
    }

    /// The same functor with another unit and multiplication.
    pub fn with_structure(
        mut self,
        unit: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
        mult: impl Fn(&Obj) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        self.stilde = Monad::new(
            self.stilde.label.clone(),
            self.stilde.functor.clone(),
            unit,
            mult,
        );
        self
    }

    /// `d_y(w) = (S̃ f_w)(shape)` where `w = S(f_w)(shape)` is the container
    /// decomposition of `w ∈ S(Ty)` and `f_w: In -> Ty` lists its letters.
    pub fn read_law(&self, y: &Obj) -> Result<Mor> {
        let s = &self.pair.s;
        let decompose = s
            .decomposition()
            .ok_or_else(|| structural(format!("{} has no container decomposition", s.label)))?
            .clone();
        let (t, base) = (self.t.clone(), self.pair.base.clone());
        let (stilde, kl) = (self.stilde.clone(), self.kl.clone());
        let ty = t.on_obj(y)?;
        let (sty, ts0y) = (s.on_obj(&ty)?, t.on_obj(&self.pair.s0.on_obj(y)?)?);
        let y = y.clone();
        let ty1 = ty.clone();
        let bounds = t.dst().bounds();
        Ok(Mor::map(sty, ts0y, move |w| {
            let go = || -> Result<Value> {
                let (n, letters, shape) = decompose(&ty1, w)?;
                let nobj = Obj::numeral(n);
                let inn = base.on_obj(&nobj)?;
                let dom = inn.set()?.elements(&bounds)?;
                if dom.len() != letters.len() {
                    return Err(structural(format!(
                        "decomposition of {w} lists {} letters for {inn}",
                        letters.len()
                    )));
                }
                let fw = Mor::table(inn.clone(), ty1.clone(), dom.iter().cloned().zip(letters));
                let fw = kl.cat.lift(&nobj, &y, fw)?;
                Ok(stilde.on_mor(&fw)?.inner().apply(&shape))
            };
            go().unwrap_or_else(|e| panic!("reading the law off the extension at {w}: {e}"))
        }))
    }
}

/// Monad laws of `S̃` and the three extension conditions:
/// - `J0/functor`, `J0/unit`, `J0/mult`: `S̃J₀ = J₀S₀`, `s̃J₀ = J₀s₀`, `m̃J₀ = J₀m₀`;
/// - `U/naturality`, `U/unit`, `U/mult`: `U` with the law `d` read off `S̃`
///   is a monad morphism, `d ∘ SUf = US̃f ∘ d`, `d ∘ sU = Us̃`,
///   `d ∘ mU = Um̃ ∘ dS̃ ∘ Sd`;
/// - `t`: the unit is a monad transformation, `d ∘ St = tS₀`.
///
/// The decomposition used to read `d` is itself checked under
/// `decomposition`. The fourth condition of the general definition follows
/// from these in categories and is not checked.
pub fn check_kleisli_extension(e: &KleisliExtension) -> Result<LawReport> {
    let (t, s, s0) = (&e.t, &e.pair.s, &e.pair.s0);
    let c = t.dst().as_ref();
    let kc = e.kl.cat.as_ref();
    let st = &e.stilde;
    let mut r = LawReport::new(format!("{e:?}"));
    r.absorb("monad", check_monad(st)?);
    check_functors_equal(
        &mut r,
        "J0/functor",
        &Functor::compose(&st.functor, &e.kl.j0)?,
        &Functor::compose(&e.kl.j0, &s0.functor)?,
    )?;
    let objs = TestDomain::of(t.src().as_ref())?.objects;
    let n = objs.len() as u64;
    let (mut wu, mut wm) = (Vec::new(), Vec::new());
    for x in &objs {
        if let Some(w) = same(kc, &st.unit(x)?, &e.kl.j0.on_mor(&s0.unit(x)?)?)? {
            wu.push(w.under("x", x));
        }
        if let Some(w) = same(kc, &st.mult(x)?, &e.kl.j0.on_mor(&s0.mult(x)?)?)? {
            wm.push(w.under("x", x));
        }
    }
    r.record("J0/unit", n, n, wu);
    r.record("J0/mult", n, n, wm);

    let decompose = s
        .decomposition()
        .ok_or_else(|| structural(format!("{} has no container decomposition", s.label)))?
        .clone();
    let bounds = c.bounds();
    let mut wd = Vec::new();
    let mut nd = 0u64;
    for y in &objs {
        let ty = t.on_obj(y)?;
        for w in s.on_obj(&ty)?.set()?.elements(&bounds)?.iter() {
            nd += 1;
            let (k, letters, shape) = decompose(&ty, w)?;
            let inn = e.pair.base.on_obj(&Obj::numeral(k))?;
            let dom = inn.set()?.elements(&bounds)?;
            if dom.len() != letters.len() {
                wd.push(Witness::new(letters.len(), dom.len()).under("w", w));
                continue;
            }
            let fw = Mor::table(inn, ty.clone(), dom.iter().cloned().zip(letters));
            let back = s.on_mor(&fw)?.apply(&shape);
            if &back != w {
                wd.push(Witness::new(back, w).under("w", w));
            }
        }
    }
    r.record("decomposition", nd, nd, wd);

    let d = |x: &Obj| e.read_law(x);
    let u = &e.kl.u;
    let dom = TestDomain::of(kc)?;
    let (blocks, keys) = dom.pairs();
    r.check_family("U/naturality", &blocks, bounds.max_instances, |blk, idx| {
        let (i, j) = keys[blk];
        let f = &dom.homs[i][j][idx[0]];
        let lhs = c.compose(&d(&dom.objects[j])?, &s.on_mor(&u.on_mor(f)?)?)?;
        let rhs = c.compose(&u.on_mor(&st.on_mor(f)?)?, &d(&dom.objects[i])?)?;
        Ok(same(c, &lhs, &rhs)?.map(|w| w.under("f", kc.show(f))))
    })?;
    let (mut w1, mut w2, mut w3) = (Vec::new(), Vec::new(), Vec::new());
    for x in &objs {
        let (tx, dx) = (t.on_obj(x)?, d(x)?);
        let lhs = c.compose(&dx, &s.unit(&tx)?)?;
        if let Some(w) = same(c, &lhs, &u.on_mor(&st.unit(x)?)?)? {
            w1.push(w.under("x", x));
        }
        let lhs = c.compose(&dx, &s.mult(&tx)?)?;
        let rhs = c.compose(
            &u.on_mor(&st.mult(x)?)?,
            &c.compose(&d(&s0.on_obj(x)?)?, &s.on_mor(&dx)?)?,
        )?;
        if let Some(w) = same(c, &lhs, &rhs)? {
            w2.push(w.under("x", x));
        }
        let lhs = c.compose(&dx, &s.on_mor(&t.unit(x)?)?)?;
        if let Some(w) = same(c, &lhs, &t.unit(&s0.on_obj(x)?)?)? {
            w3.push(w.under("x", x));
        }
    }
    r.record("U/unit", n, n, w1);
    r.record("U/mult", n, n, w2);
    r.record("t", n, n, w3);
    Ok(r)
}

/// `S̃x = S₀x`, `S̃f = d_y ∘ Sf`, `s̃ = J₀s₀`, `m̃ = J₀m₀`.
pub fn distr_to_kleisli_extension(l: &RelDistLaw) -> KleisliExtension {
    let l1 = l.clone();
    KleisliExtension::new(
        format!("ext({})", l.label),
        &l.t,
        l.pair.clone(),
        move |f| {
            let (x, y) = (&f.dom, &f.cod);
            let s0 = &l1.pair.s0;
            let under =
                l1.t.dst()
                    .compose(&l1.at(y)?, &l1.pair.s.on_mor(f.inner())?)?;
            Ok(Mor::wrap(s0.on_obj(x)?, s0.on_obj(y)?, under))
        },
    )
}

/// The law read off `S̃` through `U`, see [`KleisliExtension::read_law`].
pub fn kleisli_extension_to_distr(e: &KleisliExtension) -> Result<RelDistLaw> {
    if e.pair.s.decomposition().is_none() {
        return Err(structural(format!(
            "{} has no container decomposition",
            e.pair.s.label
        )));
    }
    let e1 = e.clone();
    RelDistLaw::new(
        format!("law({})", e.label),
        e.t.clone(),
        e.pair.clone(),
        move |y| e1.read_law(y),
    )
}

/// Records whether two extensions agree: the functors on the Kleisli test
/// domain, and units and multiplications at every test object.
pub fn check_extensions_equal(
    r: &mut LawReport,
    id: &str,
    a: &KleisliExtension,
    b: &KleisliExtension,
) -> Result<()> {
    check_functors_equal(
        r,
        &format!("{id}/functor"),
        &a.stilde.functor,
        &b.stilde.functor,
    )?;
    let kc = a.kl.cat.as_ref();
    let objs = kc.test_objects();
    let mut blocks = Blocks::new();
    blocks.push(vec![objs.len(), 2]);
    r.check_family(&format!("{id}/structure"), &blocks, u64::MAX, |_, idx| {
        let x = &objs[idx[0]];
        let (p, q) = if idx[1] == 0 {
            (a.stilde.unit(x)?, b.stilde.unit(x)?)
        } else {
            (a.stilde.mult(x)?, b.stilde.mult(x)?)
        };
        Ok(same(kc, &p, &q)?.map(|w| w.under("x", x)))
    })
}
