//! Liftings of a relative monad to the algebras of a compatible pair.

use std::fmt;
use std::sync::Arc;

use super::{CompatiblePair, RelDistLaw};
use crate::cat::laws::TestDomain;
use crate::cat::{expect_dom_cod, same, Mor, Obj};
use crate::error::{structural, Result};
use crate::monad::Monad;
use crate::relmonad::RelativeMonad;
use crate::report::{Blocks, LawReport, Witness};

/// `(M, m: S₀M -> M)`, an algebra of `S₀` in `C₀`.
#[derive(Clone, Debug)]
pub struct S0Algebra {
    pub carrier: Obj,
    pub structure: Mor,
}

/// Every algebra of `s` on the given finite carriers, by enumerating
/// `C(SM, M)` and filtering by the unit and multiplication laws.
pub fn enumerate_algebras(s: &Monad, carriers: &[Obj]) -> Result<Vec<S0Algebra>> {
    let c = s.cat().as_ref();
    let mut out = Vec::new();
    for m in carriers {
        let sm = s.on_obj(m)?;
        let (unit, mult) = (s.unit(m)?, s.mult(m)?);
        let id = c.identity(m)?;
        for a in c.hom(&sm, m)?.iter() {
            if same(c, &c.compose(a, &unit)?, &id)?.is_some() {
                continue;
            }
            let lhs = c.compose(a, &mult)?;
            let rhs = c.compose(a, &s.on_mor(a)?)?;
            if same(c, &lhs, &rhs)?.is_none() {
                out.push(S0Algebra {
                    carrier: m.clone(),
                    structure: a.clone(),
                });
            }
        }
    }
    Ok(out)
}

pub type AssignFn = Arc<dyn Fn(&S0Algebra) -> Result<Mor> + Send + Sync>;

/// `T̂(M, m) = (TM, assign(M, m))` with `assign(M, m): S(TM) -> TM`;
/// algebra morphisms `f` are sent to `Tf`.
#[derive(Clone)]
pub struct LiftingToAlgebras {
    pub label: String,
    pub t: RelativeMonad,
    pub pair: CompatiblePair,
    assign: AssignFn,
}

impl fmt::Debug for LiftingToAlgebras {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lifting {} of {}", self.label, self.t.label)
    }
}

impl LiftingToAlgebras {
    pub fn new(
        label: impl Into<String>,
        t: RelativeMonad,
        pair: CompatiblePair,
        assign: impl Fn(&S0Algebra) -> Result<Mor> + Send + Sync + 'static,
    ) -> Self {
        LiftingToAlgebras {
            label: label.into(),
            t,
            pair,
            assign: Arc::new(assign),
        }
    }

    /// The `S`-algebra structure on `TM`, type checked.
    pub fn assign(&self, alg: &S0Algebra) -> Result<Mor> {
        let tm = self.t.on_obj(&alg.carrier)?;
        let out = (self.assign)(alg)?;
        expect_dom_cod(
            &out,
            &self.pair.s.on_obj(&tm)?,
            &tm,
            &format!("lifted structure on {tm}"),
        )?;
        Ok(out)
    }

    /// `(S, S₀)`-algebras checked against: the pair's pool plus free algebras
    /// on test objects.
    pub fn algebras(&self) -> Result<Vec<S0Algebra>> {
        let mut out = self.pair.pool.clone();
        for a in TestDomain::of(self.t.src().as_ref())?.objects {
            out.push(self.pair.free(&a)?);
        }
        Ok(out)
    }
}

/// The conditions on a lifting, each under its own id:
/// - `algebra-unit`, `algebra-assoc`: every `T̂(M, m)` is an `S`-algebra;
/// - `algebra-morphisms`: `Tf` is an `S`-algebra map for each pool map `f`;
/// - `extension`: if `T̂n ∘ Sf = f ∘ Im` then `T̂n ∘ Sf† = f† ∘ T̂m`;
/// - `unit`: `T̂m ∘ St_M = t_M ∘ Im`;
/// - `structure-formula`: `T̂m = Tm ∘ T̂m₀ ∘ STs₀` with `T̂m₀` on the free algebra.
pub fn check_lifting(l: &LiftingToAlgebras) -> Result<LawReport> {
    let (t, s, s0, i) = (&l.t, &l.pair.s, &l.pair.s0, &l.pair.base);
    let c = t.dst().as_ref();
    let c0 = t.src().as_ref();
    let tf = t.functor();
    let mut r = LawReport::new(format!("{l:?}"));
    let algs = l.algebras()?;
    let (mut wu, mut wa, mut wi, mut wf) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for alg in &algs {
        let m = &alg.carrier;
        let tm = t.on_obj(m)?;
        let hat = l.assign(alg)?;
        let at = |w: Witness| w.under("M", m).under("m", c0.show(&alg.structure));
        if let Some(w) = same(c, &c.compose(&hat, &s.unit(&tm)?)?, &c.identity(&tm)?)? {
            wu.push(at(w));
        }
        let lhs = c.compose(&hat, &s.mult(&tm)?)?;
        let rhs = c.compose(&hat, &s.on_mor(&hat)?)?;
        if let Some(w) = same(c, &lhs, &rhs)? {
            wa.push(at(w));
        }
        let lhs = c.compose(&hat, &s.on_mor(&t.unit(m)?)?)?;
        let rhs = c.compose(&t.unit(m)?, &i.on_mor(&alg.structure)?)?;
        if let Some(w) = same(c, &lhs, &rhs)? {
            wi.push(at(w));
        }
        let free = l.pair.free(m)?;
        let lhs = c.compose(
            &tf.on_mor(&alg.structure)?,
            &c.compose(&l.assign(&free)?, &s.on_mor(&tf.on_mor(&s0.unit(m)?)?)?)?,
        )?;
        if let Some(w) = same(c, &hat, &lhs)? {
            wf.push(at(w));
        }
    }
    let n = algs.len() as u64;
    r.record("algebra-unit", n, n, wu);
    r.record("algebra-assoc", n, n, wa);

    // Algebra maps between pool algebras, and each structure map out of the
    // free algebra on its carrier.
    let mut maps = Vec::new();
    for a in &l.pair.pool {
        for b in &l.pair.pool {
            for f in c0.hom(&a.carrier, &b.carrier)?.iter() {
                let lhs = c0.compose(f, &a.structure)?;
                let rhs = c0.compose(&b.structure, &s0.on_mor(f)?)?;
                if same(c0, &lhs, &rhs)?.is_none() {
                    maps.push((a.clone(), b.clone(), f.clone()));
                }
            }
        }
        maps.push((l.pair.free(&a.carrier)?, a.clone(), a.structure.clone()));
    }
    let mut ws = Vec::new();
    for (a, b, f) in &maps {
        let tfm = tf.on_mor(f)?;
        let lhs = c.compose(&l.assign(b)?, &s.on_mor(&tfm)?)?;
        let rhs = c.compose(&tfm, &l.assign(a)?)?;
        if let Some(w) = same(c, &lhs, &rhs)? {
            ws.push(
                w.under("f", c0.show(f))
                    .under("M", &a.carrier)
                    .under("N", &b.carrier),
            );
        }
    }
    r.record(
        "algebra-morphisms",
        maps.len() as u64,
        maps.len() as u64,
        ws,
    );

    // Extension: quantified over pool pairs and all f: IM -> TN.
    let pool = &l.pair.pool;
    let mut blocks = Blocks::new();
    let mut keys = Vec::new();
    let mut homs = Vec::new();
    for (x, a) in pool.iter().enumerate() {
        for (y, b) in pool.iter().enumerate() {
            let h = c.hom(&i.on_obj(&a.carrier)?, &t.on_obj(&b.carrier)?)?;
            blocks.push(vec![h.len()]);
            keys.push((x, y));
            homs.push(h);
        }
    }
    r.check_family(
        "extension",
        &blocks,
        c.bounds().max_instances,
        |blk, idx| {
            let (x, y) = keys[blk];
            let (a, b) = (&pool[x], &pool[y]);
            let f = &homs[blk][idx[0]];
            let hat_n = l.assign(b)?;
            let premise_l = c.compose(&hat_n, &s.on_mor(f)?)?;
            let premise_r = c.compose(f, &i.on_mor(&a.structure)?)?;
            if same(c, &premise_l, &premise_r)?.is_some() {
                return Ok(None);
            }
            let fd = t.ext(&a.carrier, &b.carrier, f)?;
            let lhs = c.compose(&hat_n, &s.on_mor(&fd)?)?;
            let rhs = c.compose(&fd, &l.assign(a)?)?;
            Ok(same(c, &lhs, &rhs)?.map(|w| {
                w.under("f", c.show(f))
                    .under("M", &a.carrier)
                    .under("N", &b.carrier)
            }))
        },
    )?;
    r.record("unit", n, n, wi);
    r.record("structure-formula", n, n, wf);
    Ok(r)
}

/// `T̂(M, m) = Tm ∘ d_M`.
pub fn distr_to_lifting(l: &RelDistLaw) -> LiftingToAlgebras {
    let l1 = l.clone();
    let tf = l.t.functor();
    LiftingToAlgebras::new(
        format!("lift({})", l.label),
        l.t.clone(),
        l.pair.clone(),
        move |alg| {
            l1.t.dst()
                .compose(&tf.on_mor(&alg.structure)?, &l1.at(&alg.carrier)?)
        },
    )
}

/// `d_A = T̂(S₀A, m₀A) ∘ ST(s₀A)`.
pub fn lifting_to_distr(l: &LiftingToAlgebras) -> Result<RelDistLaw> {
    let l1 = l.clone();
    let tf = l.t.functor();
    RelDistLaw::new(
        format!("law({})", l.label),
        l.t.clone(),
        l.pair.clone(),
        move |a| {
            let s = &l1.pair.s;
            let hat = l1.assign(&l1.pair.free(a)?)?;
            l1.t.dst()
                .compose(&hat, &s.on_mor(&tf.on_mor(&l1.pair.s0.unit(a)?)?)?)
        },
    )
}

/// Records whether two liftings assign equal structures to every algebra in
/// the pool and every free algebra on a test object.
pub fn check_liftings_equal(
    r: &mut LawReport,
    id: &str,
    a: &LiftingToAlgebras,
    b: &LiftingToAlgebras,
) -> Result<()> {
    if a.pair.pool.len() != b.pair.pool.len() {
        return Err(structural("liftings are tested over different pools"));
    }
    let c = a.t.dst().as_ref();
    let algs = a.algebras()?;
    let mut ws = Vec::new();
    for alg in &algs {
        if let Some(w) = same(c, &a.assign(alg)?, &b.assign(alg)?)? {
            ws.push(
                w.under("M", &alg.carrier)
                    .under("m", a.t.src().show(&alg.structure)),
            );
        }
    }
    r.record(id, algs.len() as u64, algs.len() as u64, ws);
    Ok(())
}
