//! Deliberately broken instances, one per axiom family. Each must be
//! rejected by its checker with a witness under the named axiom.

use std::sync::Arc;

use crate::cat::{check_category, check_functor, Functor, Obj, SetCategory, Universe};
use crate::distributive::{
    check_kleisli_extension, check_lifting, check_rel_dist_law, distr_to_kleisli_extension,
    law_morphism, LiftingToAlgebras, RelDistLaw,
};
use crate::error::{structural, Result};
use crate::fixtures::broken_cyclic3;
use crate::instances::freemonoid::{choices, freemonoid_pair};
use crate::instances::pointed::{pointed_lifting, pointed_monad, pointed_vecspace_law};
use crate::instances::vecspace::space;
use crate::instances::{powerset_over, set_map};
use crate::monad::{check_monad, Monad};
use crate::report::LawReport;
use crate::semiring::Semiring;
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

pub struct Mutant {
    pub name: &'static str,
    /// The axiom id expected to fail.
    pub axiom: &'static str,
    pub description: &'static str,
    pub run: fn() -> Result<LawReport>,
}

pub fn catalogue() -> Vec<Mutant> {
    vec![
        Mutant {
            name: "category-assoc",
            axiom: "assoc",
            description: "Z/3 with one composite redirected",
            run: || check_category(&broken_cyclic3()?),
        },
        Mutant {
            name: "functor-comp",
            axiom: "functor-comp",
            description: "word functor that reverses after mapping",
            run: || check_functor(&reversing_words()),
        },
        Mutant {
            name: "monad-unit",
            axiom: "unit-left",
            description: "pointed-set monad whose unit picks the point",
            run: || check_monad(&pointing_unit()),
        },
        Mutant {
            name: "law-D2",
            axiom: "D2",
            description: "choices law sending every nonempty word to the empty set",
            run: || check_rel_dist_law(&emptying_law()?),
        },
        Mutant {
            name: "law-extension",
            axiom: "extension",
            description: "choices law listing each choice in reverse",
            run: || crate::cells::check_relmonad_morphism(&law_morphism(&reversing_law()?)?),
        },
        Mutant {
            name: "lifting-unit",
            axiom: "unit",
            description: "lifted vector spaces with the point sent to zero",
            run: || check_lifting(&zero_point_lifting()?),
        },
        Mutant {
            name: "kleisli-J0-mult",
            axiom: "J0/mult",
            description: "Kleisli extension whose multiplication projects the outer point",
            run: || check_kleisli_extension(&projecting_extension()?),
        },
    ]
}

fn small_sets() -> Arc<SetCategory> {
    Arc::new(
        SetCategory::numerals(Universe::All, 2, Bounds::default().with_max_word(3))
            .with_label("Set<=2"),
    )
}

/// `Wf = reverse ∘ map f`.
pub fn reversing_words() -> Functor {
    let c = small_sets();
    Functor::new(
        "rev",
        c.clone(),
        c,
        |x| Ok(Obj::Set(SetDesc::words(x.set()?.clone()))),
        |f| {
            let g = f.clone();
            let (a, b) = (
                SetDesc::words(f.dom.set()?.clone()),
                SetDesc::words(f.cod.set()?.clone()),
            );
            Ok(set_map(&a, &b, move |w| {
                Value::word(w.as_word().expect("word").iter().rev().map(|v| g.apply(v)))
            }))
        },
    )
}

/// `X + 1` with the unit sending everything to the point.
pub fn pointing_unit() -> Monad {
    let m = pointed_monad("S", small_sets());
    let m1 = m.clone();
    Monad::new(
        "S",
        m.functor.clone(),
        |x| {
            let a = x.set()?.clone();
            let p = a.plus1_point();
            Ok(set_map(&a, &SetDesc::plus1(a.clone()), move |_| p.clone()))
        },
        move |x| m1.mult(x),
    )
}

fn choices_law(label: &str, d: fn(&Value) -> Value) -> Result<RelDistLaw> {
    let pair = freemonoid_pair(2, Bounds::default())?;
    let t = powerset_over(pair.base.clone());
    RelDistLaw::new(label, t, pair, move |a| {
        let a = a.set()?.clone();
        Ok(set_map(
            &SetDesc::words(SetDesc::pow(a.clone())),
            &SetDesc::pow(SetDesc::words(a)),
            d,
        ))
    })
}

/// `d(w) = ∅` for every nonempty `w`.
pub fn emptying_law() -> Result<RelDistLaw> {
    choices_law("emptying", |w| {
        if w.as_word().expect("word").is_empty() {
            choices(w)
        } else {
            Value::set([])
        }
    })
}

/// `d(⟨I₁, …, Iₙ⟩) = {⟨aₙ, …, a₁⟩ | aᵢ ∈ Iᵢ}`.
pub fn reversing_law() -> Result<RelDistLaw> {
    choices_law("reversing", |w| {
        let all = choices(w);
        Value::set(
            all.as_set()
                .expect("subset")
                .iter()
                .map(|u| Value::word(u.as_word().expect("word").iter().rev().cloned())),
        )
    })
}

/// `V̂(n, i)` with the point sent to the zero vector.
pub fn zero_point_lifting() -> Result<LiftingToAlgebras> {
    let good = pointed_lifting(Semiring::zmod(2), 2, Bounds::default())?;
    let r = Semiring::zmod(2);
    let (t, pair) = (good.t.clone(), good.pair.clone());
    Ok(LiftingToAlgebras::new("V^0", t.clone(), pair, move |alg| {
        let n = alg
            .carrier
            .set()?
            .as_numeral()
            .ok_or_else(|| structural("carrier is not a cardinal"))?;
        let vn = space(n, &r);
        let zero = Value::tuple((0..n).map(|_| Value::int(r.zero)));
        let v1 = vn.clone();
        Ok(set_map(&SetDesc::plus1(vn.clone()), &vn, move |v| {
            v1.plus1_case(v).unwrap_or_else(|| zero.clone())
        }))
    }))
}

/// The extension of the derived vector-space law with `m̃` sending the outer
/// point to the first element whenever there is one.
pub fn projecting_extension() -> Result<crate::distributive::KleisliExtension> {
    let e = distr_to_kleisli_extension(&pointed_vecspace_law(
        Semiring::zmod(2),
        2,
        Bounds::default(),
    )?);
    let (j0, j1, s0) = (e.kl.j0.clone(), e.kl.j0.clone(), e.pair.s0.clone());
    let s1 = s0.clone();
    Ok(e.with_structure(
        move |x| j0.on_mor(&s0.unit(x)?),
        move |x| {
            let a = x.set()?.clone();
            let a1 = SetDesc::plus1(a.clone());
            let a2 = SetDesc::plus1(a1.clone());
            let mult = s1.mult(x)?;
            let first = a.elements(&Bounds::default())?.first().cloned();
            let (a1c, ac) = (a1.clone(), a.clone());
            let proj = set_map(&a2, &a1, move |v| match (a1c.plus1_case(v), &first) {
                (None, Some(u)) => ac.plus1_inl(u),
                _ => mult.apply(v),
            });
            j1.on_mor(&proj)
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_mutant_is_rejected_under_its_axiom() {
        for m in catalogue() {
            let r = (m.run)().unwrap();
            assert!(r.failed(m.axiom), "{} passed {}:\n{r}", m.name, m.axiom);
            assert!(r.first_violation(m.axiom).is_some(), "{}", m.name);
        }
    }

    #[test]
    fn emptying_law_fails_at_a_singleton_word() {
        let r = check_rel_dist_law(&emptying_law().unwrap()).unwrap();
        let v = r.first_violation("D2").unwrap();
        assert!(v.witness.input("A").is_some(), "{v}");
    }
}
