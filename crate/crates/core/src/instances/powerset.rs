//! The finite power-set monad relative to an inclusion of sets.

use std::collections::BTreeSet;

use super::{numeral_inclusion, set_map};
use crate::cat::{Functor, Universe};
use crate::error::Result;
use crate::relmonad::RelativeMonad;
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

/// `P` over `base`: `t(x) = {x}` and `f†(A) = ⋃_{a∈A} f(a)`.
pub fn powerset_over(base: Functor) -> RelativeMonad {
    let b1 = base.clone();
    RelativeMonad::new(
        "P",
        base,
        move |x| {
            Ok(crate::cat::Obj::Set(SetDesc::pow(
                b1.on_obj(x)?.set()?.clone(),
            )))
        },
        |x| {
            let a = x.set()?.clone();
            Ok(set_map(&a, &SetDesc::pow(a.clone()), |v| {
                Value::set([v.clone()])
            }))
        },
        |x, y, k| {
            let (px, py) = (
                SetDesc::pow(x.set()?.clone()),
                SetDesc::pow(y.set()?.clone()),
            );
            let k = k.clone();
            Ok(set_map(&px, &py, move |a| {
                Value::Set(union(a, |v| k.apply(v)))
            }))
        },
    )
}

fn union(a: &Value, f: impl Fn(&Value) -> Value) -> BTreeSet<Value> {
    let mut out = BTreeSet::new();
    for v in a.as_set().expect("power-set element") {
        if let Value::Set(s) = f(v) {
            out.extend(s);
        }
    }
    out
}

/// `P` relative to the inclusion of countable described sets into all of
/// them, with numerals `0..=kappa` as test objects.
pub fn powerset_relmonad(kappa: usize, bounds: Bounds) -> Result<RelativeMonad> {
    Ok(powerset_over(numeral_inclusion(
        Universe::Countable,
        Universe::All,
        kappa,
        bounds,
    )))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cat::{check_functor, check_nat_trans, CatHandle, Mor, Obj, SetCategory};
    use crate::relmonad::check_relative_monad;

    fn p() -> RelativeMonad {
        powerset_relmonad(2, Bounds::default()).unwrap()
    }

    fn pick(t: &RelativeMonad, x: usize, y: usize, want: &[Value]) -> Mor {
        let h = t
            .dst()
            .hom(&Obj::numeral(x), &t.on_obj(&Obj::numeral(y)).unwrap())
            .unwrap();
        h.iter()
            .find(|f| (0..x).all(|i| f.apply(&Value::int(i)) == want[i]))
            .unwrap()
            .clone()
    }

    #[test]
    fn extension_examples() {
        let t = p();
        let (two, one) = (Obj::numeral(2), Obj::numeral(1));
        let f = pick(&t, 2, 1, &[Value::set([]), Value::set([Value::int(0)])]);
        let fd = t.ext(&two, &one, &f).unwrap();
        // f†({x}) = f(x)
        assert_eq!(
            fd.apply(&Value::set([Value::int(1)])),
            f.apply(&Value::int(1))
        );
        // f†(∅) = ∅
        assert_eq!(fd.apply(&Value::set([])), Value::set([]));
        // t† = id
        let td = t.ext(&two, &two, &t.unit(&two).unwrap()).unwrap();
        let id = t.dst().identity(&t.on_obj(&two).unwrap()).unwrap();
        assert!(t.dst().compare(&td, &id).unwrap().is_none());
    }

    #[test]
    fn laws_and_derived_functor() {
        let t = p();
        let r = check_relative_monad(&t).unwrap();
        assert!(r.passed(), "{r}");
        assert!(check_functor(&t.functor()).unwrap().passed());
        assert!(check_nat_trans(&t.unit_nat()).unwrap().passed());
    }

    #[test]
    fn derived_functor_is_direct_image() {
        let t = p();
        let tf = t.functor();
        let c0 = t.src().clone();
        for u in c0.hom(&Obj::numeral(2), &Obj::numeral(2)).unwrap().iter() {
            let image = tf.on_mor(u).unwrap();
            for a in SetDesc::pow(SetDesc::numeral(2))
                .elements(&Bounds::default())
                .unwrap()
                .iter()
            {
                let direct = Value::set(a.as_set().unwrap().iter().map(|v| u.apply(v)));
                assert_eq!(image.apply(a), direct);
            }
        }
    }

    #[test]
    fn preimage_action_breaks_composition() {
        let c: CatHandle = Arc::new(SetCategory::new(
            Universe::Finite,
            vec![SetDesc::numeral(2)],
            Bounds::default(),
        ));
        let bounds = Bounds::default();
        let pre = Functor::new(
            "preimage",
            c.clone(),
            c,
            |x| Ok(Obj::Set(SetDesc::pow(x.set()?.clone()))),
            move |f| {
                let (a, b) = (f.dom.set()?.clone(), f.cod.set()?.clone());
                let dom_elems = a.elements(&bounds)?;
                let f = f.clone();
                Ok(set_map(&SetDesc::pow(a), &SetDesc::pow(b), move |s| {
                    let s = s.as_set().unwrap();
                    Value::set(
                        dom_elems
                            .iter()
                            .filter(|v| s.contains(&f.apply(v)))
                            .cloned(),
                    )
                }))
            },
        );
        let r = check_functor(&pre).unwrap();
        assert!(!r.failed("functor-id"));
        assert!(r.failed("functor-comp"), "{r}");
    }
}
