//! Randomised invariants beyond the exhaustive test domains.

use proptest::prelude::*;

use relmon::cat::{Category, Obj};
use relmon::distributive::{distr_to_lifting, lifting_to_distr};
use relmon::instances::freemonoid::choices;
use relmon::instances::pointed::pointed_vecspace_law;
use relmon::instances::vecspace::space;
use relmon::instances::vecspace_relmonad;
use relmon::kleisli::kleisli_category;
use relmon::{Bounds, Semiring, SetDesc, Value};

fn subsets() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(
        prop::collection::btree_set(0u8..4, 0..4).prop_map(|s| s.into_iter().collect()),
        0..5,
    )
}

fn as_word(sets: &[Vec<u8>]) -> Value {
    Value::word(
        sets.iter()
            .map(|s| Value::set(s.iter().map(|&i| Value::int(i as usize)))),
    )
}

fn vector(r: &Semiring, n: usize) -> impl Strategy<Value = Value> {
    prop::collection::vec(0..r.elements.len(), n)
        .prop_map(|xs| Value::Tuple(xs.into_iter().map(Value::int).collect()))
}

proptest! {
    #[test]
    fn choices_has_product_size_and_respects_positions(sets in subsets()) {
        let out = choices(&as_word(&sets));
        let out = out.as_set().unwrap();
        let size: usize = sets.iter().map(Vec::len).product();
        prop_assert_eq!(out.len(), size);
        for w in out {
            let w = w.as_word().unwrap();
            prop_assert_eq!(w.len(), sets.len());
            for (a, s) in w.iter().zip(&sets) {
                prop_assert!(s.contains(&(a.as_index().unwrap() as u8)));
            }
        }
    }

    #[test]
    fn choices_of_a_concatenation_concatenates_choices(a in subsets(), b in subsets()) {
        let whole = choices(&as_word(&[a.clone(), b.clone()].concat()));
        let (ca, cb) = (choices(&as_word(&a)), choices(&as_word(&b)));
        let glued = Value::set(ca.as_set().unwrap().iter().flat_map(|u| {
            cb.as_set().unwrap().iter().map(move |v| {
                Value::word(u.as_word().unwrap().iter().chain(v.as_word().unwrap()).cloned())
            })
        }));
        prop_assert_eq!(whole, glued);
    }

    #[test]
    fn kleisli_composition_over_z3_is_associative(
        f in prop::collection::vec(vector(&Semiring::zmod(3), 3), 3),
        g in prop::collection::vec(vector(&Semiring::zmod(3), 3), 3),
        h in prop::collection::vec(vector(&Semiring::zmod(3), 3), 3),
    ) {
        let r = Semiring::zmod(3);
        let t = vecspace_relmonad(r.clone(), 3, Bounds::default()).unwrap();
        let kl = kleisli_category(&t);
        let three = Obj::numeral(3);
        let lift = |rows: Vec<Value>| {
            let k = relmon::cat::Mor::table(
                Obj::numeral(3),
                Obj::Set(space(3, &r)),
                rows.into_iter().enumerate().map(|(i, v)| (Value::int(i), v)),
            );
            kl.cat.lift(&three, &three, k).unwrap()
        };
        let (f, g, h) = (lift(f), lift(g), lift(h));
        let c = kl.cat.as_ref();
        let left = c.compose(&h, &c.compose(&g, &f).unwrap()).unwrap();
        let right = c.compose(&c.compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert!(relmon::cat::same(c, &left, &right).unwrap().is_none());
    }

    #[test]
    fn law_round_trip_agrees_on_random_vectors(v in vector(&Semiring::zmod(3), 3), point in any::<bool>()) {
        let r = Semiring::zmod(3);
        let l = pointed_vecspace_law(r.clone(), 3, Bounds::default()).unwrap();
        let back = lifting_to_distr(&distr_to_lifting(&l)).unwrap();
        let vn: SetDesc = space(3, &r);
        let w = if point { vn.plus1_point() } else { vn.plus1_inl(&v) };
        let three = Obj::numeral(3);
        prop_assert_eq!(back.at(&three).unwrap().apply(&w), l.at(&three).unwrap().apply(&w));
    }
}
