//! The two worked laws through every presentation, against closed formulas.

use relmon::cat::{Category, Obj};
use relmon::distributive::*;
use relmon::instances::freemonoid::freemonoid_powerset_law;
use relmon::instances::identity::identity_law;
use relmon::instances::pointed::{pointed_lifting, pointed_vecspace_law};
use relmon::instances::vecspace::{delta, space};
use relmon::suite::check_law_suite;
use relmon::{Bounds, LawReport, Semiring, SetDesc, Value};

fn word(xs: Vec<Value>) -> Value {
    Value::word(xs)
}

#[test]
fn identity_law_is_lawful_in_every_form() {
    let l = identity_law(2, Bounds::default()).unwrap();
    let r = check_law_suite(&l).unwrap();
    assert!(r.passed(), "{r}");
    // The lifting of the identity law leaves every algebra structure alone.
    let lift = distr_to_lifting(&l);
    let c = l.t.dst();
    for alg in lift.algebras().unwrap() {
        let id = c.identity(&alg.carrier).unwrap();
        assert!(
            relmon::cat::same(c.as_ref(), &lift.assign(&alg).unwrap(), &id)
                .unwrap()
                .is_none()
        );
    }
}

#[test]
fn choices_law_passes_every_checker_at_small_bounds() {
    let l = freemonoid_powerset_law(2, Bounds::default()).unwrap();
    let r = check_law_suite(&l).unwrap();
    assert!(r.passed(), "{r}");
    for id in [
        "law/D1",
        "law/D2",
        "law/D3",
        "law/D4",
        "round-trip-A",
        "round-trip-C/law",
    ] {
        assert!(r.axiom(id).is_some(), "{id} missing");
    }
}

#[test]
fn lifted_structure_on_a_free_algebra_multiplies_choices() {
    let l = freemonoid_powerset_law(2, Bounds::default()).unwrap();
    let lift = distr_to_lifting(&l);
    let free = l.pair.free(&Obj::numeral(2)).unwrap();
    let hat = lift.assign(&free).unwrap();
    let (a, b) = (word(vec![Value::int(0)]), word(vec![Value::int(1)]));
    let input = word(vec![
        Value::set([a.clone(), b.clone()]),
        Value::set([b.clone()]),
    ]);
    let want = Value::set([
        word(vec![Value::int(0), Value::int(1)]),
        word(vec![Value::int(1), Value::int(1)]),
    ]);
    assert_eq!(hat.apply(&input), want);
}

/// `d(inl v)` pads `v` with a zero coordinate and `d(point) = δ_n`.
#[test]
fn derived_vecspace_law_matches_its_formula() {
    for r in [Semiring::boolean(), Semiring::zmod(2), Semiring::zmod(3)] {
        let l = pointed_vecspace_law(r.clone(), 2, Bounds::default()).unwrap();
        for n in 0..=2 {
            let d = l.at(&Obj::numeral(n)).unwrap();
            let vn = space(n, &r);
            for v in vn.elements(&Bounds::default()).unwrap().iter() {
                let mut padded = v.as_tuple().unwrap().to_vec();
                padded.push(Value::int(r.zero));
                assert_eq!(d.apply(&vn.plus1_inl(v)), Value::Tuple(padded));
            }
            assert_eq!(d.apply(&vn.plus1_point()), delta(n + 1, n, &r));
        }
    }
}

#[test]
fn derived_law_satisfies_d2_at_dimension_one() {
    let l = pointed_vecspace_law(Semiring::zmod(2), 1, Bounds::default()).unwrap();
    let r = check_rel_dist_law(&l).unwrap();
    assert!(!r.failed("D2"), "{r}");
    assert!(r.passed(), "{r}");
}

#[test]
fn lifting_the_derived_law_reproduces_the_pointed_spaces() {
    for r in [Semiring::boolean(), Semiring::zmod(2)] {
        let hat = pointed_lifting(r.clone(), 2, Bounds::default()).unwrap();
        let again = distr_to_lifting(&lifting_to_distr(&hat).unwrap());
        let mut rep = LawReport::new("V^");
        check_liftings_equal(&mut rep, "same", &again, &hat).unwrap();
        assert!(rep.passed(), "{rep}");
        // (R^n, δ_i): the point goes to δ_i.
        for alg in &hat.pair.pool {
            let n = alg.carrier.set().unwrap().as_numeral().unwrap();
            let i = alg
                .structure
                .apply(&SetDesc::numeral(n).plus1_point())
                .as_index()
                .unwrap();
            let vn = space(n, &r);
            assert_eq!(
                again.assign(alg).unwrap().apply(&vn.plus1_point()),
                delta(n, i, &r)
            );
        }
    }
}

#[test]
fn extension_of_the_vecspace_law_adds_a_fixed_basis_vector() {
    let r = Semiring::boolean();
    let l = pointed_vecspace_law(r.clone(), 2, Bounds::default()).unwrap();
    let e = distr_to_kleisli_extension(&l);
    let kc = e.kl.cat.as_ref();
    // S̃ on a Kleisli map n -> m is the (n+1) x (m+1) block matrix [f 0; 0 1].
    for n in 0..=2 {
        for m in 0..=2 {
            for f in kc.hom(&Obj::numeral(n), &Obj::numeral(m)).unwrap().iter() {
                let sf = e.stilde.on_mor(f).unwrap();
                for i in 0..=n {
                    let row = sf.apply(&Value::int(i));
                    let want = if i < n {
                        let mut v = f.apply(&Value::int(i)).as_tuple().unwrap().to_vec();
                        v.push(Value::int(r.zero));
                        Value::Tuple(v)
                    } else {
                        delta(m + 1, m, &r)
                    };
                    assert_eq!(row, want, "f = {}", kc.show(f));
                }
            }
        }
    }
    assert!(check_kleisli_extension(&e).unwrap().passed());
}

#[test]
fn extension_of_the_choices_law_maps_letterwise() {
    let l = freemonoid_powerset_law(2, Bounds::default()).unwrap();
    let e = distr_to_kleisli_extension(&l);
    let kc = e.kl.cat.as_ref();
    let two = Obj::numeral(2);
    for f in kc.hom(&two, &two).unwrap().iter() {
        let sf = e.stilde.on_mor(f).unwrap();
        let w = word(vec![Value::int(0), Value::int(1)]);
        let want = Value::set(
            f.apply(&Value::int(0))
                .as_set()
                .unwrap()
                .iter()
                .flat_map(|a| {
                    f.apply(&Value::int(1))
                        .as_set()
                        .unwrap()
                        .iter()
                        .map(|b| word(vec![a.clone(), b.clone()]))
                        .collect::<Vec<_>>()
                }),
        );
        assert_eq!(sf.apply(&w), want);
    }
}

#[test]
fn conversions_round_trip_on_both_laws() {
    let laws = [
        freemonoid_powerset_law(2, Bounds::default()).unwrap(),
        pointed_vecspace_law(Semiring::zmod(3), 2, Bounds::default()).unwrap(),
    ];
    for l in &laws {
        let mut r = LawReport::new("round trips");
        check_laws_equal(
            &mut r,
            "A",
            &lifting_to_distr(&distr_to_lifting(l)).unwrap(),
            l,
        )
        .unwrap();
        let e = distr_to_kleisli_extension(l);
        let back = kleisli_extension_to_distr(&e).unwrap();
        check_laws_equal(&mut r, "C/law", &back, l).unwrap();
        check_extensions_equal(
            &mut r,
            "C/extension",
            &distr_to_kleisli_extension(&back),
            &e,
        )
        .unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn law_determines_a_monad_of_relative_monads() {
    let l = pointed_vecspace_law(Semiring::zmod(2), 2, Bounds::default()).unwrap();
    let r = check_law_as_monad(&l).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.axiom("1-cell/extension").is_some());
}
