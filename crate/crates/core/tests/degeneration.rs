//! Over the identity, relative notions are the classical ones: the
//! pointed-set monad distributing over itself.

mod common;

use common::classical_pointed_lifting as classical;
use relmon::cat::{same, Mor, Obj};
use relmon::distributive::*;
use relmon::instances::degenerate::pointed_over_itself;
use relmon::{Bounds, LawReport, SetDesc};

#[test]
fn swap_law_is_lawful_in_every_form() {
    let l = pointed_over_itself(2, Bounds::default()).unwrap();
    let r = relmon::suite::check_law_suite(&l).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn lifting_of_the_swap_law_is_the_classical_one() {
    let l = pointed_over_itself(2, Bounds::default()).unwrap();
    let oracle = classical(&l);
    assert!(check_lifting(&oracle).unwrap().passed());
    let mut r = LawReport::new("degeneration");
    check_liftings_equal(&mut r, "law-to-lifting", &distr_to_lifting(&l), &oracle).unwrap();
    check_laws_equal(
        &mut r,
        "lifting-to-law",
        &lifting_to_distr(&oracle).unwrap(),
        &l,
    )
    .unwrap();
    assert!(r.passed(), "{r}");
    // Bit for bit on every element of every pool algebra.
    let c = l.t.dst();
    for alg in distr_to_lifting(&l).algebras().unwrap() {
        let got: Mor = distr_to_lifting(&l).assign(&alg).unwrap();
        let want = oracle.assign(&alg).unwrap();
        for v in got.dom.set().unwrap().elements(&c.bounds()).unwrap().iter() {
            assert_eq!(got.apply(v), want.apply(v));
        }
        assert!(same(c.as_ref(), &got, &want).unwrap().is_none());
    }
}

#[test]
fn swap_exchanges_the_two_points() {
    let l = pointed_over_itself(2, Bounds::default()).unwrap();
    let one = Obj::numeral(1);
    let d = l.at(&one).unwrap();
    let x = SetDesc::numeral(1);
    let x1 = SetDesc::plus1(x.clone());
    let inner = x1.plus1_inl(&x.plus1_point());
    let outer = x1.plus1_point();
    assert_eq!(d.apply(&inner), outer);
    assert_eq!(d.apply(&outer), inner);
}
