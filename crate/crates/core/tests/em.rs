//! Algebra categories of the zoo against brute-force counts.

use std::collections::BTreeSet;

use relmon::algebras::{check_em_relative_adjunction, em_category};
use relmon::cat::{check_category, Obj};
use relmon::instances::identity::finsets;
use relmon::instances::pointed::pointed_monad;
use relmon::instances::vecspace::space;
use relmon::instances::vecspace_relmonad;
use relmon::monad::embed_monad;
use relmon::{Bounds, Semiring};

/// Distinct addition tables on `{0, …, 2^k - 1}` transported from `F₂^k`
/// along every bijection: the labelled `F₂`-vector-space structures.
fn f2_structures(k: u32) -> usize {
    let n = 1usize << k;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::new();
    loop {
        let mut table = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[x ^ y];
            }
        }
        seen.insert(table);
        // next permutation
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    seen.len()
}

#[test]
fn pointed_algebras_are_pointed_sets() {
    let t = embed_monad(&pointed_monad("S", finsets(2, Bounds::default()))).unwrap();
    let pool: Vec<Obj> = (0..=2).map(Obj::numeral).collect();
    let em = em_category(&t, &pool).unwrap();
    let per: Vec<usize> = pool
        .iter()
        .map(|m| em.cat.algebras().filter(|(_, a)| &a.carrier == m).count())
        .collect();
    assert_eq!(per, vec![0, 1, 2]);
    assert!(check_category(em.cat.as_ref()).unwrap().passed());
    let r = check_em_relative_adjunction(&t, &pool).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn vecspace_algebras_over_z2_are_vector_spaces() {
    let r = Semiring::zmod(2);
    let t = vecspace_relmonad(r.clone(), 2, Bounds::default()).unwrap();
    let pool: Vec<Obj> = [1, 2, 4].into_iter().map(Obj::numeral).collect();
    let em = em_category(&t, &pool).unwrap();
    for (m, k) in pool.iter().zip([0u32, 1, 2]) {
        let got = em.cat.algebras().filter(|(_, a)| &a.carrier == m).count();
        assert_eq!(got, f2_structures(k), "carrier {m}");
    }
}

#[test]
fn vecspace_em_adjunction_recovers_the_monad() {
    for sr in [Semiring::boolean(), Semiring::zmod(2)] {
        let t = vecspace_relmonad(sr.clone(), 2, Bounds::default()).unwrap();
        let pool: Vec<Obj> = (0..=2).map(|n| Obj::Set(space(n, &sr))).collect();
        let r = check_em_relative_adjunction(&t, &pool).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.notes.is_empty(), "{:?}", r.notes);
    }
}
