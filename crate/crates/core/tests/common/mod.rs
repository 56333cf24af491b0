//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use relmon::cat::{Category, Mor, Obj};
use relmon::distributive::{LiftingToAlgebras, RelDistLaw};
use relmon::instances::{powerset_relmonad, set_map, vecspace_relmonad};
use relmon::kleisli::kleisli_category;
use relmon::{Bounds, Semiring, SetDesc, Value};

pub type Matrix = Vec<Vec<usize>>;

/// Row `i` is the image of basis vector `i`.
pub fn matrix(f: &Mor, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            f.apply(&Value::int(i))
                .as_tuple()
                .unwrap()
                .iter()
                .map(|x| x.as_index().unwrap())
                .collect()
        })
        .collect()
}

pub fn matmul(r: &Semiring, a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|k| (0..inner).fold(r.zero, |acc, j| r.add[acc][r.mul[row[j]][b[j][k]]]))
                .collect()
        })
        .collect()
}

/// Checks every composable pair of `Kl(V)` homs with dims up to `maxdim`
/// against [`matmul`], returning the number of pairs.
pub fn check_matrix_oracle(r: Semiring, maxdim: usize) -> usize {
    let t = vecspace_relmonad(r.clone(), maxdim, Bounds::default()).unwrap();
    let kl = kleisli_category(&t);
    let c = kl.cat.as_ref();
    let mut pairs = 0;
    for n in 0..=maxdim {
        for m in 0..=maxdim {
            let fs = c.hom(&Obj::numeral(n), &Obj::numeral(m)).unwrap();
            assert_eq!(fs.len(), r.elements.len().pow((n * m) as u32));
            for k in 0..=maxdim {
                let gs = c.hom(&Obj::numeral(m), &Obj::numeral(k)).unwrap();
                let gms: Vec<Matrix> = gs.iter().map(|g| matrix(g, m)).collect();
                for f in fs.iter() {
                    let fm = matrix(f, n);
                    for (g, gm) in gs.iter().zip(&gms) {
                        let got = matrix(&c.compose(g, f).unwrap(), n);
                        assert_eq!(got, matmul(&r, &fm, gm, m, k), "{n}x{m} then {m}x{k}");
                        pairs += 1;
                    }
                }
            }
        }
    }
    pairs
}

pub type Relation = BTreeSet<(usize, usize)>;

pub fn relation(f: &Mor, n: usize) -> Relation {
    (0..n)
        .flat_map(|i| {
            f.apply(&Value::int(i))
                .as_set()
                .unwrap()
                .iter()
                .map(|j| (i, j.as_index().unwrap()))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn relcomp(a: &Relation, b: &Relation) -> Relation {
    a.iter()
        .flat_map(|&(i, j)| {
            b.iter()
                .filter(move |&&(j2, _)| j2 == j)
                .map(move |&(_, k)| (i, k))
        })
        .collect()
}

/// Checks every composable pair of `Kl(P)` homs on sets up to `kappa`
/// against [`relcomp`], returning the number of pairs.
pub fn check_relation_oracle(kappa: usize) -> usize {
    let t = powerset_relmonad(kappa, Bounds::default()).unwrap();
    let kl = kleisli_category(&t);
    let c = kl.cat.as_ref();
    let mut pairs = 0;
    for n in 0..=kappa {
        for m in 0..=kappa {
            let fs = c.hom(&Obj::numeral(n), &Obj::numeral(m)).unwrap();
            assert_eq!(fs.len(), 1 << (n * m));
            for k in 0..=kappa {
                let gs = c.hom(&Obj::numeral(m), &Obj::numeral(k)).unwrap();
                let grs: Vec<Relation> = gs.iter().map(|g| relation(g, m)).collect();
                for f in fs.iter() {
                    let fr = relation(f, n);
                    for (g, gr) in gs.iter().zip(&grs) {
                        assert_eq!(relation(&c.compose(g, f).unwrap(), n), relcomp(&fr, gr));
                        pairs += 1;
                    }
                }
            }
        }
    }
    pairs
}

/// The classical lifting of the pointed-set monad over itself:
/// `(M, p) ↦ (M + 1, point ↦ inl p, inl u ↦ u)`.
pub fn classical_pointed_lifting(l: &RelDistLaw) -> LiftingToAlgebras {
    LiftingToAlgebras::new("classical", l.t.clone(), l.pair.clone(), |alg| {
        let m = alg.carrier.set()?.clone();
        let m1 = SetDesc::plus1(m.clone());
        let p = alg.structure.apply(&m.plus1_point());
        let inner = m1.clone();
        Ok(set_map(&SetDesc::plus1(m1.clone()), &m1, move |v| {
            inner.plus1_case(v).unwrap_or_else(|| m.plus1_inl(&p))
        }))
    })
}
