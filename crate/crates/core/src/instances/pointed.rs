//! The pointed-set monad `X + 1`, its compatible pair along finite cardinals,
//! and the lifting of vector spaces to pointed algebras.

use super::{numeral_inclusion, set_map, vecspace_over};
use crate::cat::{CatHandle, Functor, Obj, Universe};
use crate::distributive::{
    enumerate_algebras, lifting_to_distr, CompatiblePair, LiftingToAlgebras, RelDistLaw,
};
use crate::error::{structural, Result};
use crate::instances::vecspace::delta;
use crate::monad::Monad;
use crate::semiring::Semiring;
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

fn plus1(x: &Obj) -> Result<SetDesc> {
    Ok(SetDesc::plus1(x.set()?.clone()))
}

/// `SX = X + 1` with the inclusion as unit and the two points collapsed by
/// the multiplication. `inl(x)` decomposes over `1` and the point over `0`.
pub fn pointed_monad(label: impl Into<String>, c: CatHandle) -> Monad {
    let functor = Functor::new(
        "P1",
        c.clone(),
        c,
        |x| Ok(Obj::Set(plus1(x)?)),
        |f| {
            let (a, b) = (f.dom.set()?.clone(), f.cod.set()?.clone());
            let g = f.clone();
            let (a1, b1) = (a.clone(), b.clone());
            Ok(set_map(
                &SetDesc::plus1(a),
                &SetDesc::plus1(b),
                move |v| match a1.plus1_case(v) {
                    Some(x) => b1.plus1_inl(&g.apply(&x)),
                    None => b1.plus1_point(),
                },
            ))
        },
    );
    Monad::new(
        label,
        functor,
        |x| {
            let a = x.set()?.clone();
            let a1 = a.clone();
            Ok(set_map(&a, &SetDesc::plus1(a.clone()), move |v| {
                a1.plus1_inl(v)
            }))
        },
        |x| {
            let a = x.set()?.clone();
            let a1 = SetDesc::plus1(a.clone());
            let a2 = a1.clone();
            Ok(set_map(
                &SetDesc::plus1(a1.clone()),
                &a1,
                move |v| match a2.plus1_case(v) {
                    Some(u) => u,
                    None => a.plus1_point(),
                },
            ))
        },
    )
    .with_decomposition(|x, w| {
        let base = x.set()?.clone();
        match base.plus1_case(w) {
            Some(v) => Ok((1, vec![v], SetDesc::numeral(1).plus1_inl(&Value::int(0)))),
            None if SetDesc::plus1(base.clone()).contains(w) => {
                Ok((0, vec![], SetDesc::numeral(0).plus1_point()))
            }
            None => Err(structural(format!("{w} is not an element of {base} + 1"))),
        }
    })
}

/// `(S, S_f)` along `base`; the algebra pool is every pointed structure on
/// the test objects of the source.
pub fn pointed_pair_over(base: &Functor) -> Result<CompatiblePair> {
    let s0 = pointed_monad("S0", base.src.clone());
    let pool = enumerate_algebras(&s0, &base.src.test_objects())?;
    CompatiblePair::new(base.clone(), pointed_monad("S", base.dst.clone()), s0, pool)
}

fn fin_inclusion(maxsize: usize, bounds: Bounds) -> Functor {
    numeral_inclusion(Universe::Numerals, Universe::Finite, maxsize, bounds)
}

/// `(S, S_f)` along finite cardinals `0..=maxsize` into finite sets.
pub fn pointed_pair(maxsize: usize, bounds: Bounds) -> Result<CompatiblePair> {
    pointed_pair_over(&fin_inclusion(maxsize, bounds))
}

/// `V̂(n, i) = (R^n, δ_i)`: the lifted structure sends `inl(v)` to `v` and the
/// point to `δ_i`, where `i` is the chosen point of the pointed cardinal.
pub fn pointed_lifting(r: Semiring, maxdim: usize, bounds: Bounds) -> Result<LiftingToAlgebras> {
    let r = r
        .lawful()
        .map_err(|_| structural("semiring is not lawful"))?;
    let base = fin_inclusion(maxdim, bounds);
    let pair = pointed_pair_over(&base)?;
    let t = vecspace_over(base, r.clone());
    let t1 = t.clone();
    Ok(LiftingToAlgebras::new("V^", t, pair, move |alg| {
        let n = alg
            .carrier
            .set()?
            .as_numeral()
            .ok_or_else(|| structural(format!("{} is not a cardinal", alg.carrier)))?;
        let point = alg.structure.apply(&SetDesc::numeral(n).plus1_point());
        let i = point
            .as_index()
            .ok_or_else(|| structural("point is not an index"))?;
        let vn = t1.on_obj(&alg.carrier)?.set()?.clone();
        let d = delta(n, i, &r);
        let vn1 = vn.clone();
        Ok(set_map(
            &SetDesc::plus1(vn.clone()),
            &vn,
            move |v| match vn1.plus1_case(v) {
                Some(u) => u,
                None => d.clone(),
            },
        ))
    }))
}

/// The law derived from [`pointed_lifting`].
pub fn pointed_vecspace_law(r: Semiring, maxdim: usize, bounds: Bounds) -> Result<RelDistLaw> {
    lifting_to_distr(&pointed_lifting(r, maxdim, bounds)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributive::check_compatible_pair;

    #[test]
    fn empty_set_gets_a_point() {
        let p = pointed_pair(2, Bounds::default()).unwrap();
        let zero = Obj::numeral(0);
        assert_eq!(p.s.on_obj(&zero).unwrap(), Obj::numeral(1));
        assert!(p.s.unit(&zero).unwrap().cod == Obj::numeral(1));
    }

    #[test]
    fn multiplication_collapses_points() {
        let p = pointed_pair(2, Bounds::default()).unwrap();
        let m = p.s.mult(&Obj::numeral(2)).unwrap();
        // 2 + 2 = {0, 1, inner point 2, outer point 3}
        let got: Vec<Value> = (0..4).map(|i| m.apply(&Value::int(i))).collect();
        assert_eq!(
            got,
            vec![Value::int(0), Value::int(1), Value::int(2), Value::int(2)]
        );
    }

    #[test]
    fn pair_is_compatible_and_pool_is_pointed_sets() {
        let p = pointed_pair(2, Bounds::default()).unwrap();
        assert!(check_compatible_pair(&p).unwrap().passed());
        // pointed sets on 0, 1, 2 elements: 0 + 1 + 2
        assert_eq!(p.pool.len(), 3);
    }
}
