//! Free semimodules `Vn = R^n` as a monad relative to `Fin -> FinSet`.

use super::{numeral_inclusion, set_map};
use crate::cat::{Functor, Obj, Universe};
use crate::error::{structural, Error, Result};
use crate::relmonad::RelativeMonad;
use crate::semiring::Semiring;
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

pub fn space(n: usize, r: &Semiring) -> SetDesc {
    SetDesc::func_space(SetDesc::numeral(n), r.clone())
}

/// `δ_i ∈ R^n`.
pub fn delta(n: usize, i: usize, r: &Semiring) -> Value {
    Value::Tuple(
        (0..n)
            .map(|j| Value::int(if i == j { r.one } else { r.zero }))
            .collect(),
    )
}

pub fn coords(v: &Value) -> Vec<usize> {
    v.as_tuple()
        .expect("vector")
        .iter()
        .map(|c| c.as_index().expect("semiring element"))
        .collect()
}

pub fn vector(xs: &[usize]) -> Value {
    Value::Tuple(xs.iter().map(|&x| Value::int(x)).collect())
}

fn numeral(x: &Obj) -> Result<usize> {
    x.set()?
        .as_numeral()
        .ok_or_else(|| structural(format!("{x} is not a numeral")))
}

/// `V` over `base`: `v_n(i) = δ_i` and `α†(f) = Σ_i f(i)·α(i)`.
pub fn vecspace_over(base: Functor, r: Semiring) -> RelativeMonad {
    let (r1, r2, r3) = (r.clone(), r.clone(), r.clone());
    RelativeMonad::new(
        format!("V_{}", r.name),
        base,
        move |x| Ok(Obj::Set(space(numeral(x)?, &r1))),
        move |x| {
            let n = numeral(x)?;
            let r = r2.clone();
            Ok(set_map(&SetDesc::numeral(n), &space(n, &r2), move |i| {
                delta(n, i.as_index().expect("index"), &r)
            }))
        },
        move |x, y, alpha| {
            let (n, m) = (numeral(x)?, numeral(y)?);
            let cols: Vec<Vec<usize>> = (0..n)
                .map(|i| coords(&alpha.apply(&Value::int(i))))
                .collect();
            let r = r3.clone();
            Ok(set_map(&space(n, &r3), &space(m, &r3), move |f| {
                let f = coords(f);
                let out: Vec<usize> = (0..m)
                    .map(|j| r.sum((0..n).map(|i| r.mul(f[i], cols[i][j]))))
                    .collect();
                vector(&out)
            }))
        },
    )
}

/// `V` over `Fin_{<=maxdim} -> FinSet_{<=maxdim}`; `r` must be lawful.
pub fn vecspace_relmonad(r: Semiring, maxdim: usize, bounds: Bounds) -> Result<RelativeMonad> {
    let r = r.lawful().map_err(|e| match e {
        Error::Law(rep) => structural(format!(
            "semiring is not lawful: {}",
            rep.summary().join("; ")
        )),
        other => other,
    })?;
    Ok(vecspace_over(
        numeral_inclusion(Universe::Numerals, Universe::Finite, maxdim, bounds),
        r,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relmonad::check_relative_monad;

    #[test]
    fn extension_on_deltas_and_boolean_sum() {
        let r = Semiring::boolean();
        let t = vecspace_relmonad(r.clone(), 2, Bounds::default()).unwrap();
        let two = Obj::numeral(2);
        // α(0) = α(1) = δ_0
        let alpha = set_map(&SetDesc::numeral(2), &space(2, &r), |_| vector(&[1, 0]));
        let ad = t.ext(&two, &two, &alpha).unwrap();
        assert_eq!(ad.apply(&delta(2, 1, &r)), alpha.apply(&Value::int(1)));
        assert_eq!(ad.apply(&vector(&[1, 1])), vector(&[1, 0]));
        let z2 = Semiring::zmod(2);
        let t2 = vecspace_relmonad(z2.clone(), 2, Bounds::default()).unwrap();
        let alpha2 = set_map(&SetDesc::numeral(2), &space(2, &z2), |_| vector(&[1, 0]));
        assert_eq!(
            t2.ext(&two, &two, &alpha2).unwrap().apply(&vector(&[1, 1])),
            vector(&[0, 0])
        );
    }

    #[test]
    fn unit_extension_is_identity_and_laws_hold() {
        for r in [Semiring::boolean(), Semiring::zmod(2), Semiring::zmod(3)] {
            let t = vecspace_relmonad(r, 2, Bounds::default()).unwrap();
            let rep = check_relative_monad(&t).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn unlawful_semiring_is_structural() {
        let mut r = Semiring::boolean();
        r.add[0][1] = 0;
        assert!(matches!(
            vecspace_relmonad(r, 1, Bounds::default()),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn derived_functor_reindexes() {
        let r = Semiring::boolean();
        let t = vecspace_relmonad(r.clone(), 2, Bounds::default()).unwrap();
        let tf = t.functor();
        for u in t
            .src()
            .hom(&Obj::numeral(2), &Obj::numeral(2))
            .unwrap()
            .iter()
        {
            let image = tf.on_mor(u).unwrap();
            for i in 0..2 {
                let j = u.apply(&Value::int(i)).as_index().unwrap();
                assert_eq!(image.apply(&delta(2, i, &r)), delta(2, j, &r));
            }
        }
    }
}
