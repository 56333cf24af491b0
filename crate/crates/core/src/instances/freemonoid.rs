//! The free-monoid monad on described sets, its compatible pair along the
//! inclusion of countable sets, and its law over the power-set monad.

use std::collections::BTreeSet;

use super::{numeral_inclusion, powerset_over, set_map};
use crate::cat::{CatHandle, Functor, Obj, Universe};
use crate::distributive::{CompatiblePair, RelDistLaw, S0Algebra};
use crate::error::Result;
use crate::monad::Monad;
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

fn words(x: &Obj) -> Result<SetDesc> {
    Ok(SetDesc::words(x.set()?.clone()))
}

/// Words with concatenation and singleton words, on a category of described
/// sets. A word decomposes as its letters over the shape `⟨0, …, n-1⟩`.
pub fn words_monad(label: impl Into<String>, c: CatHandle) -> Monad {
    let functor = Functor::new(
        "W",
        c.clone(),
        c,
        |x| Ok(Obj::Set(words(x)?)),
        |f| {
            let g = f.clone();
            Ok(set_map(&words(&f.dom)?, &words(&f.cod)?, move |w| {
                Value::word(w.as_word().expect("word").iter().map(|v| g.apply(v)))
            }))
        },
    );
    Monad::new(
        label,
        functor,
        |x| {
            let a = x.set()?;
            Ok(set_map(a, &SetDesc::words(a.clone()), |v| {
                Value::word([v.clone()])
            }))
        },
        |x| {
            let ww = SetDesc::words(words(x)?);
            Ok(set_map(&ww, &words(x)?, |w| {
                Value::word(
                    w.as_word()
                        .expect("word")
                        .iter()
                        .flat_map(|u| u.as_word().expect("word").iter().cloned()),
                )
            }))
        },
    )
    .with_decomposition(|_, w| {
        let letters = w.as_word().expect("word").to_vec();
        let n = letters.len();
        Ok((n, letters, Value::word((0..n).map(Value::int))))
    })
}

/// Monoids on the numerals `1..=max`, as `W`-algebras folding a word.
pub fn monoid_pool(max: usize) -> Vec<S0Algebra> {
    let mut out = Vec::new();
    for n in 1..=max {
        let cells = n * n;
        let total = n.pow(cells as u32);
        for code in 0..total {
            let mut table = vec![0usize; cells];
            let mut c = code;
            for slot in table.iter_mut() {
                *slot = c % n;
                c /= n;
            }
            let op = |a: usize, b: usize| table[a * n + b];
            let assoc =
                (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))));
            let unit = (0..n).find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a));
            if let (true, Some(e)) = (assoc, unit) {
                let carrier = SetDesc::numeral(n);
                let t = table.clone();
                let structure = set_map(&SetDesc::words(carrier.clone()), &carrier, move |w| {
                    let fold = w
                        .as_word()
                        .expect("word")
                        .iter()
                        .fold(e, |acc, v| t[acc * n + v.as_index().expect("index")]);
                    Value::int(fold)
                });
                out.push(S0Algebra {
                    carrier: Obj::Set(carrier),
                    structure,
                });
            }
        }
    }
    out
}

/// `(W, W₀)` along `base`, with monoids on up to `pool_max` elements as the
/// algebra pool.
pub fn freemonoid_pair_over(base: &Functor, pool_max: usize) -> Result<CompatiblePair> {
    CompatiblePair::new(
        base.clone(),
        words_monad("W", base.dst.clone()),
        words_monad("W0", base.src.clone()),
        monoid_pool(pool_max),
    )
}

/// `(W, W₀)` along countable sets into all described sets, numerals
/// `0..=kappa`, words weighted up to `bounds.max_word`.
pub fn freemonoid_pair(kappa: usize, bounds: Bounds) -> Result<CompatiblePair> {
    let base = numeral_inclusion(Universe::Countable, Universe::All, kappa, bounds);
    freemonoid_pair_over(&base, kappa.min(2))
}

/// `d(⟨I₁, …, Iₙ⟩) = {⟨a₁, …, aₙ⟩ | aᵢ ∈ Iᵢ}`.
pub fn choices(w: &Value) -> Value {
    let mut acc: Vec<Vec<Value>> = vec![Vec::new()];
    for set in w.as_word().expect("word") {
        let options = set.as_set().expect("subset");
        acc = acc
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |a| {
                    let mut p = prefix.clone();
                    p.push(a.clone());
                    p
                })
            })
            .collect();
    }
    Value::Set(acc.into_iter().map(Value::Word).collect::<BTreeSet<_>>())
}

/// The power-set monad with the free-monoid pair and the law of choices.
pub fn freemonoid_powerset_law(kappa: usize, bounds: Bounds) -> Result<RelDistLaw> {
    let pair = freemonoid_pair(kappa, bounds)?;
    let t = powerset_over(pair.base.clone());
    RelDistLaw::new("choices", t, pair, |a| {
        let a = a.set()?.clone();
        let dom = SetDesc::words(SetDesc::pow(a.clone()));
        let cod = SetDesc::pow(SetDesc::words(a));
        Ok(set_map(&dom, &cod, choices))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributive::check_compatible_pair;

    fn w(xs: &[Value]) -> Value {
        Value::word(xs.iter().cloned())
    }

    #[test]
    fn choices_examples() {
        let (i, s) = (Value::int, |xs: Vec<Value>| Value::set(xs));
        assert_eq!(
            choices(&w(&[s(vec![i(1), i(2)]), s(vec![i(3)])])),
            s(vec![w(&[i(1), i(3)]), w(&[i(2), i(3)])])
        );
        assert_eq!(choices(&w(&[])), s(vec![w(&[])]));
        assert_eq!(choices(&w(&[s(vec![])])), s(vec![]));
    }

    #[test]
    fn multiplication_concatenates() {
        let p = freemonoid_pair(2, Bounds::default()).unwrap();
        let x = Obj::numeral(3);
        let m = p.s.mult(&x).unwrap();
        let (a, b, c) = (Value::int(0), Value::int(1), Value::int(2));
        let input = w(&[w(&[a.clone()]), w(&[b.clone(), c.clone()])]);
        assert_eq!(m.apply(&input), w(&[a, b, c]));
    }

    #[test]
    fn monoid_pool_counts() {
        // One monoid on a point; on two elements the identity can be either
        // element and the other squares to either.
        let pool = monoid_pool(2);
        assert_eq!(
            pool.iter().filter(|a| a.carrier == Obj::numeral(1)).count(),
            1
        );
        assert_eq!(
            pool.iter().filter(|a| a.carrier == Obj::numeral(2)).count(),
            4
        );
    }

    #[test]
    fn pair_is_compatible() {
        let p = freemonoid_pair(2, Bounds::default()).unwrap();
        let r = check_compatible_pair(&p).unwrap();
        assert!(r.passed(), "{r}");
    }
}
