//! Relative notions over the identity: the pointed-set monad distributing
//! over itself by exchanging the two added points.

use super::identity::finsets;
use super::pointed::pointed_monad;
use super::set_map;
use crate::cat::Functor;
use crate::distributive::{enumerate_algebras, CompatiblePair, RelDistLaw};
use crate::error::Result;
use crate::monad::embed_monad;
use crate::sets::{Bounds, SetDesc};

/// `T = S = S₀ = X + 1` on finite sets `0..=n` with `I` the identity, and
/// `d: (X + 1_T) + 1_S -> (X + 1_S) + 1_T` exchanging the points.
pub fn pointed_over_itself(n: usize, bounds: Bounds) -> Result<RelDistLaw> {
    let c = finsets(n, bounds);
    let t = embed_monad(&pointed_monad("T", c.clone()))?;
    let s0 = pointed_monad("S", c.clone());
    let pool = enumerate_algebras(&s0, &c.test_objects())?;
    let pair = CompatiblePair::new(
        Functor::identity(c.clone()),
        pointed_monad("S", c),
        s0,
        pool,
    )?;
    RelDistLaw::new("swap", t, pair, |x| {
        let a = x.set()?.clone();
        let inner = SetDesc::plus1(a.clone());
        let both = SetDesc::plus1(inner.clone());
        let (a1, i1) = (a.clone(), inner.clone());
        Ok(set_map(&both, &both, move |v| match i1.plus1_case(v) {
            Some(u) => match a1.plus1_case(&u) {
                Some(_) => v.clone(),
                None => i1.plus1_point(),
            },
            None => i1.plus1_inl(&a1.plus1_point()),
        }))
    })
}
