//! Small presented categories and operators used as test fixtures and by the
//! command line.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::functor::FunctorDoc;
use crate::cat::presented::{CompEntry, MorDecl};
use crate::cat::{Functor, PresentedCategory, PresentedDoc};
use crate::error::Result;
use crate::operators::HomOperator;

/// The chain `a₀ ≤ a₁ ≤ … ≤ a_{n-1}` with objects named `a`, `b`, `c`, ….
pub fn chain(n: usize) -> Result<PresentedCategory> {
    let names: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    PresentedCategory::from_preorder(n.to_string(), &refs, |i, j| i <= j)
}

/// The cyclic group of order `n` as a one-object category; `g^k` is named
/// `g{k}` and the identity `e`.
pub fn cyclic(n: usize) -> Result<PresentedCategory> {
    let name = |k: usize| {
        if k == 0 {
            "e".to_string()
        } else {
            format!("g{k}")
        }
    };
    let doc = PresentedDoc {
        objects: vec!["*".into()],
        morphisms: (0..n)
            .map(|k| MorDecl {
                name: name(k),
                dom: "*".into(),
                cod: "*".into(),
            })
            .collect(),
        identities: BTreeMap::from([("*".to_string(), "e".to_string())]),
        composition: (0..n)
            .flat_map(|i| {
                (0..n).map(move |j| CompEntry {
                    first: name(i),
                    second: name(j),
                    result: name((i + j) % n),
                })
            })
            .collect(),
    };
    PresentedCategory::from_doc(format!("Z{n}"), doc)
}

/// `Z/3` with `g1` then `g1` redirected to `e`, which breaks associativity.
pub fn broken_cyclic3() -> Result<PresentedCategory> {
    cyclic(3)?.with_composite("g1", "g1", "e")
}

/// The monotone map from the chain of three onto the chain of two sending
/// `a, b ↦ a` and `c ↦ b`.
pub fn collapse() -> Result<Functor> {
    let (src, dst) = (Arc::new(chain(3)?), Arc::new(chain(2)?));
    let obj = |x: &str| if x == "c" { "b" } else { "a" };
    let mut doc = FunctorDoc {
        objects: BTreeMap::new(),
        morphisms: BTreeMap::new(),
    };
    for o in &src.doc().objects {
        doc.objects.insert(o.clone(), obj(o).to_string());
    }
    for m in &src.doc().morphisms {
        let (d, c) = (obj(&m.dom), obj(&m.cod));
        let image = if d == c {
            format!("id_{d}")
        } else {
            format!("{d}->{c}")
        };
        doc.morphisms.insert(m.name.clone(), image);
    }
    Ok(Functor::from_doc("collapse", src, dst, doc))
}

/// Operators between cospans of presented categories, by name: `identity`
/// on the chain of three, `whisker` along [`collapse`] and `cyclic` the
/// identity operator on `Z/3`.
pub fn operator(name: &str) -> Result<HomOperator> {
    match name {
        "identity" => {
            let id = Functor::identity(Arc::new(chain(3)?));
            Ok(HomOperator::identity(&id, &id))
        }
        "whisker" => {
            let t = collapse()?;
            let id = Functor::identity(t.src.clone());
            HomOperator::whisker(&t, &id, &id)
        }
        "cyclic" => {
            let id = Functor::identity(Arc::new(cyclic(3)?));
            Ok(HomOperator::identity(&id, &id))
        }
        other => Err(crate::error::structural(format!(
            "unknown operator fixture {other}"
        ))),
    }
}

pub const OPERATORS: [&str; 3] = ["identity", "whisker", "cyclic"];
