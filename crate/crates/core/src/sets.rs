//! Described sets: finite sets, words, finite subsets, `X + 1` and
//! semiring-valued function spaces.
//!
//! Infinite descriptions are enumerated by *weight*. A letter of a word costs
//! `max(1, weight)`, a word weighs the sum of its letter costs, a finite subset
//! of an infinite set weighs `max(1, sum of member costs)`, and elements of
//! finite descriptions weigh 1. Enumeration returns every element whose weight
//! is within the `max_word` budget, so nested words such as `<<a>,<b,c>>` are
//! covered without the blow-up of bounding each layer separately.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};
use crate::semiring::Semiring;
use crate::value::Value;

/// Enumeration and sampling bounds shared by every computable category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    /// Weight budget for elements of infinite described sets.
    pub max_word: usize,
    /// Largest finite subset drawn from an infinite set.
    pub max_subset: usize,
    /// Law instances evaluated per axiom before switching to a seeded sample.
    pub max_instances: u64,
    /// Hard cap on any single enumeration (carriers, hom-sets, pools).
    pub max_enum: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_word: 3,
            max_subset: 2,
            max_instances: 20_000,
            max_enum: 1 << 17,
        }
    }
}

impl Bounds {
    pub fn with_max_word(mut self, n: usize) -> Self {
        self.max_word = n;
        self
    }

    pub fn with_max_instances(mut self, n: u64) -> Self {
        self.max_instances = n;
        self
    }

    pub fn with_max_enum(mut self, n: usize) -> Self {
        self.max_enum = n;
        self
    }

    pub(crate) fn guard(&self, what: impl FnOnce() -> String, estimate: u128) -> Result<()> {
        if estimate > self.max_enum as u128 {
            Err(Error::Resource {
                what: what(),
                estimate,
                cap: self.max_enum,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetDesc {
    /// Sorted, duplicate-free elements. `{0,...,n-1}` is the numeral `n`.
    Finite(Vec<Value>),
    Words(Box<SetDesc>),
    /// Finite subsets.
    Pow(Box<SetDesc>),
    /// `X + 1` for a non-numeral `X`; use [`SetDesc::plus1`] to build it.
    Plus1(Box<SetDesc>),
    /// Functions `base -> R`, as tuples in the canonical order of `base`.
    FuncSpace {
        base: Box<SetDesc>,
        semiring: Semiring,
    },
}

impl SetDesc {
    pub fn numeral(n: usize) -> SetDesc {
        SetDesc::Finite((0..n).map(Value::int).collect())
    }

    pub fn finite<I: IntoIterator<Item = Value>>(items: I) -> SetDesc {
        let set: BTreeSet<Value> = items.into_iter().collect();
        SetDesc::Finite(set.into_iter().collect())
    }

    pub fn words(base: SetDesc) -> SetDesc {
        SetDesc::Words(Box::new(base))
    }

    pub fn pow(base: SetDesc) -> SetDesc {
        SetDesc::Pow(Box::new(base))
    }

    /// `X + 1`, keeping numerals closed: `n + 1` is the numeral `n+1` with the
    /// new point `n`.
    pub fn plus1(base: SetDesc) -> SetDesc {
        match base.as_numeral() {
            Some(n) => SetDesc::numeral(n + 1),
            None => SetDesc::Plus1(Box::new(base)),
        }
    }

    pub fn func_space(base: SetDesc, semiring: Semiring) -> SetDesc {
        SetDesc::FuncSpace {
            base: Box::new(base),
            semiring,
        }
    }

    pub fn as_numeral(&self) -> Option<usize> {
        match self {
            SetDesc::Finite(xs) => xs
                .iter()
                .enumerate()
                .all(|(i, v)| v.as_index() == Some(i))
                .then_some(xs.len()),
            _ => None,
        }
    }

    /// Normal form: finite lists sorted and `Plus1` of numerals collapsed.
    pub fn canonical(self) -> SetDesc {
        match self {
            SetDesc::Finite(xs) => SetDesc::finite(xs),
            SetDesc::Words(b) => SetDesc::words(b.canonical()),
            SetDesc::Pow(b) => SetDesc::pow(b.canonical()),
            SetDesc::Plus1(b) => SetDesc::plus1(b.canonical()),
            SetDesc::FuncSpace { base, semiring } => {
                SetDesc::func_space(base.canonical(), semiring)
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            SetDesc::Finite(_) | SetDesc::FuncSpace { .. } => true,
            SetDesc::Words(_) => false,
            SetDesc::Pow(b) | SetDesc::Plus1(b) => b.is_finite(),
        }
    }

    /// Exact size of a finite description (saturating).
    pub fn cardinality(&self) -> Option<u128> {
        match self {
            SetDesc::Finite(xs) => Some(xs.len() as u128),
            SetDesc::Words(_) => None,
            SetDesc::Pow(b) => b.cardinality().map(|n| pow_sat(2, n)),
            SetDesc::Plus1(b) => b.cardinality().map(|n| n.saturating_add(1)),
            SetDesc::FuncSpace { base, semiring } => base
                .cardinality()
                .map(|n| pow_sat(semiring.size() as u128, n)),
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match self {
            SetDesc::Finite(xs) => xs.binary_search(v).is_ok(),
            SetDesc::Words(b) => v.as_word().is_some_and(|w| w.iter().all(|x| b.contains(x))),
            SetDesc::Pow(b) => v.as_set().is_some_and(|s| s.iter().all(|x| b.contains(x))),
            SetDesc::Plus1(b) => match v {
                Value::Point => true,
                Value::Inl(x) => b.contains(x),
                _ => false,
            },
            SetDesc::FuncSpace { base, semiring } => match (v.as_tuple(), base.cardinality()) {
                (Some(t), Some(n)) => {
                    t.len() as u128 == n
                        && t.iter()
                            .all(|x| x.as_index().is_some_and(|i| i < semiring.size()))
                }
                _ => false,
            },
        }
    }

    /// Left injection `X -> X + 1`; `self` is `X`.
    pub fn plus1_inl(&self, v: &Value) -> Value {
        match self.as_numeral() {
            Some(_) => v.clone(),
            None => Value::Inl(Box::new(v.clone())),
        }
    }

    /// The added point of `X + 1`; `self` is `X`.
    pub fn plus1_point(&self) -> Value {
        match self.as_numeral() {
            Some(n) => Value::int(n),
            None => Value::Point,
        }
    }

    /// Case split on an element of `X + 1`: `Some(x)` for `inl(x)`, `None` for
    /// the point. `self` is `X`.
    pub fn plus1_case(&self, v: &Value) -> Option<Value> {
        match self.as_numeral() {
            Some(n) => (v.as_index() != Some(n)).then(|| v.clone()),
            None => match v {
                Value::Inl(x) => Some((**x).clone()),
                _ => None,
            },
        }
    }

    /// Elements in canonical order: all of them for finite descriptions,
    /// otherwise every element within the weight budget.
    pub fn elements(&self, bounds: &Bounds) -> Result<Arc<Vec<Value>>> {
        static CACHE: OnceLock<Mutex<HashMap<(SetDesc, usize, usize, usize), Arc<Vec<Value>>>>> =
            OnceLock::new();
        let key = (
            self.clone(),
            bounds.max_word,
            bounds.max_subset,
            bounds.max_enum,
        );
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().expect("enumeration cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let mut out: Vec<Value> = if self.is_finite() {
            self.finite_elements(bounds)?
        } else {
            self.weighted(bounds.max_word, bounds)?
                .into_iter()
                .map(|(v, _)| v)
                .collect()
        };
        out.sort();
        out.dedup();
        let out = Arc::new(out);
        cache
            .lock()
            .expect("enumeration cache poisoned")
            .insert(key, out.clone());
        Ok(out)
    }

    fn finite_elements(&self, bounds: &Bounds) -> Result<Vec<Value>> {
        let size = self.cardinality().expect("finite description");
        bounds.guard(|| format!("elements of {self}"), size)?;
        Ok(match self {
            SetDesc::Finite(xs) => xs.clone(),
            SetDesc::Pow(b) => {
                let base = b.finite_elements(bounds)?;
                (0u64..(1u64 << base.len()))
                    .map(|mask| {
                        Value::Set(
                            base.iter()
                                .enumerate()
                                .filter(|(i, _)| mask & (1 << i) != 0)
                                .map(|(_, v)| v.clone())
                                .collect(),
                        )
                    })
                    .collect()
            }
            SetDesc::Plus1(b) => {
                let mut xs: Vec<Value> = b
                    .finite_elements(bounds)?
                    .iter()
                    .map(|v| b.plus1_inl(v))
                    .collect();
                xs.push(b.plus1_point());
                xs
            }
            SetDesc::FuncSpace { base, semiring } => {
                let n = base.cardinality().expect("finite base") as usize;
                let k = semiring.size();
                let mut out = Vec::with_capacity(size as usize);
                let mut digits = vec![0usize; n];
                loop {
                    out.push(Value::Tuple(
                        digits.iter().map(|&d| Value::int(d)).collect(),
                    ));
                    let mut i = n;
                    loop {
                        if i == 0 {
                            return Ok(out);
                        }
                        i -= 1;
                        digits[i] += 1;
                        if digits[i] < k {
                            break;
                        }
                        digits[i] = 0;
                    }
                }
            }
            SetDesc::Words(_) => unreachable!("words are infinite"),
        })
    }

    /// Elements of weight at most `budget`, with their weights.
    fn weighted(&self, budget: usize, bounds: &Bounds) -> Result<Vec<(Value, usize)>> {
        if budget == 0 {
            // Only weight-0 elements: the empty word.
            return Ok(match self {
                SetDesc::Words(_) => vec![(Value::Word(vec![]), 0)],
                _ => vec![],
            });
        }
        if self.is_finite() {
            return Ok(self
                .finite_elements(bounds)?
                .into_iter()
                .map(|v| (v, 1))
                .collect());
        }
        let out = match self {
            SetDesc::Words(b) => {
                let letters: Vec<(Value, usize)> = b
                    .weighted(budget, bounds)?
                    .into_iter()
                    .map(|(v, w)| (v, w.max(1)))
                    .collect();
                let mut out = Vec::new();
                let mut stack = vec![(Vec::<Value>::new(), 0usize)];
                while let Some((word, w)) = stack.pop() {
                    for (letter, cost) in &letters {
                        if w + cost <= budget {
                            let mut next = word.clone();
                            next.push(letter.clone());
                            stack.push((next, w + cost));
                        }
                    }
                    out.push((Value::Word(word), w));
                    bounds.guard(|| format!("elements of {self}"), out.len() as u128)?;
                }
                out
            }
            SetDesc::Pow(b) => {
                let members: Vec<(Value, usize)> = b
                    .weighted(budget, bounds)?
                    .into_iter()
                    .map(|(v, w)| (v, w.max(1)))
                    .collect();
                let mut out = Vec::new();
                let mut stack = vec![(0usize, BTreeSet::<Value>::new(), 0usize)];
                while let Some((from, set, w)) = stack.pop() {
                    for (i, (m, cost)) in members.iter().enumerate().skip(from) {
                        if set.len() < bounds.max_subset && w + cost <= budget {
                            let mut next = set.clone();
                            next.insert(m.clone());
                            stack.push((i + 1, next, w + cost));
                        }
                    }
                    out.push((Value::Set(set), w.max(1)));
                    bounds.guard(|| format!("elements of {self}"), out.len() as u128)?;
                }
                out
            }
            SetDesc::Plus1(b) => {
                let mut out: Vec<(Value, usize)> = b
                    .weighted(budget, bounds)?
                    .into_iter()
                    .map(|(v, w)| (b.plus1_inl(&v), w))
                    .collect();
                out.push((b.plus1_point(), 1));
                out
            }
            SetDesc::Finite(_) | SetDesc::FuncSpace { .. } => unreachable!("finite handled above"),
        };
        Ok(out)
    }

    /// Vector helpers for `FuncSpace`: the semiring and dimension.
    pub fn as_func_space(&self) -> Option<(usize, &Semiring)> {
        match self {
            SetDesc::FuncSpace { base, semiring } => {
                base.cardinality().map(|n| (n as usize, semiring))
            }
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<SetDesc> {
        let d: SetDesc = serde_json::from_str(text)?;
        if let SetDesc::FuncSpace { base, semiring } = &d {
            semiring.validate()?;
            if !base.is_finite() {
                return Err(structural("function spaces need a finite base"));
            }
        }
        Ok(d.canonical())
    }
}

fn pow_sat(base: u128, exp: u128) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

impl fmt::Display for SetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_numeral() {
            return write!(f, "{n}");
        }
        match self {
            SetDesc::Finite(xs) => {
                f.write_str("{")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
            SetDesc::Words(b) => write!(f, "W({b})"),
            SetDesc::Pow(b) => write!(f, "P({b})"),
            SetDesc::Plus1(b) => write!(f, "({b})+1"),
            SetDesc::FuncSpace { base, semiring } => write!(f, "{}^{base}", semiring.name),
        }
    }
}

impl fmt::Debug for SetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
