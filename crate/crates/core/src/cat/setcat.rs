//! Categories of described sets and functions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{expect_dom_cod, Category, Diff, Mor, Obj, Tier};
use crate::error::{structural, Error, Result};
use crate::sets::{Bounds, SetDesc};
use crate::value::Value;

/// Which described sets count as objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// Every described set.
    All,
    /// Finite described sets.
    Finite,
    /// Numerals `{0,...,n-1}` only.
    Numerals,
    /// Described sets with no power set of an infinite set inside.
    Countable,
}

impl Universe {
    pub fn admits(self, d: &SetDesc) -> bool {
        match self {
            Universe::All => true,
            Universe::Finite => d.is_finite(),
            Universe::Numerals => d.as_numeral().is_some(),
            Universe::Countable => countable(d),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Universe::All => "Set",
            Universe::Finite => "FinSet",
            Universe::Numerals => "Fin",
            Universe::Countable => "CSet",
        }
    }
}

fn countable(d: &SetDesc) -> bool {
    match d {
        SetDesc::Finite(_) | SetDesc::FuncSpace { .. } => true,
        SetDesc::Words(b) | SetDesc::Plus1(b) => countable(b),
        SetDesc::Pow(b) => b.is_finite(),
    }
}

type HomCache = Mutex<HashMap<(SetDesc, SetDesc), Arc<Vec<Mor>>>>;

/// Sets and functions over a universe of described sets, with a finite list
/// of test objects.
pub struct SetCategory {
    label: String,
    universe: Universe,
    objects: Vec<SetDesc>,
    bounds: Bounds,
    homs: HomCache,
}

impl SetCategory {
    pub fn new(universe: Universe, objects: Vec<SetDesc>, bounds: Bounds) -> Self {
        let label = format!(
            "{}[{}]",
            universe.name(),
            objects
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        SetCategory {
            label,
            universe,
            objects,
            bounds,
            homs: Mutex::new(HashMap::new()),
        }
    }

    /// Numerals `0..=n` as test objects.
    pub fn numerals(universe: Universe, n: usize, bounds: Bounds) -> Self {
        Self::new(universe, (0..=n).map(SetDesc::numeral).collect(), bounds)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    fn sets<'a>(&self, f: &'a Mor) -> Result<(&'a SetDesc, &'a SetDesc)> {
        Ok((f.dom.set()?, f.cod.set()?))
    }

    fn enumerate_hom(&self, a: &SetDesc, b: &SetDesc) -> Result<Vec<Mor>> {
        if !a.is_finite() {
            return Err(Error::Unsupported(format!(
                "hom-set {a} -> {b} has an infinite domain"
            )));
        }
        let dom = a.elements(&self.bounds)?;
        let cod = b.elements(&self.bounds)?;
        let count = (cod.len() as u128)
            .checked_pow(dom.len() as u32)
            .unwrap_or(u128::MAX);
        self.bounds.guard(|| format!("hom-set {a} -> {b}"), count)?;
        let index: Arc<HashMap<Value, usize>> = Arc::new(
            dom.iter()
                .cloned()
                .enumerate()
                .map(|(i, v)| (v, i))
                .collect(),
        );
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0usize; dom.len()];
        for _ in 0..count {
            let outputs: Vec<Value> = digits.iter().map(|&d| cod[d].clone()).collect();
            out.push(table_mor(a, b, index.clone(), outputs));
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < cod.len() {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }
}

/// A function stored as its outputs along an element index.
pub(crate) fn table_mor(
    a: &SetDesc,
    b: &SetDesc,
    index: Arc<HashMap<Value, usize>>,
    outputs: Vec<Value>,
) -> Mor {
    Mor::map(
        Obj::Set(a.clone()),
        Obj::Set(b.clone()),
        move |v| match index.get(v) {
            Some(&i) => outputs[i].clone(),
            None => panic!("function applied outside its domain at {v}"),
        },
    )
}

impl Category for SetCategory {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn tier(&self) -> Tier {
        Tier::Computable
    }

    fn bounds(&self) -> Bounds {
        self.bounds
    }

    fn test_objects(&self) -> Vec<Obj> {
        self.objects.iter().cloned().map(Obj::Set).collect()
    }

    fn contains(&self, a: &Obj) -> bool {
        a.as_set().is_some_and(|d| self.universe.admits(d))
    }

    fn exhaustive(&self, _a: &Obj, b: &Obj) -> bool {
        b.as_set().is_some_and(|d| d.is_finite())
    }

    fn hom(&self, a: &Obj, b: &Obj) -> Result<Arc<Vec<Mor>>> {
        let key = (a.set()?.clone(), b.set()?.clone());
        if let Some(h) = self.homs.lock().expect("hom cache poisoned").get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(self.enumerate_hom(&key.0, &key.1)?);
        self.homs
            .lock()
            .expect("hom cache poisoned")
            .insert(key, h.clone());
        Ok(h)
    }

    fn identity(&self, a: &Obj) -> Result<Mor> {
        a.set()?;
        Ok(Mor::map(a.clone(), a.clone(), |v| v.clone()))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        if f.cod != g.dom {
            return Err(structural(format!(
                "cannot compose {} -> {} after {} -> {}",
                g.dom, g.cod, f.dom, f.cod
            )));
        }
        let (f2, g2) = (f.clone(), g.clone());
        Ok(Mor::map(f.dom.clone(), g.cod.clone(), move |v| {
            g2.apply(&f2.apply(v))
        }))
    }

    fn compare(&self, f: &Mor, g: &Mor) -> Result<Option<Diff>> {
        expect_dom_cod(g, &f.dom, &f.cod, "comparison")?;
        for v in self.sets(f)?.0.elements(&self.bounds)?.iter() {
            let (l, r) = (f.apply(v), g.apply(v));
            if l != r {
                return Ok(Some(Diff {
                    at: Some(v.to_string()),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                }));
            }
        }
        Ok(None)
    }

    fn key(&self, f: &Mor) -> Result<Value> {
        let dom = self.sets(f)?.0.elements(&self.bounds)?;
        Ok(Value::Tuple(dom.iter().map(|v| f.apply(v)).collect()))
    }

    fn show(&self, f: &Mor) -> String {
        show_function(f, &self.bounds)
    }

    fn validate(&self, f: &Mor) -> Result<()> {
        let (a, b) = self.sets(f)?;
        for (o, d) in [(&f.dom, a), (&f.cod, b)] {
            if !self.universe.admits(d) {
                return Err(structural(format!(
                    "{o} is not an object of {}",
                    self.label
                )));
            }
        }
        if !f.is_function() {
            return Err(structural("set morphisms must be functions"));
        }
        for v in a.elements(&self.bounds)?.iter() {
            let y = f.apply(v);
            if !b.contains(&y) {
                return Err(structural(format!(
                    "function sends {v} to {y}, outside {b}"
                )));
            }
        }
        Ok(())
    }
}

/// `{a↦b, ...}` for small finite domains, `<fn A -> B>` otherwise.
pub(crate) fn show_function(f: &Mor, bounds: &Bounds) -> String {
    const SHOWN: usize = 8;
    let Some(dom) = f.dom.as_set() else {
        return format!("<{} -> {}>", f.dom, f.cod);
    };
    if !f.is_function() {
        return format!("{}: {} -> {}", f.name().unwrap_or("?"), f.dom, f.cod);
    }
    match dom.elements(bounds) {
        Ok(xs) if dom.is_finite() && xs.len() <= SHOWN => {
            let parts: Vec<String> = xs.iter().map(|x| format!("{x}↦{}", f.apply(x))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        _ => format!("<fn {} -> {}>", f.dom, f.cod),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin() -> SetCategory {
        SetCategory::numerals(Universe::Finite, 3, Bounds::default())
    }

    #[test]
    fn hom_sizes_are_powers() {
        let c = fin();
        for a in 0..=3 {
            for b in 0..=3 {
                let h = c.hom(&Obj::numeral(a), &Obj::numeral(b)).unwrap();
                assert_eq!(h.len() as u64, (b as u64).pow(a as u32));
            }
        }
    }

    #[test]
    fn identity_and_composition_evaluate() {
        let c = fin();
        let h = c.hom(&Obj::numeral(2), &Obj::numeral(2)).unwrap();
        let swap = h
            .iter()
            .find(|f| {
                f.apply(&Value::int(0)) == Value::int(1) && f.apply(&Value::int(1)) == Value::int(0)
            })
            .unwrap()
            .clone();
        let twice = c.compose(&swap, &swap).unwrap();
        let id = c.identity(&Obj::numeral(2)).unwrap();
        assert!(c.compare(&twice, &id).unwrap().is_none());
        let diff = c.compare(&swap, &id).unwrap().unwrap();
        assert_eq!(diff.at.as_deref(), Some("0"));
    }

    #[test]
    fn infinite_codomain_gives_bounded_hom() {
        let c = SetCategory::numerals(Universe::All, 1, Bounds::default());
        let w = Obj::Set(SetDesc::words(SetDesc::numeral(1)));
        // words over one letter of length at most 3
        assert_eq!(c.hom(&Obj::numeral(1), &w).unwrap().len(), 4);
        assert!(!c.exhaustive(&Obj::numeral(1), &w));
        assert!(matches!(
            c.hom(&w, &Obj::numeral(1)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn validate_catches_out_of_range() {
        let c = fin();
        let bad = Mor::map(Obj::numeral(1), Obj::numeral(1), |_| Value::int(5));
        assert!(c.validate(&bad).is_err());
    }
}
