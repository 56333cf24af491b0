//! Finitely presented categories: named objects, named morphisms and a
//! total composition table.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Category, Diff, Mor, Obj, Tier};
use crate::error::{structural, Result};
use crate::sets::Bounds;
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompEntry {
    pub first: String,
    pub second: String,
    pub result: String,
}

/// The JSON form of a presented category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentedDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorDecl>,
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<CompEntry>,
}

#[derive(Debug)]
pub struct PresentedCategory {
    label: String,
    doc: PresentedDoc,
    types: HashMap<String, (String, String)>,
    homs: HashMap<(String, String), Arc<Vec<Mor>>>,
    comp: HashMap<(String, String), String>,
}

impl PresentedCategory {
    /// Validates a document: declared names, identities, typed and total
    /// composition. Law checking is separate.
    pub fn from_doc(label: impl Into<String>, doc: PresentedDoc) -> Result<Self> {
        let label = label.into();
        let mut objs = HashSet::new();
        for o in &doc.objects {
            if !objs.insert(o.as_str()) {
                return Err(structural(format!("duplicate object {o}")));
            }
        }
        let mut types = HashMap::new();
        let mut homs: HashMap<(String, String), Vec<Mor>> = HashMap::new();
        for m in &doc.morphisms {
            for end in [&m.dom, &m.cod] {
                if !objs.contains(end.as_str()) {
                    return Err(structural(format!(
                        "morphism {} uses undeclared object {end}",
                        m.name
                    )));
                }
            }
            if types
                .insert(m.name.clone(), (m.dom.clone(), m.cod.clone()))
                .is_some()
            {
                return Err(structural(format!("duplicate morphism {}", m.name)));
            }
            homs.entry((m.dom.clone(), m.cod.clone()))
                .or_default()
                .push(Mor::named(&m.name, Obj::named(&m.dom), Obj::named(&m.cod)));
        }
        for o in &doc.objects {
            let id = doc
                .identities
                .get(o)
                .ok_or_else(|| structural(format!("object {o} has no identity")))?;
            match types.get(id) {
                Some((d, c)) if d == o && c == o => {}
                Some((d, c)) => {
                    return Err(structural(format!(
                        "identity {id} of {o} has type {d} -> {c}"
                    )))
                }
                None => return Err(structural(format!("identity {id} of {o} is undeclared"))),
            }
        }
        if let Some(o) = doc.identities.keys().find(|o| !objs.contains(o.as_str())) {
            return Err(structural(format!(
                "identity given for undeclared object {o}"
            )));
        }
        let mut comp = HashMap::new();
        for e in &doc.composition {
            let ty = |n: &String| {
                types
                    .get(n)
                    .ok_or_else(|| structural(format!("composition uses undeclared morphism {n}")))
            };
            let (fd, fc) = ty(&e.first)?;
            let (gd, gc) = ty(&e.second)?;
            let (rd, rc) = ty(&e.result)?;
            if fc != gd {
                return Err(structural(format!(
                    "composite of {} then {}: {fc} is not {gd}",
                    e.first, e.second
                )));
            }
            if rd != fd || rc != gc {
                return Err(structural(format!(
                    "composite of {} then {} is {} : {rd} -> {rc}, expected {fd} -> {gc}",
                    e.first, e.second, e.result
                )));
            }
            if comp
                .insert((e.first.clone(), e.second.clone()), e.result.clone())
                .is_some()
            {
                return Err(structural(format!(
                    "composite of {} then {} given twice",
                    e.first, e.second
                )));
            }
        }
        for (f, (_, fc)) in &types {
            for (g, (gd, _)) in &types {
                if fc == gd && !comp.contains_key(&(f.clone(), g.clone())) {
                    return Err(structural(format!("missing composite of {f} then {g}")));
                }
            }
        }
        Ok(PresentedCategory {
            label,
            doc,
            types,
            homs: homs.into_iter().map(|(k, v)| (k, Arc::new(v))).collect(),
            comp,
        })
    }

    pub fn from_json(label: impl Into<String>, text: &str) -> Result<Self> {
        let doc: PresentedDoc = serde_json::from_str(text)?;
        Self::from_doc(label, doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.doc).expect("presented documents serialize")
    }

    pub fn doc(&self) -> &PresentedDoc {
        &self.doc
    }

    /// The thin category of a preorder on `objects`.
    pub fn from_preorder(
        label: impl Into<String>,
        objects: &[&str],
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let n = objects.len();
        let arrow = |i: usize, j: usize| {
            if i == j {
                format!("id_{}", objects[i])
            } else {
                format!("{}->{}", objects[i], objects[j])
            }
        };
        let mut doc = PresentedDoc {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            morphisms: Vec::new(),
            identities: BTreeMap::new(),
            composition: Vec::new(),
        };
        for i in 0..n {
            doc.identities.insert(objects[i].to_string(), arrow(i, i));
            for j in 0..n {
                if i == j || le(i, j) {
                    doc.morphisms.push(MorDecl {
                        name: arrow(i, j),
                        dom: objects[i].to_string(),
                        cod: objects[j].to_string(),
                    });
                }
            }
        }
        let has = |i: usize, j: usize| i == j || le(i, j);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if has(i, j) && has(j, k) {
                        doc.composition.push(CompEntry {
                            first: arrow(i, j),
                            second: arrow(j, k),
                            result: arrow(i, k),
                        });
                    }
                }
            }
        }
        Self::from_doc(label, doc)
    }

    /// The category with one object and only its identity.
    pub fn terminal() -> Self {
        Self::from_preorder("1", &["*"], |_, _| true).expect("terminal category is well formed")
    }

    /// Redirects one composite, keeping it well typed. Used for mutation tests.
    pub fn with_composite(&self, first: &str, second: &str, result: &str) -> Result<Self> {
        let mut doc = self.doc.clone();
        let entry = doc
            .composition
            .iter_mut()
            .find(|e| e.first == first && e.second == second)
            .ok_or_else(|| structural(format!("no composite of {first} then {second}")))?;
        entry.result = result.to_string();
        Self::from_doc(format!("{}*", self.label), doc)
    }

    pub fn morphism(&self, name: &str) -> Result<Mor> {
        let (d, c) = self
            .types
            .get(name)
            .ok_or_else(|| structural(format!("no morphism {name} in {}", self.label)))?;
        Ok(Mor::named(name, Obj::named(d), Obj::named(c)))
    }

    pub fn morphisms(&self) -> Vec<Mor> {
        self.doc
            .morphisms
            .iter()
            .map(|m| Mor::named(&m.name, Obj::named(&m.dom), Obj::named(&m.cod)))
            .collect()
    }

    fn name_of<'a>(&self, f: &'a Mor) -> Result<&'a str> {
        let n = f
            .name()
            .ok_or_else(|| structural(format!("{} has only named morphisms", self.label)))?;
        if !self.types.contains_key(n) {
            return Err(structural(format!("no morphism {n} in {}", self.label)));
        }
        Ok(n)
    }
}

impl Category for PresentedCategory {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn tier(&self) -> Tier {
        Tier::Presented
    }

    fn bounds(&self) -> Bounds {
        Bounds::default()
    }

    fn test_objects(&self) -> Vec<Obj> {
        self.doc.objects.iter().map(Obj::named).collect()
    }

    fn contains(&self, a: &Obj) -> bool {
        a.name()
            .is_some_and(|n| self.doc.identities.contains_key(n))
    }

    fn hom(&self, a: &Obj, b: &Obj) -> Result<Arc<Vec<Mor>>> {
        let (a, b) = match (a.name(), b.name()) {
            (Some(a), Some(b))
                if self.contains(&Obj::named(a)) && self.contains(&Obj::named(b)) =>
            {
                (a, b)
            }
            _ => {
                return Err(structural(format!(
                    "{a} or {b} is not an object of {}",
                    self.label
                )))
            }
        };
        Ok(self
            .homs
            .get(&(a.to_string(), b.to_string()))
            .cloned()
            .unwrap_or_default())
    }

    fn identity(&self, a: &Obj) -> Result<Mor> {
        let name = a
            .name()
            .and_then(|n| self.doc.identities.get(n))
            .ok_or_else(|| structural(format!("{a} is not an object of {}", self.label)))?;
        self.morphism(name)
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        let (fname, gname) = (self.name_of(f)?, self.name_of(g)?);
        let r = self
            .comp
            .get(&(fname.to_string(), gname.to_string()))
            .ok_or_else(|| structural(format!("{fname} and {gname} are not composable")))?;
        self.morphism(r)
    }

    fn compare(&self, f: &Mor, g: &Mor) -> Result<Option<Diff>> {
        let (a, b) = (self.name_of(f)?, self.name_of(g)?);
        Ok((a != b).then(|| Diff {
            at: None,
            lhs: a.to_string(),
            rhs: b.to_string(),
        }))
    }

    fn key(&self, f: &Mor) -> Result<Value> {
        Ok(Value::Sym(self.name_of(f)?.to_string()))
    }

    fn show(&self, f: &Mor) -> String {
        f.name().unwrap_or("?").to_string()
    }

    fn validate(&self, f: &Mor) -> Result<()> {
        let n = self.name_of(f)?;
        let (d, c) = &self.types[n];
        if f.dom != Obj::named(d) || f.cod != Obj::named(c) {
            return Err(structural(format!(
                "{n} is declared {d} -> {c}, used as {} -> {}",
                f.dom, f.cod
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_poset_has_expected_size() {
        let c = PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap();
        assert_eq!(c.doc().morphisms.len(), 6);
        let f = c.morphism("a->b").unwrap();
        let g = c.morphism("b->c").unwrap();
        assert_eq!(c.compose(&g, &f).unwrap().name(), Some("a->c"));
    }

    #[test]
    fn json_round_trip_is_identical() {
        let c = PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap();
        let back = PresentedCategory::from_json("3", &c.to_json()).unwrap();
        assert_eq!(back.doc(), c.doc());
    }

    #[test]
    fn ill_typed_composite_is_structural() {
        let c = PresentedCategory::from_preorder("3", &["a", "b", "c"], |i, j| i <= j).unwrap();
        let err = c.with_composite("a->b", "b->c", "id_a").unwrap_err();
        assert!(matches!(err, crate::Error::Structural(_)));
    }

    #[test]
    fn missing_composite_and_unknown_fields_are_rejected() {
        let c = PresentedCategory::from_preorder("2", &["a", "b"], |i, j| i <= j).unwrap();
        let mut doc = c.doc().clone();
        doc.composition.pop();
        assert!(PresentedCategory::from_doc("x", doc).is_err());
        let text = r#"{"objects":["a"],"morphisms":[{"name":"i","dom":"a","cod":"a"}],
            "identities":{"a":"i"},"composition":[{"first":"i","second":"i","result":"i"}],"extra":0}"#;
        assert!(PresentedCategory::from_json("x", text).is_err());
    }
}
