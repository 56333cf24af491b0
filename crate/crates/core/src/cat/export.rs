//! Tabulating a finite category into the presented form.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::presented::{CompEntry, MorDecl};
use super::{Category, PresentedCategory, PresentedDoc};
use crate::error::{structural, Result};
use crate::value::Value;

/// Tabulates `c` over its test objects. Objects are named by their canonical
/// display, morphisms `dom->cod#i` in hom enumeration order.
pub fn export_presented(c: &dyn Category, label: impl Into<String>) -> Result<PresentedCategory> {
    let objects = c.test_objects();
    let names: Vec<String> = objects.iter().map(|o| o.to_string()).collect();
    let mut seen = HashSet::new();
    for n in &names {
        if !seen.insert(n) {
            return Err(structural(format!("two test objects display as {n}")));
        }
    }
    let bounds = c.bounds();
    let mut doc = PresentedDoc {
        objects: names.clone(),
        morphisms: Vec::new(),
        identities: BTreeMap::new(),
        composition: Vec::new(),
    };
    // (i, j) -> [(key, name)]
    let mut homs: Vec<Vec<HashMap<Value, String>>> = Vec::new();
    let mut lists: Vec<Vec<Vec<(String, super::Mor)>>> = Vec::new();
    let mut total = 0u128;
    for (i, a) in objects.iter().enumerate() {
        let mut row = Vec::new();
        let mut lrow = Vec::new();
        for (j, b) in objects.iter().enumerate() {
            let hom = c.hom(a, b)?;
            total += hom.len() as u128;
            bounds.guard(|| format!("morphisms of {}", c.label()), total)?;
            let mut keyed = HashMap::new();
            let mut list = Vec::new();
            for (k, f) in hom.iter().enumerate() {
                let n = format!("{}->{}#{k}", names[i], names[j]);
                doc.morphisms.push(MorDecl {
                    name: n.clone(),
                    dom: names[i].clone(),
                    cod: names[j].clone(),
                });
                if keyed.insert(c.key(f)?, n.clone()).is_some() {
                    return Err(structural(format!("hom {a} -> {b} lists a morphism twice")));
                }
                list.push((n, f.clone()));
            }
            row.push(keyed);
            lrow.push(list);
        }
        homs.push(row);
        lists.push(lrow);
    }
    let estimate: u128 = (0..objects.len())
        .flat_map(|i| (0..objects.len()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let ij = lists[i][j].len() as u128;
            (0..objects.len())
                .map(|k| ij * lists[j][k].len() as u128)
                .sum::<u128>()
        })
        .sum();
    bounds.guard(|| format!("composition table of {}", c.label()), estimate)?;

    for (i, a) in objects.iter().enumerate() {
        let id = c.identity(a)?;
        let n = homs[i][i]
            .get(&c.key(&id)?)
            .ok_or_else(|| structural(format!("identity of {a} is not in its hom-set")))?;
        doc.identities.insert(names[i].clone(), n.clone());
    }
    let n = objects.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (fname, f) in &lists[i][j] {
                    for (gname, g) in &lists[j][k] {
                        let gf = c.compose(g, f)?;
                        let r = homs[i][k].get(&c.key(&gf)?).ok_or_else(|| {
                            structural(format!(
                                "composite of {fname} then {gname} is not in its hom-set"
                            ))
                        })?;
                        doc.composition.push(CompEntry {
                            first: fname.clone(),
                            second: gname.clone(),
                            result: r.clone(),
                        });
                    }
                }
            }
        }
    }
    PresentedCategory::from_doc(label, doc)
}
