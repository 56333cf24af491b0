//! Finite tabulations of laws, liftings and Kleisli extensions, as written
//! by the command line. Infinite carriers are tabulated on their bounded
//! enumeration.

use serde::{Deserialize, Serialize};

use crate::cat::laws::TestDomain;
use crate::cat::Mor;
use crate::distributive::{KleisliExtension, LiftingToAlgebras, RelDistLaw};
use crate::error::Result;
use crate::sets::Bounds;
use crate::value::Value;

/// The graph of a function morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub dom: String,
    pub cod: String,
    pub graph: Vec<(Value, Value)>,
}

impl Table {
    pub fn of(f: &Mor, bounds: &Bounds) -> Result<Self> {
        let graph = f
            .dom
            .set()?
            .elements(bounds)?
            .iter()
            .map(|v| (v.clone(), f.apply(v)))
            .collect();
        Ok(Table {
            dom: f.dom.to_string(),
            cod: f.cod.to_string(),
            graph,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub at: String,
    pub table: Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedAlgebra {
    pub carrier: String,
    pub structure: Table,
    pub lifted: Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionAt {
    pub at: String,
    pub unit: Table,
    pub mult: Table,
    pub law: Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Tabulation {
    Law { components: Vec<Component> },
    Lifting { algebras: Vec<LiftedAlgebra> },
    KleisliExtension { objects: Vec<ExtensionAt> },
}

impl Tabulation {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tabulations serialize")
    }
}

/// `d_A` at every test object.
pub fn tabulate_law(l: &RelDistLaw) -> Result<Tabulation> {
    let bounds = l.t.dst().bounds();
    let mut components = Vec::new();
    for a in TestDomain::of(l.t.src().as_ref())?.objects {
        components.push(Component {
            at: a.to_string(),
            table: Table::of(&l.at(&a)?, &bounds)?,
        });
    }
    Ok(Tabulation::Law { components })
}

/// The lifted structure on every pool and free algebra.
pub fn tabulate_lifting(l: &LiftingToAlgebras) -> Result<Tabulation> {
    let (b0, b) = (l.t.src().bounds(), l.t.dst().bounds());
    let mut algebras = Vec::new();
    for alg in l.algebras()? {
        algebras.push(LiftedAlgebra {
            carrier: alg.carrier.to_string(),
            structure: Table::of(&alg.structure, &b0)?,
            lifted: Table::of(&l.assign(&alg)?, &b)?,
        });
    }
    Ok(Tabulation::Lifting { algebras })
}

/// Unit, multiplication and the law read off at every test object.
pub fn tabulate_extension(e: &KleisliExtension) -> Result<Tabulation> {
    let bounds = e.t.dst().bounds();
    let mut objects = Vec::new();
    for x in TestDomain::of(e.t.src().as_ref())?.objects {
        objects.push(ExtensionAt {
            at: x.to_string(),
            unit: Table::of(e.stilde.unit(&x)?.inner(), &bounds)?,
            mult: Table::of(e.stilde.mult(&x)?.inner(), &bounds)?,
            law: Table::of(&e.read_law(&x)?, &bounds)?,
        });
    }
    Ok(Tabulation::KleisliExtension { objects })
}
