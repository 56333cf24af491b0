//! Finite semirings given by operation tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Result};
use crate::report::{LawReport, Witness};

/// A finite semiring; elements are indices into `elements`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Semiring {
    pub name: String,
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl fmt::Debug for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Semiring {
    /// The Boolean semiring ({0,1}, or, and).
    pub fn boolean() -> Self {
        Semiring {
            name: "bool".into(),
            elements: vec!["0".into(), "1".into()],
            add: vec![vec![0, 1], vec![1, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            zero: 0,
            one: 1,
        }
    }

    /// Integers modulo `n`.
    pub fn zmod(n: usize) -> Self {
        assert!(n >= 1, "Z/0 is not finite");
        Semiring {
            name: format!("z{n}"),
            elements: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a * b) % n).collect())
                .collect(),
            zero: 0,
            one: 1 % n,
        }
    }

    /// Builtins by name: `bool`, `z2`, `z3`, ... .
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "bool" | "boolean" => Ok(Self::boolean()),
            _ => name
                .strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 2)
                .map(Self::zmod)
                .ok_or_else(|| structural(format!("unknown semiring `{name}`"))),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: Semiring = serde_json::from_str(text)?;
        r.validate()?;
        Ok(r)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn sum<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    /// Table shapes and index ranges.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        if n == 0 {
            return Err(structural(format!(
                "semiring {} has no elements",
                self.name
            )));
        }
        for (label, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(structural(format!(
                    "{} table of {} is not {n}x{n}",
                    label, self.name
                )));
            }
            if table.iter().flatten().any(|&x| x >= n) {
                return Err(structural(format!(
                    "{} table of {} has an out-of-range entry",
                    label, self.name
                )));
            }
        }
        if self.zero >= n || self.one >= n {
            return Err(structural(format!(
                "zero/one of {} out of range",
                self.name
            )));
        }
        Ok(())
    }

    /// Exhaustive check of the semiring axioms.
    pub fn check_laws(&self) -> Result<LawReport> {
        self.validate()?;
        let n = self.size();
        let e = |i: usize| self.elements[i].clone();
        let mut r = LawReport::new(format!("semiring {}", self.name));
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .collect();

        let mut ws = Vec::new();
        for &(a, b, c) in &triples {
            let l = self.add(self.add(a, b), c);
            let rr = self.add(a, self.add(b, c));
            if l != rr {
                ws.push(
                    Witness::new(e(l), e(rr))
                        .with("a", e(a))
                        .with("b", e(b))
                        .with("c", e(c)),
                );
            }
        }
        r.record("add-assoc", triples.len() as u64, triples.len() as u64, ws);

        let mut ws = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    ws.push(
                        Witness::new(e(self.add(a, b)), e(self.add(b, a)))
                            .with("a", e(a))
                            .with("b", e(b)),
                    );
                }
            }
        }
        r.record("add-comm", (n * n) as u64, (n * n) as u64, ws);

        let mut ws = Vec::new();
        for a in 0..n {
            if self.add(self.zero, a) != a {
                ws.push(Witness::new(e(self.add(self.zero, a)), e(a)).with("a", e(a)));
            }
        }
        r.record("add-zero", n as u64, n as u64, ws);

        let mut ws = Vec::new();
        for &(a, b, c) in &triples {
            let l = self.mul(self.mul(a, b), c);
            let rr = self.mul(a, self.mul(b, c));
            if l != rr {
                ws.push(
                    Witness::new(e(l), e(rr))
                        .with("a", e(a))
                        .with("b", e(b))
                        .with("c", e(c)),
                );
            }
        }
        r.record("mul-assoc", triples.len() as u64, triples.len() as u64, ws);

        let mut ws = Vec::new();
        for a in 0..n {
            for (l, rr) in [(self.mul(self.one, a), a), (self.mul(a, self.one), a)] {
                if l != rr {
                    ws.push(Witness::new(e(l), e(rr)).with("a", e(a)));
                }
            }
        }
        r.record("mul-one", 2 * n as u64, 2 * n as u64, ws);

        let mut ws = Vec::new();
        for &(a, b, c) in &triples {
            let l = self.mul(a, self.add(b, c));
            let rr = self.add(self.mul(a, b), self.mul(a, c));
            if l != rr {
                ws.push(
                    Witness::new(e(l), e(rr))
                        .with("a", e(a))
                        .with("b", e(b))
                        .with("c", e(c))
                        .with("side", "left"),
                );
            }
            let l = self.mul(self.add(a, b), c);
            let rr = self.add(self.mul(a, c), self.mul(b, c));
            if l != rr {
                ws.push(
                    Witness::new(e(l), e(rr))
                        .with("a", e(a))
                        .with("b", e(b))
                        .with("c", e(c))
                        .with("side", "right"),
                );
            }
        }
        r.record(
            "distrib",
            2 * triples.len() as u64,
            2 * triples.len() as u64,
            ws,
        );

        let mut ws = Vec::new();
        for a in 0..n {
            for (l, side) in [
                (self.mul(self.zero, a), "left"),
                (self.mul(a, self.zero), "right"),
            ] {
                if l != self.zero {
                    ws.push(
                        Witness::new(e(l), e(self.zero))
                            .with("a", e(a))
                            .with("side", side),
                    );
                }
            }
        }
        r.record("annihilate", 2 * n as u64, 2 * n as u64, ws);
        Ok(r)
    }

    /// Validates and law-checks, failing with the report on a violation.
    pub fn lawful(self) -> Result<Self> {
        self.check_laws()?.into_result()?;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_lawful() {
        for name in ["bool", "z2", "z3", "z4"] {
            let r = Semiring::builtin(name).unwrap().check_laws().unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn boolean_and_z2_differ_on_one_plus_one() {
        let b = Semiring::boolean();
        let z = Semiring::zmod(2);
        assert_eq!(b.add(1, 1), 1);
        assert_eq!(z.add(1, 1), 0);
    }

    #[test]
    fn boolean_with_one_plus_one_zero_is_just_z2() {
        let mut s = Semiring::boolean();
        s.add[1][1] = 0;
        assert!(s.check_laws().unwrap().passed());
        assert_eq!(s.add, Semiring::zmod(2).add);
    }

    #[test]
    fn mutated_boolean_is_rejected_with_witness() {
        let mut s = Semiring::boolean();
        s.add[0][1] = 0;
        let r = s.check_laws().unwrap();
        assert!(!r.passed());
        assert!(r.failed("add-zero"));
        assert!(r.failed("add-comm"));
        assert_eq!(
            r.first_violation("add-zero").unwrap().witness.input("a"),
            Some("1")
        );
    }

    #[test]
    fn bad_table_shape_is_structural() {
        let mut s = Semiring::boolean();
        s.mul.pop();
        assert!(matches!(s.check_laws(), Err(crate::Error::Structural(_))));
    }

    #[test]
    fn json_roundtrip() {
        let s = Semiring::zmod(3);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(Semiring::from_json(&text).unwrap(), s);
        assert!(Semiring::from_json(
            r#"{"name":"x","elements":["0"],"add":[[0]],"mul":[[0]],"zero":0,"one":0,"extra":1}"#
        )
        .is_err());
    }
}
