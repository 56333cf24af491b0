//! Law reports and instance selection.
//!
//! A law is instantiated over a family of *blocks*: each block is a cartesian
//! product of quantifier ranges (objects fixed, morphisms varying). When the
//! whole family fits in the instance budget every instance is evaluated;
//! otherwise a fixed-seed uniform sample is drawn and the tally records both
//! numbers, so a report always states its own coverage.

use std::fmt;

use rand::seq::index;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Violations kept per axiom; further failures are only counted.
const WITNESSES_PER_AXIOM: usize = 4;
const SAMPLE_SEED: u64 = 0x5eed_d157;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// A counterexample: the quantified inputs and both evaluated sides.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            inputs: Vec::new(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn with(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.inputs.push((name.to_string(), value.to_string()));
        self
    }

    /// Prepends an input, so outer quantifiers read first.
    pub fn under(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.inputs.insert(0, (name.to_string(), value.to_string()));
        self
    }

    pub fn input(&self, name: &str) -> Option<&str> {
        self.inputs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    #[serde(flatten)]
    pub witness: Witness,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.axiom)?;
        for (name, value) in &self.witness.inputs {
            write!(f, " {name}={value}")?;
        }
        write!(f, " lhs={} rhs={}", self.witness.lhs, self.witness.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomTally {
    pub id: String,
    /// Instances evaluated.
    pub checked: u64,
    /// Instances in the full test domain.
    pub domain: u64,
    pub failures: u64,
}

impl AxiomTally {
    pub fn verdict(&self) -> Verdict {
        if self.failures == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn sampled(&self) -> bool {
        self.checked < self.domain
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub subject: String,
    pub axioms: Vec<AxiomTally>,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn new(subject: impl Into<String>) -> Self {
        LawReport {
            subject: subject.into(),
            axioms: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn violation_count(&self) -> u64 {
        self.axioms.iter().map(|a| a.failures).sum()
    }

    pub fn axiom(&self, id: &str) -> Option<&AxiomTally> {
        self.axioms.iter().find(|a| a.id == id)
    }

    pub fn failed(&self, id: &str) -> bool {
        self.axiom(id).is_some_and(|a| a.failures > 0)
    }

    pub fn first_violation(&self, id: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == id)
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records an axiom evaluated elsewhere.
    pub fn record(&mut self, id: &str, checked: u64, domain: u64, witnesses: Vec<Witness>) {
        let failures = witnesses.len() as u64;
        self.push_tally(id, checked, domain, failures);
        for w in witnesses.into_iter().take(WITNESSES_PER_AXIOM) {
            self.violations.push(Violation {
                axiom: id.to_string(),
                witness: w,
            });
        }
    }

    fn push_tally(&mut self, id: &str, checked: u64, domain: u64, failures: u64) {
        if let Some(t) = self.axioms.iter_mut().find(|t| t.id == id) {
            t.checked += checked;
            t.domain += domain;
            t.failures += failures;
        } else {
            self.axioms.push(AxiomTally {
                id: id.to_string(),
                checked,
                domain,
                failures,
            });
        }
    }

    /// Evaluates one axiom over a block family within `budget` instances.
    pub fn check_family<F>(
        &mut self,
        id: &str,
        blocks: &Blocks,
        budget: u64,
        mut eval: F,
    ) -> Result<()>
    where
        F: FnMut(usize, &[usize]) -> Result<Option<Witness>>,
    {
        let domain = blocks.total();
        let picks = blocks.plan(budget);
        let checked = picks.len() as u64;
        let mut failures = 0u64;
        let mut kept = 0usize;
        for (block, idx) in picks {
            if let Some(w) = eval(block, &idx)? {
                failures += 1;
                if kept < WITNESSES_PER_AXIOM {
                    kept += 1;
                    self.violations.push(Violation {
                        axiom: id.to_string(),
                        witness: w,
                    });
                }
            }
        }
        self.push_tally(id, checked, domain, failures);
        Ok(())
    }

    /// Evaluates a single instance.
    pub fn check_one<F>(&mut self, id: &str, eval: F) -> Result<()>
    where
        F: FnOnce() -> Result<Option<Witness>>,
    {
        let w = eval()?;
        self.record(id, 1, 1, w.into_iter().collect());
        Ok(())
    }

    /// Appends another report's tallies and violations, prefixing axiom ids.
    pub fn absorb(&mut self, prefix: &str, other: LawReport) {
        let name = |id: &str| {
            if prefix.is_empty() {
                id.to_string()
            } else {
                format!("{prefix}/{id}")
            }
        };
        for t in other.axioms {
            self.push_tally(&name(&t.id), t.checked, t.domain, t.failures);
        }
        for v in other.violations {
            self.violations.push(Violation {
                axiom: name(&v.axiom),
                witness: v.witness,
            });
        }
        self.notes.extend(other.notes);
    }

    /// Turns a failing report into an error.
    pub fn into_result(self) -> Result<LawReport> {
        if self.passed() {
            Ok(self)
        } else {
            Err(crate::Error::Law(Box::new(self)))
        }
    }

    /// One line per axiom: id, verdict and coverage.
    pub fn summary(&self) -> Vec<String> {
        self.axioms
            .iter()
            .map(|t| {
                let cov = if t.sampled() {
                    format!("{}/{} sampled", t.checked, t.domain)
                } else {
                    format!("{} instances", t.checked)
                };
                format!("{} {} ({cov})", t.id, t.verdict())
            })
            .collect()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, self.verdict())?;
        for line in self.summary() {
            writeln!(f, "  {line}")?;
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// A family of cartesian-product blocks of law instances.
#[derive(Clone, Debug, Default)]
pub struct Blocks {
    dims: Vec<Vec<usize>>,
}

impl Blocks {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a block; returns its index.
    pub fn push(&mut self, dims: Vec<usize>) -> usize {
        self.dims.push(dims);
        self.dims.len() - 1
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    fn block_size(dims: &[usize]) -> u64 {
        dims.iter().map(|&d| d as u64).product()
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().map(|d| Self::block_size(d)).sum()
    }

    /// Instances to evaluate: everything, or a seeded uniform sample of
    /// `budget` instances in canonical order.
    pub fn plan(&self, budget: u64) -> Vec<(usize, Vec<usize>)> {
        let total = self.total();
        let globals: Vec<u64> = if total <= budget {
            (0..total).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let mut picked: Vec<u64> = index::sample(&mut rng, total as usize, budget as usize)
                .into_iter()
                .map(|i| i as u64)
                .collect();
            picked.sort_unstable();
            picked
        };
        let mut out = Vec::with_capacity(globals.len());
        let mut block = 0usize;
        let mut start = 0u64;
        for g in globals {
            while g >= start + Self::block_size(&self.dims[block]) {
                start += Self::block_size(&self.dims[block]);
                block += 1;
            }
            let mut local = g - start;
            let dims = &self.dims[block];
            let mut idx = vec![0usize; dims.len()];
            for (slot, &d) in idx.iter_mut().zip(dims).rev() {
                *slot = (local % d as u64) as usize;
                local /= d as u64;
            }
            out.push((block, idx));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_plan_enumerates_in_order() {
        let mut b = Blocks::new();
        b.push(vec![2, 2]);
        b.push(vec![0, 5]);
        b.push(vec![3]);
        let plan = b.plan(100);
        assert_eq!(
            plan,
            vec![
                (0, vec![0, 0]),
                (0, vec![0, 1]),
                (0, vec![1, 0]),
                (0, vec![1, 1]),
                (2, vec![0]),
                (2, vec![1]),
                (2, vec![2]),
            ]
        );
    }

    #[test]
    fn sampled_plan_is_deterministic_and_in_range() {
        let mut b = Blocks::new();
        b.push(vec![100, 100]);
        b.push(vec![7, 11, 13]);
        let p1 = b.plan(50);
        let p2 = b.plan(50);
        assert_eq!(p1, p2);
        assert_eq!(p1.len(), 50);
        for (blk, idx) in p1 {
            let dims = if blk == 0 {
                vec![100, 100]
            } else {
                vec![7, 11, 13]
            };
            for (i, d) in idx.iter().zip(dims) {
                assert!(*i < d);
            }
        }
    }

    #[test]
    fn verdict_tracks_violations() {
        let mut r = LawReport::new("x");
        r.record("a", 3, 3, vec![]);
        assert!(r.passed());
        r.record("b", 1, 1, vec![Witness::new(1, 2).with("k", "f")]);
        assert!(!r.passed());
        assert!(r.failed("b"));
        assert_eq!(
            r.first_violation("b").unwrap().witness.input("k"),
            Some("f")
        );
    }
}
