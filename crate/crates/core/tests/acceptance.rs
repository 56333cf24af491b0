//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines reach the terminal; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use relmon::algebras::em_category;
use relmon::cat::laws::check_functors_equal;
use relmon::cat::{check_category, export_presented, Category, Obj, PresentedCategory};
use relmon::distributive::*;
use relmon::fixtures::{operator, OPERATORS};
use relmon::instances::degenerate::pointed_over_itself;
use relmon::instances::freemonoid::freemonoid_powerset_law;
use relmon::instances::identity::finsets;
use relmon::instances::pointed::{pointed_lifting, pointed_monad, pointed_vecspace_law};
use relmon::instances::vecspace_relmonad;
use relmon::kleisli::kleisli_category;
use relmon::monad::embed_monad;
use relmon::mutants::catalogue;
use relmon::operators::{
    check_operators_equal, comma_functor_to_operator, operator_to_comma_functor,
};
use relmon::suite::{check, load, uses_semiring, Params, BUILTINS};
use relmon::{Bounds, LawReport, Result, Semiring};

fn semirings() -> [Semiring; 3] {
    [Semiring::boolean(), Semiring::zmod(2), Semiring::zmod(3)]
}

fn defaults() -> Bounds {
    Bounds::default()
}

type Outcome = Result<(bool, String)>;

fn law_suites() -> Outcome {
    let start = Instant::now();
    let mut failing = Vec::new();
    let mut runs = 0;
    for name in BUILTINS {
        let rings: Vec<Semiring> = if uses_semiring(name) {
            semirings().to_vec()
        } else {
            vec![Semiring::boolean()]
        };
        for r in rings {
            let p = Params {
                semiring: r.clone(),
                ..Params::default()
            };
            let rep = check(&load(name, &p)?)?;
            runs += 1;
            if !rep.passed() {
                failing.push(format!(
                    "{name}/{}: {} violations",
                    r.name,
                    rep.violation_count()
                ));
            }
        }
    }
    let took = start.elapsed();
    let ok = failing.is_empty() && took < Duration::from_secs(300);
    let mut detail = format!("{runs} builtin runs in {:.1}s", took.as_secs_f64());
    if !failing.is_empty() {
        detail.push_str(&format!(", failing {}", failing.join("; ")));
    }
    Ok((ok, detail))
}

fn round_trip_a() -> Outcome {
    let mut r = LawReport::new("A");
    let l = freemonoid_powerset_law(3, defaults())?;
    check_laws_equal(
        &mut r,
        "choices",
        &lifting_to_distr(&distr_to_lifting(&l))?,
        &l,
    )?;
    for sr in semirings() {
        let l = pointed_vecspace_law(sr.clone(), 3, defaults())?;
        check_laws_equal(
            &mut r,
            &format!("vecspace/{}", sr.name),
            &lifting_to_distr(&distr_to_lifting(&l))?,
            &l,
        )?;
    }
    Ok((r.passed(), tally(&r)))
}

fn round_trip_b() -> Outcome {
    let mut r = LawReport::new("B");
    for sr in semirings() {
        let hat = pointed_lifting(sr.clone(), 3, defaults())?;
        let again = distr_to_lifting(&lifting_to_distr(&hat)?);
        check_liftings_equal(&mut r, &sr.name, &again, &hat)?;
    }
    Ok((r.passed(), tally(&r)))
}

fn round_trip_c() -> Outcome {
    let mut r = LawReport::new("C");
    let mut laws = vec![freemonoid_powerset_law(3, defaults())?];
    for sr in semirings() {
        laws.push(pointed_vecspace_law(sr, 3, defaults())?);
    }
    for l in &laws {
        let e = distr_to_kleisli_extension(l);
        let back = kleisli_extension_to_distr(&e)?;
        check_laws_equal(&mut r, &format!("{}/law", l.label), &back, l)?;
        check_extensions_equal(
            &mut r,
            &format!("{}/extension", l.label),
            &distr_to_kleisli_extension(&back),
            &e,
        )?;
    }
    Ok((r.passed(), tally(&r)))
}

fn oracles() -> Outcome {
    let matrices = common::check_matrix_oracle(Semiring::boolean(), 3);
    let relations = common::check_relation_oracle(3);
    Ok((
        true,
        format!("{matrices} matrix pairs, {relations} relation pairs"),
    ))
}

fn mutations() -> Outcome {
    let mut rejected = Vec::new();
    let mut survived = Vec::new();
    for m in catalogue() {
        let r = (m.run)()?;
        match r.first_violation(m.axiom) {
            Some(_) if r.failed(m.axiom) => rejected.push(m.name),
            _ => survived.push(m.name),
        }
    }
    let ok = survived.is_empty() && rejected.len() >= 6;
    Ok((
        ok,
        format!(
            "rejected {} [{}], survived [{}]",
            rejected.len(),
            rejected.join(", "),
            survived.join(", ")
        ),
    ))
}

fn degeneration() -> Outcome {
    let l = pointed_over_itself(2, defaults())?;
    let oracle = common::classical_pointed_lifting(&l);
    let mut r = LawReport::new("degeneration");
    r.absorb("law", check_rel_dist_law(&l)?);
    r.absorb("classical", check_lifting(&oracle)?);
    check_liftings_equal(&mut r, "law-to-lifting", &distr_to_lifting(&l), &oracle)?;
    check_laws_equal(&mut r, "lifting-to-law", &lifting_to_distr(&oracle)?, &l)?;
    Ok((r.passed(), tally(&r)))
}

fn operator_round_trips() -> Outcome {
    let mut r = LawReport::new("operators");
    for name in OPERATORS {
        let op = operator(name)?;
        let h = operator_to_comma_functor(&op)?;
        let back = comma_functor_to_operator(&h)?;
        check_operators_equal(&mut r, &format!("{name}/operator"), &back, &op)?;
        let h2 = operator_to_comma_functor(&back)?;
        check_functors_equal(&mut r, &format!("{name}/functor"), &h2.functor, &h.functor)?;
    }
    Ok((
        r.passed(),
        format!("{} fixtures, {}", OPERATORS.len(), tally(&r)),
    ))
}

/// Exports, imports and re-checks; the two category reports must agree
/// axiom for axiom.
fn reexport(c: &dyn Category, label: &str) -> Result<bool> {
    let exported = export_presented(c, label)?;
    let json = exported.to_json();
    let imported = PresentedCategory::from_json(label, &json)?;
    let (a, b) = (check_category(c)?, check_category(&imported)?);
    Ok(a.passed()
        && a.axioms == b.axioms
        && a.violations == b.violations
        && imported.to_json() == json)
}

fn serialization() -> Outcome {
    let t = vecspace_relmonad(Semiring::boolean(), 2, defaults())?;
    let kl = kleisli_category(&t);
    let kl_ok = reexport(kl.cat.as_ref(), "Kl(V)")?;
    let p = embed_monad(&pointed_monad("S", finsets(2, defaults())))?;
    let pool: Vec<Obj> = (0..=2).map(Obj::numeral).collect();
    let em = em_category(&p, &pool)?;
    let em_ok = reexport(em.cat.as_ref(), "Alg(S)")?;
    Ok((kl_ok && em_ok, format!("Kl(V) {kl_ok}, Alg(S) {em_ok}")))
}

fn tally(r: &LawReport) -> String {
    let n: u64 = r.axioms.iter().map(|t| t.checked).sum();
    format!("{n} comparisons, {} violations", r.violation_count())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("law suites at default bounds", law_suites),
        ("round trip A", round_trip_a),
        ("round trip B", round_trip_b),
        ("round trip C", round_trip_c),
        ("Kleisli oracles", oracles),
        ("mutations rejected", mutations),
        ("degeneration over the identity", degeneration),
        (
            "operator and comma functor round trips",
            operator_round_trips,
        ),
        ("export and import", serialization),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = match std::panic::catch_unwind(run) {
            Ok(Ok(out)) => out,
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {} {}: {name} ({detail})",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
