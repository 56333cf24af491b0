//! `relmon`: run law suites, conversions and exports from the command line.
//!
//! Exit codes: 0 when every checked law holds, 1 on a law violation, 2 on
//! malformed input, unknown targets or exceeded resource caps.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use relmon::algebras::em_category;
use relmon::cat::{check_category, export_presented, PresentedCategory};
use relmon::distributive::*;
use relmon::kleisli::kleisli_category;
use relmon::suite::{self, Native, Params};
use relmon::tabulate::{tabulate_extension, tabulate_law, tabulate_lifting};
use relmon::{Bounds, Error, LawReport, Semiring, Witness};

#[derive(Parser)]
#[command(
    name = "relmon",
    version,
    about = "Check relative monads, distributive laws and their conversions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable checker on a builtin or a JSON file.
    Check {
        /// A presented category or semiring in JSON.
        file: Option<PathBuf>,
        #[command(flatten)]
        target: Target,
    },
    /// Convert between a law, its lifting and its Kleisli extension.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        #[command(flatten)]
        target: Target,
        /// Where to write the tabulated result.
        #[arg(long, short)]
        out: PathBuf,
        /// Re-run the checker of the converted structure.
        #[arg(long)]
        verify: bool,
    },
    /// Export a Kleisli or algebra category as a presented category.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        #[command(flatten)]
        target: Target,
        #[arg(long, short)]
        out: PathBuf,
        /// Re-import the file and compare its category report.
        #[arg(long)]
        verify: bool,
    },
    /// Write the full report of a builtin regardless of its verdict.
    Report {
        #[command(flatten)]
        target: Target,
        /// Write the report here instead of standard output.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Also write the defining tables of a law or lifting builtin.
        #[arg(long)]
        tabulate: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Target {
    /// Builtin instance name.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long, default_value_t = 3)]
    kappa: usize,
    #[arg(long, default_value_t = 3)]
    max_word: usize,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    /// `bool`, `zN`, or a path to a JSON semiring table.
    #[arg(long, default_value = "bool")]
    semiring: String,
    /// Cap on any single enumeration.
    #[arg(long, env = "RELMON_MAX_ENUM")]
    max_enum: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    DToLift,
    LiftToD,
    DToKleisli,
    KleisliToD,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Kleisli,
    Em,
}

/// Failures that end the run, mapped to exit codes.
enum Failure {
    Law(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Law(r) => Failure::Law(r.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

#[derive(Serialize)]
struct BoundsJson<'a> {
    kappa: usize,
    max_word: usize,
    max_dim: usize,
    semiring: &'a str,
    max_instances: u64,
    max_enum: usize,
}

#[derive(Serialize)]
struct AxiomJson<'a> {
    id: &'a str,
    verdict: relmon::Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Witness>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    target: &'a str,
    bounds: BoundsJson<'a>,
    axioms: Vec<AxiomJson<'a>>,
    verdict: relmon::Verdict,
}

impl Target {
    fn params(&self) -> Result<Params, Failure> {
        let semiring = if Path::new(&self.semiring).is_file() {
            Semiring::from_json(&fs::read_to_string(&self.semiring)?)?
        } else {
            Semiring::builtin(&self.semiring)?
        };
        let mut bounds = Bounds::default();
        if let Some(n) = self.max_enum {
            bounds = bounds.with_max_enum(n);
        }
        Ok(Params {
            kappa: self.kappa,
            max_word: self.max_word,
            max_dim: self.max_dim,
            semiring,
            bounds,
        })
    }

    fn load(&self) -> Result<(String, Native), Failure> {
        let name = self.builtin.clone().ok_or_else(|| {
            Failure::Input("no target: pass --builtin NAME or a JSON file".into())
        })?;
        let native = suite::load(&name, &self.params()?)?;
        Ok((name, native))
    }

    fn render(&self, target: &str, r: &LawReport) -> Result<String, Failure> {
        let p = self.params()?;
        Ok(match self.format {
            Format::Text => r.to_string(),
            Format::Json => {
                let axioms = r
                    .axioms
                    .iter()
                    .map(|t| AxiomJson {
                        id: &t.id,
                        verdict: t.verdict(),
                        witness: r.first_violation(&t.id).map(|v| &v.witness),
                    })
                    .collect();
                let doc = ReportJson {
                    target,
                    bounds: BoundsJson {
                        kappa: p.kappa,
                        max_word: p.max_word,
                        max_dim: p.max_dim,
                        semiring: &p.semiring.name,
                        max_instances: p.bounds.max_instances,
                        max_enum: p.bounds.max_enum,
                    },
                    axioms,
                    verdict: r.verdict(),
                };
                serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
            }
        })
    }

    /// Prints the report and returns its verdict.
    fn emit(&self, target: &str, r: &LawReport) -> Outcome {
        print!("{}", self.render(target, r)?);
        Ok(r.passed())
    }
}

fn check_file(path: &Path, target: &Target) -> Outcome {
    let text = fs::read_to_string(path)?;
    let label = path.display().to_string();
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{label}: {e}")))?;
    let report = if value.get("composition").is_some() {
        check_category(&PresentedCategory::from_json(label.clone(), &text)?)?
    } else if value.get("add").is_some() {
        let r: Semiring =
            serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{label}: {e}")))?;
        r.check_laws()?
    } else {
        return Err(Failure::Input(format!(
            "{label} is neither a presented category nor a semiring"
        )));
    };
    target.emit(&label, &report)
}

fn law_of(n: &Native) -> Result<RelDistLaw, Failure> {
    match n {
        Native::Law(l) => Ok(l.clone()),
        Native::Lifting(l) => Ok(lifting_to_distr(l)?),
        other => Err(Failure::Input(format!("{other:?} is not a law or lifting"))),
    }
}

/// Checks the source, converts, writes the tables and optionally verifies.
fn convert(direction: Direction, target: &Target, out: &Path, verify: bool) -> Outcome {
    let (name, native) = target.load()?;
    let l = law_of(&native)?;
    let (source, tables, result) = match direction {
        Direction::DToLift => {
            let lift = distr_to_lifting(&l);
            (
                check_rel_dist_law(&l)?,
                tabulate_lifting(&lift)?,
                Box::new(move || check_lifting(&lift)) as Box<dyn Fn() -> _>,
            )
        }
        Direction::LiftToD => {
            let lift = match &native {
                Native::Lifting(x) => x.clone(),
                _ => distr_to_lifting(&l),
            };
            let d = lifting_to_distr(&lift)?;
            (
                check_lifting(&lift)?,
                tabulate_law(&d)?,
                Box::new(move || check_rel_dist_law(&d)) as Box<dyn Fn() -> _>,
            )
        }
        Direction::DToKleisli => {
            let e = distr_to_kleisli_extension(&l);
            (
                check_rel_dist_law(&l)?,
                tabulate_extension(&e)?,
                Box::new(move || check_kleisli_extension(&e)) as Box<dyn Fn() -> _>,
            )
        }
        Direction::KleisliToD => {
            let e = distr_to_kleisli_extension(&l);
            let d = kleisli_extension_to_distr(&e)?;
            (
                check_kleisli_extension(&e)?,
                tabulate_law(&d)?,
                Box::new(move || check_rel_dist_law(&d)) as Box<dyn Fn() -> _>,
            )
        }
    };
    if !source.passed() {
        target.emit(&name, &source)?;
        return Ok(false);
    }
    fs::write(out, tables.to_json() + "\n")?;
    if verify {
        return target.emit(&format!("{name} converted"), &result()?);
    }
    Ok(true)
}

fn export(kind: ExportKind, target: &Target, out: &Path, verify: bool) -> Outcome {
    let (name, native) = target.load()?;
    let (t, em) = suite::relmonad_of(&native)
        .ok_or_else(|| Failure::Input(format!("{name} has no relative monad to export")))?;
    let (cat, label): (relmon::cat::CatHandle, String) = match kind {
        ExportKind::Kleisli => (kleisli_category(&t).handle(), format!("Kl({name})")),
        ExportKind::Em => {
            let (small, pool) =
                em.ok_or_else(|| Failure::Input(format!("{name} has no algebra pool")))?;
            (em_category(&small, &pool)?.handle(), format!("Alg({name})"))
        }
    };
    let presented = export_presented(cat.as_ref(), label.clone())?;
    let json = presented.to_json();
    fs::write(out, json.clone() + "\n")?;
    if !verify {
        return Ok(true);
    }
    let before = check_category(cat.as_ref())?;
    let imported = PresentedCategory::from_json(label.clone(), &fs::read_to_string(out)?)?;
    let mut after = check_category(&imported)?;
    let same = before.axioms == after.axioms && before.violations == after.violations;
    after.record(
        "reimport-matches",
        1,
        1,
        if same {
            Vec::new()
        } else {
            vec![Witness::new(
                before.summary().join("; "),
                after.summary().join("; "),
            )]
        },
    );
    target.emit(&label, &after)
}

fn report(target: &Target, out: Option<&Path>, tabulate: Option<&Path>) -> Outcome {
    let (name, native) = target.load()?;
    let r = suite::check(&native)?;
    let text = target.render(&name, &r)?;
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    if let Some(path) = tabulate {
        fs::write(path, suite::tabulate(&native)?.to_json() + "\n")?;
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Check {
            file: Some(path),
            target,
        } => check_file(path, target),
        Command::Check { file: None, target } => {
            let (name, native) = target.load()?;
            target.emit(&name, &suite::check(&native)?)
        }
        Command::Convert {
            direction,
            target,
            out,
            verify,
        } => convert(*direction, target, out, *verify),
        Command::Export {
            kind,
            target,
            out,
            verify,
        } => export(*kind, target, out, *verify),
        Command::Report {
            target,
            out,
            tabulate,
        } => report(target, out.as_deref(), tabulate.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Law(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
