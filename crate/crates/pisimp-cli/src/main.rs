//! `pisimp` — normalization, enumeration, identity verification, and the
//! algebra/Kleisli certification harness over JSON monad fixtures.
//!
//! Exit codes: `0` when every requested check passes, `1` when a check
//! fails (the report carries the counterexample), `2` on usage, parse, or
//! typing errors. The search budget can be overridden with the
//! `PISIMP_BUDGET` environment variable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pisimp::bridge::{
    em_category, em_comparison, kleisli_category, kleisli_comparison, subeq_category,
};
use pisimp::fincat::fixture::{load_monad, FixtureError};
use pisimp::fincat::{Budget, FinCat, Monad};
use pisimp::fixtures::{default_probes, probe_by_name, probe_functors_between};
use pisimp::ordinals::{count_hom, enumerate_hom, HomFlavor, PMap};
use pisimp::weights::check_action_laws;
use pisimp::words::identities::verify_identities;
use pisimp::words::{canonical_form, normalize_with, GenWord, DEFAULT_STEP_BUDGET};

use std::sync::Arc;

#[derive(Parser)]
#[command(name = "pisimp", version, about = "Partial monotone maps, their normal forms, and certified algebra/Kleisli comparisons for finite monads")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Delta,
    Pi,
    #[value(alias = "pil")]
    PiL,
    #[value(alias = "pir")]
    PiR,
}

impl From<FlavorArg> for HomFlavor {
    fn from(f: FlavorArg) -> HomFlavor {
        match f {
            FlavorArg::Delta => HomFlavor::Delta,
            FlavorArg::Pi => HomFlavor::Pi,
            FlavorArg::PiL => HomFlavor::PiL,
            FlavorArg::PiR => HomFlavor::PiR,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite a word to its canonical form.
    Normalize {
        /// A word such as "t1.t0 @3"; the rightmost factor acts first.
        word: String,
        /// Record the rewriting trace, one identity application per line.
        #[arg(long)]
        trace: bool,
        /// Step budget before rewriting is declared non-terminating.
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        budget: usize,
    },
    /// Compose two words (outer after inner) and print the composite map.
    Compose { outer: String, inner: String },
    /// Evaluate a word to a map literal such as "3->2:[_,0,0]".
    Eval { word: String },
    /// Canonical factorization of a map literal.
    Canon { pmap: String },
    /// List (or count) a hom-set of partial monotone maps.
    Hom {
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::Pi)]
        flavor: FlavorArg,
        /// Print only the size of the hom-set.
        #[arg(long)]
        count: bool,
    },
    /// Exhaustively verify the generator identities up to a level.
    CheckIdentities {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Exhaustively verify the block-sum action laws up to a size bound.
    CheckActions {
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Compute the algebra category of a monad fixture.
    Em { fixture: PathBuf },
    /// Compute the Kleisli category of a monad fixture.
    Kleisli { fixture: PathBuf },
    /// Compute the subequalizer category of a monad fixture over a probe.
    Subeq {
        fixture: PathBuf,
        /// Probe name (empty, terminal, chain2, chain3, parallel, twist,
        /// diamond) or a path to a category fixture.
        probe: String,
    },
    /// Run both comparison certificates on a monad fixture.
    Certify {
        fixture: PathBuf,
        /// Probe names or category fixture paths (default: empty,
        /// terminal, chain2, parallel).
        #[arg(long, num_args = 1..)]
        probes: Option<Vec<String>>,
        /// Truncation depth for the cone checks.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
}

/// Errors that are the *user's* problem: bad syntax, bad paths, bad flags.
struct UsageError(String);

/// A well-posed check that failed; the message carries the citation.
struct CheckFailure(String);

enum Outcome {
    Pass,
    Fail(CheckFailure),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail(CheckFailure(message))) => {
            eprintln!("check failed: {message}");
            ExitCode::from(1)
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn budget_from_env() -> Result<Budget, UsageError> {
    match std::env::var("PISIMP_BUDGET") {
        Err(_) => Ok(Budget::default()),
        Ok(text) => text
            .parse()
            .map(|max_search| Budget { max_search })
            .map_err(|_| UsageError(format!("PISIMP_BUDGET must be a number, got `{text}`"))),
    }
}

fn parse_word(text: &str) -> Result<GenWord, UsageError> {
    text.parse().map_err(|e| UsageError(format!("bad word `{text}`: {e}")))
}

fn parse_pmap(text: &str) -> Result<PMap, UsageError> {
    text.parse().map_err(|e| UsageError(format!("bad map literal `{text}`: {e}")))
}

fn load_fixture(path: &PathBuf) -> Result<Result<Monad, CheckFailure>, UsageError> {
    match load_monad(path) {
        Ok(monad) => Ok(Ok(monad)),
        // Law violations are check failures; everything else is usage.
        Err(
            e @ (FixtureError::InvalidMonad(_)
            | FixtureError::InvalidNat { .. }
            | FixtureError::InvalidFunctor(_)
            | FixtureError::InvalidCategory(_)),
        ) => Ok(Err(CheckFailure(format!("{}: {e}", path.display())))),
        Err(e) => Err(UsageError(format!("{}: {e}", path.display()))),
    }
}

fn resolve_probe(name: &str) -> Result<(String, Arc<FinCat>), UsageError> {
    if let Some(cat) = probe_by_name(name) {
        return Ok((name.to_string(), cat));
    }
    let path = PathBuf::from(name);
    if path.exists() {
        let cat = pisimp::fincat::fixture::load_category(&path)
            .map_err(|e| UsageError(format!("{name}: {e}")))?;
        let label = path.file_stem().map_or_else(|| name.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((label, cat));
    }
    Err(UsageError(format!("unknown probe `{name}` (not a builtin name or a readable path)")))
}

fn category_summary(cat: &FinCat, label: &str, kind: &str, format: Format) {
    match format {
        Format::Text => {
            println!("{kind} of {label}: {} objects, {} morphisms", cat.n_objects(), cat.n_morphisms());
            for o in 0..cat.n_objects() {
                println!("object {}", cat.object_name(o));
            }
            for m in 0..cat.n_morphisms() {
                let rec = cat.morphism(m);
                println!(
                    "morphism {}: {} -> {}",
                    rec.id,
                    cat.object_name(rec.src),
                    cat.object_name(rec.tgt)
                );
            }
        }
        Format::Json => {
            let doc = json!({
                "schema": "pisimp.report/1",
                "kind": kind,
                "input": label,
                "objects": cat.n_objects(),
                "morphisms": cat.n_morphisms(),
                "category": cat.to_data(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let budget = budget_from_env()?;
    match &cli.command {
        Command::Normalize { word, trace, budget: steps } => {
            let parsed = parse_word(word)?;
            let (canonical, trace_steps) = normalize_with(&parsed, *steps, *trace)
                .map_err(|e| UsageError(format!("cannot normalize `{word}`: {e}")))?;
            match cli.format {
                Format::Text => {
                    if *trace {
                        for (k, step) in trace_steps.iter().enumerate() {
                            println!(
                                "step {k}: {}/{} at {} -> {}",
                                step.family, step.case, step.position, step.word
                            );
                        }
                    }
                    println!("{canonical}");
                }
                Format::Json => {
                    let doc = json!({
                        "schema": "pisimp.report/1",
                        "kind": "normalize",
                        "input": word,
                        "canonical": canonical.to_string(),
                        "value": canonical.eval().to_string(),
                        "trace": trace_steps.iter().map(|s| json!({
                            "family": s.family,
                            "case": s.case,
                            "position": s.position,
                            "word": s.word,
                        })).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Compose { outer, inner } => {
            let outer_w = parse_word(outer)?;
            let inner_w = parse_word(inner)?;
            let composite = outer_w
                .eval()
                .compose(&inner_w.eval())
                .map_err(|e| UsageError(format!("cannot compose: {e}")))?;
            emit_value(cli.format, "compose", &format!("{outer} ∘ {inner}"), &composite.to_string());
            Ok(Outcome::Pass)
        }
        Command::Eval { word } => {
            let parsed = parse_word(word)?;
            emit_value(cli.format, "eval", word, &parsed.eval().to_string());
            Ok(Outcome::Pass)
        }
        Command::Canon { pmap } => {
            let parsed = parse_pmap(pmap)?;
            emit_value(cli.format, "canon", pmap, &canonical_form(&parsed).to_string());
            Ok(Outcome::Pass)
        }
        Command::Hom { n, m, flavor, count } => {
            let flavor = HomFlavor::from(*flavor);
            if *count {
                emit_value(cli.format, "hom-count", &format!("{n}->{m} {}", flavor.name()), &count_hom(*n, *m, flavor).to_string());
            } else {
                let maps = enumerate_hom(*n, *m, flavor);
                match cli.format {
                    Format::Text => {
                        for map in &maps {
                            println!("{map}");
                        }
                    }
                    Format::Json => {
                        let doc = json!({
                            "schema": "pisimp.report/1",
                            "kind": "hom",
                            "input": format!("{n}->{m} {}", flavor.name()),
                            "count": maps.len(),
                            "maps": maps.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        Command::CheckIdentities { max_size } => {
            let report = verify_identities(*max_size);
            match cli.format {
                Format::Text => {
                    for family in &report.families {
                        println!(
                            "{} [{}]  {} instances: {}",
                            family.schema,
                            family.family,
                            family.instances,
                            if family.holds { "PASS" } else { "FAIL" }
                        );
                        for c in &family.counterexamples {
                            println!("  counterexample: {} = {} but {} = {}", c.lhs_word, c.lhs_value, c.rhs_word, c.rhs_value);
                        }
                    }
                    for variant in &report.variants {
                        println!(
                            "variant {} [{}]  {} instances: {} counterexamples; derived: {}",
                            variant.report.schema,
                            variant.report.family,
                            variant.report.instances,
                            variant.report.counterexample_count,
                            variant.derived_schema
                        );
                        if let Some(c) = variant.report.counterexamples.first() {
                            println!("  first counterexample: {} = {} but {} = {}", c.lhs_word, c.lhs_value, c.rhs_word, c.rhs_value);
                        }
                    }
                    println!("total instances: {}", report.total_instances());
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                }
            }
            if report.holds() {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::Fail(CheckFailure("an identity family has counterexamples".into())))
            }
        }
        Command::CheckActions { bound } => {
            let report = check_action_laws(*bound);
            match cli.format {
                Format::Text => {
                    println!(
                        "unit {} | identities {} | interchange {} | closure {} | generator {} instances",
                        report.unit_instances,
                        report.identity_instances,
                        report.interchange_instances,
                        report.closure_instances,
                        report.generator_instances
                    );
                    for c in &report.counterexamples {
                        println!("counterexample [{}]: {}", c.law, c.detail);
                    }
                    println!("{}", if report.holds { "PASS" } else { "FAIL" });
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                }
            }
            if report.holds {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::Fail(CheckFailure("an action law has counterexamples".into())))
            }
        }
        Command::Em { fixture } => {
            let monad = match load_fixture(fixture)? {
                Ok(m) => m,
                Err(failure) => return Ok(Outcome::Fail(failure)),
            };
            let em = em_category(&monad);
            category_summary(&em.cat, &fixture.display().to_string(), "eilenberg-moore", cli.format);
            Ok(Outcome::Pass)
        }
        Command::Kleisli { fixture } => {
            let monad = match load_fixture(fixture)? {
                Ok(m) => m,
                Err(failure) => return Ok(Outcome::Fail(failure)),
            };
            let kl = kleisli_category(&monad);
            category_summary(&kl.cat, &fixture.display().to_string(), "kleisli", cli.format);
            Ok(Outcome::Pass)
        }
        Command::Subeq { fixture, probe } => {
            let monad = match load_fixture(fixture)? {
                Ok(m) => m,
                Err(failure) => return Ok(Outcome::Fail(failure)),
            };
            let (label, probe_cat) = resolve_probe(probe)?;
            let sub = subeq_category(&monad, &probe_cat, budget)
                .map_err(|e| UsageError(e.to_string()))?;
            category_summary(
                &sub.cat,
                &format!("{} over {label}", fixture.display()),
                "subeq",
                cli.format,
            );
            Ok(Outcome::Pass)
        }
        Command::Certify { fixture, probes, depth } => {
            let monad = match load_fixture(fixture)? {
                Ok(m) => m,
                Err(failure) => return Ok(Outcome::Fail(failure)),
            };
            let probe_list: Vec<(String, Arc<FinCat>)> = match probes {
                None => default_probes(),
                Some(names) => names
                    .iter()
                    .map(|name| resolve_probe(name))
                    .collect::<Result<_, _>>()?,
            };
            let probe_functors = probe_functors_between(&probe_list, budget)
                .map_err(|e| UsageError(e.to_string()))?;
            let label = fixture
                .file_stem()
                .map_or_else(|| fixture.display().to_string(), |s| s.to_string_lossy().into_owned());
            let em = em_comparison(&monad, &label, &probe_list, &probe_functors, *depth, budget)
                .map_err(|e| UsageError(e.to_string()))?;
            let kl =
                kleisli_comparison(&monad, &label, &probe_list, &probe_functors, *depth, budget)
                    .map_err(|e| UsageError(e.to_string()))?;
            let pass = em.pass && kl.pass;
            match cli.format {
                Format::Text => {
                    print!("{em}");
                    print!("{kl}");
                    println!("certify: {}", if pass { "PASS" } else { "FAIL" });
                }
                Format::Json => {
                    let doc = json!({
                        "schema": "pisimp.report/1",
                        "kind": "certify",
                        "monad": label,
                        "eilenberg_moore": em,
                        "kleisli": kl,
                        "pass": pass,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            if pass {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::Fail(CheckFailure("a comparison reported FAIL; see the report".into())))
            }
        }
    }
}

fn emit_value(format: Format, kind: &str, input: &str, value: &str) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let doc = json!({
                "schema": "pisimp.report/1",
                "kind": kind,
                "input": input,
                "value": value,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}
