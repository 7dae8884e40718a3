//! Command-line surface. `run` takes argv-style arguments and returns an
//! exit code plus rendered output, so the whole surface is testable without
//! spawning a process.
//!
//! Exit codes: 0 = success / property holds, 1 = property refuted,
//! 2 = usage or input format error, 3 = a capacity cap was exceeded.

use crate::catalog::identity_catalog;
use crate::derive::{
    bounded_search, bundled_script, bundled_script_names, replay_script, validate_script,
    DerivationScript, SearchConfig,
};
use crate::error::Error;
use crate::matrix::{
    constant_embedding, find_isomorphism, m2m2_semiring, matrix_semiring, padding_embedding,
    phi_block_embedding, resolve_semiring, subsemiring_closure, verify_homomorphism, ElementMap,
    IsoConfig, MatrixConfig,
};
use crate::satisfy::{
    equational_agreement, necessary_conditions, satisfies, satisfies_all, syntactic_criterion,
    AgreementConfig, CriterionTag, NecessaryTag, SatConfig,
};
use crate::semiring::{natural_order, verify_ai_axioms, FiniteSemiring, SemiringHandle};
use crate::tables::{all_diffs, render_hasse, render_semiring};
use crate::term::{as_simple_identity, parse_identity};
use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub output: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "aisr",
    about = "Workbench for finite additively idempotent semirings",
    disable_version_flag = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SemiringArg {
    /// Catalog name, `<base>x<n>` matrix semiring, or a JSON file path.
    semiring: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the defining axioms of an ai-semiring.
    Axioms(SemiringArg),
    /// Print the natural order as covering pairs.
    Order(SemiringArg),
    /// Decide whether an identity holds (exhaustively).
    Check {
        #[command(flatten)]
        semiring: SemiringArg,
        /// Identity such as "xy = xy + x".
        identity: String,
        /// Check on N seeded random assignments instead of exhaustively.
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for --samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Apply the closed-form criteria of the two-element semirings, or the
    /// necessary conditions of S54/S57/S60, to a simple identity.
    Criterion {
        /// L2, R2, N2, T2, M2, D2, S54, S57, or S60.
        tag: String,
        /// Identity of the shape "u = u + q".
        identity: String,
        /// Cross-check the syntactic answer against the exhaustive one.
        #[arg(long)]
        verify: bool,
    },
    /// Build a matrix semiring and print its size (and tables if small).
    Matrix {
        /// Base semiring.
        base: String,
        /// Dimension n.
        n: usize,
        /// Print the materialized semiring as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Close a set of elements under both operations.
    Closure {
        #[command(flatten)]
        semiring: SemiringArg,
        /// Element labels to seed with.
        elements: Vec<String>,
    },
    /// Search for an isomorphism between two semirings.
    Iso { first: String, second: String },
    /// Verify an embedding: constant, padding, or the block map into M2
    /// matrices.
    Embed {
        /// "constant", "padding", or "phi".
        kind: String,
        /// Base semiring (ignored for phi).
        #[arg(long, default_value = "M2")]
        base: String,
        /// Dimension (source dimension for padding, target for the others).
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Print the element map as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check a named equational basis in a semiring.
    Basis {
        #[command(flatten)]
        semiring: SemiringArg,
        /// Basis tag (catalog name, MnL2, MnR2, MnN2, MnT2, M2xM2) or
        /// comma-separated identity keys.
        basis: String,
        #[arg(long)]
        json: bool,
    },
    /// Sample identities and compare satisfaction in two semirings.
    Agree {
        first: String,
        second: String,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Replay a derivation script (bundled name or JSON file), with seeded
    /// semantic validation of every step.
    Derive {
        /// Bundled script name or path to a script JSON file; or "search".
        script: String,
        /// With "search": goal identity "u = u + q".
        #[arg(long)]
        goal: Option<String>,
        /// With "search": comma-separated catalog identity keys.
        #[arg(long)]
        basis: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_steps: usize,
        /// Skip the per-step random validation.
        #[arg(long)]
        no_validate: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render computed tables and order diagrams; --diff compares them
    /// against the bundled transcriptions.
    Tables {
        /// "two-element", "three-element", "m2x2", "sr6", or "all".
        #[arg(default_value = "all")]
        which: String,
        #[arg(long)]
        diff: bool,
    },
}

fn load_semiring(name: &str) -> crate::Result<SemiringHandle> {
    if name.ends_with(".json") || name.contains('/') {
        let text = std::fs::read_to_string(name)?;
        return Ok(FiniteSemiring::from_json_str(&text)?.into());
    }
    resolve_semiring(name, &MatrixConfig::default())
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Capacity(_) => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

/// Parses and runs one invocation; never panics on bad input.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandOutcome {
                exit_code: code,
                output: e.to_string(),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome {
            exit_code: exit_code_for(&e),
            output: format!("error: {e}"),
        },
    }
}

fn ok(output: String) -> crate::Result<CommandOutcome> {
    Ok(CommandOutcome {
        exit_code: EXIT_OK,
        output,
    })
}

fn verdicted(holds: bool, output: String) -> crate::Result<CommandOutcome> {
    Ok(CommandOutcome {
        exit_code: if holds { EXIT_OK } else { EXIT_REFUTED },
        output,
    })
}

fn sat_config() -> SatConfig {
    SatConfig::default()
}

fn require_table<'h>(h: &'h SemiringHandle, what: &str) -> crate::Result<&'h FiniteSemiring> {
    h.as_table().ok_or_else(|| {
        Error::Capacity(format!(
            "{what} needs a materialized semiring; '{}' is too large",
            h.name()
        ))
    })
}

fn describe_map(map: &ElementMap, json: bool) -> crate::Result<CommandOutcome> {
    let report = verify_homomorphism(map);
    let good = report.homomorphism && report.injective;
    let out = if json {
        let mut j: serde_json::Value = serde_json::from_str(&map.to_json_string())?;
        j["homomorphism"] = serde_json::json!(report.homomorphism);
        j["injective"] = serde_json::json!(report.injective);
        j["violation"] = serde_json::json!(report.violation);
        serde_json::to_string_pretty(&j)?
    } else {
        let mut out = format!(
            "{} -> {}: homomorphism={} injective={}\n",
            map.source.name(),
            map.target.name(),
            report.homomorphism,
            report.injective
        );
        if let Some(v) = report.violation {
            let _ = writeln!(out, "violation: {v}");
        }
        let s = map.source.ops();
        let t = map.target.ops();
        for (a, &img) in map.image.iter().enumerate() {
            let _ = writeln!(out, "  {} -> {}", s.label(a as u64), t.label(img));
        }
        out
    };
    verdicted(good, out)
}

fn dispatch(cmd: Command) -> crate::Result<CommandOutcome> {
    match cmd {
        Command::Axioms(arg) => {
            let h = load_semiring(&arg.semiring)?;
            let s = require_table(&h, "axiom checking")?;
            let report = verify_ai_axioms(s);
            let mut out = String::new();
            if report.pass {
                let _ = writeln!(out, "{}: all ai-semiring axioms hold", s.name());
            } else {
                for f in &report.failures {
                    let (a, b, c) = f.witness;
                    let _ = writeln!(
                        out,
                        "{}: {} fails at ({}, {}, {})",
                        s.name(),
                        f.axiom.describe(),
                        s.label(a),
                        s.label(b),
                        s.label(c)
                    );
                }
            }
            verdicted(report.pass, out)
        }
        Command::Order(arg) => {
            let h = load_semiring(&arg.semiring)?;
            let s = require_table(&h, "order computation")?;
            let (_, edges) = natural_order(s);
            let mut out = String::new();
            for (a, b) in edges {
                let _ = writeln!(out, "{} < {}", s.label(a), s.label(b));
            }
            ok(out)
        }
        Command::Check {
            semiring,
            identity,
            samples,
            seed,
            json,
        } => {
            let h = load_semiring(&semiring.semiring)?;
            let id = parse_identity(&identity)?;
            let v = match samples {
                Some(n) => crate::satisfy::satisfies_sampled(h.ops(), &id, n, seed)?,
                None => satisfies(h.ops(), &id, &sat_config())?,
            };
            let out = if json {
                serde_json::to_string_pretty(&v.to_json(h.ops()))?
            } else if v.holds {
                format!(
                    "{} satisfies {id} ({} assignments checked)\n",
                    h.name(),
                    v.assignments_checked
                )
            } else {
                let w = v.witness.as_ref().unwrap();
                let assignment: Vec<String> = w
                    .labels(h.ops())
                    .into_iter()
                    .map(|(var, val)| format!("{var}={val}"))
                    .collect();
                let (l, r) = v.side_values.unwrap();
                format!(
                    "{} refutes {id} at {} (lhs={}, rhs={})\n",
                    h.name(),
                    assignment.join(", "),
                    h.ops().label(l),
                    h.ops().label(r)
                )
            };
            verdicted(v.holds, out)
        }
        Command::Criterion {
            tag,
            identity,
            verify,
        } => {
            let id = parse_identity(&identity)?;
            let si = as_simple_identity(&id)?;
            let (answer, conclusive) = if let Ok(t) = tag.parse::<CriterionTag>() {
                (syntactic_criterion(t, &si), true)
            } else {
                let t: NecessaryTag = tag.parse()?;
                (necessary_conditions(t, &si), false)
            };
            let mut out = if conclusive {
                format!(
                    "{tag} {} {id}\n",
                    if answer { "satisfies" } else { "refutes" }
                )
            } else if answer {
                format!("{tag}: necessary conditions hold for {id} (inconclusive)\n")
            } else {
                format!("{tag}: necessary conditions fail, so {tag} refutes {id}\n")
            };
            if verify {
                let s = resolve_semiring(&tag, &MatrixConfig::default())?;
                let actual = satisfies(s.ops(), &id, &sat_config())?.holds;
                let _ = writeln!(out, "exhaustive check: {actual}");
                let consistent = if conclusive {
                    answer == actual
                } else {
                    !actual || answer
                };
                if !consistent {
                    let _ = writeln!(out, "MISMATCH between criterion and exhaustive check");
                    return Ok(CommandOutcome {
                        exit_code: EXIT_REFUTED,
                        output: out,
                    });
                }
            }
            // A failed necessary condition is still a conclusive refutation.
            verdicted(answer, out)
        }
        Command::Matrix { base, n, json } => {
            let base_h = load_semiring(&base)?;
            let base_s = require_table(&base_h, "matrix construction")?;
            let h = matrix_semiring(base_s, n, &MatrixConfig::default())?;
            let out = match h.as_table() {
                Some(s) if json => s.to_json_string(),
                Some(s) if s.size() <= 16 => {
                    format!("{} ({} elements)\n{}", s.name(), s.size(), render_semiring(s))
                }
                _ => format!(
                    "{} ({} elements{})\n",
                    h.name(),
                    h.ops().size(),
                    if h.as_table().is_some() {
                        ", materialized"
                    } else {
                        ", lazy"
                    }
                ),
            };
            ok(out)
        }
        Command::Closure { semiring, elements } => {
            let h = load_semiring(&semiring.semiring)?;
            let ops = h.ops();
            let table = require_table(&h, "closure by label")?;
            let seed: Vec<u64> = elements
                .iter()
                .map(|l| {
                    table
                        .index_of(l)
                        .map(|i| i as u64)
                        .ok_or_else(|| Error::Lookup(format!("no element labeled '{l}'")))
                })
                .collect::<crate::Result<_>>()?;
            let closed = subsemiring_closure(ops, &seed)?;
            let labels: Vec<String> = closed.iter().map(|&c| ops.label(c)).collect();
            ok(format!(
                "closure has {} elements: {}\n",
                labels.len(),
                labels.join(", ")
            ))
        }
        Command::Iso { first, second } => {
            let a = load_semiring(&first)?;
            let b = load_semiring(&second)?;
            let a = require_table(&a, "isomorphism search")?;
            let b = require_table(&b, "isomorphism search")?;
            match find_isomorphism(a, b, &IsoConfig::default()) {
                Some(map) => {
                    let mut out = format!("{} ≅ {}\n", a.name(), b.name());
                    for (i, &j) in map.iter().enumerate() {
                        let _ = writeln!(out, "  {} -> {}", a.label(i), b.label(j));
                    }
                    verdicted(true, out)
                }
                None => verdicted(false, format!("{} !≅ {}\n", a.name(), b.name())),
            }
        }
        Command::Embed { kind, base, n, json } => {
            let cfg = MatrixConfig::default();
            let map = match kind.as_str() {
                "constant" => {
                    let b = load_semiring(&base)?;
                    constant_embedding(require_table(&b, "embedding")?, n, &cfg)?
                }
                "padding" => {
                    let b = load_semiring(&base)?;
                    padding_embedding(require_table(&b, "embedding")?, n, &cfg)?
                }
                "phi" => phi_block_embedding(n, &cfg)?,
                other => {
                    return Err(Error::Format(format!(
                        "unknown embedding '{other}' (expected constant, padding, or phi)"
                    )))
                }
            };
            describe_map(&map, json)
        }
        Command::Basis {
            semiring,
            basis,
            json,
        } => {
            let h = load_semiring(&semiring.semiring)?;
            let cat = identity_catalog();
            let keys: Vec<String> = match cat.basis(&basis) {
                Ok(keys) => keys.into_iter().map(String::from).collect(),
                Err(_) => basis.split(',').map(|k| k.trim().to_string()).collect(),
            };
            let identities: Vec<(String, crate::term::Identity)> = keys
                .iter()
                .map(|k| Ok((k.clone(), cat.get(k)?.identity.clone())))
                .collect::<crate::Result<_>>()?;
            let report = satisfies_all(h.ops(), &identities, &sat_config())?;
            let out = if json {
                serde_json::to_string_pretty(&report.to_json(h.ops()))?
            } else {
                let mut out = String::new();
                for (key, v) in &report.verdicts {
                    let _ = writeln!(
                        out,
                        "{key}: {} in {}",
                        if v.holds { "holds" } else { "fails" },
                        h.name()
                    );
                }
                out
            };
            verdicted(report.all_hold, out)
        }
        Command::Agree {
            first,
            second,
            samples,
            seed,
            json,
        } => {
            let a = load_semiring(&first)?;
            let b = load_semiring(&second)?;
            let cfg = AgreementConfig {
                samples,
                seed,
                ..Default::default()
            };
            let report = equational_agreement(a.ops(), b.ops(), &cfg)?;
            let agree = report.disagreement.is_none();
            let out = if json {
                serde_json::to_string_pretty(&report.to_json())?
            } else {
                match &report.disagreement {
                    None => format!(
                        "{} and {} agree on {} sampled identities (seed {})\n",
                        report.first, report.second, report.samples_run, report.seed
                    ),
                    Some(d) => format!(
                        "{} separates {} from {}: holds in {} only\n",
                        d.identity,
                        report.first,
                        report.second,
                        if d.holds_in_first {
                            &report.first
                        } else {
                            &report.second
                        }
                    ),
                }
            };
            verdicted(agree, out)
        }
        Command::Derive {
            script,
            goal,
            basis,
            max_steps,
            no_validate,
            seed,
        } => {
            let loaded: DerivationScript = if script == "search" {
                let goal = goal.ok_or_else(|| {
                    Error::Format("search needs --goal \"u = u + q\"".into())
                })?;
                let basis = basis
                    .ok_or_else(|| Error::Format("search needs --basis key,key,...".into()))?;
                let keys: Vec<String> =
                    basis.split(',').map(|k| k.trim().to_string()).collect();
                let si = as_simple_identity(&parse_identity(&goal)?)?;
                let cfg = SearchConfig {
                    max_steps,
                    ..Default::default()
                };
                match bounded_search(&keys, &si, &cfg)? {
                    Some(s) => s,
                    None => {
                        return Ok(CommandOutcome {
                            exit_code: EXIT_REFUTED,
                            output: "no derivation found within the limits\n".into(),
                        })
                    }
                }
            } else if bundled_script_names().contains(&script.as_str()) {
                bundled_script(&script)?
            } else {
                DerivationScript::from_json_str(&std::fs::read_to_string(&script)?)?
            };
            let trace = replay_script(&loaded)?;
            let mut out = String::new();
            for (i, t) in trace.iter().enumerate() {
                if i == 0 {
                    let _ = writeln!(out, "start: {t}");
                } else {
                    let step = &loaded.steps[i - 1];
                    let _ = writeln!(out, "  [{}] {t}", step.identity.display());
                }
            }
            if !no_validate {
                let checked = validate_script(&loaded, 1000, seed)?;
                let _ = writeln!(
                    out,
                    "validated: every step holds in {} ({checked} sampled assignments)",
                    loaded.model.as_deref().unwrap_or("M2x2")
                );
            }
            if script == "search" {
                let _ = writeln!(out, "script:\n{}", loaded.to_json_string());
            }
            ok(out)
        }
        Command::Tables { which, diff } => {
            if diff {
                let diffs = all_diffs()?;
                let selected: Vec<(&str, Vec<String>)> = diffs
                    .into_iter()
                    .filter(|(k, _)| {
                        which == "all"
                            || *k == which.as_str()
                            || (which == "m2x2" && k.starts_with("m2x2"))
                    })
                    .collect();
                if selected.is_empty() {
                    return Err(Error::Lookup(format!("unknown table group '{which}'")));
                }
                let mut out = String::new();
                let mut mismatches = 0;
                for (k, d) in selected {
                    let _ = writeln!(out, "{k}: {} mismatches", d.len());
                    for line in &d {
                        let _ = writeln!(out, "  {line}");
                    }
                    mismatches += d.len();
                }
                return verdicted(mismatches == 0, out);
            }
            let mut out = String::new();
            let cfg = MatrixConfig::default();
            if which == "all" || which == "two-element" {
                for name in ["L2", "R2", "N2", "T2", "M2", "D2"] {
                    let s = resolve_semiring(name, &cfg)?;
                    let _ = writeln!(out, "{}", render_semiring(require_table(&s, "render")?));
                }
            }
            if which == "all" || which == "three-element" {
                for name in ["S54", "S56", "S57", "S58", "S60"] {
                    let s = resolve_semiring(name, &cfg)?;
                    let _ = writeln!(out, "{}", render_semiring(require_table(&s, "render")?));
                }
            }
            if which == "all" || which == "m2x2" {
                let m = m2m2_semiring()?;
                let _ = writeln!(out, "{}", render_semiring(&m));
                let _ = writeln!(out, "order:\n{}\n", render_hasse(&m));
            }
            if which == "all" || which == "sr6" {
                let s = resolve_semiring("SR6", &cfg)?;
                let s = require_table(&s, "render")?;
                let _ = writeln!(out, "{}", render_semiring(s));
                let _ = writeln!(out, "order:\n{}\n", render_hasse(s));
            }
            if out.is_empty() {
                return Err(Error::Lookup(format!("unknown table group '{which}'")));
            }
            ok(out)
        }
    }
}
