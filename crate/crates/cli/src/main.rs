//! `qweyl`: batch front end for qweyl-core.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 for a bad
//! configuration, 3 for anything else.

mod config;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qweyl_core::intlinalg::pi_degree_weyl;
use qweyl_core::repbuild::{build_cyclic_with_budget, DEFAULT_BUDGET};
use qweyl_core::repverify::{classify_pair, dimension_table, verify};
use qweyl_core::weylalg::parse_element;
use qweyl_core::{build_family, Flavor, Representation};
use serde::Serialize;

#[derive(Debug)]
pub enum CliError {
    Assertion(String),
    Config(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Assertion(_) => 1,
            CliError::Config(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<qweyl_core::Error> for CliError {
    fn from(e: qweyl_core::Error) -> Self {
        use qweyl_core::Error as E;
        let msg = e.to_string();
        match e {
            E::DimensionMismatch { .. } | E::DimensionZero | E::NonScalarCentral(_) => {
                CliError::Assertion(msg)
            }
            E::DivisionByZero => CliError::Internal(msg),
            _ => CliError::Config(msg),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    #[value(name = "A2")]
    A2,
    #[value(name = "AltA2")]
    AltA2,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::A2 => Flavor::A2,
            FlavorArg::AltA2 => Flavor::AltA2,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qweyl",
    version,
    about = "Rank-two quantized Weyl algebras at roots of unity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Configuration file (JSON); `iso` takes it twice.
    #[arg(long, global = true)]
    config: Vec<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled parameters.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the flavor named in the configuration.
    #[arg(long, global = true, value_enum)]
    flavor: Option<FlavorArg>,
    /// Plain-text output instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// PI degree from the Smith normal form of the exponent matrix.
    Pideg,
    /// Build a simple module from a family and its parameters.
    Build,
    /// Check relations, central character and simplicity.
    Verify,
    /// Compare two parameter sets of one family.
    Iso,
    /// Dimension table over all families.
    Table,
    /// Normal form of an expression.
    Nf {
        /// Expression; overrides `"expr"` in the configuration.
        #[arg(long)]
        expr: Option<String>,
    },
    /// Cyclic module from constraints and a central character.
    Oracle,
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn one_config(cli: &Cli) -> Result<serde_json::Value, CliError> {
    match cli.config.as_slice() {
        [p] => config::read(p),
        [] => Err(CliError::Config("--config is required".into())),
        _ => Err(CliError::Config(
            "this command takes a single --config".into(),
        )),
    }
}

fn representation(cli: &Cli, cfg: &serde_json::Value) -> Result<Representation, CliError> {
    if config::is_representation(cfg) {
        serde_json::from_value(cfg.clone())
            .map_err(|e| CliError::Config(format!("representation: {e}")))
    } else {
        let (spec, params) = config::family_spec(cfg, cli.flavor.map(Into::into))?;
        Ok(build_family(&spec, &params)?)
    }
}

/// Output text, plus the failure that should set the exit status after printing.
fn run(cli: &Cli) -> Result<(String, Option<CliError>), CliError> {
    let flavor = cli.flavor.map(Flavor::from);
    Ok(match &cli.command {
        Command::Pideg => {
            let spec = config::spec(&one_config(cli)?, flavor)?;
            let r = pi_degree_weyl(&spec)?;
            let out = if cli.text {
                let f: Vec<String> = r
                    .invariant_factors
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let mut s = format!(
                    "invariant factors: {}\npi degree: {}\n",
                    f.join(" "),
                    r.pi_degree
                );
                if let Some(c) = &r.claims {
                    let _ = writeln!(
                        s,
                        "gcd(h1, l) = {}; gcd(h2, l) = {} (s1 s2 = {})",
                        c.gcd_h1_l, c.gcd_h2_l, c.s1s2
                    );
                }
                s
            } else {
                json(&r)?
            };
            (out, None)
        }
        Command::Build => {
            let rep = representation(cli, &one_config(cli)?)?;
            (json(&rep)?, None)
        }
        Command::Verify => {
            let rep = representation(cli, &one_config(cli)?)?;
            let v = verify(&rep);
            let fail = (!v.relations_hold).then(|| {
                let bad: Vec<&str> = v
                    .relations
                    .iter()
                    .filter(|r| !r.holds)
                    .map(|r| r.relation.as_str())
                    .collect();
                CliError::Assertion(format!("relations fail: {}", bad.join("; ")))
            });
            let out = if cli.text {
                let mut s = format!("dim {}\n", v.dim);
                for r in &v.relations {
                    let _ = writeln!(
                        s,
                        "{:<4} {}",
                        if r.holds { "ok" } else { "FAIL" },
                        r.relation
                    );
                }
                let _ = writeln!(
                    s,
                    "burnside {} ({})",
                    v.burnside_dim,
                    if v.is_simple { "simple" } else { "not simple" }
                );
                s
            } else {
                json(&v)?
            };
            (out, fail)
        }
        Command::Iso => {
            let [a, b] = cli.config.as_slice() else {
                return Err(CliError::Config(
                    "iso takes exactly two --config files".into(),
                ));
            };
            let (ca, cb) = (config::read(a)?, config::read(b)?);
            let (spec, pa) = config::family_spec(&ca, flavor)?;
            let pb = config::family_params(&spec, &cb)?;
            let r = classify_pair(&spec, &pa, &pb)?;
            (json(&r)?, None)
        }
        Command::Table => {
            let spec = config::spec(&one_config(cli)?, flavor)?;
            let t = dimension_table(&spec, cli.seed)?;
            let fail = (!t.all_ok()).then(|| {
                let bad: Vec<String> = t
                    .rows
                    .iter()
                    .filter(|r| !r.ok())
                    .map(|r| r.family.to_string())
                    .collect();
                CliError::Assertion(format!(
                    "table check failed: families [{}], max dim {} vs PI degree {}",
                    bad.join(", "),
                    t.max_dim,
                    t.pi_degree
                ))
            });
            (if cli.text { t.to_text() } else { json(&t)? }, fail)
        }
        Command::Nf { expr } => {
            let cfg = match cli.config.as_slice() {
                [] if expr.is_some() => {
                    return Err(CliError::Config("nf needs a spec via --config".into()))
                }
                _ => one_config(cli)?,
            };
            let spec = config::spec(&cfg, flavor)?;
            let e = parse_element(&spec, &config::expression(&cfg, expr.as_deref())?)?;
            (
                if cli.text {
                    format!("{e}\n")
                } else {
                    json(&e)?
                },
                None,
            )
        }
        Command::Oracle => {
            let cfg = one_config(cli)?;
            let spec = config::spec(&cfg, flavor)?;
            let (cons, chi, budget) = config::oracle(&spec, &cfg)?;
            let rep =
                build_cyclic_with_budget(&spec, &cons, &chi, budget.unwrap_or(DEFAULT_BUDGET))?;
            (json(&rep)?, None)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(text, fail)| {
        match &cli.out {
            Some(p) => std::fs::write(p, &text)
                .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", p.display())))?,
            None => print!("{text}"),
        }
        fail.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Assertion(m) | CliError::Config(m) | CliError::Internal(m)) = &e;
            eprintln!("qweyl: {m}");
            ExitCode::from(e.code())
        }
    }
}
