//! Command-line front end for `efl-core`.

pub mod acceptance;
pub mod engine;
pub mod experiment;
pub mod input;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use efl_core::algebra::{max_terms_from_env, Engine};
use efl_core::auxgraph::{build_aux, default_spanning_trees};
use efl_core::coloring::{brute_force_coloring, verify_coloring, Decoded};
use efl_core::hypergraph::{degree_profile, dualize, generate, strip_degree_one, uniformize, validate, Family};
use efl_core::orientation::{complete_orientation, is_vandermonde_completable, orient_g1, orient_g2_pathlike, sign_of};
use efl_core::{AuxKind, ExponentVector, LinearHypergraph};
use serde_json::{json, Value};

use crate::engine::{auto_target, coefficient, search_and_decode};
use crate::experiment::{search_reports, SearchConfig};
use crate::input::load_hypergraph;

#[derive(Parser, Debug)]
#[command(name = "efl", version, about = "Auxiliary graphs, orientations and coloring polynomials of linear hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    G1,
    G2,
}

impl From<KindArg> for AuxKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::G1 => AuxKind::G1,
            KindArg::G2 => AuxKind::G2,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Random,
    #[value(name = "near_pencil", alias = "near-pencil")]
    NearPencil,
    #[value(name = "truncated_projective_plane", alias = "projective-plane")]
    TruncatedProjectivePlane,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Expand,
    Orient,
    Formula,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Oracle,
    Nullstellensatz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mutation {
    #[value(name = "s-offset")]
    SOffset,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check linearity, uniformity and standard form.
    Validate { file: PathBuf },
    /// Dual hypergraph.
    Dualize { file: PathBuf },
    /// Remove degree-1 vertices.
    Derive { file: PathBuf },
    /// Pad to standard form.
    Uniformize {
        #[arg(long)]
        n: usize,
        file: PathBuf,
    },
    /// Generate an instance.
    Gen {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Auxiliary graph with path-like trees.
    Aux {
        #[arg(long)]
        kind: KindArg,
        file: PathBuf,
    },
    /// Constructive orientation of the identifier edges.
    Orient {
        #[arg(long)]
        kind: KindArg,
        file: PathBuf,
    },
    /// Coefficient of the coloring polynomial at a maximal monomial.
    Coeff {
        #[arg(long)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = EngineArg::All)]
        engine: EngineArg,
        /// `auto` or a JSON map {"(i,j)": exponent}.
        #[arg(long, default_value = "auto")]
        target: String,
        file: PathBuf,
    },
    /// Find a proper n-coloring.
    Color {
        #[arg(long, value_enum, default_value_t = Via::Oracle)]
        via: Via,
        #[arg(long)]
        kind: Option<KindArg>,
        file: PathBuf,
    },
    /// Look for nonzero bounded maximal coefficients on random instances.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        tree_limit: usize,
        /// Skip the first N samples.
        #[arg(long, default_value_t = 0)]
        skip: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long)]
        mutate: Option<Mutation>,
    },
}

fn print_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn canonical(h: &LinearHypergraph) -> Result<Value> {
    Ok(serde_json::to_value(h.to_json())?)
}

fn parse_target(text: &str, n: usize) -> Result<ExponentVector> {
    let map: std::collections::BTreeMap<String, u32> =
        serde_json::from_str(text).context("target must be a JSON map {\"(i,j)\": exponent}")?;
    ExponentVector::from_json_map(&map, n).map_err(anyhow::Error::msg)
}

fn cmd_validate(h: &LinearHypergraph, out: &mut dyn Write) -> Result<i32> {
    let report = validate(h);
    print_json(
        out,
        &json!({
            "n": h.n(),
            "edges": h.edge_count(),
            "is_linear": report.is_linear,
            "is_uniform": report.is_uniform,
            "is_standard_form": report.is_standard_form,
            "violations": report.violations,
            "degrees": degree_profile(h).to_map(),
        }),
    )?;
    Ok(if report.is_standard_form { 0 } else { 1 })
}

fn cmd_orient(h: &LinearHypergraph, kind: AuxKind, out: &mut dyn Write) -> Result<i32> {
    let (aux, o) = match kind {
        AuxKind::G1 => {
            let aux = build_aux(h, &default_spanning_trees(h)?, AuxKind::G1)?;
            let o = orient_g1(&aux)?;
            (aux, o)
        }
        AuxKind::G2 => orient_g2_pathlike(h)?,
    };
    let n = aux.n();
    let completable = is_vandermonde_completable(&aux, &o);
    let mut value = json!({
        "kind": aux.kind(),
        "n": n,
        "orientation": o,
        "in_degrees": o.in_degrees(n).to_json_map(n),
        "completable": completable,
    });
    if completable {
        let full = complete_orientation(&aux, &o)?;
        value["target"] = json!(full.in_degrees(n).to_json_map(n));
        value["sign"] = json!(sign_of(&full));
    }
    print_json(out, &value)?;
    Ok(if completable { 0 } else { 1 })
}

fn cmd_coeff(
    h: &LinearHypergraph,
    kind: AuxKind,
    engine: EngineArg,
    target: &str,
    out: &mut dyn Write,
) -> Result<i32> {
    let (aux, target) = if target == "auto" {
        auto_target(h, kind)?
    } else {
        let aux = build_aux(h, &default_spanning_trees(h)?, kind)?;
        let t = parse_target(target, h.n())?;
        (aux, t)
    };
    let engines: Vec<Engine> = match engine {
        EngineArg::Expand => vec![Engine::Expand],
        EngineArg::Orient => vec![Engine::Orient],
        EngineArg::Formula => vec![Engine::Formula],
        EngineArg::All => Engine::ALL.to_vec(),
    };
    let max_terms = max_terms_from_env();
    let mut values = serde_json::Map::new();
    let mut results = Vec::new();
    for e in engines {
        let c = coefficient(&aux, &target, e, max_terms)?;
        values.insert(e.name().into(), json!(c.value_string()));
        results.push(c);
    }
    let agree = results.windows(2).all(|w| w[0] == w[1]);
    print_json(
        out,
        &json!({
            "kind": aux.kind(),
            "target": target.to_json_map(h.n()),
            "field": results[0].field_tag(),
            "coefficients": values,
            "agree": agree,
            "nonzero": !results[0].is_zero(),
        }),
    )?;
    Ok(if agree { 0 } else { 1 })
}

fn cmd_color(h: &LinearHypergraph, via: Via, kind: Option<KindArg>, out: &mut dyn Write) -> Result<i32> {
    let n = h.n();
    let coloring = match via {
        Via::Oracle => brute_force_coloring(h, n),
        Via::Nullstellensatz => {
            let kind = kind.map(AuxKind::from).unwrap_or(
                if efl_core::scalar::SUPPORTED_PRIMES.contains(&(n as u64)) {
                    AuxKind::G1
                } else {
                    AuxKind::G2
                },
            );
            let (aux, target) = auto_target(h, kind)?;
            match search_and_decode(h, &aux, &target)? {
                Some((_, Decoded::Coloring { coloring })) => Some(coloring),
                Some((_, Decoded::Rejected { violated })) => {
                    bail!("search returned a vanishing point ({})", violated.join(", "))
                }
                None => None,
            }
        }
    };
    match coloring {
        Some(c) => {
            let verified = verify_coloring(h, &c)?;
            print_json(out, &json!({ "coloring": c, "verified": verified }))?;
            Ok(if verified { 0 } else { 1 })
        }
        None => {
            print_json(out, &json!({ "coloring": null, "verified": false, "exhausted": true }))?;
            Ok(1)
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Validate { file } => cmd_validate(&load_hypergraph(&file)?, out),
        Command::Dualize { file } => {
            print_json(out, &canonical(&dualize(&load_hypergraph(&file)?)?)?)?;
            Ok(0)
        }
        Command::Derive { file } => {
            let (derived, removed) = strip_degree_one(&load_hypergraph(&file)?);
            print_json(out, &json!({ "hypergraph": canonical(&derived)?, "removed": removed }))?;
            Ok(0)
        }
        Command::Uniformize { n, file } => {
            print_json(out, &canonical(&uniformize(&load_hypergraph(&file)?, n)?)?)?;
            Ok(0)
        }
        Command::Gen {
            family,
            n,
            q,
            seed,
            format,
        } => {
            let need_n = || n.context("--n is required for this family");
            let family = match family {
                FamilyArg::Random => Family::Random { n: need_n()? },
                FamilyArg::NearPencil => Family::NearPencil { n: need_n()? },
                FamilyArg::TruncatedProjectivePlane => Family::TruncatedProjectivePlane {
                    q: q.context("--q is required for this family")?,
                },
            };
            let h = generate(family, seed)?;
            match format {
                Format::Json => print_json(out, &canonical(&h)?)?,
                Format::Text => write!(out, "{}", h.to_text()?)?,
            }
            Ok(0)
        }
        Command::Aux { kind, file } => {
            let h = load_hypergraph(&file)?;
            let aux = build_aux(&h, &default_spanning_trees(&h)?, kind.into())?;
            print_json(out, &serde_json::to_value(aux.to_json())?)?;
            Ok(0)
        }
        Command::Orient { kind, file } => cmd_orient(&load_hypergraph(&file)?, kind.into(), out),
        Command::Coeff {
            kind,
            engine,
            target,
            file,
        } => cmd_coeff(&load_hypergraph(&file)?, kind.into(), engine, &target, out),
        Command::Color { via, kind, file } => cmd_color(&load_hypergraph(&file)?, via, kind, out),
        Command::Search {
            n,
            samples,
            seed,
            kind,
            tree_limit,
            skip,
            timings,
        } => {
            let cfg = SearchConfig {
                n,
                samples,
                seed,
                kind: kind.into(),
                tree_limit,
                skip,
                timings,
            };
            for report in search_reports(&cfg)? {
                if report["candidate"] == json!(true) {
                    writeln!(
                        err,
                        "CANDIDATE: seed {} has no nonzero bounded maximal coefficient",
                        report["seed"]
                    )?;
                }
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            }
            Ok(0)
        }
        Command::Selftest { mutate } => {
            let opts = acceptance::Options {
                mutate_s_offset: mutate == Some(Mutation::SOffset),
            };
            let outcomes = acceptance::run_suite(opts, |o| {
                let _ = writeln!(out, "{}", o.line());
            });
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            writeln!(out, "{} of {} criteria passed", outcomes.len() - failed, outcomes.len())?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
