//! The `nsgs` command line.
//!
//! [`run`] parses arguments and returns the exit code together with
//! everything that would be written to stdout and stderr, so the binary and
//! the tests share one code path. Exit codes: 0 on success, 1 on a domain
//! outcome (not a semigroup, excluded case, verification failures), 2 on
//! unparseable input or unusable options.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsgs_core::enumerate::enumerate_numerical_sets_capped;
use nsgs_core::verify::{verify_theorem, Theorem};
use nsgs_core::{
    classify_ring, decompose_pseudo_symmetric, decompose_symmetric, diagram_of, dual,
    dual_sum_is_semigroup, enumerate_semigroups, is_pseudo_symmetric, is_symmetric, predicted_gaps,
    render, set_sum, BoundMode, Caps, Decomposition, EnumBound, Error, NumericalSet, RenderFormat,
    RenderOptions, SumKind,
};
use serde_json::json;

/// Environment variable that lowers the enumeration caps.
pub const MAX_BOUND_VAR: &str = "NSGS_MAX_BOUND";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "nsgs",
    version,
    about = "Numerical sets, numerical semigroups and their Young diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gaps, Frobenius number, conductor, genus and classification of a set
    Analyze {
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Sum of two sets
    Sum {
        #[arg(long)]
        kind: String,
        left: String,
        right: String,
        /// Also print the gap set predicted from the two gap sets
        #[arg(long)]
        expect_gaps: bool,
    },
    /// The dual set S*
    Dual { set: String },
    /// Write a (pseudo-)symmetric semigroup as T + T*
    Decompose { set: String },
    /// Closure of S + S* for each kind: closed-form criterion against brute force
    CheckClosure { set: String },
    /// Draw the Young diagram of a set
    Render {
        set: String,
        /// Annotate boxes with hook lengths
        #[arg(long)]
        hooks: bool,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Highlight the hook of box ROW,COL
        #[arg(long, value_name = "ROW,COL")]
        hook_of: Option<String>,
        #[arg(long, default_value_t = 32)]
        cell_size: u32,
    },
    /// List sets within a bound, one per line, in canonical order
    Enumerate {
        #[command(flatten)]
        bound: BoundArgs,
        #[arg(long, value_enum, default_value_t = Filter::Semigroup)]
        filter: Filter,
    },
    /// Check a theorem against brute force over every instance within a bound
    Verify {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        bound: BoundArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BoundArgs {
    #[arg(long)]
    genus: Option<u32>,
    #[arg(long)]
    frobenius: Option<u32>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Filter {
    /// Every numerical set (requires --frobenius)
    All,
    Semigroup,
    Symmetric,
    PseudoSymmetric,
}

/// Runs the CLI with `NSGS_MAX_BOUND` taken from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_max_bound(args, std::env::var(MAX_BOUND_VAR).ok())
}

pub fn run_with_max_bound<I, T>(args: I, max_bound: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let caps = match max_bound.as_deref().map(str::trim) {
        None | Some("") => Caps::default(),
        Some(v) => match v.parse::<u32>() {
            Ok(limit) => Caps::lowered_to(limit),
            Err(_) => {
                return usage(format!(
                    "{MAX_BOUND_VAR} must be a non-negative integer, got `{v}`"
                ))
            }
        },
    };
    match dispatch(cli.command, caps) {
        Ok(out) => out,
        Err(e) => {
            let code = if is_usage_error(&e) { 2 } else { 1 };
            Outcome {
                code,
                stderr: format!("error: {e}\n"),
                ..Outcome::default()
            }
        }
    }
}

fn is_usage_error(e: &Error) -> bool {
    e.is_input_error()
        || matches!(
            e,
            Error::UnknownTheorem(_) | Error::BoundExceeded(_) | Error::InvalidHighlight(..)
        )
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: 2,
        stderr: format!("error: {msg}\n"),
        ..Outcome::default()
    }
}

fn success(stdout: String) -> Outcome {
    Outcome {
        code: 0,
        stdout,
        ..Outcome::default()
    }
}

fn parse_set(text: &str) -> Result<NumericalSet, Error> {
    text.parse()
}

fn dispatch(command: Command, caps: Caps) -> Result<Outcome, Error> {
    match command {
        Command::Analyze { set, json } => analyze(&parse_set(&set)?, json),
        Command::Sum {
            kind,
            left,
            right,
            expect_gaps,
        } => {
            let kind: SumKind = kind.parse()?;
            let (s, t) = (parse_set(&left)?, parse_set(&right)?);
            let result = set_sum(&s, &t, kind)?;
            let mut out = format!("{result}\n");
            if expect_gaps {
                let predicted = predicted_gaps(&s, &t, kind);
                writeln!(out, "predicted {predicted}").unwrap();
                writeln!(out, "agree: {}", predicted == result.gaps()).unwrap();
            }
            Ok(success(out))
        }
        Command::Dual { set } => Ok(success(format!("{}\n", dual(&parse_set(&set)?)))),
        Command::Decompose { set } => decompose(&parse_set(&set)?),
        Command::CheckClosure { set } => check_closure(&parse_set(&set)?),
        Command::Render {
            set,
            hooks,
            svg,
            out,
            hook_of,
            cell_size,
        } => {
            let s = parse_set(&set)?;
            let diagram = diagram_of(&s);
            let highlight = match hook_of {
                Some(spec) => {
                    let (row, col) = parse_box(&spec)?;
                    diagram.hook_boxes(row, col)?
                }
                None => Vec::new(),
            };
            let options = RenderOptions {
                format: if svg {
                    RenderFormat::Svg
                } else {
                    RenderFormat::Ascii
                },
                show_hooks: hooks,
                highlight,
                cell_size,
            };
            let doc = render(&diagram, &options)?;
            match out {
                Some(path) => match std::fs::write(&path, doc) {
                    Ok(()) => Ok(success(String::new())),
                    Err(e) => Ok(Outcome {
                        code: 1,
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                        ..Outcome::default()
                    }),
                },
                None => Ok(success(doc)),
            }
        }
        Command::Enumerate { bound, filter } => enumerate(&bound, filter, caps),
        Command::Verify {
            theorem,
            bound,
            json,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let report = verify_theorem(theorem, enum_bound(&bound, caps)?)?;
            let stdout = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_string()
            };
            Ok(Outcome {
                code: if report.passed() { 0 } else { 1 },
                stdout,
                ..Outcome::default()
            })
        }
    }
}

fn parse_box(spec: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::MalformedInput(format!("expected ROW,COL, got `{spec}`"));
    let (r, c) = spec.split_once(',').ok_or_else(bad)?;
    Ok((
        r.trim().parse().map_err(|_| bad())?,
        c.trim().parse().map_err(|_| bad())?,
    ))
}

fn enum_bound(bound: &BoundArgs, caps: Caps) -> Result<EnumBound, Error> {
    match (bound.genus, bound.frobenius) {
        (Some(g), None) => EnumBound::with_caps(BoundMode::ByGenus, g, caps),
        (None, Some(f)) => EnumBound::with_caps(BoundMode::ByFrobenius, f, caps),
        _ => unreachable!("clap enforces exactly one bound"),
    }
}

fn list(sets: impl Iterator<Item = NumericalSet>) -> String {
    let mut out = String::new();
    for s in sets {
        writeln!(out, "{s}").unwrap();
    }
    out
}

fn enumerate(bound: &BoundArgs, filter: Filter, caps: Caps) -> Result<Outcome, Error> {
    if filter == Filter::All {
        let Some(f) = bound.frobenius else {
            return Err(Error::MalformedInput(
                "--filter all needs --frobenius: there are infinitely many numerical sets of a given genus"
                    .into(),
            ));
        };
        return Ok(success(list(enumerate_numerical_sets_capped(f, caps)?)));
    }
    let semigroups = enumerate_semigroups(enum_bound(bound, caps)?).into_iter();
    let out = match filter {
        Filter::Semigroup | Filter::All => list(semigroups),
        Filter::Symmetric => list(semigroups.filter(|s| is_symmetric(s).unwrap_or(false))),
        Filter::PseudoSymmetric => {
            list(semigroups.filter(|s| is_pseudo_symmetric(s).unwrap_or(false)))
        }
    };
    Ok(success(out))
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(s: &NumericalSet, json: bool) -> Result<Outcome, Error> {
    let semigroup = s.is_semigroup();
    let symmetric = semigroup && is_symmetric(s)?;
    let pseudo = semigroup && is_pseudo_symmetric(s)?;
    let generators = if semigroup {
        Some(s.minimal_generators()?)
    } else {
        None
    };
    let ring = if semigroup {
        Some(classify_ring(s)?)
    } else {
        None
    };
    let gaps = s.gaps();
    if json {
        let value = json!({
            "set": s.to_string(),
            "small_elements": s.small_elements(),
            "conductor": s.conductor(),
            "gaps": gaps.as_slice(),
            "frobenius": s.frobenius(),
            "genus": s.genus(),
            "is_semigroup": semigroup,
            "is_symmetric": symmetric,
            "is_pseudo_symmetric": pseudo,
            "minimal_generators": generators,
            "ring": ring.map(|r| r.to_string()),
        });
        return Ok(success(format!("{value}\n")));
    }
    let mut out = String::new();
    writeln!(out, "set: {s}").unwrap();
    writeln!(out, "gaps: {}", join(gaps.as_slice())).unwrap();
    writeln!(out, "frobenius: {}", s.frobenius()).unwrap();
    writeln!(out, "conductor: {}", s.conductor()).unwrap();
    writeln!(out, "genus: {}", s.genus()).unwrap();
    writeln!(out, "semigroup: {semigroup}").unwrap();
    writeln!(out, "symmetric: {symmetric}").unwrap();
    writeln!(out, "pseudo-symmetric: {pseudo}").unwrap();
    match generators {
        Some(g) => writeln!(out, "minimal generators: {}", join(&g)).unwrap(),
        None => writeln!(out, "minimal generators: -").unwrap(),
    }
    match ring {
        Some(r) => writeln!(out, "ring: {r}").unwrap(),
        None => writeln!(out, "ring: -").unwrap(),
    }
    Ok(success(out))
}

fn decompose(s: &NumericalSet) -> Result<Outcome, Error> {
    let d: Decomposition = if is_symmetric(s)? {
        decompose_symmetric(s)?
    } else if is_pseudo_symmetric(s)? {
        decompose_pseudo_symmetric(s)?
    } else {
        return Err(Error::NotPseudoSymmetric(format!("{s} (nor symmetric)")));
    };
    Ok(success(format!(
        "kind: {}\nT: {}\nT*: {}\n",
        d.kind, d.summand, d.dual_summand
    )))
}

fn check_closure(s: &NumericalSet) -> Result<Outcome, Error> {
    let d = dual(s);
    let mut out = String::new();
    for kind in SumKind::ALL {
        let criterion = dual_sum_is_semigroup(s, kind)?;
        let brute = set_sum(s, &d, kind)?.is_semigroup();
        let agree = if criterion == brute {
            "agree"
        } else {
            "DISAGREE"
        };
        writeln!(
            out,
            "{:<11} criterion {:<5}  brute force {:<5}  {agree}",
            format!("{}:", kind.name()),
            criterion,
            brute
        )
        .unwrap();
    }
    Ok(success(out))
}
