//! Command dispatch. Results go to `stdout`, diagnostics to `stderr`.
//!
//! Exit codes: 0 success, 1 a check failed, 2 input error, 3 an exact answer
//! was needed and the radical strategies could not provide one.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gps_core::harness::{run_checks, Counterexample, HarnessConfig, Status};
use gps_core::maps::{analyze_map, MapKind, ReducedRing};
use gps_core::spectra::{graded_radical_submodule, ModuleCatalog, PointKind, RadicalResult};
use gps_core::topology::{ModuleSpace, SpaceKind, VarietyKind};
use gps_core::{Error, GradedSubmodule, Model, DEFAULT_ENUM_BOUND};

use crate::parse::{parse_model, render_model};
use crate::render::{self, json_string, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gps", version, about = "Graded primary spectra of modules over Z and Z_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Model file (`.gps`).
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest module size that may be enumerated.
    #[arg(long, env = "GPS_ENUM_BOUND", default_value_t = DEFAULT_ENUM_BOUND)]
    pub enum_bound: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Spec,
    Pspec,
}

impl SpaceArg {
    fn kind(self) -> SpaceKind {
        match self {
            SpaceArg::Spec => SpaceKind::PrimeSpectrum,
            SpaceArg::Pspec => SpaceKind::PrimarySpectrum,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a model and print its canonical form.
    Parse(Common),
    /// Graded prime submodules.
    Spec(Common),
    /// The graded primary spectrum.
    Pspec(Common),
    /// Graded maximal submodules.
    Max(Common),
    /// Graded radical of a named submodule.
    Radical {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        submodule: String,
    },
    /// Variety of a named submodule.
    Variety {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        submodule: String,
        /// Use the containment variety instead of the colon variety.
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value = "pspec")]
        space: SpaceArg,
    },
    /// Closed sets, base and topological properties of a space.
    Topology {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "pspec")]
        space: SpaceArg,
    },
    /// The map from the primary spectrum to the spectrum of R/Ann(M).
    Rho(Common),
    /// Run the check catalog on the model.
    Check {
        #[command(flatten)]
        common: Common,
        /// Restrict to these check ids; repeatable.
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        /// Seed for sampled subsets of large spaces.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report per-check wall time; makes output run-dependent.
        #[arg(long)]
        timings: bool,
        /// Report the named check as failed, to exercise the exit-code path.
        #[arg(long, value_name = "ID", hide = true)]
        inject_failure: Option<String>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Parse(c) | Command::Spec(c) | Command::Pspec(c) | Command::Max(c) | Command::Rho(c) => c,
            Command::Radical { common, .. }
            | Command::Variety { common, .. }
            | Command::Topology { common, .. }
            | Command::Check { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Parse(_) => "parse",
            Command::Spec(_) => "spec",
            Command::Pspec(_) => "pspec",
            Command::Max(_) => "max",
            Command::Radical { .. } => "radical",
            Command::Variety { .. } => "variety",
            Command::Topology { .. } => "topology",
            Command::Rho(_) => "rho",
            Command::Check { .. } => "check",
        }
    }
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::RadicalUnknown(_) | Error::StrategyMismatch(_) => EXIT_UNKNOWN,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn dispatch(cli: &Cli) -> Outcome {
    let common = cli.command.common();
    let path = common.input.display().to_string();
    let text = match std::fs::read_to_string(&common.input) {
        Ok(t) => t,
        Err(e) => return Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("gps: {path}: {e}\n") },
    };
    let model = match parse_model(&text) {
        Ok(m) => m,
        Err(e) => return Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("gps: {path}:{e}\n") },
    };
    match run(&cli.command, &model, &path) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("gps: {}\n", f.message) },
    }
}

fn lookup_submodule<'m>(model: &'m Model, name: &str) -> Result<&'m GradedSubmodule, Failure> {
    model.submodule(name).ok_or_else(|| Failure::input(format!("unknown submodule `{name}`")))
}

fn unsupported(format: Format, command: &str) -> Failure {
    let f = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::input(format!("format `{f}` is not available for `{command}`"))
}

fn run(command: &Command, model: &Model, path: &str) -> Result<(i32, String), Failure> {
    let common = command.common();
    let format = common.format;
    let bound = common.enum_bound;
    let m = &model.module;
    let out = match command {
        Command::Parse(_) => match format {
            Format::Text => render_model(model),
            Format::Json => json_string(&render::model_json(model)),
            Format::Dot => return Err(unsupported(format, "parse")),
        },
        Command::Spec(_) | Command::Pspec(_) | Command::Max(_) => {
            let cat = ModuleCatalog::build(m, bound)?;
            let (kind, space) = match command {
                Command::Spec(_) => (PointKind::Prime, Some(SpaceKind::PrimeSpectrum)),
                Command::Pspec(_) => (PointKind::PrimarySpectrum, Some(SpaceKind::PrimarySpectrum)),
                _ => (PointKind::Maximal, None),
            };
            let points: Vec<GradedSubmodule> =
                cat.points(kind).into_iter().map(|i| cat.submodules()[i].clone()).collect();
            match (format, space) {
                (Format::Text, _) => render::points_text(m, &points),
                (Format::Json, _) => json_string(&render::points_json(command.name(), m, &points)),
                (Format::Dot, Some(kind)) => {
                    let s = ModuleSpace::build(&cat, kind)?;
                    render::space_dot(kind.name(), &render::space_labels(&s), s.topology())
                }
                (Format::Dot, None) => return Err(unsupported(format, command.name())),
            }
        }
        Command::Radical { submodule, .. } => {
            let n = lookup_submodule(model, submodule)?;
            let g = match graded_radical_submodule(m, n, bound)? {
                RadicalResult::Unknown { reason, attempted } => {
                    return Err(Failure {
                        code: EXIT_UNKNOWN,
                        message: format!("radical of `{submodule}` undetermined: {reason} (tried {})", attempted.join(", ")),
                    })
                }
                r => r.resolve(m).expect("resolved"),
            };
            match format {
                Format::Text => format!("{}\n", m.describe(&g)),
                Format::Json => json_string(&serde_json::json!({
                    "schema": render::SCHEMA,
                    "submodule": render::submodule_json(m, n),
                    "radical": render::submodule_json(m, &g),
                    "whole_module": g == m.whole(),
                })),
                Format::Dot => return Err(unsupported(format, "radical")),
            }
        }
        Command::Variety { submodule, star, space, .. } => {
            let n = lookup_submodule(model, submodule)?;
            let cat = ModuleCatalog::build(m, bound)?;
            let s = ModuleSpace::build(&cat, space.kind())?;
            let kind = match (space, star) {
                (SpaceArg::Pspec, false) => VarietyKind::Nu,
                (SpaceArg::Pspec, true) => VarietyKind::NuStar,
                (SpaceArg::Spec, false) => VarietyKind::V,
                (SpaceArg::Spec, true) => VarietyKind::VStar,
            };
            let y = s.variety(n, kind)?;
            let members: Vec<GradedSubmodule> = y.indices().into_iter().map(|p| s.point(p).clone()).collect();
            match format {
                Format::Text => {
                    let mut t = format!("{}({submodule}) in {}: {} of {} points\n", kind.name(), space.kind().name(), y.count(), s.len());
                    for p in y.indices() {
                        t.push_str(&format!("p{p} = {}\n", m.describe(s.point(p))));
                    }
                    t
                }
                Format::Json => json_string(&serde_json::json!({
                    "schema": render::SCHEMA,
                    "variety": kind.name(),
                    "space": s.kind().name(),
                    "submodule": render::submodule_json(m, n),
                    "points": y.indices(),
                    "members": members.iter().map(|p| render::submodule_json(m, p)).collect::<Vec<_>>(),
                })),
                Format::Dot => return Err(unsupported(format, "variety")),
            }
        }
        Command::Topology { space, .. } => {
            let cat = ModuleCatalog::build(m, bound)?;
            let s = ModuleSpace::build(&cat, space.kind())?;
            let report = s.analyze();
            match format {
                Format::Text => render::space_text(&s, &report),
                Format::Json => json_string(&render::space_json(&s, &report)),
                Format::Dot => render::space_dot(space.kind().name(), &render::space_labels(&s), s.topology()),
            }
        }
        Command::Rho(_) => {
            let cat = ModuleCatalog::build(m, bound)?;
            let s = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum)?;
            let a = analyze_map(&s, MapKind::Rho)?;
            let ann = ReducedRing::of(m).annihilator();
            match format {
                Format::Text => render::map_text(&s, &a, ann),
                Format::Json => json_string(&render::map_json(&s, &a, ann)),
                Format::Dot => return Err(unsupported(format, "rho")),
            }
        }
        Command::Check { theorems, seed, timings, inject_failure, .. } => {
            let cfg = HarnessConfig { enum_bound: bound, seed: *seed, ..HarnessConfig::default() };
            let start = Instant::now();
            let mut clock = || start.elapsed().as_micros() as u64;
            let mut results = run_checks(model, theorems, &cfg, &mut clock)?;
            if let Some(id) = inject_failure {
                let r = results
                    .iter_mut()
                    .find(|r| r.id == id.as_str())
                    .ok_or_else(|| Failure::input(format!("check `{id}` was not run")))?;
                r.status = Status::Fail(Counterexample {
                    inputs: vec![("injected".into(), "true".into())],
                    lhs: "injected".into(),
                    rhs: "failure".into(),
                });
            }
            let failed = results.iter().any(|r| r.status.is_fail());
            let text = match format {
                Format::Text => render::checks_text(path, &results, *timings),
                Format::Json => json_string(&render::checks_json(path, &results, *timings)),
                Format::Dot => return Err(unsupported(format, "check")),
            };
            return Ok((if failed { EXIT_CHECK_FAILED } else { EXIT_OK }, text));
        }
    };
    Ok((EXIT_OK, out))
}
