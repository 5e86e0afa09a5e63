//! Command-line front end of `fusionkit-core`.
//!
//! [`run`] parses arguments, evaluates every `--ring` (concurrently, output
//! in argument order) and writes one report per ring. Exit status: 0 on
//! success, 1 when a ring fails validation or a check, 2 on usage errors,
//! unknown names and unreadable files.

pub mod args;
pub mod report;
pub mod text;

use std::io::Write;
use std::path::Path;
use std::thread;

use clap::Parser;
use fusionkit_core::{builtin, builtin_names, load_labels, load_ring, load_smatrix, Error, ModularData, Settings};

use crate::args::{Cli, Command, Format};
use crate::report::{BuiltinEntry, ErrorBody, ErrorOutput, Failure, Output};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

struct Loaded {
    ring: fusionkit_core::FusionRing,
    smatrix: Option<ModularData>,
}

/// `spec` is a built-in name unless it names an existing file or looks like
/// a path.
fn looks_like_path(spec: &str) -> bool {
    spec.ends_with(".json")
        || spec.contains(std::path::MAIN_SEPARATOR)
        || spec.contains('/')
        || Path::new(spec).is_file()
}

fn load(spec: &str) -> Result<Loaded, Failure> {
    if looks_like_path(spec) {
        return Ok(Loaded {
            ring: load_ring(spec)?,
            smatrix: None,
        });
    }
    let entry = builtin(spec)?;
    Ok(Loaded {
        ring: entry.ring,
        smatrix: entry.smatrix,
    })
}

fn validate(spec: &str) -> Result<Output, Failure> {
    let (name, labels, report) = if looks_like_path(spec) {
        match load_ring(spec) {
            Ok(ring) => (ring.name().to_string(), ring.labels().to_vec(), ring.validate()),
            Err(Error::ValidationFailed(report)) => (spec.to_string(), load_labels(spec)?, report),
            Err(e) => return Err(e.into()),
        }
    } else {
        let ring = builtin(spec)?.ring;
        (ring.name().to_string(), ring.labels().to_vec(), ring.validate())
    };
    Ok(Output::Validation(report::validation(&name, &labels, &report)))
}

fn evaluate(spec: &str, command: &Command, settings: &Settings) -> Result<Output, Failure> {
    if let Command::Validate = command {
        return validate(spec);
    }
    let Loaded { ring, smatrix } = load(spec)?;
    let out = match command {
        Command::Validate | Command::ListBuiltins => unreachable!("handled before loading"),
        Command::Analyze { no_verify } => Output::Analysis(Box::new(report::analyze(
            &ring,
            smatrix.as_ref(),
            !no_verify,
            settings,
        )?)),
        Command::Characters => Output::Characters(report::characters(&ring, settings)?),
        Command::Kernel { object } => Output::Kernel(report::kernel(&ring, object, settings)?),
        Command::Grading { object } => Output::Grading(report::grading(&ring, object, settings)?),
        Command::Brauer { object, cap } => Output::Brauer(report::brauer(&ring, object, *cap, settings)?),
        Command::Modular { smatrix: path } => {
            let md = match (path, smatrix) {
                (Some(p), _) => load_smatrix(p, &ring, settings)?,
                (None, Some(md)) => md,
                (None, None) => return Err(Failure::NoModularData(ring.name().to_string())),
            };
            Output::Modular(report::modular(&md, settings)?)
        }
    };
    Ok(out)
}

fn list_builtins() -> Output {
    let entries = builtin_names()
        .into_iter()
        .map(|name| {
            let entry = builtin(&name).expect("listed names resolve");
            BuiltinEntry {
                name,
                rank: entry.ring.rank(),
                modular: entry.smatrix.is_some(),
                notes: entry.notes,
            }
        })
        .collect();
    Output::Builtins(entries)
}

fn usage(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

/// Runs the command line `args` (including the program name), writing
/// reports to `out` and diagnostics to `err`; returns the exit status.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };

    let mut settings = Settings::default();
    if let Some(eps) = cli.epsilon {
        if !(eps.is_finite() && eps > 0.0) {
            return usage(err, "--epsilon must be a positive number");
        }
        settings = settings.with_epsilon(eps);
    }
    if let Some(seed) = cli.seed {
        settings = settings.with_seed(seed);
    }

    let outputs: Vec<(Output, u8)> = if let Command::ListBuiltins = cli.command {
        vec![(list_builtins(), 0)]
    } else {
        if cli.rings.is_empty() {
            return usage(err, "at least one --ring is required");
        }
        let command = &cli.command;
        let settings = &settings;
        thread::scope(|scope| {
            let handles: Vec<_> = cli
                .rings
                .iter()
                .map(|spec| {
                    scope.spawn(move || match evaluate(spec, command, settings) {
                        Ok(o) => {
                            let code = o.exit_code();
                            (o, code)
                        }
                        Err(f) => {
                            let code = f.exit_code();
                            let o = Output::Error(ErrorOutput {
                                ring: spec.clone(),
                                error: ErrorBody {
                                    kind: f.kind().to_string(),
                                    message: f.message(),
                                },
                            });
                            (o, code)
                        }
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("analysis thread panicked"))
                .collect()
        })
    };

    for (o, _) in &outputs {
        if let Output::Error(e) = o {
            let _ = write!(err, "error: {}", text::render(&Output::Error(e.clone())));
        }
    }
    let written = match cli.format {
        Format::Json => {
            let json = if outputs.len() == 1 {
                serde_json::to_string_pretty(&outputs[0].0)
            } else {
                let all: Vec<&Output> = outputs.iter().map(|(o, _)| o).collect();
                serde_json::to_string_pretty(&all)
            };
            writeln!(out, "{}", json.expect("reports serialize"))
        }
        Format::Text => outputs
            .iter()
            .filter(|(o, _)| !matches!(o, Output::Error(_)))
            .try_for_each(|(o, _)| write!(out, "{}", text::render(o))),
    };
    if written.is_err() {
        return EXIT_USAGE;
    }
    outputs.iter().map(|&(_, c)| i32::from(c)).max().unwrap_or(EXIT_OK)
}
