//! Batch command-line surface: `eval`, `zeros`, `count`, `verify`, `sweep`.
//!
//! Exit codes: 0 success, 1 computation error (a JSON error object is
//! printed), 2 usage error.

mod args;
mod commands;
mod output;
mod verify;

use std::io::Write;

use serde_json::json;

pub use args::{
    format_complex, parse_args, parse_complex, Check, Cli, Command, ContourArgs, CountArgs, EvalArgs,
    EvalSettings, Format, Method, NearInteger, OutputArgs, RunConfig, SweepArgs, VerifyArgs, ZerosArgs,
};
pub use commands::{evaluate, sweep_points};
pub use output::{input_echo, render, CsvRow, ErrorObject, Record, ValueOut, CSV_HEADER};
pub use verify::{run_check, NORM_POINTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a successful run produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub records: Vec<Record>,
    /// `eval` and `count` emit one object rather than an array.
    pub single: bool,
    /// False when a verification suite had a failing assertion.
    pub passed: bool,
}

/// Execute a validated configuration.
pub fn run(config: &RunConfig) -> crate::Result<Outcome> {
    let input = input_echo(config);
    let (records, single, passed) = match &config.command {
        Command::Eval(a) => (vec![commands::eval_record(input, &a.settings, a.alpha)?], true, true),
        Command::Sweep(a) => (commands::sweep_records(input, a)?, false, true),
        Command::Zeros(a) => (commands::zeros_records(input, a)?, false, true),
        Command::Count(a) => (vec![commands::count_record(input, a)?], true, true),
        Command::Verify(a) => {
            let (records, passed) = verify::run_check(&input, a)?;
            (records, false, passed)
        }
    };
    Ok(Outcome { records, single, passed })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval(_) => "eval",
        Command::Zeros(_) => "zeros",
        Command::Count(_) => "count",
        Command::Verify(_) => "verify",
        Command::Sweep(_) => "sweep",
    }
}

/// Full command-line entry point; `argv` includes the program name.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let config = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    if let Err(msg) = config.validate() {
        let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
        return EXIT_USAGE;
    }
    let context = json!({ "command": command_name(&config.command), "argv": config.argv });
    let fail = |kind: &str, message: String, out: &mut dyn Write| {
        ErrorObject {
            error_kind: kind.into(),
            message,
            context: context.clone(),
        }
        .write_to(out);
        EXIT_COMPUTATION
    };

    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => return fail(e.kind(), e.to_string(), out),
    };
    let opts = config.output();
    let bytes = match render(&outcome.records, opts.format, outcome.single) {
        Ok(b) => b,
        Err(e) => return fail("OutputError", e, out),
    };
    let written = match &opts.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        return fail("IoError", e, out);
    }
    if !outcome.passed {
        let failed = outcome
            .records
            .iter()
            .filter(|r| r.details.as_ref().and_then(|d| d["passed"].as_bool()) != Some(true))
            .count();
        return fail(
            "VerificationFailed",
            format!("{failed} of {} suite assertions failed", outcome.records.len()),
            err,
        );
    }
    EXIT_OK
}
