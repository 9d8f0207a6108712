mod args;
mod commands;
mod selftest;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, Format};
use commands::{Outcome, Status};
use sinf_core::{Error, Result};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_CHECK: u8 = 2;

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Partition(c) => commands::partition(c),
        Command::Char(c) => commands::character(c),
        Command::Thoma(c) => commands::thoma(c),
        Command::Hseries(c) => commands::hseries(c),
        Command::Tp(c) => commands::tp(c),
        Command::Diagram(c) => commands::diagram(c),
        Command::Cosets(c) => commands::cosets(c),
        Command::Classify { label } => commands::classify_label(label),
        Command::Boundary { kind, x, nu, l1, l2 } => commands::boundary(kind, x, nu, *l1, *l2),
        Command::Mixture { spec, check_order } => commands::mix(spec, *check_order),
        Command::Ergodic { params, k, n } => commands::ergodic(params, *k, n),
        Command::Selftest { seed, quick } => {
            let (value, passed) = selftest::run(*seed, *quick)?;
            Ok(Outcome {
                value,
                status: if passed { Status::Ok } else { Status::CheckFailed },
            })
        }
        Command::Batch { file } => batch(file),
    }
}

fn exit_code(status: Status) -> u8 {
    match status {
        Status::Ok => EXIT_OK,
        Status::CheckFailed => EXIT_CHECK,
    }
}

/// Each non-blank line not starting with `#` is one invocation (without the
/// program name); results are collected one per line.
fn batch(file: &std::path::Path) -> Result<Outcome> {
    let text = fs::read_to_string(file)
        .map_err(|e| Error::OutOfRange(format!("cannot read {}: {e}", file.display())))?;
    let mut lines = Vec::new();
    let mut worst = EXIT_OK;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let argv = std::iter::once("sinf").chain(line.split_whitespace());
        let entry = match Cli::try_parse_from(argv) {
            Err(e) => {
                worst = worst.max(EXIT_INPUT);
                json!({"line": i + 1, "exit": EXIT_INPUT, "error": e.to_string().trim()})
            }
            Ok(cli) if matches!(cli.command, Command::Batch { .. }) => {
                worst = worst.max(EXIT_INPUT);
                json!({"line": i + 1, "exit": EXIT_INPUT, "error": "nested batch"})
            }
            Ok(cli) => match dispatch(&cli.command) {
                Ok(out) => {
                    let code = exit_code(out.status);
                    worst = worst.max(code);
                    json!({"line": i + 1, "exit": code, "result": out.value})
                }
                Err(e) => {
                    worst = worst.max(EXIT_INPUT);
                    json!({"line": i + 1, "exit": EXIT_INPUT, "error": e.to_string()})
                }
            },
        };
        lines.push(entry);
    }
    // input errors inside a batch are reported per line; the batch itself
    // fails the check
    Ok(Outcome {
        value: Value::Array(lines),
        status: if worst == EXIT_OK { Status::Ok } else { Status::CheckFailed },
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, x)| flatten(&key(k), x, out)),
        Value::Array(items) if !items.is_empty() && items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let cells: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}\t{}\n", cells.join(",")));
        }
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(&key(&i.to_string()), x, out)),
        _ => out.push_str(&format!("{prefix}\t{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(cli: &Cli, value: &Value) -> String {
    match cli.format {
        Format::Table => {
            let mut out = String::new();
            flatten("", value, &mut out);
            out
        }
        Format::Json if matches!(cli.command, Command::Batch { .. }) => {
            let lines: Vec<String> = value
                .as_array()
                .map(|a| a.iter().map(Value::to_string).collect())
                .unwrap_or_default();
            lines.iter().map(|l| format!("{l}\n")).collect()
        }
        Format::Json if cli.pretty => format!("{}\n", serde_json::to_string_pretty(value).unwrap()),
        Format::Json => format!("{value}\n"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let text = render(&cli, &outcome.value);
    let written = match &cli.out {
        Some(path) => fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(exit_code(outcome.status))
}
