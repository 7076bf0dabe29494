use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hbeta_cli::{parse, render, run, Command, Flags};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Verify and construct (H,β)-Lie structures over group gradings, with exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "hbeta", version)]
struct Args {
    command: Command,
    /// Input document (JSON).
    file: PathBuf,
    /// Name of the structure to operate on; optional when the document has only one.
    #[arg(long)]
    entity: Option<String>,
    /// Name of a cocycle in the document. iso-check accepts two together with --force.
    #[arg(long)]
    sigma: Vec<String>,
    /// Build even when preconditions fail.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the document built by build/twist/split commands here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Witnesses kept per check.
    #[arg(long)]
    witness_cap: Option<usize>,
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input = match std::fs::read(&args.file) {
        Ok(b) => b,
        Err(e) => return fail(format!("{}: {e}", args.file.display())),
    };
    let text = match std::str::from_utf8(&input) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: not UTF-8: {e}", args.file.display())),
    };
    let doc = match parse(text) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let flags = Flags {
        entity: args.entity,
        sigmas: args.sigma,
        force: args.force,
        witness_cap: args.witness_cap,
    };
    let outcome = match run(args.command, &doc, &input, &flags) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let mut built = outcome.document.as_ref().map(|d| d.to_json());
    if let (Some(path), Some(json)) = (&args.out, &built) {
        if let Err(e) = std::fs::write(path, json) {
            return fail(format!("{}: {e}", path.display()));
        }
        built = None;
    }
    match args.format {
        Format::Text => {
            print!("{}", render::text(&outcome.report));
            if let Some(json) = built {
                println!("document:");
                print!("{json}");
            }
        }
        Format::Json => {
            let mut value = serde_json::to_value(&outcome.report).expect("report serializes");
            if let (Some(d), true) = (&outcome.document, args.out.is_none()) {
                value["document"] = d.to_value();
            }
            println!("{}", serde_json::to_string_pretty(&value).expect("report serializes"));
        }
    }
    ExitCode::from(outcome.exit_code() as u8)
}
