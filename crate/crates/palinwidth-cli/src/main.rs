//! Command-line entry point: width analysis, verification suites and batch
//! surveys over catalog groups or generating-set files.
//!
//! Exit codes: 0 success or inconclusive, 2 invalid input, 3 capacity
//! exceeded, 4 verification failure.

mod report;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palinwidth::{Error, DEFAULT_MAX_ORDER};

use report::{csv_record, render_text, SurveyRow, CSV_HEADER};
use run::{analyze, GensetMode, GroupSource, Options};

#[derive(Parser)]
#[command(
    name = "palinwidth",
    version,
    about = "Palindrome sets and exact palindromic widths of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the palindrome set, exact width, bounds and layer profile
    Width(RunArgs),
    /// Run every applicable verification suite and report verdicts
    Verify(RunArgs),
    /// Analyze several (group, genset) configurations, one row each
    Survey(SurveyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Cap on the number of enumerated elements (overrides
    /// PALINWIDTH_MAX_ORDER; default 2000000)
    #[arg(long, value_name = "N")]
    max_order: Option<usize>,

    /// Length cap for relation scans
    #[arg(long, value_name = "N", default_value_t = 12)]
    max_relation_len: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// RNG seed for sampled verification checks
    #[arg(long, value_name = "N", default_value_t = 0)]
    seed: u64,

    /// Write the report to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Catalog group name: A3..A10, S2..S10, PSL(2,p), Dn, Cn
    #[arg(long, value_name = "NAME")]
    group: Option<String>,

    /// Generating-set file (line 1 `degree N`, then `label = cycles`)
    #[arg(long, value_name = "PATH")]
    genset_file: Option<PathBuf>,

    /// How to derive the working generating set
    #[arg(long, value_enum, default_value_t = GensetMode::AsGiven)]
    genset: GensetMode,

    /// Also run the verification suites and attach their verdicts
    #[arg(long)]
    verify: bool,

    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SurveyArgs {
    /// Catalog group name; repeat for several groups
    #[arg(long = "group", value_name = "NAME")]
    groups: Vec<String>,

    /// Generating-set mode; repeat for several modes (default as-given)
    #[arg(long = "genset", value_enum)]
    gensets: Vec<GensetMode>,

    /// Also run the verification suites per row
    #[arg(long)]
    verify: bool,

    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Width(args) => cmd_width(args, false),
        Command::Verify(args) => cmd_width(args, true),
        Command::Survey(args) => cmd_survey(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            let (kind, code) = classify(&err);
            emit_error(kind, &err.to_string());
            ExitCode::from(code)
        }
    }
}

fn classify(err: &Error) -> (&'static str, u8) {
    match err {
        Error::CapacityExceeded { .. } => ("capacity", 3),
        Error::InvariantViolation(_) => ("verification", 4),
        _ => ("invalid-input", 2),
    }
}

fn emit_error(kind: &str, message: &str) {
    eprintln!(
        "{}",
        serde_json::json!({ "error": { "kind": kind, "message": message } })
    );
}

fn resolve_max_order(flag: Option<usize>) -> Result<usize, Error> {
    let cap = match flag {
        Some(n) => n,
        None => match std::env::var("PALINWIDTH_MAX_ORDER") {
            Ok(value) => value.parse().map_err(|_| {
                Error::InvalidParameter(format!(
                    "PALINWIDTH_MAX_ORDER must be a positive integer, got {value:?}"
                ))
            })?,
            Err(_) => DEFAULT_MAX_ORDER,
        },
    };
    if cap == 0 {
        return Err(Error::InvalidParameter("max-order must be positive".into()));
    }
    Ok(cap)
}

fn resolve_source(
    group: &Option<String>,
    genset_file: &Option<PathBuf>,
) -> Result<GroupSource, Error> {
    match (group, genset_file) {
        (Some(name), None) => Ok(GroupSource::Catalog(name.clone())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
            })?;
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok(GroupSource::File { name, text })
        }
        _ => Err(Error::InvalidParameter(
            "exactly one of --group and --genset-file is required".into(),
        )),
    }
}

fn write_output(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn n_over_4(source: &GroupSource, mode: GensetMode) -> Option<u32> {
    if mode != GensetMode::SigmaClass {
        return None;
    }
    match source {
        GroupSource::Catalog(name) => name
            .trim()
            .strip_prefix('A')
            .and_then(|t| t.parse::<u32>().ok())
            .map(|n| n.div_ceil(4)),
        GroupSource::File { .. } => None,
    }
}

fn csv_string(rows: &[SurveyRow]) -> Result<String, Error> {
    let csv_err = |e: String| Error::InvalidParameter(format!("csv error: {e}"));
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CSV_HEADER)
        .map_err(|e| csv_err(e.to_string()))?;
    for row in rows {
        writer
            .write_record(csv_record(row))
            .map_err(|e| csv_err(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| csv_err(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cmd_width(args: RunArgs, is_verify: bool) -> Result<ExitCode, Error> {
    let source = resolve_source(&args.group, &args.genset_file)?;
    let opts = Options {
        max_order: resolve_max_order(args.common.max_order)?,
        max_relation_len: args.common.max_relation_len,
        seed: args.common.seed,
        verify: is_verify || args.verify,
    };
    let analysis = analyze(&source, args.genset, &opts)?;
    let report = &analysis.report;

    let text = match args.common.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(report)
                .map_err(|e| Error::InvalidParameter(format!("json error: {e}")))?
        ),
        Format::Csv => {
            let row = SurveyRow {
                group: report.group.clone(),
                genset_mode: args.genset.as_str().into(),
                status: "ok".into(),
                error: None,
                n_over_4: n_over_4(&source, args.genset),
                report: Some(report.clone()),
            };
            csv_string(&[row])?
        }
        Format::Text => render_text(report, analysis.witness_line.as_deref()),
    };
    write_output(&text, &args.common.out)?;

    if opts.verify {
        for (name, verdict) in &report.verdicts {
            if verdict.starts_with("fail") {
                emit_error("verification", &format!("{name}: {verdict}"));
                return Ok(ExitCode::from(4));
            }
        }
        for (name, verdict) in &report.verdicts {
            if verdict.starts_with("inconclusive") {
                eprintln!("warning: {name}: {verdict}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_survey(args: SurveyArgs) -> Result<ExitCode, Error> {
    let opts = Options {
        max_order: resolve_max_order(args.common.max_order)?,
        max_relation_len: args.common.max_relation_len,
        seed: args.common.seed,
        verify: args.verify,
    };
    let modes = if args.gensets.is_empty() {
        vec![GensetMode::AsGiven]
    } else {
        args.gensets.clone()
    };

    let mut rows = Vec::new();
    for name in &args.groups {
        for &mode in &modes {
            let source = GroupSource::Catalog(name.clone());
            let row = match analyze(&source, mode, &opts) {
                Ok(analysis) => SurveyRow {
                    group: name.clone(),
                    genset_mode: mode.as_str().into(),
                    status: "ok".into(),
                    error: None,
                    n_over_4: n_over_4(&source, mode),
                    report: Some(analysis.report),
                },
                Err(err) => SurveyRow {
                    group: name.clone(),
                    genset_mode: mode.as_str().into(),
                    status: "error".into(),
                    error: Some(err.to_string()),
                    n_over_4: n_over_4(&source, mode),
                    report: None,
                },
            };
            rows.push(row);
        }
    }

    let text = match args.common.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&rows)
                .map_err(|e| Error::InvalidParameter(format!("json error: {e}")))?
        ),
        Format::Csv => csv_string(&rows)?,
        Format::Text => {
            let mut out = String::new();
            for row in &rows {
                match &row.report {
                    Some(r) => {
                        out.push_str(&format!(
                            "{} [{}]: order {}, palindromes {}, width {}",
                            row.group, row.genset_mode, r.order, r.palindrome_count, r.width
                        ));
                        if let Some(n4) = row.n_over_4 {
                            out.push_str(&format!(", n/4 bound {n4}"));
                        }
                        out.push('\n');
                    }
                    None => {
                        out.push_str(&format!(
                            "{} [{}]: error: {}\n",
                            row.group,
                            row.genset_mode,
                            row.error.as_deref().unwrap_or("unknown")
                        ));
                    }
                }
            }
            out
        }
    };
    write_output(&text, &args.common.out)?;
    Ok(ExitCode::SUCCESS)
}
