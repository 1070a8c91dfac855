//! The `ribbon` command line: μ-invariants, ribbon-move obstructions, Smith
//! normal forms, alinking numbers and braid closures, with a batch mode over
//! directories of knot files.
//!
//! Exit status is 0 on success (whatever the verdict), 1 on IO failure, 2 on
//! validation errors and 3 on malformed input.

pub mod error;
pub mod parse;
pub mod record;
pub mod report;

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use ribbon_core::braid::CATALOG_NAMES;
use serde::Serialize;

pub use error::{CliError, CliResult, EXIT_IO, EXIT_PARSE, EXIT_VALIDATION};
use parse::{parse_alink_map, parse_braid_letters, parse_matrix};
use record::{BraidData, KnotRecord, MatrixData};
use report::{AlinkReport, BraidReport, InvariantsReport, SnfReport, VerdictReport};

#[derive(Debug, Parser)]
#[command(
    name = "ribbon",
    version,
    about = "Exact obstructions to ribbon-move equivalence of 2-knots"
)]
pub struct Cli {
    /// Emit one JSON record per result instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// mu, signature, determinant, H1 and the doubling test for one 2-knot.
    Invariants(KnotArgs),
    /// Ribbon-move obstruction between two 2-knots, or against the trivial one.
    Obstruct {
        /// Catalog name or knot file.
        left: String,
        /// Catalog name or knot file; the trivial 2-knot when omitted.
        right: Option<String>,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// Matrix such as "[[2,4],[6,8]]".
        matrix: Option<String>,
        /// Read the matrix from a file.
        #[arg(long, conflicts_with = "matrix")]
        file: Option<PathBuf>,
        /// Also print the transforms U and V with U M V = D.
        #[arg(long)]
        full: bool,
    },
    /// Alinking number of the induced map Z^c -> Z^2.
    Alink {
        /// Columns such as "(2,4)" or a 2-row matrix "[[2],[4]]"; empty for
        /// the zero map.
        #[arg(allow_hyphen_values = true)]
        map: Option<String>,
        /// Read the map from a file.
        #[arg(long, conflicts_with = "map")]
        file: Option<PathBuf>,
    },
    /// Seifert matrix and invariants of a braid closure.
    Braid {
        /// Signed generator indices, such as "1 -2 1 -2".
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        letters: Vec<String>,
        #[arg(long)]
        strands: usize,
    },
    /// Invariants of every *.json knot file in a directory, one record per
    /// line in file-name order.
    Batch { dir: PathBuf },
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// Catalog name (unknot, trefoil, figure8, poincare) or knot file.
    pub knot: Option<String>,
    /// Seifert matrix, such as "[[1,1],[0,1]]".
    #[arg(long, conflicts_with = "knot")]
    pub seifert: Option<String>,
    /// Braid word, such as "1 1 1"; needs --strands.
    #[arg(long, conflicts_with_all = ["knot", "seifert"], requires = "strands", allow_hyphen_values = true)]
    pub braid: Option<String>,
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
    /// Even form bounding the capped Seifert hypersurface.
    #[arg(long, conflicts_with = "knot")]
    pub bounding_form: Option<String>,
    /// Name reported for --seifert, --braid or --bounding-form input.
    #[arg(long)]
    pub name: Option<String>,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A catalog name, or else a path to a knot file.
pub fn load_knot(arg: &str) -> CliResult<KnotRecord> {
    if CATALOG_NAMES.contains(&arg) {
        return Ok(KnotRecord::catalog(arg));
    }
    load_knot_file(Path::new(arg))
}

/// Reads a knot file; an unnamed record takes the file stem as its name.
pub fn load_knot_file(path: &Path) -> CliResult<KnotRecord> {
    let mut record = KnotRecord::from_json(&read(path)?, &path.display().to_string())?;
    if record.name.is_empty() {
        record.name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
    }
    Ok(record)
}

impl KnotArgs {
    fn record(&self) -> CliResult<KnotRecord> {
        if let Some(arg) = &self.knot {
            return load_knot(arg);
        }
        let mut record = KnotRecord {
            seifert: self
                .seifert
                .as_deref()
                .map(parse_matrix)
                .transpose()?
                .as_ref()
                .map(MatrixData::from),
            bounding_form: self
                .bounding_form
                .as_deref()
                .map(parse_matrix)
                .transpose()?
                .as_ref()
                .map(MatrixData::from),
            ..KnotRecord::default()
        };
        if let (Some(word), Some(strands)) = (&self.braid, self.strands) {
            record.braid = Some(BraidData::new(strands, &parse_braid_letters(word)?));
        }
        record.name = match &self.name {
            Some(n) => n.clone(),
            None if record.seifert.is_some() => "seifert".into(),
            None if record.braid.is_some() => "braid".into(),
            None => "form".into(),
        };
        Ok(record)
    }
}

fn emit<T: Serialize + Display>(json: bool, report: &T) -> String {
    if json {
        serde_json::to_string(report).expect("reports serialize")
    } else {
        report.to_string()
    }
}

fn text_or_file(inline: Option<&str>, file: Option<&Path>) -> CliResult<String> {
    match (inline, file) {
        (_, Some(path)) => read(path),
        (Some(text), None) => Ok(text.to_string()),
        (None, None) => Ok(String::new()),
    }
}

/// Outcome of one batch entry: its output line and exit status.
pub struct BatchLine {
    pub line: String,
    pub status: u8,
}

#[derive(Serialize)]
struct BatchError<'a> {
    file: String,
    kind: &'a str,
    #[serde(with = "record::decimal")]
    status: u8,
    error: String,
}

/// Evaluates every `*.json` file in `dir`, concurrently, returning lines in
/// file-name order.
pub fn batch(dir: &Path, json: bool) -> CliResult<Vec<BatchLine>> {
    let entries = fs::read_dir(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry
            .map_err(|source| CliError::Io {
                path: dir.to_path_buf(),
                source,
            })?
            .path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files
        .par_iter()
        .map(
            |path| match load_knot_file(path).and_then(|r| InvariantsReport::compute(&r)) {
                Ok(report) => BatchLine {
                    line: if json {
                        emit(true, &report)
                    } else {
                        format!(
                            "{}: mu {} mod 16, det {}, H1 {}, doubling {}",
                            report.name,
                            report.mu,
                            report.det,
                            if report.h1.is_empty() {
                                "0".into()
                            } else {
                                report.h1.join(",")
                            },
                            if report.doubling { "yes" } else { "no" }
                        )
                    },
                    status: 0,
                },
                Err(e) => {
                    let file = path
                        .file_name()
                        .map(|f| f.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    BatchLine {
                        line: if json {
                            serde_json::to_string(&BatchError {
                                file,
                                kind: e.kind(),
                                status: e.exit_code(),
                                error: e.to_string(),
                            })
                            .expect("error records serialize")
                        } else {
                            format!("{file}: error: {e}")
                        },
                        status: e.exit_code(),
                    }
                }
            },
        )
        .collect())
}

/// Runs a parsed command, returning what to print on success.
pub fn execute(cli: &Cli) -> CliResult<String> {
    let json = cli.json;
    match &cli.command {
        Command::Invariants(args) => Ok(emit(json, &InvariantsReport::compute(&args.record()?)?)),
        Command::Obstruct { left, right } => {
            let left = load_knot(left)?;
            let right = right.as_deref().map(load_knot).transpose()?;
            Ok(emit(json, &VerdictReport::compute(&left, right.as_ref())?))
        }
        Command::Snf { matrix, file, full } => {
            let m = parse_matrix(&text_or_file(matrix.as_deref(), file.as_deref())?)?;
            Ok(emit(json, &SnfReport::compute(&m, *full)))
        }
        Command::Alink { map, file } => {
            let m = parse_alink_map(&text_or_file(map.as_deref(), file.as_deref())?)?;
            Ok(emit(json, &AlinkReport::compute(m)?))
        }
        Command::Braid { letters, strands } => {
            let letters = parse_braid_letters(&letters.join(" "))?;
            Ok(emit(json, &BraidReport::compute(*strands, &letters)?))
        }
        Command::Batch { dir } => {
            let lines = batch(dir, json)?;
            let status = lines.iter().map(|l| l.status).max().unwrap_or(0);
            let text = lines
                .into_iter()
                .map(|l| l.line)
                .collect::<Vec<_>>()
                .join("\n");
            if status != 0 {
                println!("{text}");
                return Err(CliError::Batch { status });
            }
            Ok(text)
        }
    }
}

/// Entry point shared by the binary: parse arguments, run, print, and map
/// errors to exit codes.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_VALIDATION } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if !matches!(e, CliError::Batch { .. }) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
