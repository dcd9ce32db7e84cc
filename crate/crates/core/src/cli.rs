//! The `descent` command line: coset tables, structure constants, class
//! multiplication tables, transfer maps and identity sweeps.
//!
//! Output goes to stdout as JSON (a top-level object with `rank`, `command`,
//! `equivalence` and `rows`) or CSV; diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::class_algebra::{class_basis, class_label, ClassLabel, ClassTerm, ClassVector, Equivalence};
use crate::cosets::WeylGroup;
use crate::error::Error;
use crate::transfer::TransferContext;
use crate::verify::{run_suite, CheckOutcome, Suite};
use crate::weyl::{Permutation, SimpleSubset, DEFAULT_RANK_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RANK_CAP: i32 = 3;
pub const EXIT_FAILURE: i32 = 4;

/// Environment variable that overrides the default rank cap.
pub const RANK_CAP_VAR: &str = "DESCENT_RANK_CAP";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}, expected json or csv")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "descent", version, about = "Descent algebras of type A Weyl groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: json or csv.
    #[arg(long, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Subset equivalence inside parabolic contexts: full (W-conjugacy) or parabolic (W_J-conjugacy).
    #[arg(long, global = true, default_value_t = Equivalence::Full)]
    equivalence: Equivalence,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal coset representatives X_K^context, or double coset representatives X_JK.
    Reps {
        #[arg(long)]
        rank: usize,
        #[arg(long = "K")]
        k: String,
        /// Left subset for double coset representatives.
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(long, default_value = "full")]
        context: String,
    },
    /// Structure constants a_JKL (or a^context_JKL) for every L ⊆ K.
    Constants {
        #[arg(long)]
        rank: usize,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "K")]
        k: String,
        #[arg(long, default_value = "full")]
        context: String,
    },
    /// Multiplication table of the class algebra over Π.
    ClassTable {
        #[arg(long)]
        rank: usize,
    },
    /// Multiplication table of the class algebra over a parabolic context J.
    ParabolicTable {
        #[arg(long)]
        rank: usize,
        #[arg(long = "J")]
        j: String,
    },
    /// Induction of the class [x_K^J] to M.
    Induce {
        #[arg(long)]
        rank: usize,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "M")]
        m: String,
        #[arg(long = "K")]
        k: String,
    },
    /// Restriction of the class [x_K^M] to J.
    Restrict {
        #[arg(long)]
        rank: usize,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "M")]
        m: String,
        #[arg(long = "K")]
        k: String,
        /// Use the X_JK form with forward images.
        #[arg(long)]
        alt: bool,
    },
    /// Run an identity suite; exits nonzero if any check fails.
    Verify {
        #[arg(long)]
        rank: usize,
        /// solomon, lemma22, theorem21, well-defined, theorem25 or all.
        #[arg(long, default_value_t = Suite::All)]
        suite: Suite,
        /// Algebra swept by the well-defined suite (default Π).
        #[arg(long)]
        context: Option<String>,
    },
}

/// Serialized table; every command emits one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table<R> {
    pub rank: usize,
    pub command: String,
    pub equivalence: Equivalence,
    pub rows: Vec<R>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepRow {
    pub permutation: Permutation,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantRow {
    #[serde(rename = "L")]
    pub l: SimpleSubset,
    pub coefficient: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRow {
    pub left: ClassLabel,
    pub right: ClassLabel,
    pub product: Vec<ClassTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferRow {
    pub input: ClassLabel,
    pub label: ClassLabel,
    pub coefficient: i64,
}

trait CsvRow {
    const HEADER: &'static [&'static str];
    fn records(&self) -> Vec<Vec<String>>;
}

fn label_cells(label: &ClassLabel) -> [String; 2] {
    (label.partition.to_string(), label.representative.to_string()).into()
}

impl CsvRow for RepRow {
    const HEADER: &'static [&'static str] = &["permutation", "length"];
    fn records(&self) -> Vec<Vec<String>> {
        vec![vec![self.permutation.to_string(), self.length.to_string()]]
    }
}

impl CsvRow for ConstantRow {
    const HEADER: &'static [&'static str] = &["L", "coefficient"];
    fn records(&self) -> Vec<Vec<String>> {
        vec![vec![self.l.to_string(), self.coefficient.to_string()]]
    }
}

impl CsvRow for ProductRow {
    const HEADER: &'static [&'static str] = &[
        "left_partition",
        "left_representative",
        "right_partition",
        "right_representative",
        "term_partition",
        "term_representative",
        "coefficient",
    ];
    fn records(&self) -> Vec<Vec<String>> {
        let [lp, lr] = label_cells(&self.left);
        let [rp, rr] = label_cells(&self.right);
        self.product
            .iter()
            .map(|t| {
                let [tp, tr] = label_cells(&t.label);
                vec![lp.clone(), lr.clone(), rp.clone(), rr.clone(), tp, tr, t.coefficient.to_string()]
            })
            .collect()
    }
}

impl CsvRow for TransferRow {
    const HEADER: &'static [&'static str] = &[
        "input_partition",
        "input_representative",
        "partition",
        "representative",
        "coefficient",
    ];
    fn records(&self) -> Vec<Vec<String>> {
        let [ip, ir] = label_cells(&self.input);
        let [p, r] = label_cells(&self.label);
        vec![vec![ip, ir, p, r, self.coefficient.to_string()]]
    }
}

impl CsvRow for CheckOutcome {
    const HEADER: &'static [&'static str] = &["suite", "case", "passed", "detail"];
    fn records(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.suite.to_string(),
            self.case.clone(),
            self.passed.to_string(),
            self.detail.clone(),
        ]]
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Library(Error::InvariantViolation(format!("csv output: {e}")))
    }
}

fn render<R: Serialize + CsvRow>(table: &Table<R>, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(table)
                .map_err(|e| Error::InvariantViolation(format!("json output: {e}")))?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(R::HEADER)?;
            for row in &table.rows {
                for record in row.records() {
                    writer.write_record(&record)?;
                }
            }
            let bytes = writer
                .into_inner()
                .map_err(|e| Error::InvariantViolation(format!("csv output: {e}")))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

/// Reads the rank cap from the value of [`RANK_CAP_VAR`].
pub fn rank_cap(value: Option<&str>) -> Result<usize, String> {
    match value {
        None => Ok(DEFAULT_RANK_CAP),
        Some(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("{RANK_CAP_VAR} must be a non-negative integer, got {text:?}")),
    }
}

fn subset(rank: usize, text: &str) -> Result<SimpleSubset, Failure> {
    SimpleSubset::parse(rank, text).map_err(|e| Failure::Usage(e.to_string()))
}

fn product_rows(g: &WeylGroup, context: SimpleSubset, eq: Equivalence) -> Result<Vec<ProductRow>, Failure> {
    let basis = class_basis(context, eq);
    let mut rows = Vec::new();
    for a in &basis {
        for b in &basis {
            let product = g.parabolic_class_product(a, b, context)?;
            rows.push(ProductRow {
                left: a.clone(),
                right: b.clone(),
                product: product.to_terms(),
            });
        }
    }
    Ok(rows)
}

fn transfer_rows(input: ClassLabel, image: &ClassVector) -> Vec<TransferRow> {
    image
        .to_terms()
        .into_iter()
        .map(|t| TransferRow {
            input: input.clone(),
            label: t.label,
            coefficient: t.coefficient,
        })
        .collect()
}

fn execute(cli: &Cli, cap: usize, stderr: &mut String) -> Result<(String, bool), Failure> {
    let eq = cli.equivalence;
    let table = |rank: usize, command: &str| (rank, command.to_string());
    let group = |rank: usize| WeylGroup::with_cap(rank, cap);
    match &cli.command {
        Command::Reps { rank, k, j, context } => {
            let g = group(*rank)?;
            let (k, context) = (subset(*rank, k)?, subset(*rank, context)?);
            let reps = match j {
                Some(j) => g.double_coset_reps_parabolic(subset(*rank, j)?, k, context)?,
                None => g.min_coset_reps_parabolic(k, context)?.reps().to_vec(),
            };
            let rows = reps
                .into_iter()
                .map(|permutation| RepRow {
                    length: permutation.length(),
                    permutation,
                })
                .collect();
            let (rank, command) = table(*rank, "reps");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, true))
        }
        Command::Constants { rank, j, k, context } => {
            let g = group(*rank)?;
            let (j, k, context) = (subset(*rank, j)?, subset(*rank, k)?, subset(*rank, context)?);
            let row = g.structure_constants_parabolic(j, k, context)?;
            let rows = k
                .subsets()
                .into_iter()
                .map(|l| ConstantRow {
                    l,
                    coefficient: row.get(&l).copied().unwrap_or(0),
                })
                .collect();
            let (rank, command) = table(*rank, "constants");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, true))
        }
        Command::ClassTable { rank } => {
            let g = group(*rank)?;
            let rows = product_rows(&g, g.full(), eq)?;
            let (rank, command) = table(*rank, "class-table");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, true))
        }
        Command::ParabolicTable { rank, j } => {
            let g = group(*rank)?;
            let rows = product_rows(&g, subset(*rank, j)?, eq)?;
            let (rank, command) = table(*rank, "parabolic-table");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, true))
        }
        Command::Induce { rank, j, m, k } => {
            let g = group(*rank)?;
            let ctx = TransferContext::new(subset(*rank, j)?, subset(*rank, m)?)?;
            let input = class_label(subset(*rank, k)?, ctx.lower(), eq)?;
            let image = g.induce(&ClassVector::basis(input.clone()), ctx)?;
            let rows = transfer_rows(input, &image);
            let (rank, command) = table(*rank, "induce");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, true))
        }
        Command::Restrict { rank, j, m, k, alt } => {
            let g = group(*rank)?;
            let ctx = TransferContext::new(subset(*rank, j)?, subset(*rank, m)?)?;
            let input = class_label(subset(*rank, k)?, ctx.upper(), eq)?;
            let v = ClassVector::basis(input.clone());
            let image = if *alt { g.restrict_alt(&v, ctx)? } else { g.restrict(&v, ctx)? };
            let rows = transfer_rows(input, &image);
            let (rank, command) = table(*rank, "restrict");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, true))
        }
        Command::Verify { rank, suite, context } => {
            let g = group(*rank)?;
            let context = context.as_deref().map(|c| subset(*rank, c)).transpose()?;
            let rows = run_suite(&g, *suite, eq, context)?;
            let failed: Vec<&CheckOutcome> = rows.iter().filter(|r| !r.passed).collect();
            for f in &failed {
                stderr.push_str(&format!("FAIL {} {}: {}\n", f.suite, f.case, f.detail));
            }
            stderr.push_str(&format!(
                "{} checks, {} failed ({suite}, rank {rank}, {eq})\n",
                rows.len(),
                failed.len()
            ));
            let ok = failed.is_empty();
            let (rank, command) = table(*rank, "verify");
            Ok((render(&Table { rank, command, equivalence: eq, rows }, cli.format)?, ok))
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, cap: usize) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut stderr = String::new();
    match execute(&cli, cap, &mut stderr) {
        Ok((stdout, ok)) => Outcome {
            code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED },
            stdout,
            stderr,
        },
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(message) => (EXIT_USAGE, message),
                Failure::Library(e @ Error::RankCap { .. }) => (
                    EXIT_RANK_CAP,
                    format!("{e}; set {RANK_CAP_VAR} to raise it"),
                ),
                Failure::Library(
                    e @ (Error::InvalidSubset(_)
                    | Error::NotSubset { .. }
                    | Error::RankZero
                    | Error::RankMismatch { .. }
                    | Error::ContextMismatch { .. }),
                ) => (EXIT_USAGE, e.to_string()),
                Failure::Library(e) => (EXIT_FAILURE, e.to_string()),
            };
            stderr.push_str(&format!("error: {message}\n"));
            if code == EXIT_USAGE {
                stderr.push_str("run `descent --help` for usage\n");
            }
            Outcome {
                code,
                stdout: String::new(),
                stderr,
            }
        }
    }
}
