use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polymset::interchange::canonicalize;
use polymset::oracle::{LawChecker, UniverseSpec, DEFAULT_BUDGET};
use polymset::semiring;

use mnum::eval::Env;
use mnum::mutants::pointwise_mul;
use mnum::render::Style;
use mnum::session::run_program;

const EVAL_ERROR: u8 = 1;
const SYNTAX_ERROR: u8 = 2;
const LAW_FAILURE: u8 = 3;

/// Calculator for natural multidimensional numbers.
#[derive(Parser)]
#[command(name = "mnum", version)]
struct Cli {
    /// How polymsets are printed.
    #[arg(long, value_enum, global = true, default_value_t = Style::Sparse)]
    style: Style,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every statement in a file and print the results.
    Eval { file: PathBuf },
    /// Interactive session.
    Repl,
    /// Check the algebraic laws over a bounded universe.
    CheckLaws {
        #[arg(long)]
        dim: usize,
        /// Largest coordinate per axis, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        max_index: Vec<u64>,
        #[arg(long)]
        max_mult: u64,
        /// Laws with more cases than this are sampled.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = MulImpl::Convolution, hide = true)]
        mul: MulImpl,
    },
    /// Rewrite an interchange document in canonical form.
    Fmt { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum MulImpl {
    Convolution,
    Pointwise,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}

type Failure = (u8, String);

fn run(cli: Cli) -> Result<(), Failure> {
    let output = cli.output.as_deref();
    match cli.command {
        Command::Eval { file } => {
            let src = read(&file)?;
            let mut results = Vec::new();
            let outcome = run_program(&src, &mut Env::new(), cli.style, &mut results);
            let mut text = results.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            emit(output, &text)?;
            outcome.map_err(|e| {
                (
                    e.exit_code(),
                    format!("{}: {}", file.display(), e.annotate(&src)),
                )
            })
        }
        Command::Repl => {
            let stdin = io::stdin().lock();
            let result = match output {
                Some(path) => {
                    let f = fs::File::create(path).map_err(|e| io_failure(path, e))?;
                    mnum::repl::run(stdin, io::BufWriter::new(f), cli.style)
                }
                None => mnum::repl::run(stdin, io::stdout().lock(), cli.style),
            };
            result.map_err(|e| (EVAL_ERROR, e.to_string()))
        }
        Command::CheckLaws {
            dim,
            max_index,
            max_mult,
            budget,
            seed,
            mul,
        } => {
            if max_index.len() != dim {
                return Err((
                    SYNTAX_ERROR,
                    format!(
                        "--max-index has {} entries but --dim is {dim}",
                        max_index.len()
                    ),
                ));
            }
            let spec = UniverseSpec::new(max_index, max_mult)
                .map_err(|e| (SYNTAX_ERROR, e.to_string()))?;
            let mul = match mul {
                MulImpl::Convolution => semiring::mul,
                MulImpl::Pointwise => pointwise_mul,
            };
            let report = LawChecker::new(spec)
                .budget(budget)
                .seed(seed)
                .with_mul(mul)
                .run()
                .map_err(|e| (EVAL_ERROR, e.to_string()))?;
            println!("{report}");
            if let Some(path) = output {
                let json = format!("{}\n", report.to_json());
                fs::write(path, json).map_err(|e| io_failure(path, e))?;
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err((LAW_FAILURE, String::new()))
            }
        }
        Command::Fmt { file } => {
            let src = read(&file)?;
            let text = canonicalize(&src)
                .map_err(|e| (SYNTAX_ERROR, format!("{}: {e}", file.display())))?;
            emit(output, &text)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| (EVAL_ERROR, e.to_string())),
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    (EVAL_ERROR, format!("{}: {e}", path.display()))
}
