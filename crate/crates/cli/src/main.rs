use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ptolemy_core::hom::ar_quiver;
use ptolemy_core::mutation::replace;
use ptolemy_core::ptolemy::ptolemy_closure;
use ptolemy_core::verify::Suite;
use ptolemy_core::{Diagram, DiagramDocument, Error, MutationDirection, Polygon};
use ptolemy_lab::{analyze, exit, parse_diagonal, service, to_json, ErrorBody};

/// Default upper bound on `verify --max-size`.
const DEFAULT_VERIFY_MAX: usize = 8;

#[derive(Parser)]
#[command(
    name = "ptolemy-lab",
    version,
    about = "Ptolemy diagrams in the cluster category of type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a diagram and report its cells, Ext-projectives and weak triangles.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Replace a dissecting diagonal by the other end of its weak triangle.
    Mutate {
        #[arg(long)]
        input: PathBuf,
        /// The diagonal to remove, as `u,v`.
        #[arg(long, allow_hyphen_values = true)]
        diagonal: String,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the smallest Ptolemy diagram containing the input.
    Closure {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the Auslander-Reiten quiver of the polygon.
    Quiver {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run exhaustive verification suites on all polygons up to a size.
    ///
    /// Without `--suite` every suite runs; `--suite` with no names runs none.
    Verify {
        #[arg(long)]
        max_size: usize,
        #[arg(long, num_args = 0..)]
        suite: Option<Vec<String>>,
        /// Upper bound on `--max-size`.
        #[arg(long, env = "PTOLEMY_LAB_MAX_SIZE", default_value_t = DEFAULT_VERIFY_MAX, hide = true)]
        size_bound: usize,
    },
    /// Serve the JSON API and the explorer bundle.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long = "static", default_value = "static")]
        static_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Backward,
    Forward,
}

impl From<DirectionArg> for MutationDirection {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Backward => MutationDirection::Backward,
            DirectionArg::Forward => MutationDirection::Forward,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Prints the error body on stderr and maps it to its exit code.
fn fail(error: &Error) -> u8 {
    eprint!("{}", to_json(&ErrorBody::from(error)));
    exit::for_error(error)
}

fn read_diagram(path: &Path) -> Result<Diagram, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    DiagramDocument::parse(&text)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Analyze { input, output } => {
            let report = analyze(&read_diagram(&input)?);
            emit(&to_json(&report), output.as_deref())?;
            Ok(exit::for_analysis(&report))
        }
        Command::Mutate {
            input,
            diagonal,
            direction,
            output,
        } => {
            let diagram = read_diagram(&input)?;
            let d = parse_diagonal(diagram.polygon(), &diagonal)?;
            let report = replace(&diagram, d, direction.into())?;
            emit(&to_json(&report), output.as_deref())?;
            if !report.extension_closed {
                eprintln!("result is not extension-closed: {}", report.reason);
            }
            Ok(exit::for_mutation(&report))
        }
        Command::Closure { input, output } => {
            let closed = ptolemy_closure(&read_diagram(&input)?);
            emit(&to_json(&closed), output.as_deref())?;
            Ok(exit::OK)
        }
        Command::Quiver { size, format } => {
            let quiver = ar_quiver(&Polygon::new(size)?);
            match format {
                Format::Dot => print!("{}", quiver.to_dot()),
                Format::Json => print!("{}", to_json(&quiver)),
            }
            Ok(exit::OK)
        }
        Command::Verify {
            max_size,
            suite,
            size_bound,
        } => {
            if max_size < Polygon::MIN_SIZE || max_size > size_bound {
                return Err(Error::SizeLimit {
                    size: max_size,
                    max: size_bound,
                });
            }
            let suites = match suite {
                None => Suite::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|n| {
                        Suite::from_name(n).ok_or_else(|| {
                            let known: Vec<_> = Suite::ALL.iter().map(Suite::name).collect();
                            Error::Parse(format!(
                                "unknown suite `{n}`, expected one of {}",
                                known.join(", ")
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let mut reports = Vec::new();
            for s in suites {
                let report = s.run(max_size);
                println!("{report}");
                reports.push(report);
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            println!(
                "{passed}/{} suites passed (polygons up to {max_size} vertices)",
                reports.len()
            );
            Ok(exit::for_suites(&reports))
        }
        Command::Serve { port, static_dir } => {
            let runtime = tokio::runtime::Runtime::new()
                .map_err(|e| Error::PreconditionViolation(e.to_string()))?;
            eprintln!("listening on port {port}, serving {}", static_dir.display());
            match runtime.block_on(service::serve(port, static_dir)) {
                Ok(()) => Ok(exit::OK),
                Err(e) => {
                    eprintln!(
                        "{{\"error\":\"BIND_FAILURE\",\"message\":{:?}}}",
                        e.to_string()
                    );
                    Ok(exit::BIND_FAILURE)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli.command).unwrap_or_else(|e| fail(&e));
    ExitCode::from(code)
}
