//! Batch front end over canonical JSON files.
//!
//! Exit codes: 0 success, 1 property violation, 2 malformed input or
//! flags, 3 dimension or domain mismatch, 4 complexity refusal.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use extalg::check::{self, CheckConfig, Suite};
use extalg::index::{enum_combinations, enum_injections, enum_placements, parse_word, Combination};
use extalg::json::Json;
use extalg::multivector::{contract, pair_chains};
use extalg::scalar::format_rational;
use extalg::{
    cauchy_binet, det_laplace, det_leibniz, exterior_power_map, minor, Dual, Error,
    Matrix, RatForm, RatGraded, RatMatrix, RatMultivector, RatTensor,
};

/// Pure Leibniz expansion is refused above this size unless forced.
const LEIBNIZ_LIMIT: usize = 10;

#[derive(Parser)]
#[command(name = "extalg", version, about = "Exact exterior algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Comb,
    Inj,
    Place,
}

#[derive(Clone, Copy, ValueEnum)]
enum DetMethod {
    Leibniz,
    Laplace,
    BinetCheck,
}

#[derive(Subcommand)]
enum Command {
    /// List index words in lexicographic order.
    Enum {
        kind: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Determinant of a square matrix.
    Det {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "leibniz")]
        method: DetMethod,
        /// Row set for Laplace expansion, e.g. 1,3.
        #[arg(long)]
        rows: Option<String>,
        /// Right factor B for binet-check (defaults to the identity).
        #[arg(long)]
        with: Option<PathBuf>,
        /// Allow Leibniz expansion above the size limit.
        #[arg(long)]
        force: bool,
    },
    /// Minor on the given rows and columns.
    Minor {
        matrix: PathBuf,
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
    },
    /// Compound matrix of grade m.
    Compound {
        matrix: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Induced action of a matrix on a homogeneous multivector.
    Apply { matrix: PathBuf, multivector: PathBuf },
    /// Wedge product of two graded elements.
    Wedge { left: PathBuf, right: PathBuf },
    /// Alternation of a tensor.
    Alt { tensor: PathBuf },
    /// Pairing of a dual graded element with a graded element.
    Pair { dual: PathBuf, element: PathBuf },
    /// Interior product of a dual vector into a homogeneous multivector.
    Contract { dual: PathBuf, multivector: PathBuf },
    /// Exterior derivative of a polynomial form.
    D { form: PathBuf },
    /// Run randomized property suites.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failed invocation: exit code and message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::DivisionByZero => 2,
            Error::Domain(_) | Error::Dimension(_) | Error::Range { .. } => 3,
            Error::Complexity { .. } => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read<T: Json>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    T::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn guarded_leibniz(a: &RatMatrix, force: bool) -> Result<extalg::Rational, Failure> {
    if a.is_square() && a.rows() > LEIBNIZ_LIMIT && !force {
        return Err(Error::Complexity { n: a.rows(), limit: LEIBNIZ_LIMIT }.into());
    }
    Ok(det_leibniz(a)?)
}

fn combination(n: usize, s: &str) -> Result<Combination, Failure> {
    let word = parse_word(s).map_err(|e| usage(e.to_string()))?;
    Ok(Combination::new(n, word)?)
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Enum { kind, n, m } => {
            let words: Vec<String> = match kind {
                Family::Comb => enum_combinations(n, m).map(|it| it.map(|w| w.to_string()).collect()),
                Family::Inj => enum_injections(n, m).map(|it| it.map(|w| w.to_string()).collect()),
                Family::Place => enum_placements(n, m).map(|it| it.map(|w| w.to_string()).collect()),
            }
            .map_err(|e| usage(e.to_string()))?;
            let mut out = String::new();
            for w in &words {
                out.push_str(&line(w));
            }
            writeln!(out, "count={}", words.len()).expect("string write");
            Ok(out)
        }
        Command::Det { matrix, method, rows, with, force } => {
            let a: RatMatrix = read(&matrix)?;
            let value = match method {
                DetMethod::Leibniz => guarded_leibniz(&a, force)?,
                DetMethod::Laplace => {
                    let rows = rows.ok_or_else(|| usage("--method laplace needs --rows"))?;
                    det_laplace(&a, &combination(a.rows(), &rows)?)?
                }
                DetMethod::BinetCheck => {
                    let b: RatMatrix = match with {
                        Some(path) => read(&path)?,
                        None => Matrix::identity(a.cols()),
                    };
                    let binet = cauchy_binet(&a, &b)?;
                    let product = a.matmul(&b)?;
                    let reference = guarded_leibniz(&product, force)?;
                    if binet != reference {
                        return Err(Failure {
                            code: 1,
                            message: format!(
                                "Cauchy-Binet sum {} disagrees with det(AB) = {}",
                                format_rational(&binet),
                                format_rational(&reference)
                            ),
                        });
                    }
                    binet
                }
            };
            Ok(line(format_rational(&value)))
        }
        Command::Minor { matrix, rows, cols } => {
            let a: RatMatrix = read(&matrix)?;
            let rows = combination(a.rows(), &rows)?;
            let cols = combination(a.cols(), &cols)?;
            Ok(line(format_rational(&minor(&a, &rows, &cols)?)))
        }
        Command::Compound { matrix, m } => {
            let a: RatMatrix = read(&matrix)?;
            Ok(line(exterior_power_map(&a, m)?.to_json()))
        }
        Command::Apply { matrix, multivector } => {
            let a: RatMatrix = read(&matrix)?;
            let v: RatMultivector = read(&multivector)?;
            Ok(line(extalg::apply_map(&a, &v)?.to_json()))
        }
        Command::Wedge { left, right } => {
            let u: RatGraded = read(&left)?;
            let v: RatGraded = read(&right)?;
            Ok(line(u.wedge(&v)?.to_json()))
        }
        Command::Alt { tensor } => {
            let t: RatTensor = read(&tensor)?;
            Ok(line(t.alt().to_json()))
        }
        Command::Pair { dual, element } => {
            let w: RatGraded = read(&dual)?;
            let v: RatGraded = read(&element)?;
            Ok(line(format_rational(&pair_chains(&Dual(w), &v)?)))
        }
        Command::Contract { dual, multivector } => {
            let x: RatMultivector = read(&dual)?;
            let v: RatMultivector = read(&multivector)?;
            if v.is_zero() {
                if x.dim() != v.dim() {
                    return Err(Error::Dimension(format!("ambient dimensions {} and {}", x.dim(), v.dim())).into());
                }
                return Ok(line(v.to_json()));
            }
            Ok(line(contract(&Dual(x), &v)?.to_json()))
        }
        Command::D { form } => {
            let f: RatForm = read(&form)?;
            Ok(line(f.exterior_derivative().to_json()))
        }
        Command::Check { suite, n, trials, seed } => {
            let suites = Suite::parse(&suite).map_err(|e| usage(e.to_string()))?;
            let report = check::run(&suites, CheckConfig { n, trials, seed })
                .map_err(|e| usage(e.to_string()))?;
            if report.all_passed() {
                Ok(report.to_string())
            } else {
                // The report names the counterexamples; it goes to stdout
                // even though the run fails.
                print!("{report}");
                Err(Failure { code: 1, message: "property violation".into() })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
