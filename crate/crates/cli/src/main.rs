//! `monclose`: integral closures, decompositions and Betti numbers of
//! monomial ideals from the command line.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use monclose_core::audit::{verify_paper, VerifyConfig};
use monclose_core::betti::{betti_table_with_budget, DEFAULT_LATTICE_BUDGET};
use monclose_core::closure::{closure_generators_with_budget, DEFAULT_BOX_BUDGET};
use monclose_core::decompose::{
    associated_primes_with_budget, codim, irreducible_decomposition_with_budget, minimal_among,
    primary_components_with_budget, DEFAULT_COMPONENT_BUDGET,
};
use monclose_core::family::{delta_set, family_ideal, is_strongly_generic, reduce_to_delta};
use monclose_core::figure::{figure_points, render_csv, render_svg};
use monclose_core::{
    parse_ideal, parse_monomial, Error, ExponentVector, FamilyParams, MonomialIdeal,
};

use render::Output;

#[derive(Parser, Debug)]
#[command(
    name = "monclose",
    version,
    about = "Integral closure and decomposition of monomial ideals"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on enumeration and splitting work (lattice points, components,
    /// lcm lattice size).
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Input {
    /// Ideal file in text or JSON form; `-` reads standard input.
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral closure.
    Closure(Input),
    /// Irreducible or primary decomposition.
    #[command(group(ArgGroup::new("kind").args(["irreducible", "primary"])))]
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        irreducible: bool,
        #[arg(long)]
        primary: bool,
    },
    /// Associated primes.
    Ass(Input),
    /// Minimal primes.
    MinPrimes(Input),
    /// Embedded primes.
    Embedded(Input),
    /// Colon ideal by a monomial or by another ideal.
    #[command(group(ArgGroup::new("divisor").args(["by", "by_ideal"]).required(true)))]
    Colon {
        #[command(flatten)]
        input: Input,
        /// A monomial such as `x1*x2^2`.
        #[arg(long)]
        by: Option<String>,
        /// An ideal file over the same ring.
        #[arg(long)]
        by_ideal: Option<PathBuf>,
    },
    /// Radical.
    Radical(Input),
    /// Codimension.
    Codim(Input),
    /// Multigraded Betti numbers of R/I.
    Betti(Input),
    /// Projective dimension of R/I.
    Pd(Input),
    /// Cohen-Macaulay test.
    Cm(Input),
    /// Strong genericity test.
    Generic(Input),
    /// The ideal I_{n,t}, its closure, or the closed-form closure generators.
    #[command(group(ArgGroup::new("what").args(["closure", "delta"])))]
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        closure: bool,
        #[arg(long)]
        delta: bool,
    },
    /// Reduce a point of the Newton polyhedron of I_{n,t} to a dividing
    /// closed-form generator.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
        /// Comma-separated exponents, e.g. `2,3,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        point: Vec<BigUint>,
    },
    /// Recompute the published results over a grid and run property sweeps.
    VerifyPaper {
        #[arg(long = "nmax", default_value_t = 5)]
        n_max: usize,
        #[arg(long = "tmax", default_value_t = 3)]
        t_max: u64,
        /// Random cases per property.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
    /// Draw the closure generators of I_{3,t} as SVG, or list them as CSV.
    Figure {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        csv: bool,
    },
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Compute(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Usage(_) | Error::Parameter(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut stdout = io::stdout().lock();
    let result = run(&cli).and_then(|(out, verdict)| {
        stdout
            .write_all(out.render(cli.format).as_bytes())
            .map_err(|e| Failure::Compute(format!("writing output: {e}")))?;
        verdict
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}

fn read_source(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &Path) -> Result<MonomialIdeal, Failure> {
    let text = read_source(path)?;
    let doc = parse_ideal(&text).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Failure::Usage(format!("{}:{line}:{column}: {message}", path.display())),
        other => other.into(),
    })?;
    Ok(doc.to_ideal()?)
}

type Run = Result<(Output, Result<(), Failure>), Failure>;

fn done(out: Output) -> Run {
    Ok((out, Ok(())))
}

fn run(cli: &Cli) -> Run {
    let budget = |default: u64| cli.budget.unwrap_or(default);
    let closure_of =
        |i: &MonomialIdeal| closure_generators_with_budget(i, budget(DEFAULT_BOX_BUDGET));
    let ass_of =
        |i: &MonomialIdeal| associated_primes_with_budget(i, budget(DEFAULT_COMPONENT_BUDGET));
    let betti_of = |i: &MonomialIdeal| betti_table_with_budget(i, budget(DEFAULT_LATTICE_BUDGET));

    match &cli.command {
        Command::Closure(input) => done(Output::Ideal(closure_of(&load(&input.input)?)?)),
        Command::Decompose {
            input,
            irreducible,
            primary: _,
        } => {
            let ideal = load(&input.input)?;
            let limit = budget(DEFAULT_COMPONENT_BUDGET);
            if *irreducible {
                let comps = irreducible_decomposition_with_budget(&ideal, limit)?;
                done(Output::Irreducible(ideal.vars().to_vec(), comps))
            } else {
                let comps = primary_components_with_budget(&ideal, limit)?;
                done(Output::Primary(ideal.vars().to_vec(), comps))
            }
        }
        Command::Ass(input) => {
            let ideal = load(&input.input)?;
            done(Output::Primes(ideal.vars().to_vec(), ass_of(&ideal)?))
        }
        Command::MinPrimes(input) => {
            let ideal = load(&input.input)?;
            done(Output::Primes(
                ideal.vars().to_vec(),
                minimal_among(&ass_of(&ideal)?),
            ))
        }
        Command::Embedded(input) => {
            let ideal = load(&input.input)?;
            let ass = ass_of(&ideal)?;
            let minimal = minimal_among(&ass);
            let embedded = ass.difference(&minimal).cloned().collect();
            done(Output::Primes(ideal.vars().to_vec(), embedded))
        }
        Command::Colon {
            input,
            by,
            by_ideal,
        } => {
            let ideal = load(&input.input)?;
            let q = match (by, by_ideal) {
                (Some(m), _) => {
                    let m = parse_monomial(m, ideal.vars())
                        .map_err(|e| Failure::Usage(format!("--by: {e}")))?;
                    ideal.colon_mon(&m)?
                }
                (None, Some(path)) => ideal.colon_ideal(&load(path)?)?,
                (None, None) => unreachable!("clap requires one of --by, --by-ideal"),
            };
            done(Output::Ideal(q))
        }
        Command::Radical(input) => done(Output::Ideal(load(&input.input)?.radical())),
        Command::Codim(input) => done(Output::Count("codim", codim(&load(&input.input)?)?)),
        Command::Betti(input) => {
            let ideal = load(&input.input)?;
            done(Output::Betti(ideal.vars().to_vec(), betti_of(&ideal)?))
        }
        Command::Pd(input) => {
            let pd = betti_of(&load(&input.input)?)?.projective_dimension();
            done(Output::Count("pd", pd))
        }
        Command::Cm(input) => {
            let ideal = load(&input.input)?;
            let pd = betti_of(&ideal)?.projective_dimension();
            let codim = codim(&ideal)?;
            done(Output::CohenMacaulay { pd, codim })
        }
        Command::Generic(input) => {
            let g = is_strongly_generic(&load(&input.input)?)?;
            done(Output::Flag("strongly_generic", g))
        }
        Command::Family {
            n,
            t,
            closure,
            delta,
        } => {
            let p = FamilyParams::new(*n, *t)?;
            let ideal = family_ideal(p);
            let out = if *closure {
                closure_of(&ideal)?
            } else if *delta {
                MonomialIdeal::new(ideal.vars().to_vec(), delta_set(p))?
            } else {
                ideal
            };
            done(Output::Ideal(out))
        }
        Command::Reduce { n, t, point } => {
            let p = FamilyParams::new(*n, *t)?;
            let b = ExponentVector::new(point.clone());
            let r = reduce_to_delta(&b, p)?;
            done(Output::Reduction {
                vars: family_ideal(p).vars().to_vec(),
                point: b,
                result: r,
            })
        }
        Command::VerifyPaper {
            n_max,
            t_max,
            cases,
            seed,
        } => {
            let report = verify_paper(VerifyConfig {
                n_max: *n_max,
                t_max: *t_max,
                cases: *cases,
                seed: *seed,
            })?;
            let verdict = if report.overall_pass {
                Ok(())
            } else {
                let n = report.failures().count();
                Err(Failure::Verify(format!(
                    "verify-paper: {n} check(s) failed"
                )))
            };
            Ok((Output::Report(report), verdict))
        }
        Command::Figure { n, t, out, csv } => {
            let points = figure_points(*n, *t)?;
            let body = if *csv {
                render_csv(&points)
            } else {
                render_svg(&points, *t)
            };
            fs::write(out, body)
                .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", out.display())))?;
            done(Output::Figure {
                path: out.display().to_string(),
                points,
            })
        }
    }
}
