//! `liebider`: centroids, biderivations and commuting maps from the command
//! line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use liebider::graded_window::parse_rational;
use liebider::oracle::EnumerationBudget;
use liebider::towers::DEFAULT_DEPTH_LIMIT;
use liebider::Rational;

use commands::*;
use input::{input_err, resolve_field, CliResult, Input, InputError, Source};

#[derive(Parser, Debug)]
#[command(name = "liebider", version, about = "Exact centroids, biderivations and commuting maps of Lie algebras")]
struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// Catalog name (sl2, heisenberg, abelian3, current_sl2_2, ...) or @file.json.
    #[arg(long)]
    algebra: Option<String>,
    /// Module JSON (@file.json); the adjoint module of --algebra otherwise.
    #[arg(long)]
    module: Option<String>,
    /// Q or a prime in {3, 5, 7, 11, 13}; defaults to the file's field, else Q.
    #[arg(long)]
    field: Option<String>,
}

impl InputArgs {
    fn resolve(&self) -> CliResult<(Input, liebider::field::FieldTag)> {
        let input = Input::new(self.algebra.as_deref(), self.module.as_deref())?;
        let tag = resolve_field(self.field.as_deref(), Some(input.source()))?;
        Ok((input, tag))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jacobi identity and module axioms.
    Check(InputArgs),
    /// Center, module invariants and the centralizer of L'.
    Center(InputArgs),
    /// Derived algebra and lower central series.
    Derived {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Centroid Cent(M).
    Centroid(InputArgs),
    /// Derivations L -> M.
    Derivations(InputArgs),
    /// Biderivation spaces.
    Bider {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "skew")]
        kind: BiderKind,
        /// Shorthand for --kind skew.
        #[arg(long, conflicts_with_all = ["kind", "symmetric"])]
        skew: bool,
        /// Shorthand for --kind symmetric.
        #[arg(long, conflicts_with = "kind")]
        symmetric: bool,
    },
    /// Commuting linear maps.
    Commuting {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "all")]
        kind: CommutingKind,
    },
    /// Split biderivations as centroid + trivial, commuting maps as centroid + central.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        kind: DecomposeKind,
        /// A single map (@file.json); every basis element of the space otherwise.
        #[arg(long)]
        map: Option<String>,
    },
    /// Center tower (biderivations) or module tower (commuting maps).
    Tower {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "center")]
        kind: TowerKind,
        #[arg(long, default_value_t = DEFAULT_DEPTH_LIMIT)]
        depth_limit: usize,
        /// Run the space-level audits of the first step(s).
        #[arg(long)]
        audit: bool,
    },
    /// Free Lie algebra on x1, x2, x3 and the quotient F/(I+J).
    FreeLie {
        /// Truncation degree.
        #[arg(long, default_value_t = 5)]
        degree: usize,
        /// List the Hall basis of a component, e.g. 1,1,3.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["counts", "quotient"])]
        component: Option<Vec<usize>>,
        /// Hall basis sizes by degree.
        #[arg(long, conflicts_with = "quotient")]
        counts: bool,
        /// The truncated quotient F/(I+J).
        #[arg(long)]
        quotient: bool,
    },
    /// Finite windows of graded families: wab, w00, wtilde0m1, sv, block, msl2.
    Window {
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Outer radius N.
        #[arg(long, default_value_t = 6)]
        window: usize,
        #[arg(long, value_enum, default_value = "summary")]
        space: WindowSpace,
        /// Drop the degree-preserving ansatz (values of radius up to N - N').
        #[arg(long)]
        no_ansatz: bool,
        /// Add the [I_m, I_n] cocycle to wtilde0m1 (breaks Jacobi).
        #[arg(long)]
        ii_cocycle: bool,
        #[arg(long)]
        field: Option<String>,
    },
    /// Brute-force enumeration over F_p compared with the solver.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        space: OracleSpace,
        /// Maximum unknowns; LIEBIDER_MAX_UNKNOWNS or 12 otherwise.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Reproduction items and acceptance criteria.
    Reproduce {
        /// Registry item name.
        item: Option<String>,
        /// Every item and every criterion.
        #[arg(long, conflicts_with_all = ["item", "criterion", "acceptance", "list"])]
        all: bool,
        /// One acceptance criterion (1..=11).
        #[arg(long, conflicts_with_all = ["item", "acceptance", "list"])]
        criterion: Option<usize>,
        /// All acceptance criteria.
        #[arg(long, conflicts_with_all = ["item", "list"])]
        acceptance: bool,
        #[arg(long, conflicts_with = "item")]
        list: bool,
    },
}

fn rational_flag(name: &str, v: &Option<String>) -> CliResult<Option<Rational>> {
    v.as_deref()
        .map(|s| parse_rational(s).ok_or_else(|| InputError(format!("--{name} must be a rational like 7/3, got `{s}`"))))
        .transpose()
}

fn dispatch(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Check(i) => {
            let (input, tag) = i.resolve()?;
            with_field!(tag, check(&input))
        }
        Command::Center(i) => {
            let (input, tag) = i.resolve()?;
            with_field!(tag, center(&input))
        }
        Command::Derived { input, limit } => {
            let (input, tag) = input.resolve()?;
            with_field!(tag, derived(&input, limit))
        }
        Command::Centroid(i) => {
            let (input, tag) = i.resolve()?;
            with_field!(tag, centroid_cmd(&input))
        }
        Command::Derivations(i) => {
            let (input, tag) = i.resolve()?;
            with_field!(tag, derivations_cmd(&input))
        }
        Command::Bider { input, kind, skew, symmetric } => {
            let (input, tag) = input.resolve()?;
            let kind = if symmetric {
                BiderKind::Symmetric
            } else if skew {
                BiderKind::Skew
            } else {
                kind
            };
            with_field!(tag, bider(&input, kind))
        }
        Command::Commuting { input, kind } => {
            let (input, tag) = input.resolve()?;
            with_field!(tag, commuting(&input, kind))
        }
        Command::Decompose { input, kind, map } => {
            let (input, tag) = input.resolve()?;
            let map = map.as_deref().map(Source::parse).transpose()?;
            with_field!(tag, decompose(&input, kind, map.as_ref()))
        }
        Command::Tower { input, kind, depth_limit, audit } => {
            let (input, tag) = input.resolve()?;
            with_field!(tag, tower(&input, kind, depth_limit, audit))
        }
        Command::FreeLie { degree, component, counts, quotient } => {
            if degree == 0 {
                return input_err("--degree must be at least 1");
            }
            let query = match (component, counts, quotient) {
                (Some(md), _, _) => FreeLieQuery::Component(md),
                (None, true, _) => FreeLieQuery::Counts,
                (None, false, true) => FreeLieQuery::Quotient,
                (None, false, false) => FreeLieQuery::Jk,
            };
            free_lie(query, degree)
        }
        Command::Window { family, a, b, q, window: radius, space, no_ansatz, ii_cocycle, field } => {
            let args = WindowArgs {
                family,
                a: rational_flag("a", &a)?,
                b: rational_flag("b", &b)?,
                q: rational_flag("q", &q)?,
                n: radius,
                space,
                ansatz: !no_ansatz,
                ii_cocycle,
            };
            let tag = resolve_field(field.as_deref(), None)?;
            with_field!(tag, window(&args))
        }
        Command::Oracle { input, space, budget } => {
            let (input, tag) = input.resolve()?;
            let budget = budget.map(EnumerationBudget::new).unwrap_or_else(EnumerationBudget::from_env);
            oracle_cmd(&input, tag, space, budget)
        }
        Command::Reproduce { item, all, criterion, acceptance, list } => {
            let what = match (item, all, criterion, acceptance, list) {
                (_, _, _, _, true) => ReproduceWhat::List,
                (_, true, _, _, _) => ReproduceWhat::All,
                (_, _, Some(k), _, _) => ReproduceWhat::Criterion(k),
                (_, _, _, true, _) => ReproduceWhat::Acceptance,
                (Some(name), ..) => ReproduceWhat::Item(name),
                _ => return input_err("name an item, or pass --all, --acceptance, --criterion K or --list"),
            };
            reproduce_cmd(what)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
