use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use smirnov_core::enumerators::{
    closed_form, f_expansion, powersum_form, powersum_top_coefficient, q_eulerian_with, root_of_unity,
    run_suite, QEulerian, QStatistic, Suite, VerifyConfig,
};
use smirnov_core::exact_algebra::eval_at_root_of_unity;
use smirnov_core::symfun::{change_basis, expand_in_variables, Basis};
use smirnov_core::{Error, Variant};

/// Exact enumerators of Smirnov words by descents and cyclic descents.
#[derive(Parser)]
#[command(name = "smirnov", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an enumerator in a chosen basis.
    Expand(ExpandArgs),
    /// Print the power-sum expansion of the omega-image.
    Powersum(VariantArgs),
    /// Print the fundamental quasisymmetric expansion of the omega-image.
    #[command(after_help = "Supported variants: W, Wless, Wgreater, Wtilde.")]
    Fexpand(VariantArgs),
    /// Print a q-Eulerian polynomial, optionally at a root of unity.
    Qeuler(QeulerArgs),
    /// Compare root-of-unity evaluations with their closed formulas.
    Roots(RootsArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    E,
    H,
    P,
    M,
    #[value(name = "F")]
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatisticArg {
    Drops,
    Rises,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Oracle,
    Powersum,
    F,
    Qexp,
    Roots,
    Unimodal,
    Counting,
    Epos,
    Series,
    Transfer,
}

#[derive(Args)]
struct VariantArgs {
    /// W, Wless, Wgreater, Wequal, Wneq, Wtilde, Wtildeneq or XCn.
    #[arg(long)]
    variant: Variant,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    common: VariantArgs,
    #[arg(long, value_enum, default_value = "e")]
    basis: BasisArg,
    /// Number of variables for the monomial basis; defaults to n.
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args)]
struct QeulerArgs {
    /// Amajexc, A, Aless or Atilde.
    #[arg(long)]
    variant: QEulerian,
    #[arg(long)]
    n: usize,
    /// Reduce at a primitive K-th root of unity.
    #[arg(long = "q-root", value_name = "K")]
    q_root: Option<usize>,
    /// q-statistic on the inverse permutation.
    #[arg(long, value_enum, default_value = "drops")]
    statistic: StatisticArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct RootsArgs {
    /// A, Aless or Atilde.
    #[arg(long)]
    variant: QEulerian,
    #[arg(long)]
    n: usize,
    /// A single divisor K of n; every divisor when omitted.
    #[arg(long = "q-root", value_name = "K")]
    q_root: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long = "max-n", default_value_t = 5)]
    max_n: usize,
    #[arg(long = "max-order", default_value_t = 8)]
    max_order: usize,
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long = "max-m", default_value_t = 5)]
    max_m: usize,
    #[arg(long = "max-k", default_value_t = 5)]
    max_k: usize,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Failures after parsing: usage problems exit 2, everything else 1.
enum Failure {
    Usage(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument { param, reason } => {
                Failure::Usage(format!("invalid value for --{param}: {reason}"))
            }
            other => Failure::Other(other.to_string()),
        }
    }
}

fn usage(flag: &str, reason: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid value for --{flag}: {reason}"))
}

fn in_range(flag: &str, value: usize, lo: usize, hi: usize) -> Result<(), Failure> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(usage(flag, format!("{value} is outside {lo}..={hi}")))
    }
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable"),
        Format::Text => value.to_string(),
    }
}

fn check_variant_n(args: &VariantArgs) -> Result<(), Failure> {
    let v = args.variant;
    in_range("n", args.n, v.min_n(), 8)
}

fn expand(args: &ExpandArgs) -> Result<String, Failure> {
    let c = &args.common;
    check_variant_n(c)?;
    if args.vars.is_some() && args.basis != BasisArg::M {
        return Err(usage("vars", "only used with --basis m"));
    }
    if args.basis == BasisArg::F {
        return Ok(emit(
            &f_expansion(c.variant, c.n).map_err(flag_variant)?,
            c.format,
        ));
    }
    let f = closed_form(c.variant, c.n)?;
    let out = match args.basis {
        BasisArg::E => emit(&f, c.format),
        BasisArg::H => emit(&change_basis(&f, Basis::Homogeneous)?, c.format),
        BasisArg::P => emit(&change_basis(&f, Basis::PowerSum)?.to_normalized_p()?, c.format),
        BasisArg::M => {
            let k = args.vars.unwrap_or(c.n);
            in_range("vars", k, 1, 8)?;
            emit(&expand_in_variables(&f, k), c.format)
        }
        BasisArg::F => unreachable!("handled above"),
    };
    Ok(out)
}

/// Variant restrictions surface as `--variant` usage errors.
fn flag_variant(e: Error) -> Failure {
    match e {
        Error::InvalidArgument {
            param: "variant",
            reason,
        } => usage("variant", reason),
        other => other.into(),
    }
}

fn powersum(args: &VariantArgs) -> Result<String, Failure> {
    check_variant_n(args)?;
    match args.variant {
        Variant::NotEqual | Variant::Cycle => {
            let top = powersum_top_coefficient(args.variant, args.n)?;
            Ok(emit(&top, args.format))
        }
        v => Ok(emit(
            &powersum_form(v, args.n).map_err(flag_variant)?,
            args.format,
        )),
    }
}

fn fexpand(args: &VariantArgs) -> Result<String, Failure> {
    check_variant_n(args)?;
    Ok(emit(
        &f_expansion(args.variant, args.n).map_err(flag_variant)?,
        args.format,
    ))
}

#[derive(Serialize)]
struct Residue {
    order: usize,
    residue: Vec<smirnov_core::exact_algebra::LaurentPoly>,
}

impl std::fmt::Display for Residue {
    /// `c_0 + (c_1)*xi + …` in the power basis of the root `xi`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .residue
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*xi"),
                _ => format!("({c})*xi^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn qeuler(args: &QeulerArgs) -> Result<String, Failure> {
    in_range("n", args.n, 1, 8)?;
    let stat = match args.statistic {
        StatisticArg::Drops => QStatistic::DropsAtLeastTwo,
        StatisticArg::Rises => QStatistic::RisesAtLeastTwo,
    };
    let poly = q_eulerian_with(args.variant, args.n, stat)?;
    let Some(k) = args.q_root else {
        return Ok(emit(&poly, args.format));
    };
    in_range("q-root", k, 1, 64)?;
    let value = eval_at_root_of_unity(&poly, k as u32);
    Ok(match value.to_t_polynomial() {
        Some(p) => emit(&p, args.format),
        None => emit(
            &Residue {
                order: k,
                residue: value.residue().to_vec(),
            },
            args.format,
        ),
    })
}

#[derive(Serialize)]
struct RootRow {
    k: usize,
    holds: bool,
    #[serde(flatten)]
    evaluation: smirnov_core::enumerators::RootEvaluation,
}

fn roots(args: &RootsArgs) -> Result<(String, bool), Failure> {
    in_range("n", args.n, 2, 8)?;
    if args.variant == QEulerian::MajExc {
        return Err(usage(
            "variant",
            "root evaluation is stated for A, Aless and Atilde",
        ));
    }
    let ks: Vec<usize> = match args.q_root {
        Some(k) => vec![k],
        None => (1..=args.n).filter(|k| args.n.is_multiple_of(*k)).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        let evaluation = root_of_unity(args.variant, args.n, k)?;
        rows.push(RootRow {
            k,
            holds: evaluation.holds(),
            evaluation,
        });
    }
    let all = rows.iter().all(|r| r.holds);
    let out = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable"),
        Format::Text => rows
            .iter()
            .map(|r| {
                let shown = |p: &Option<smirnov_core::exact_algebra::LaurentPoly>| {
                    p.as_ref().map_or("-".to_string(), |p| p.to_string())
                };
                format!(
                    "{} k={}: reduced {}; closed {}; recursive {}",
                    if r.holds { "PASS" } else { "FAIL" },
                    r.k,
                    shown(&r.evaluation.reduced),
                    r.evaluation.closed,
                    shown(&r.evaluation.recursive)
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((out, all))
}

fn verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let suite = match args.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Powersum => Suite::PowerSum,
        SuiteArg::F => Suite::F,
        SuiteArg::Qexp => Suite::QExp,
        SuiteArg::Roots => Suite::Roots,
        SuiteArg::Unimodal => Suite::Unimodal,
        SuiteArg::Counting => Suite::Counting,
        SuiteArg::Epos => Suite::EPositivity,
        SuiteArg::Series => Suite::Series,
        SuiteArg::Transfer => Suite::Transfer,
    };
    let cfg = VerifyConfig {
        max_n: args.max_n,
        max_order: args.max_order,
        vars: args.vars,
        max_m: args.max_m,
        max_k: args.max_k,
        threads: args.threads,
    };
    let report = run_suite(suite, &cfg)?;
    let out = match args.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text().trim_end().to_string(),
    };
    Ok((out, report.passed()))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    match &cli.command {
        Command::Expand(a) => expand(a).map(|s| (s, true)),
        Command::Powersum(a) => powersum(a).map(|s| (s, true)),
        Command::Fexpand(a) => fexpand(a).map(|s| (s, true)),
        Command::Qeuler(a) => qeuler(a).map(|s| (s, true)),
        Command::Roots(a) => roots(a),
        Command::Verify(a) => verify(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok((out, passed)) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
