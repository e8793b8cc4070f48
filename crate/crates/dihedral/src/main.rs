use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use dihedral::characters::character_table;
use dihedral::counting::{
    count_closed, count_convolution, count_pie, count_sum_formula, oracle_canonical, oracle_count,
    series, CountSeries, DEFAULT_TUPLE_BUDGET,
};
use dihedral::error::DihedralError;
use dihedral::export::{self, RenderOpts};
use dihedral::magic::{big_j, j1, j2};
use dihedral::matrix::Mat;
use dihedral::spectral::{
    idempotent_set_with_eps, quaternion_basis, surviving_linear_label, two_dim_range, u_prime,
};
use dihedral::verify::{run_all, VerifyOptions};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "dihedral",
    version,
    about = "Semi-magic matrices for dihedral groups: tables, counts, idempotents"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Digits after the decimal point for float display (>= 1).
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountVariant {
    /// Closed binomial formula.
    Closed,
    /// Binomial sum formula (odd n).
    Sum,
    /// Inclusion-exclusion formula (odd n).
    Pie,
    /// Discrete convolution (even n).
    Conv,
    /// Brute-force enumeration with deduplication.
    Oracle,
    /// Direct count of canonical coefficient tuples.
    Canonical,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the character table, class sizes, and the permutation character.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Count semi-magic squares with line sums 0..=rmax.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rmax: u64,
        #[arg(long, value_enum, default_value_t = CountVariant::Closed)]
        variant: CountVariant,
        /// Cross-check every value against the brute-force oracle.
        #[arg(long)]
        verify_oracle: bool,
        /// Enumeration budget for oracle variants.
        #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
        max_tuples: u64,
    },
    /// Print idempotent and quaternion-basis matrices.
    Idem {
        #[arg(long)]
        n: usize,
        /// One of: all, triv, chi', pi2:J, uprime:J, quat:J.
        #[arg(long, default_value = "all")]
        which: String,
    },
    /// Run the full cross-checking suite; exit 0 only if every check passes.
    Verify {
        #[arg(long)]
        n: usize,
        /// Enumeration budget for the oracle sub-checks.
        #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
        max_tuples: u64,
    },
    /// Write a table, count series, or matrix in the chosen format.
    Export {
        #[arg(long)]
        n: usize,
        /// One of: table, series, j, j1, j2, idem:<selector>.
        #[arg(long)]
        what: String,
        /// Series length when exporting a count series.
        #[arg(long, default_value_t = 10)]
        rmax: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.precision < 1 {
        eprintln!("error: --precision must be at least 1");
        return ExitCode::from(2);
    }
    let opts = RenderOpts {
        precision: cli.precision,
    };
    let eps = dihedral::tolerance_from_env();

    let outcome = match &cli.cmd {
        Cmd::Table { n } => cmd_table(*n, cli.format, opts),
        Cmd::Count {
            n,
            rmax,
            variant,
            verify_oracle,
            max_tuples,
        } => cmd_count(*n, *rmax, *variant, *verify_oracle, *max_tuples, cli.format),
        Cmd::Idem { n, which } => cmd_idem(*n, which, cli.format, opts, eps),
        Cmd::Verify { n, max_tuples } => {
            return match cmd_verify(*n, *max_tuples, eps, cli.format, &cli.output) {
                Ok(all_passed) => {
                    if all_passed {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail(&e),
            };
        }
        Cmd::Export { n, what, rmax } => cmd_export(*n, what, *rmax, cli.format, opts, eps),
    };

    match outcome {
        Ok(text) => match write_out(&cli.output, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => fail(&e),
    }
}

fn fail(e: &DihedralError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn write_out(path: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_table(n: usize, format: Format, opts: RenderOpts) -> Result<String, DihedralError> {
    let t = character_table(n)?;
    Ok(match format {
        Format::Text => export::table_text(&t, opts),
        Format::Json => export::table_json(&t),
        Format::Csv => export::table_csv(&t, opts),
    })
}

fn count_series_for_variant(
    n: usize,
    rmax: u64,
    variant: CountVariant,
    max_tuples: u64,
) -> Result<CountSeries, DihedralError> {
    let hstar = series(n, rmax)?.hstar;
    let values: Result<Vec<BigInt>, DihedralError> = (0..=rmax)
        .map(|r| match variant {
            CountVariant::Closed => count_closed(n, r),
            CountVariant::Sum => count_sum_formula(n, r),
            CountVariant::Pie => count_pie(n, r),
            CountVariant::Conv => count_convolution(n, r),
            CountVariant::Oracle => oracle_count(n, r, max_tuples),
            CountVariant::Canonical => oracle_canonical(n, r, max_tuples),
        })
        .collect();
    Ok(CountSeries {
        n,
        values: values?,
        hstar,
    })
}

fn variant_name(variant: CountVariant) -> &'static str {
    match variant {
        CountVariant::Closed => "closed",
        CountVariant::Sum => "sum",
        CountVariant::Pie => "pie",
        CountVariant::Conv => "conv",
        CountVariant::Oracle => "oracle",
        CountVariant::Canonical => "canonical",
    }
}

fn cmd_count(
    n: usize,
    rmax: u64,
    variant: CountVariant,
    verify_oracle: bool,
    max_tuples: u64,
    format: Format,
) -> Result<String, DihedralError> {
    let s = count_series_for_variant(n, rmax, variant, max_tuples)?;
    if verify_oracle {
        for (r, v) in s.values.iter().enumerate() {
            let oracle = oracle_count(n, r as u64, max_tuples)?;
            if oracle != *v {
                return Err(DihedralError::Parameter(format!(
                    "oracle disagrees at r = {r}: formula {v}, oracle {oracle}"
                )));
            }
        }
    }
    Ok(match format {
        Format::Text => {
            let heading = format!(
                "Semi-magic square counts for n = {n} (variant {})",
                variant_name(variant)
            );
            export::series_text(&s, &heading)
        }
        Format::Json => export::series_json(&s),
        Format::Csv => export::series_csv(&s),
    })
}

/// Resolves an idem selector to a list of labeled complex matrices.
fn idem_members(
    n: usize,
    which: &str,
    eps: f64,
) -> Result<Vec<(String, Mat<Complex64>)>, DihedralError> {
    let parse_index = |sel: &str, rest: &str| -> Result<usize, DihedralError> {
        rest.parse::<usize>()
            .map_err(|_| DihedralError::Parameter(format!("bad index in selector {sel:?}")))
    };
    match which {
        "all" => {
            let set = idempotent_set_with_eps(n, eps)?;
            let mut members: Vec<(String, Mat<Complex64>)> = set
                .members
                .iter()
                .map(|(label, m)| (label.to_string(), m.mat().clone()))
                .collect();
            for j in two_dim_range(n) {
                members.push((format!("uprime({j})"), u_prime(n, j)?));
            }
            Ok(members)
        }
        "triv" => {
            let set = idempotent_set_with_eps(n, eps)?;
            Ok(vec![("triv".to_string(), set.members[0].1.mat().clone())])
        }
        "chi'" => {
            let label = surviving_linear_label(n)?;
            let set = idempotent_set_with_eps(n, eps)?;
            let m = set
                .member(&label)
                .expect("surviving label present for even n");
            Ok(vec![(label.to_string(), m.mat().clone())])
        }
        other => {
            if let Some(rest) = other.strip_prefix("pi2:") {
                let j = parse_index(other, rest)?;
                let set = idempotent_set_with_eps(n, eps)?;
                let label = dihedral::characters::IrreducibleLabel::Pi2(j);
                let m = set.member(&label).ok_or_else(|| {
                    DihedralError::Parameter(format!("pi2 index {j} out of range for n = {n}"))
                })?;
                Ok(vec![(label.to_string(), m.mat().clone())])
            } else if let Some(rest) = other.strip_prefix("uprime:") {
                let j = parse_index(other, rest)?;
                Ok(vec![(format!("uprime({j})"), u_prime(n, j)?)])
            } else if let Some(rest) = other.strip_prefix("quat:") {
                let j = parse_index(other, rest)?;
                let q = quaternion_basis(n, j)?;
                Ok(vec![
                    (format!("q1({j})"), q.q1),
                    (format!("q2({j})"), q.q2),
                    (format!("q3({j})"), q.q3),
                    (format!("q4({j})"), q.q4),
                ])
            } else {
                Err(DihedralError::Parameter(format!(
                    "unknown selector {other:?}; expected all, triv, chi', pi2:J, uprime:J, or quat:J"
                )))
            }
        }
    }
}

fn cmd_idem(
    n: usize,
    which: &str,
    format: Format,
    opts: RenderOpts,
    eps: f64,
) -> Result<String, DihedralError> {
    let members = idem_members(n, which, eps)?;
    Ok(match format {
        Format::Text => export::matrix_set_text(&members, opts),
        Format::Json => export::matrix_set_json(n, &members),
        Format::Csv => export::matrix_set_csv(&members, opts),
    })
}

fn cmd_verify(
    n: usize,
    max_tuples: u64,
    eps: f64,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<bool, DihedralError> {
    let report = run_all(n, VerifyOptions { max_tuples, eps })?;
    let text = match format {
        Format::Json => export::verify_json(&report),
        _ => export::verify_text(&report),
    };
    write_out(output, &text)
        .map_err(|e| DihedralError::Parameter(format!("cannot write output: {e}")))?;
    Ok(report.all_passed())
}

fn cmd_export(
    n: usize,
    what: &str,
    rmax: u64,
    format: Format,
    opts: RenderOpts,
    eps: f64,
) -> Result<String, DihedralError> {
    match what {
        "table" => cmd_table(n, format, opts),
        "series" => {
            let s = series(n, rmax)?;
            Ok(match format {
                Format::Text => {
                    export::series_text(&s, &format!("Semi-magic square counts for n = {n}"))
                }
                Format::Json => export::series_json(&s),
                Format::Csv => export::series_csv(&s),
            })
        }
        "j" | "j1" | "j2" => {
            let m = match what {
                "j" => big_j(n)?,
                "j1" => j1(n)?,
                _ => j2(n)?,
            };
            let rational = m.to_rational();
            Ok(match format {
                Format::Text => export::rational_matrix_text(rational.mat()),
                Format::Json => export::rational_matrix_json(rational.mat()),
                Format::Csv => export::rational_matrix_csv(rational.mat()),
            })
        }
        other => {
            if let Some(sel) = other.strip_prefix("idem:") {
                cmd_idem(n, sel, format, opts, eps)
            } else {
                Err(DihedralError::Parameter(format!(
                    "unknown export target {other:?}; expected table, series, j, j1, j2, or idem:<selector>"
                )))
            }
        }
    }
}
