//! Command-line front end.
//!
//! `covertor compute <input.json>` reads a link (braid closure and/or
//! Alexander polynomial table) plus a covering group with meridian images,
//! and prints the order of the first homology of the branched cover.
//! `covertor higher-dim <input.json> --degree d` evaluates the cyclic-cover
//! product for user-supplied one-variable invariants.
//!
//! Exit codes: 0 success, 1 infinite homology under `--strict`, 2 input or
//! precondition error, 3 certificate failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::Zero;

use covertor::abelian::{CoveringSpec, FiniteAbelianGroup, GroupElement};
use covertor::engine::input::{parse_polynomial, InputFile};
use covertor::engine::{
    branched_order, higher_dim_product, merged_source, CoverReport, HigherDimInput,
    HigherDimOutcome, LinkSource,
};
use covertor::error::Error;
use covertor::link::wirtinger;
use covertor::oracle::oracle_order;

#[derive(Parser)]
#[command(name = "covertor", version, about = "Homology orders of finite abelian branched covers of links, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute |H1| of the branched cover described by the input file.
    Compute {
        /// JSON input file (braid and/or polynomial table, group, meridians).
        input: PathBuf,
        /// Covering group as cyclic summand orders, e.g. `2` or `2,4`.
        /// Overrides the input file.
        #[arg(long)]
        group: Option<String>,
        /// Meridian images, one vector per component, e.g. `1,0;0,1`.
        /// Overrides the input file.
        #[arg(long)]
        meridians: Option<String>,
        /// Also run the group-theoretic oracle and compare.
        #[arg(long)]
        oracle: bool,
        /// Print a per-character report.
        #[arg(long, value_enum)]
        report: Option<ReportKind>,
        /// Exit with status 1 when the homology is infinite.
        #[arg(long)]
        strict: bool,
    },
    /// Alternating product of higher-dimensional cyclic-cover invariants.
    #[command(name = "higher-dim")]
    HigherDim {
        /// JSON input file with an `invariants` list of polynomials in t1.
        input: PathBuf,
        /// Covering degree d >= 2.
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Table,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::CertificateFailure { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute {
            input,
            group,
            meridians,
            oracle,
            report,
            strict,
        } => compute(&input, group, meridians, oracle, report, strict),
        Command::HigherDim { input, degree } => higher_dim(&input, degree),
    }
}

fn read_input(path: &PathBuf) -> Result<InputFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("{}: {e}", path.display())))?;
    InputFile::from_json(&text)
}

fn parse_group_flag(text: &str) -> Result<Vec<u64>, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(format!("bad group order '{t}'")))
        })
        .collect()
}

fn parse_meridian_flag(text: &str) -> Result<Vec<Vec<i64>>, Error> {
    text.split(';')
        .map(|v| {
            v.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::parse(format!("bad meridian coordinate '{t}'")))
                })
                .collect()
        })
        .collect()
}

fn compute(
    path: &PathBuf,
    group_flag: Option<String>,
    meridian_flag: Option<String>,
    run_oracle: bool,
    report_kind: Option<ReportKind>,
    strict: bool,
) -> Result<ExitCode, Error> {
    let input = read_input(path)?;

    let orders = match (&group_flag, &input.group) {
        (Some(flag), _) => parse_group_flag(flag)?,
        (None, Some(file)) => file.clone(),
        (None, None) => {
            return Err(Error::invalid(
                "no covering group: pass --group or a \"group\" entry in the input file",
            ))
        }
    };
    let (group, coords) = FiniteAbelianGroup::from_summands(&orders)?;

    let raw_meridians = match (&meridian_flag, &input.meridians) {
        (Some(flag), _) => parse_meridian_flag(flag)?,
        (None, Some(file)) => file.clone(),
        (None, None) => {
            return Err(Error::invalid(
                "no meridian images: pass --meridians or a \"meridians\" entry in the input file",
            ))
        }
    };
    let images: Vec<GroupElement> = raw_meridians
        .iter()
        .map(|v| coords.convert(v))
        .collect::<Result<_, _>>()?;
    let spec = CoveringSpec::new(group, images);

    let diagram = input.diagram()?;
    let table = input.alexander_data()?;
    let source = match (&diagram, table) {
        (Some(d), Some(t)) => {
            let (source, warnings) = merged_source(d, &t, &spec)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            source
        }
        (Some(d), None) => LinkSource::Diagram(d.clone()),
        (None, Some(t)) => LinkSource::Table {
            components: spec.meridian_images.len(),
            data: t,
        },
        (None, None) => {
            return Err(Error::invalid(
                "input needs a \"braid\" or an \"alexander\" table",
            ))
        }
    };

    let mut report = branched_order(&source, &spec)?;
    if run_oracle {
        let Some(d) = &diagram else {
            return Err(Error::invalid("--oracle needs a braid diagram in the input"));
        };
        let oracle = oracle_order(&wirtinger(d), &spec)?;
        if oracle.order != report.order {
            return Err(Error::CertificateFailure {
                detail: format!(
                    "formula order {} disagrees with oracle order {}",
                    report.order, oracle.order
                ),
            });
        }
        report.oracle = Some(oracle);
    }

    if report.order.is_zero() {
        println!("|H1| = 0 (infinite)");
    } else {
        println!("|H1| = {}", report.order);
    }
    if let Some(oracle) = &report.oracle {
        println!("oracle: {} (agrees)", oracle.order);
    }
    match report_kind {
        Some(ReportKind::Table) => print_table(&report),
        Some(ReportKind::Json) => println!(
            "{}",
            serde_json::to_string_pretty(&report_json(&report))
                .expect("report serializes")
        ),
        None => {}
    }

    if strict && report.order.is_zero() {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_table(report: &CoverReport) {
    println!(
        "group: invariant factors {:?}, |G| = {}, conductor {}",
        report.invariant_factors, report.group_order, report.conductor
    );
    println!(
        "correction: |G| / ({}) over single-support characters",
        report.correction_denominator
    );
    for (support, poly) in &report.polynomials {
        let names: Vec<String> = support.iter().map(|c| (c + 1).to_string()).collect();
        println!("sublink {{{}}}: {}", names.join(","), poly);
    }
    println!("{:<16} {:<14} {:<8} {:<8} value", "character", "support", "single", "nonzero");
    for row in &report.rows {
        let support: Vec<String> = row.support.iter().map(|c| (c + 1).to_string()).collect();
        println!(
            "{:<16} {:<14} {:<8} {:<8} {}",
            format!("{:?}", row.exps),
            format!("{{{}}}", support.join(",")),
            row.single_support,
            row.nonvanishing,
            row.value
        );
    }
    println!(
        "homology sphere: {}",
        if report.homology_sphere { "yes" } else { "no" }
    );
    if let Some(oracle) = &report.oracle {
        println!(
            "oracle invariant factors: {:?}, free rank {}",
            oracle
                .invariant_factors
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>(),
            oracle.free_rank
        );
    }
}

fn report_json(report: &CoverReport) -> serde_json::Value {
    serde_json::json!({
        "order": report.order.to_string(),
        "infinite": report.order.is_zero(),
        "homology_sphere": report.homology_sphere,
        "group_invariant_factors": report.invariant_factors,
        "group_order": report.group_order,
        "conductor": report.conductor,
        "correction_denominator": report.correction_denominator.to_string(),
        "polynomials": report.polynomials.iter().map(|(s, p)| serde_json::json!({
            "support": s.iter().map(|c| c + 1).collect::<Vec<_>>(),
            "polynomial": p,
        })).collect::<Vec<_>>(),
        "characters": report.rows.iter().map(|row| serde_json::json!({
            "exps": row.exps,
            "support": row.support.iter().map(|c| c + 1).collect::<Vec<_>>(),
            "single_support": row.single_support,
            "nonvanishing": row.nonvanishing,
            "value": row.value.to_string(),
        })).collect::<Vec<_>>(),
        "oracle": report.oracle.as_ref().map(|o| serde_json::json!({
            "order": o.order.to_string(),
            "invariant_factors": o.invariant_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "free_rank": o.free_rank,
        })),
    })
}

fn higher_dim(path: &PathBuf, degree: u32) -> Result<ExitCode, Error> {
    let input = read_input(path)?;
    let Some(texts) = &input.invariants else {
        return Err(Error::invalid("input needs an \"invariants\" list"));
    };
    let polys = texts
        .iter()
        .map(|t| parse_polynomial(t, &[1]))
        .collect::<Result<Vec<_>, _>>()?;
    let h = HigherDimInput::new(degree, polys)?;
    match higher_dim_product(&h)? {
        HigherDimOutcome::Product(p) => {
            println!("product = {p}");
        }
        HigherDimOutcome::NotRationalHomologySphere {
            invariant,
            root_power,
        } => {
            println!(
                "not a rational homology sphere: invariant {invariant} vanishes at zeta^{root_power}"
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
