//! `drg`: invertibility of distance matrices of distance-regular graphs from
//! intersection arrays, strongly-regular parameters or named graph families.

mod output;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use drg_core::enumerate::{diameter3_arrays, feasible_srg_arrays, sweep};
use drg_core::exact::rational::parse_rational_list;
use drg_core::exact::{invert_exact, BigRational, RationalMatrix};
use drg_core::oracle::{cross_validate, graph::parse_params, intersection_array_of, Family, Graph};
use drg_core::{
    analyze, analyze_distance, conjecture_check, distance_seed, srg_closed_form, CoefficientTable, IntersectionArray,
    SrgParams,
};

use output::{AnalyzeOutput, ConjectureOutput, DirectCheck, OracleOutput, Render, SrgOutput, SweepOutput};

#[derive(Debug, Parser)]
#[command(
    name = "drg",
    version,
    about = "Exact distance-matrix inverses for distance-regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Print more detail (repeat for more).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide invertibility and compute the inverse.
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Coefficients x_0..x_d of X = sum x_j A_j (default: 0,1,..,d).
        #[arg(long)]
        seed: Option<String>,
    },
    /// Closed form for a strongly-regular parameter set.
    Srg {
        /// Parameters as n,k,a,c.
        #[arg(long = "srg", visible_alias = "params", value_name = "N,K,A,C")]
        params: String,
    },
    /// Compare det(Q) with the product of alpha over the eigenvalues.
    Conjecture {
        #[command(flatten)]
        source: OptionalSource,
        #[arg(long)]
        seed: Option<String>,
        /// Sweep every feasible strongly-regular parameter set with n <= N.
        #[arg(long, value_name = "N", conflicts_with_all = ["array", "family", "sweep_d3"])]
        sweep_d2: Option<i64>,
        /// Sweep diameter-3 arrays with b_i <= BMAX and c_i <= CMAX.
        #[arg(long, value_name = "BMAX,CMAX", conflicts_with_all = ["array", "family"])]
        sweep_d3: Option<String>,
    },
    /// Check every analytic identity on a concrete graph.
    Oracle {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
    },
}

#[derive(Debug, Args)]
struct Source {
    /// Intersection array "b0,..,b_(d-1);c1,..,c_d".
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    array: Option<String>,
    /// Graph family: cycle, petersen, hamming, johnson, complete_multipartite, hypercube.
    #[arg(long, requires = "params")]
    family: Option<String>,
    /// Family parameters as a comma separated list.
    #[arg(long)]
    params: Option<String>,
}

#[derive(Debug, Args)]
struct OptionalSource {
    #[arg(long, conflicts_with = "family")]
    array: Option<String>,
    #[arg(long, requires = "params")]
    family: Option<String>,
    #[arg(long)]
    params: Option<String>,
}

/// Input resolved to an array, with the graph when one was named.
struct Resolved {
    label: String,
    array: IntersectionArray,
    graph: Option<Graph>,
}

fn resolve(array: Option<&str>, family: Option<&str>, params: Option<&str>) -> Result<Resolved> {
    match (array, family) {
        (Some(text), None) => {
            let array: IntersectionArray = text.parse()?;
            array.sphere_sizes()?;
            Ok(Resolved {
                label: format!("{{{array}}}"),
                array,
                graph: None,
            })
        }
        (None, Some(name)) => {
            let params = parse_params(params.unwrap_or("")).context("family parameters must be integers")?;
            let family = Family::parse(name, &params)?;
            let graph = family.build();
            let array = intersection_array_of(&graph)?;
            Ok(Resolved {
                label: family.to_string(),
                array,
                graph: Some(graph),
            })
        }
        _ => bail!("give exactly one of --array or --family"),
    }
}

fn seed_for(array: &IntersectionArray, seed: Option<&str>) -> Result<Vec<BigRational>> {
    match seed {
        None => Ok(distance_seed(array.diameter())),
        Some(text) => {
            let seed = parse_rational_list(text)?;
            if seed.len() != array.diameter() + 1 {
                bail!("seed has {} entries, expected {}", seed.len(), array.diameter() + 1);
            }
            Ok(seed)
        }
    }
}

/// Outcome of a successful run: the rendered record and whether it signals
/// an analytic inconsistency.
struct Outcome {
    record: Box<dyn Render>,
    inconsistent: bool,
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze { source, seed } => {
            let r = resolve(
                source.array.as_deref(),
                source.family.as_deref(),
                source.params.as_deref(),
            )?;
            let seed = seed_for(&r.array, seed.as_deref())?;
            let report = analyze(&r.array, &seed)?;
            let direct = r.graph.as_ref().map(|g| {
                let dist = g.distances().expect("family graphs are connected");
                let n = dist.len();
                let matrix = RationalMatrix::from_fn(n, n, |u, v| seed[dist[u][v]].clone());
                let invertible = invert_exact(&matrix).expect("square").is_invertible();
                DirectCheck {
                    vertices: n,
                    invertible,
                    agrees: invertible == report.invertible,
                }
            });
            let inconsistent = direct.as_ref().is_some_and(|d| !d.agrees);
            let table = (cli.verbose > 0).then(|| CoefficientTable::build(&r.array, &seed).expect("seed checked"));
            Ok(Outcome {
                record: Box::new(AnalyzeOutput {
                    input: r.label,
                    notes: r.array.notes(),
                    report,
                    direct,
                    table: table.map(|t| t.dump()),
                }),
                inconsistent,
            })
        }
        Command::Srg { params } => {
            let params: SrgParams = params.parse()?;
            let report = srg_closed_form(&params)?;
            let general = analyze_distance(&params.to_array()?);
            let inconsistent =
                general.invertible != report.invertible || general.w != report.inverse_in_distance_basis();
            Ok(Outcome {
                record: Box::new(SrgOutput { report }),
                inconsistent,
            })
        }
        Command::Conjecture {
            source,
            seed,
            sweep_d2,
            sweep_d3,
        } => {
            if let Some(n_max) = sweep_d2 {
                if *n_max < 4 {
                    bail!("--sweep-d2 needs N >= 4");
                }
                let arrays: Vec<_> = feasible_srg_arrays(*n_max).into_iter().map(|(_, a)| a).collect();
                return Ok(sweep_outcome(format!("d2 n<={n_max}"), &arrays));
            }
            if let Some(bounds) = sweep_d3 {
                let (b_max, c_max) = match parse_params(bounds).as_deref() {
                    Ok(&[b, c]) if b >= 1 && c >= 1 => (b as i64, c as i64),
                    _ => bail!("--sweep-d3 expects BMAX,CMAX with both at least 1, got `{bounds}`"),
                };
                let arrays = diameter3_arrays(b_max, c_max);
                return Ok(sweep_outcome(format!("d3 b<={b_max} c<={c_max}"), &arrays));
            }
            let r = resolve(
                source.array.as_deref(),
                source.family.as_deref(),
                source.params.as_deref(),
            )
            .context("conjecture needs --array, --family, --sweep-d2 or --sweep-d3")?;
            let seed = seed_for(&r.array, seed.as_deref())?;
            let report = conjecture_check(&r.array, &seed)?;
            let inconsistent = report.established && !report.equal;
            Ok(Outcome {
                record: Box::new(ConjectureOutput { input: r.label, report }),
                inconsistent,
            })
        }
        Command::Oracle { family, params } => {
            let params = parse_params(params).context("family parameters must be integers")?;
            let family = Family::parse(family, &params)?;
            let validation = cross_validate(&family.build())?;
            let inconsistent = !validation.all_passed();
            Ok(Outcome {
                record: Box::new(OracleOutput {
                    family: family.to_string(),
                    validation,
                }),
                inconsistent,
            })
        }
    }
}

fn sweep_outcome(label: String, arrays: &[IntersectionArray]) -> Outcome {
    let rows = sweep(arrays, |a| {
        conjecture_check(a, &distance_seed(a.diameter())).expect("distance seed")
    });
    let inconsistent = rows.iter().any(|r| r.established && !r.equal);
    Outcome {
        record: Box::new(SweepOutput {
            sweep: label,
            count: rows.len(),
            all_equal: rows.iter().all(|r| r.equal),
            rows,
        }),
        inconsistent,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are validation errors; exit code 2 is reserved
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Text => outcome.record.text(cli.verbose),
                Format::Json => outcome.record.json(),
            };
            println!("{text}");
            if outcome.inconsistent {
                eprintln!("error: analytic result disagrees with an independent check");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
