//! Command-line front-end: growth functions and certified growth rates from
//! Coxeter graph or polyhedron files, structural transforms, series
//! estimates, and the full identity suite over the built-in corpus.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use coxgrowth::coxeter::parse_coxeter_graph;
use coxgrowth::growth::{
    analyze_growth_against, ku_criterion, pseudo_growth, rate_from_series, GrowthError,
    GrowthReport,
};
use coxgrowth::polyhedron::{
    edge, parse_polyhedron, render_polyhedron, CuspPairing, Relation,
};
use coxgrowth::verify::{self, SuiteOptions};
use coxgrowth::{IntPolynomial, RationalFunction};

#[derive(Parser)]
#[command(
    name = "coxgrowth",
    version,
    about = "Growth functions and certified growth rates of 3-dimensional hyperbolic Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Fractional decimal digits for rendered rate bounds.
    #[arg(long, global = true, default_value_t = 30)]
    precision: u32,
    /// Certified rate intervals are narrowed to width 2^-WIDTH_EXP.
    #[arg(long, global = true, default_value_t = 40)]
    width_exp: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Growth function and rate of a Coxeter system from a graph file.
    GrowthGraph { path: PathBuf },
    /// Census, counting identities, realizability conditions, large-edge
    /// bound, and growth analysis of a polyhedron file.
    GrowthPoly { path: PathBuf },
    /// Pinch an edge to a cusp, or open a cusp into an edge; writes the
    /// result in the standard file format and the censuses to stderr.
    Transform {
        path: PathBuf,
        /// Edge to contract, as `v1,v2`.
        #[arg(long, value_name = "V1,V2", conflicts_with_all = ["open", "order"])]
        pinch: Option<String>,
        /// (2,2,2,2) vertex to split.
        #[arg(long, value_name = "VERTEX", requires = "order")]
        open: Option<usize>,
        /// Which opposite face pair at the opened vertex keeps its edges.
        #[arg(long, value_enum, default_value_t = Pairing::First)]
        pairing: Pairing,
        /// Order of the edge created by --open.
        #[arg(long = "m", value_name = "M")]
        order: Option<u32>,
        /// Write the result here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Re-derive the whole identity chain over the built-in corpus.
    Verify {
        /// Upper end of the large-order grid; the grid is 7..=M.
        #[arg(long = "m-grid", value_name = "M", default_value_t = 12)]
        m_grid: u32,
        /// Corrupt one identity to prove the suite can fail.
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// Series-side rate estimates next to the certified interval.
    Series {
        path: PathBuf,
        /// Number of coefficients beyond the constant term.
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Pairing {
    First,
    Second,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if cli.precision < 1 {
        return Err(anyhow!("--precision must be at least 1"));
    }
    let width = BigRational::new(BigInt::one(), BigInt::one() << cli.width_exp);
    match &cli.command {
        Command::GrowthGraph { path } => cmd_growth_graph(cli, path, &width),
        Command::GrowthPoly { path } => cmd_growth_poly(cli, path, &width),
        Command::Transform {
            path,
            pinch,
            open,
            pairing,
            order,
            out,
        } => cmd_transform(path, pinch.as_deref(), *open, *pairing, *order, out.as_deref()),
        Command::Verify {
            m_grid,
            inject_failure,
        } => cmd_verify(cli, *m_grid, *inject_failure),
        Command::Series { path, terms } => cmd_series(cli, path, *terms, &width),
    }
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn analyze(f: &RationalFunction, display: Option<&IntPolynomial>, width: &BigRational) -> GrowthReport {
    analyze_growth_against(f, display, width)
}

fn cmd_growth_graph(cli: &Cli, path: &Path, width: &BigRational) -> Result<ExitCode> {
    let system = parse_coxeter_graph(&read_input(path)?)?;
    let f = system.steinberg_growth();
    let analysis = analyze(&f, None, width);
    match cli.format {
        Format::Text => {
            let mut out = format!("rank         {}\n", system.rank());
            report::growth_text(&analysis, cli.precision, &mut out);
            print!("{out}");
        }
        Format::Structured => {
            let value = json!({
                "rank": system.rank(),
                "growth": report::growth_json(&analysis, cli.precision),
            });
            report::print_json(&value);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_growth_poly(cli: &Cli, path: &Path, width: &BigRational) -> Result<ExitCode> {
    let p = parse_polyhedron(&read_input(path)?)?;
    let census = p.classify_vertices();
    let identities = p.check_counting_identities()?;
    let andreev = p.andreev_check();
    let bound = p.large_edge_bound()?;
    let f = pseudo_growth(&p);
    let display = verify::display_normal_form(&p)?.filter(|h| ku_criterion(h).applies());
    let analysis = analyze(&f, display.as_ref(), width);

    match cli.format {
        Format::Text => {
            let mut out = format!("census       {}\n", report::census_text(&p, &census));
            for line in &identities.lines {
                let relation = match line.relation {
                    Relation::Eq => "=",
                    Relation::Ge => ">=",
                };
                out.push_str(&format!(
                    "{} {}: {} {} {}\n",
                    if line.pass { "ok  " } else { "FAIL" },
                    line.name,
                    line.lhs,
                    relation,
                    line.rhs
                ));
            }
            out.push_str(&format!(
                "realizability{} {}\n",
                if andreev.partial { " (vertex conditions only)" } else { "" },
                if andreev.all_pass { "pass" } else { "FAIL" }
            ));
            for condition in &andreev.conditions {
                if !condition.pass {
                    out.push_str(&format!(
                        "  FAIL {}: {}\n",
                        condition.name,
                        condition.witnesses.join("; ")
                    ));
                }
            }
            out.push_str(&format!(
                "large edges  k={} F={} bound {}\n",
                bound.large_edge_count,
                bound.face_count,
                if bound.bound_holds { "holds" } else { "FAILS" }
            ));
            report::growth_text(&analysis, cli.precision, &mut out);
            print!("{out}");
        }
        Format::Structured => {
            let identity_rows: Vec<_> = identities
                .lines
                .iter()
                .map(|line| {
                    json!({
                        "name": line.name,
                        "lhs": line.lhs.to_string(),
                        "rhs": line.rhs.to_string(),
                        "relation": match line.relation { Relation::Eq => "=", Relation::Ge => ">=" },
                        "pass": line.pass,
                    })
                })
                .collect();
            let conditions: Vec<_> = andreev
                .conditions
                .iter()
                .map(|c| json!({"name": c.name, "pass": c.pass, "witnesses": c.witnesses}))
                .collect();
            let value = json!({
                "census": report::census_json(&p, &census),
                "counting_identities": {"all_pass": identities.all_pass, "lines": identity_rows},
                "realizability": {"partial": andreev.partial, "all_pass": andreev.all_pass, "conditions": conditions},
                "large_edge_bound": {
                    "large_edges": bound.large_edge_count,
                    "faces": bound.face_count,
                    "holds": bound.bound_holds,
                    "equality_case": bound.equality_case.as_ref().map(|eq| json!({
                        "unique_2222_cusp": eq.unique_2222_cusp,
                        "all_other_vertices_22m": eq.all_other_vertices_22m,
                    })),
                },
                "growth": report::growth_json(&analysis, cli.precision),
            });
            report::print_json(&value);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_edge_arg(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(anyhow!("expected `v1,v2`, got `{text}`"));
    }
    let a = parts[0].trim().parse().context("first vertex id")?;
    let b = parts[1].trim().parse().context("second vertex id")?;
    Ok(edge(a, b))
}

fn cmd_transform(
    path: &Path,
    pinch: Option<&str>,
    open: Option<usize>,
    pairing: Pairing,
    order: Option<u32>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let p = parse_polyhedron(&read_input(path)?)?;
    let transformed = match (pinch, open) {
        (Some(edge_text), None) => p.pinch(parse_edge_arg(edge_text)?)?,
        (None, Some(v)) => {
            let m = order.expect("clap enforces --m with --open");
            let pairing = match pairing {
                Pairing::First => CuspPairing::KeepFirst,
                Pairing::Second => CuspPairing::KeepSecond,
            };
            p.open_cusp(v, pairing, m)?
        }
        _ => return Err(anyhow!("exactly one of --pinch or --open is required")),
    };

    eprintln!("before  {}", report::census_text(&p, &p.classify_vertices()));
    eprintln!(
        "after   {}",
        report::census_text(&transformed, &transformed.classify_vertices())
    );
    let text = render_polyhedron(&transformed);
    match out {
        Some(out_path) => fs::write(out_path, text)
            .with_context(|| format!("writing {}", out_path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, m_grid: u32, inject_failure: bool) -> Result<ExitCode> {
    if m_grid < 7 {
        return Err(anyhow!("--m-grid must be at least 7"));
    }
    let options = SuiteOptions {
        grid_max: m_grid,
        tamper: inject_failure,
        ..SuiteOptions::default()
    };
    let reports = verify::run_suite(&options)?;
    let all_pass = reports.iter().all(|r| r.pass());
    match cli.format {
        Format::Text => {
            let mut out = String::new();
            report::checks_text(&reports, &mut out);
            print!("{out}");
        }
        Format::Structured => report::print_json(&report::checks_json(&reports)),
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Loads either input kind by its leading section keyword: `faces` opens a
/// polyhedron file, `rank` a Coxeter graph file.
fn load_growth_function(path: &Path) -> Result<RationalFunction> {
    let text = read_input(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first == "faces" {
        Ok(pseudo_growth(&parse_polyhedron(&text)?))
    } else {
        Ok(parse_coxeter_graph(&text)?.steinberg_growth())
    }
}

fn cmd_series(cli: &Cli, path: &Path, terms: usize, width: &BigRational) -> Result<ExitCode> {
    if terms < 2 {
        return Err(anyhow!("--terms must be at least 2"));
    }
    let f = load_growth_function(path)?;
    let estimates = match rate_from_series(&f, terms) {
        Ok(estimates) => estimates,
        Err(GrowthError::SeriesTerminated { .. }) => {
            match cli.format {
                Format::Text => println!("degenerate: polynomial growth series (finite group)"),
                Format::Structured => report::print_json(&json!({"degenerate": true})),
            }
            return Ok(ExitCode::SUCCESS);
        }
        Err(e) => return Err(e.into()),
    };
    let analysis = analyze(&f, None, width);
    let bounds = report::rate_bounds(&analysis, cli.precision);

    match cli.format {
        Format::Text => {
            println!("terms          {terms}");
            println!("a_0            {}", estimates.coefficients[0]);
            println!("a_{terms}          {}", estimates.coefficients[terms]);
            println!("root estimate  {:.12}", estimates.root_estimate);
            println!("ratio estimate {:.12}", estimates.ratio_estimate);
            if let Some((lo, hi)) = bounds {
                println!("certified      [{lo}, {hi}]");
            }
        }
        Format::Structured => {
            let value = json!({
                "terms": terms,
                "a0": estimates.coefficients[0].to_string(),
                "a_last": estimates.coefficients[terms].to_string(),
                "root_estimate": estimates.root_estimate,
                "ratio_estimate": estimates.ratio_estimate,
                "rate_lower": bounds.as_ref().map(|(lo, _)| lo.clone()),
                "rate_upper": bounds.as_ref().map(|(_, hi)| hi.clone()),
            });
            report::print_json(&value);
        }
    }
    Ok(ExitCode::SUCCESS)
}
