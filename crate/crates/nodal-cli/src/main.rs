use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nodal::catalog::{catalog_build, Tag};
use nodal::ideal::Budget;
use nodal::parse::{infer_conductor, parse_point, parse_poly, ParseContext};
use nodal::poly::MultiPoly;
use nodal::projective::ProjPoint;
use nodal::report::VerificationReport;
use nodal::singular::search_singular_points;
use nodal::verify;

#[derive(Parser)]
#[command(name = "nodal", version, about = "Exact checks for nodal cubic threefolds with finite automorphism groups")]
struct Cli {
    /// Cap on polynomial reductions per Groebner basis.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ReportArg {
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Include per-claim timings in the JSON report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check table rows and excluded groups.
    Verify {
        #[arg(long, value_name = "TAG", conflicts_with = "all", required_unless_present = "all")]
        variety: Option<Tag>,
        /// All rows plus the excluded-group battery.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Compute Aut(X) of a table row.
    Aut {
        #[arg(long, value_name = "TAG")]
        variety: Tag,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Certify and type the singular points of a row or of a cubic read from a file.
    Sing {
        #[arg(long, value_name = "TAG", conflicts_with = "input", required_unless_present = "input")]
        variety: Option<Tag>,
        /// One polynomial per file; optional lines `point (a:b:...)` list the claimed singular points.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Search bound for integer singular points when none are listed.
        #[arg(long, default_value_t = 2)]
        search: i64,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Invariance conditions of the six-node family.
    Pr1 {
        #[command(flatten)]
        out: ReportArg,
    },
    /// Eliminations for the J11 and four-node families.
    Eliminations {
        #[command(flatten)]
        out: ReportArg,
    },
    /// Describe catalog entries.
    Catalog {
        /// One line per entry.
        #[arg(long, conflicts_with = "variety", required_unless_present = "variety")]
        list: bool,
        /// Equation and seed points of one entry.
        #[arg(long, value_name = "TAG")]
        variety: Option<Tag>,
    },
}

fn read_input(path: &PathBuf) -> Result<(MultiPoly, Option<Vec<ProjPoint>>), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut poly = None;
    let mut points = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("point") {
            let c = parse_point(rest.trim(), infer_conductor(rest)).map_err(|e| e.to_string())?;
            points.push(ProjPoint::new(c).map_err(|e| e.to_string())?);
        } else if poly.is_none() {
            let n = (0..10).rev().find(|i| line.contains(&format!("x{i}"))).map_or(5, |i| (i + 1).max(5));
            let ctx = ParseContext::coords(n, infer_conductor(line));
            poly = Some(parse_poly(line, &ctx).map_err(|e| e.to_string())?);
        } else {
            return Err(format!("unexpected line {line:?}"));
        }
    }
    let poly = poly.ok_or("no polynomial in input")?;
    if points.iter().any(|p| p.len() != poly.nvars()) {
        return Err("point dimension does not match the polynomial".into());
    }
    Ok((poly, (!points.is_empty()).then_some(points)))
}

fn emit(rep: &VerificationReport, out: &ReportArg) -> Result<(), String> {
    print!("{}", rep.summary());
    if let Some(path) = &out.report {
        std::fs::write(path, rep.to_json(out.timing)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    let budget = cli.budget.map_or_else(Budget::default, |n| Budget { max_reductions: n as usize });
    let (rep, out) = match &cli.command {
        Command::Verify { variety, all, out } => {
            let rep = if *all {
                verify::verify_all(&budget)
            } else {
                let tag = variety.expect("clap enforces one of the flags");
                if tag.is_family() {
                    return Err(format!("{tag} is a parametric family; use `pr1` or `eliminations`"));
                }
                verify::verify_row(tag, &budget)
            };
            (rep, out)
        }
        Command::Aut { variety, out } => (verify::aut_report(*variety), out),
        Command::Sing { variety, input, search, out } => {
            let (name, f, points) = match (variety, input) {
                (Some(tag), _) => {
                    let e = catalog_build(*tag);
                    let f = e.cubic().map_err(|e| e.to_string())?.clone();
                    (tag.name().to_string(), f, e.seed_points)
                }
                (None, Some(path)) => {
                    let (f, pts) = read_input(path)?;
                    let pts = pts.unwrap_or_else(|| search_singular_points(&f, *search));
                    let name = path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned());
                    (name, f, pts)
                }
                (None, None) => unreachable!("clap enforces one of the flags"),
            };
            if points.is_empty() {
                return Err("no singular points listed or found; the search only covers small integer points".into());
            }
            (verify::singularity_report(&name, &f, &points, &budget), out)
        }
        Command::Pr1 { out } => (verify::verify_pr1(&budget), out),
        Command::Eliminations { out } => (verify::verify_eliminations(&budget), out),
        Command::Catalog { list, variety } => {
            if *list {
                for tag in Tag::ALL {
                    println!("{tag}\t{}", catalog_build(tag).presentation);
                }
            } else if let Some(tag) = variety {
                let e = catalog_build(*tag);
                println!("{tag}: {}", e.presentation);
                println!("form: {}", e.form.poly.fmt_with(&e.form.names()));
                if !e.relations.is_empty() {
                    let rel: Vec<String> = e.relations.iter().map(|r| r.fmt_with(&e.form.params)).collect();
                    println!("relations: {} = 0", rel.join(" = 0, "));
                }
                for p in &e.seed_points {
                    println!("point {p}");
                }
            }
            return Ok(true);
        }
    };
    emit(&rep, out)?;
    Ok(rep.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
