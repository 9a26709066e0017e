//! Command-line driver for the certification pipeline: enumerate the
//! local-view catalogue, compute exact coefficient tables, certify the
//! energy bounds symbolically, and cross-check numerically with an exact
//! simplex.
//!
//! Exit codes: 0 when every requested check passes, 1 when a verification
//! fails (a wrong count, a failed sign check, a simplex mismatch), 2 for
//! usage and input errors.

mod cache;
mod selfcheck;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use potts_core::algebra::{parse_rational, rational, Rational};
use potts_core::coeffs::{Case, CoeffSet, Sense};
use potts_core::localview::Catalogue;
use potts_core::verify::{check_k44_feasibility, crosscheck_lp, verify_max, verify_min};

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "pottscert",
    version,
    about = "Certifies that K4,4 minimises and K5 maximises the antiferromagnetic \
             Potts internal energy over 4-regular graphs, exactly"
)]
struct Cli {
    /// Cache directory for catalogues, coefficient tables and reports
    /// (default: $POTTS_CACHE_DIR, else ./.pottscache).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads for the parallel stages (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the catalogue of local views and cache it.
    Generate {
        /// Vertex degree of the regular graphs, 2 to 5. Degree 5 is
        /// enumerable but far too large for the verification stages.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(2..=5))]
        d: u8,
        /// Also write the catalogue text to this path.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Compute the exact LP coefficient tables for one case.
    Coeffs {
        /// Case label: q5, qge6 or max.
        #[arg(long, value_parser = any_case)]
        case: Case,
    },
    /// Certify a minimisation case and write its certificate report.
    VerifyMin {
        /// Case label: q5 or qge6.
        #[arg(long, value_parser = min_case)]
        case: Case,
        /// Also write the report to this path.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Certify the maximisation case and write its certificate report.
    VerifyMax {
        /// Also write the report to this path.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Check that the reference view distribution satisfies the LP
    /// constraints identically in (t, r).
    FeasibilityCheck {
        /// Case label: q5 or qge6 (default: both).
        #[arg(long, value_parser = min_case)]
        case: Option<Case>,
    },
    /// Solve the LP at a concrete (q, t) with an exact rational simplex
    /// and compare the optimum with the reference energy.
    Crosscheck {
        /// Which bound to check.
        #[arg(long)]
        sense: SenseArg,
        /// Sample temperature t as a rational, e.g. 1/2.
        #[arg(long, value_parser = rational_arg)]
        t0: Rational,
        /// Number of colours, at least 5.
        #[arg(long)]
        q: i64,
    },
    /// Run the internal consistency checks.
    Selfcheck,
    /// Run the full pipeline: catalogue, coefficients, feasibility, all
    /// three certificates, and sample simplex cross-checks.
    RunAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum SenseArg {
    Min,
    Max,
}

fn any_case(s: &str) -> Result<Case, String> {
    Case::from_label(s).ok_or_else(|| format!("unknown case {s:?} (expected q5, qge6 or max)"))
}

fn min_case(s: &str) -> Result<Case, String> {
    let case = any_case(s)?;
    if case.sense() != Sense::Min {
        return Err("expected a minimisation case: q5 or qge6".to_string());
    }
    Ok(case)
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
        if let Err(e) = pool {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let cache = Cache::resolve(cli.cache_dir);
    match dispatch(cli.command, &cache) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, cache: &Cache) -> Result<bool> {
    match command {
        Command::Generate { d, out } => cmd_generate(cache, d as usize, out.as_deref()),
        Command::Coeffs { case } => {
            let cat = load_catalogue(cache)?;
            load_coeffs(cache, &cat, case)?;
            Ok(true)
        }
        Command::VerifyMin { case, report } => {
            let cat = load_catalogue(cache)?;
            let records = load_coeffs(cache, &cat, case)?;
            stage_verify_min(cache, &cat, &records, report.as_deref())
        }
        Command::VerifyMax { report } => {
            let cat = load_catalogue(cache)?;
            let records = load_coeffs(cache, &cat, Case::MaxQGe5)?;
            stage_verify_max(cache, &cat, &records, report.as_deref())
        }
        Command::FeasibilityCheck { case } => {
            let cat = load_catalogue(cache)?;
            let cases = match case {
                Some(c) => vec![c],
                None => vec![Case::MinQ5, Case::MinQGe6],
            };
            let mut pass = true;
            for c in cases {
                let records = load_coeffs(cache, &cat, c)?;
                pass &= stage_feasibility(&cat, &records)?;
            }
            Ok(pass)
        }
        Command::Crosscheck { sense, t0, q } => {
            let case = crosscheck_case(sense, q)?;
            if t0 <= rational(0, 1) {
                bail!("--t0 must be a positive rational");
            }
            let cat = load_catalogue(cache)?;
            let records = load_coeffs(cache, &cat, case)?;
            stage_crosscheck(&cat, &records, q, &t0)
        }
        Command::Selfcheck => selfcheck::run(cache),
        Command::RunAll => cmd_run_all(cache),
    }
}

/// Maps a requested (sense, q) to the case whose certificate covers it.
fn crosscheck_case(sense: SenseArg, q: i64) -> Result<Case> {
    if q < 5 {
        bail!("the reference energies are defined for q >= 5, got q={q}");
    }
    Ok(match (sense, q) {
        (SenseArg::Min, 5) => Case::MinQ5,
        (SenseArg::Min, _) => Case::MinQGe6,
        (SenseArg::Max, _) => Case::MaxQGe5,
    })
}

fn cmd_generate(cache: &Cache, d: usize, out: Option<&Path>) -> Result<bool> {
    let cat = load_catalogue_of_degree(cache, d)?;
    if let Some(path) = out {
        std::fs::write(path, cat.to_text())
            .with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(true)
}

fn load_catalogue(cache: &Cache) -> Result<Catalogue> {
    load_catalogue_of_degree(cache, 4)
}

fn load_catalogue_of_degree(cache: &Cache, d: usize) -> Result<Catalogue> {
    let start = Instant::now();
    let (cat, cached) = cache.load_or_generate_catalogue(d)?;
    let empty_inner = cat
        .views()
        .iter()
        .filter(|v| v.inner_edge_count() == 0)
        .count();
    println!(
        "catalogue d={d}: {} views, {empty_inner} with empty inner graph, hash {}{}",
        cat.len(),
        &cat.hash()[..12],
        elapsed_note(cached, start),
    );
    Ok(cat)
}

fn load_coeffs(cache: &Cache, cat: &Catalogue, case: Case) -> Result<CoeffSet> {
    let start = Instant::now();
    let (set, cached) = cache.load_or_compute_coeffs(cat, case)?;
    println!(
        "coefficients [{}]: {} records{}",
        case.label(),
        set.len(),
        elapsed_note(cached, start),
    );
    Ok(set)
}

fn elapsed_note(cached: bool, start: Instant) -> String {
    if cached {
        " (cached)".to_string()
    } else {
        format!(" ({:.1}s)", start.elapsed().as_secs_f64())
    }
}

fn stage_feasibility(cat: &Catalogue, records: &CoeffSet) -> Result<bool> {
    let start = Instant::now();
    match check_k44_feasibility(cat, records) {
        Ok(()) => {
            println!(
                "feasibility [{}]: reference distribution satisfies all constraints \
                 identically ({:.1}s)",
                records.case().label(),
                start.elapsed().as_secs_f64()
            );
            Ok(true)
        }
        Err(e) => {
            println!("feasibility [{}]: FAILED: {e}", records.case().label());
            Ok(false)
        }
    }
}

fn stage_verify_min(
    cache: &Cache,
    cat: &Catalogue,
    records: &CoeffSet,
    extra_report: Option<&Path>,
) -> Result<bool> {
    let case = records.case();
    let start = Instant::now();
    let cert = match verify_min(cat, records) {
        Ok(c) => c,
        Err(e) => {
            println!("verify-min [{}]: FAILED: {e}", case.label());
            return Ok(false);
        }
    };
    let elapsed = start.elapsed().as_secs_f64();
    write_report(cache, case, &cert.report(), extra_report)?;
    println!(
        "verify-min [{}]: pass={} tight={} strict={} failed={} ({elapsed:.1}s)",
        case.label(),
        cert.pass(),
        cert.tight_count(),
        cert.strict_count(),
        cert.failed_count(),
    );
    Ok(cert.pass())
}

fn stage_verify_max(
    cache: &Cache,
    cat: &Catalogue,
    records: &CoeffSet,
    extra_report: Option<&Path>,
) -> Result<bool> {
    let start = Instant::now();
    let cert = match verify_max(cat, records) {
        Ok(c) => c,
        Err(e) => {
            println!("verify-max: FAILED: {e}");
            return Ok(false);
        }
    };
    let elapsed = start.elapsed().as_secs_f64();
    write_report(cache, Case::MaxQGe5, &cert.report(), extra_report)?;
    println!(
        "verify-max: pass={} tight={} strict={} failed={} ({elapsed:.1}s)",
        cert.pass(),
        cert.tight_count(),
        cert.strict_count(),
        cert.failed_count(),
    );
    Ok(cert.pass())
}

fn write_report(cache: &Cache, case: Case, text: &str, extra: Option<&Path>) -> Result<()> {
    let path = cache.report_path(case);
    cache.write_atomic(&path, text)?;
    println!("report: {}", path.display());
    if let Some(p) = extra {
        std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
        println!("report: {}", p.display());
    }
    Ok(())
}

fn stage_crosscheck(cat: &Catalogue, records: &CoeffSet, q: i64, t0: &Rational) -> Result<bool> {
    let case = records.case();
    let start = Instant::now();
    let check = match crosscheck_lp(cat, records, q, t0) {
        Ok(c) => c,
        Err(e) => {
            println!("crosscheck [{}] q={q} t0={t0}: FAILED: {e}", case.label());
            return Ok(false);
        }
    };
    let elapsed = start.elapsed().as_secs_f64();
    if check.matches() {
        println!(
            "crosscheck [{}] q={q} t0={t0}: simplex optimum equals the reference \
             energy, support size {} ({elapsed:.1}s)",
            case.label(),
            check.support_size,
        );
        Ok(true)
    } else {
        println!(
            "crosscheck [{}] q={q} t0={t0}: MISMATCH: optimum {} but reference {} \
             ({elapsed:.1}s)",
            case.label(),
            check.optimum,
            check.reference,
        );
        Ok(false)
    }
}

fn cmd_run_all(cache: &Cache) -> Result<bool> {
    let total = Instant::now();
    let cat = load_catalogue(cache)?;
    let mut pass = cat.len() == 3529;
    if !pass {
        println!("run-all: expected 3529 views, found {}", cat.len());
    }

    let q5 = load_coeffs(cache, &cat, Case::MinQ5)?;
    let qge6 = load_coeffs(cache, &cat, Case::MinQGe6)?;
    let max = load_coeffs(cache, &cat, Case::MaxQGe5)?;

    pass &= stage_feasibility(&cat, &q5)?;
    pass &= stage_feasibility(&cat, &qge6)?;
    pass &= stage_verify_min(cache, &cat, &q5, None)?;
    pass &= stage_verify_min(cache, &cat, &qge6, None)?;
    pass &= stage_verify_max(cache, &cat, &max, None)?;
    pass &= stage_crosscheck(&cat, &q5, 5, &rational(1, 2))?;
    pass &= stage_crosscheck(&cat, &max, 5, &rational(1, 1))?;

    println!(
        "run-all: {} ({:.1}s)",
        if pass { "PASS" } else { "FAIL" },
        total.elapsed().as_secs_f64()
    );
    Ok(pass)
}
