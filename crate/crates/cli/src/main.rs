//! `adsfam` command line: coefficient tables and verification reports.

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use adsfam::minkowski::render_family_latex;
use adsfam::suite::{document, run};
use adsfam::{compute_coefficients, Cell, LieAlgebraContext, Report, Suite};

const GUARD_VAR: &str = "ADSFAM_MAX_DEGREE_GUARD";
const DEFAULT_GUARD: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "adsfam", version)]
#[command(about = "Exact symmetry breaking operator families for o(2,n) > o(2,n-1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients a_j(L) or b_j(L) of D_N(L)
    Coeffs {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        order: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },

    /// Run one verification suite
    Verify {
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Family order; for special-values the half order k of D_{2k}.
        #[arg(long = "N")]
        order: Option<u32>,
        /// Degree bound for the centralizer, power bound for the lemmas.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },

    /// Run every suite over a grid of (n, N)
    All {
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        #[arg(long = "N-range", value_parser = parse_range)]
        order_range: RangeInclusive<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        timing: bool,
    },

    /// Dump the structure constants of g_n as JSON
    Structure {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

/// Parses `a..b` as an inclusive range; `a > b` is the empty range.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let lo = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let hi = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok(lo..=hi)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn guard() -> Result<u32, String> {
    match std::env::var(GUARD_VAR) {
        Ok(v) => v.parse().map_err(|_| format!("{GUARD_VAR} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn timed(cell: &Cell, timing: bool) -> Report {
    let start = Instant::now();
    let mut report = run(cell);
    if timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn finish(reports: &[Report], note: Option<&str>) -> ExitCode {
    print_json(&document(reports, note));
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_coeffs(n: usize, order: u32, format: Format) -> ExitCode {
    let c = match compute_coefficients(n, order) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let sym = c.parity.symbol();
    match format {
        Format::Json => {
            let list: Vec<String> = c.coeffs.iter().map(|p| p.render()).collect();
            println!("{}", json!({ sym: list }));
        }
        Format::Csv => {
            println!("j,{sym}_j");
            for (j, p) in c.coeffs.iter().enumerate() {
                println!("{j},{}", p.render());
            }
        }
        Format::Latex => {
            println!("\\begin{{align*}}");
            for (j, p) in c.coeffs.iter().enumerate() {
                println!("{sym}_{{{j}}}(\\lambda) &= {} \\\\", p.render_latex());
            }
            println!("D_{{{order}}}^{{\\mathrm{{nc}}}}(\\lambda) &= {}", render_family_latex(&c));
            println!("\\end{{align*}}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(suite: Suite, n: usize, order: Option<u32>, max_degree: u32, timing: bool) -> ExitCode {
    if n < 4 {
        return usage(format!("n must be at least 4, got {n}"));
    }
    let limit = match guard() {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let order = match (suite.uses_order(), order) {
        (true, None) => return usage(format!("suite {suite} needs --N")),
        (true, o) => o,
        (false, _) => None,
    };
    match suite {
        Suite::Uniqueness if order == Some(0) => return usage("uniqueness needs N >= 1"),
        Suite::SpecialValues if order == Some(0) => return usage("special-values needs N >= 1"),
        Suite::Uniqueness if order.unwrap_or(0) > limit => {
            return usage(format!("N exceeds {GUARD_VAR} = {limit}"))
        }
        Suite::Centralizer if max_degree > limit => {
            return usage(format!("max degree exceeds {GUARD_VAR} = {limit}"))
        }
        _ => {}
    }
    let report = timed(&Cell { suite, n, order, max_degree }, timing);
    finish(&[report], None)
}

fn grid(ns: RangeInclusive<usize>, orders: RangeInclusive<usize>, limit: u32) -> Vec<Cell> {
    let top = *orders.end() as u32;
    let mut cells = Vec::new();
    if ns.is_empty() || orders.is_empty() {
        return cells;
    }
    for n in ns {
        for suite in Suite::ALL {
            if !suite.uses_order() {
                let max_degree = match suite {
                    Suite::Centralizer => top.clamp(2, limit.max(2)),
                    _ => top.clamp(1, 4),
                };
                cells.push(Cell { suite, n, order: None, max_degree });
                continue;
            }
            for order in orders.clone().map(|o| o as u32) {
                let skip = match suite {
                    Suite::Uniqueness => order == 0 || order > limit,
                    Suite::SpecialValues => order == 0,
                    _ => false,
                };
                if !skip {
                    cells.push(Cell { suite, n, order: Some(order), max_degree: 0 });
                }
            }
        }
    }
    cells
}

fn cmd_all(ns: RangeInclusive<usize>, orders: RangeInclusive<usize>, jobs: usize, timing: bool) -> ExitCode {
    if *ns.start() < 4 && !ns.is_empty() {
        return usage(format!("n must be at least 4, got {}", ns.start()));
    }
    let limit = match guard() {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let cells = grid(ns, orders, limit);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let mut reports: Vec<Report> = pool.install(|| cells.par_iter().map(|c| timed(c, timing)).collect());
    reports.sort_by_key(Report::sort_key);
    let note = cells.is_empty().then_some("empty range: no checks run");
    finish(&reports, note)
}

fn cmd_structure(n: usize) -> ExitCode {
    match LieAlgebraContext::new(n) {
        Ok(ctx) => {
            print_json(&json!({ "schema": 1, "n": n, "dimension": ctx.dim(), "brackets": ctx.structure_json() }));
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Coeffs { n, order, format } => cmd_coeffs(n, order, format),
        Command::Verify { suite, n, order, max_degree, timing } => {
            cmd_verify(suite, n, order, max_degree, timing)
        }
        Command::All { n_range, order_range, jobs, timing } => cmd_all(n_range, order_range, jobs, timing),
        Command::Structure { n } => cmd_structure(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_are_inclusive() {
        assert_eq!(parse_range("4..6").unwrap(), 4..=6);
        assert!(parse_range("5..4").unwrap().is_empty());
        assert!(parse_range("4-6").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn grid_respects_guard_and_skips_trivial_orders() {
        let cells = grid(4..=4, 0..=3, 2);
        assert!(!cells.iter().any(|c| c.suite == Suite::Uniqueness && c.order.unwrap() > 2));
        assert!(!cells.iter().any(|c| c.suite == Suite::SpecialValues && c.order == Some(0)));
        let centralizer = cells.iter().find(|c| c.suite == Suite::Centralizer).unwrap();
        assert_eq!(centralizer.max_degree, 2);
        assert!(grid(4..=4, parse_range("3..2").unwrap(), 6).is_empty());
    }
}
