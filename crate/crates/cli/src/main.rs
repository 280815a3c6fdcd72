use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cqs::audit::{analyze_input, cross_check, family_sweep};
use cqs::cyclotomic::verify_o11;
use cqs::tables::{build_table_filtered, emit, ClassFilter, Format};
use cqs::{canonical_form, CyclicAction};

const INVALID_INPUT: u8 = 1;
const INCONSISTENT: u8 = 2;

/// Gorenstein and nearly Gorenstein classification of cyclic quotient
/// singularities.
#[derive(Parser)]
#[command(name = "cqs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify 1/n(t) as G, NG or notNG.
    Classify {
        n: i64,
        /// Comma-separated weights, e.g. 1,2,4.
        #[arg(value_parser = parse_weights, allow_hyphen_values = true)]
        weights: Weights,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        residue: bool,
        /// Cross-check against the brute-force oracle up to degree 3n.
        #[arg(long)]
        check: bool,
    },
    /// Classification table of all isomorphism classes in a range of orders.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: Format,
        #[arg(long)]
        residue: bool,
        /// List only classes with a weight invertible mod n.
        #[arg(long)]
        unit_weight_only: bool,
    },
    /// Print the canonical representative of the isomorphism class.
    Canon {
        n: i64,
        #[arg(value_parser = parse_weights, allow_hyphen_values = true)]
        weights: Weights,
    },
    /// Check the polynomial identities for the octahedral group O_11.
    VerifyO11 {
        #[arg(long)]
        json: bool,
    },
    /// Compare every closed-form family prediction in range with classify.
    Families {
        #[arg(long, default_value_t = 15)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        d_max: usize,
    },
}

#[derive(Clone)]
struct Weights(Vec<i64>);

fn parse_weights(s: &str) -> Result<Weights, String> {
    s.split(',')
        .map(|w| w.parse::<i64>().map_err(|_| format!("bad weight {w:?} in {s:?}")))
        .collect::<Result<_, _>>()
        .map(Weights)
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: cqs::tables::TableError| e.to_string())
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(INVALID_INPUT)
}

fn classify_cmd(n: i64, weights: &[i64], json: bool, with_residue: bool, check: bool) -> ExitCode {
    let report = match analyze_input(n, weights, with_residue) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let mut out = String::new();
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("json values serialize"));
    } else {
        let _ = write!(out, "{}", report.classification.verdict.label());
        if let Some(value) = report.residue_value() {
            let _ = write!(out, " residue={value}");
        }
        out.push('\n');
        if let Some(w) = &report.classification.witness {
            let _ = writeln!(out, "witness: {}", w.describe());
        }
        if let Some(w) = report.residue.as_ref().and_then(|r| r.infinity_witness.as_ref()) {
            let support: Vec<String> = w.support.iter().map(|i| (i + 1).to_string()).collect();
            let caps: Vec<String> = w.caps.iter().map(u32::to_string).collect();
            let _ = writeln!(
                out,
                "infinite: J={{{}}} caps=({}) saturated=t{}",
                support.join(","),
                caps.join(","),
                w.saturated + 1
            );
        }
        if let Some(note) = &report.classification.via_reduction {
            let _ = writeln!(out, "note: {note}");
        }
    }
    print!("{out}");
    if !check {
        return ExitCode::SUCCESS;
    }
    let bound = 3 * report.action.order();
    let result = cross_check(&report.action, bound);
    if result.agrees() {
        eprintln!("check: oracle agrees on {} monomials up to degree {bound}", result.monomials_checked);
        return ExitCode::SUCCESS;
    }
    for m in &result.disagreements {
        eprintln!("check: membership disagreement at {}", m.monomial_string());
    }
    for c in &result.conflicts {
        eprintln!("check: {c}");
    }
    ExitCode::from(INCONSISTENT)
}

fn table_cmd(d: usize, n_from: u32, n_to: u32, format: Format, residue: bool, unit_weight_only: bool) -> ExitCode {
    if d == 0 {
        return fail("dimension must be positive");
    }
    let filter = if unit_weight_only { ClassFilter::UnitWeight } else { ClassFilter::All };
    print!("{}", emit(&build_table_filtered(n_from, n_to, d, residue, filter), format));
    ExitCode::SUCCESS
}

fn canon_cmd(n: i64, weights: &[i64]) -> ExitCode {
    match CyclicAction::new(n, weights) {
        Ok(a) => {
            let c = canonical_form(&a);
            let t: Vec<String> = c.weights().iter().map(u32::to_string).collect();
            println!("{} {}", c.order(), t.join(","));
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}

fn verify_cmd(json: bool) -> ExitCode {
    let report = verify_o11();
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        for (i, check) in report.checks.iter().enumerate() {
            println!("{} {}. {}", if check.passed { "PASS" } else { "FAIL" }, i + 1, check.name);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(INCONSISTENT)
    }
}

fn families_cmd(n_max: u32, d_max: usize) -> ExitCode {
    let sweep = family_sweep(n_max, d_max);
    for (family, count) in &sweep.checked {
        println!("{family}: {count} classes");
    }
    for m in &sweep.mismatches {
        println!("MISMATCH {} family={} expected={} got={}", m.action, m.family, m.expected, m.verdict);
    }
    println!("mismatches: {}", sweep.mismatches.len());
    if sweep.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(INCONSISTENT)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(INVALID_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Classify { n, weights, json, residue, check } => classify_cmd(n, &weights.0, json, residue, check),
        Command::Table { d, n_from, n_to, format, residue, unit_weight_only } => {
            table_cmd(d, n_from, n_to, format, residue, unit_weight_only)
        }
        Command::Canon { n, weights } => canon_cmd(n, &weights.0),
        Command::VerifyO11 { json } => verify_cmd(json),
        Command::Families { n_max, d_max } => families_cmd(n_max, d_max),
    }
}
