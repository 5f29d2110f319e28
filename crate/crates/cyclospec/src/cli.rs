//! Command-line front end: coefficient tables, characteristic polynomials,
//! spectra, verification sweeps, and spectra comparison.
//!
//! Exit codes: 0 success / all passed, 1 verification failure, 2 usage or
//! input error. The CYCLOSPEC_THREADS environment variable caps sweep
//! parallelism.

use crate::cayley::{cayley_graph, isomorphic_small, parse_group_spec};
use crate::oracle::charpoly_exact;
use crate::polyalg::IntPoly;
use crate::report::VerificationReport;
use crate::sequences::{
    coefficient_table, SequenceCache, TableKind, REFERENCE_A_TABLE, REFERENCE_L_TABLE,
};
use crate::spectra::{
    check_gcd_theorem, check_iff_corollary, check_interval, check_lambda2_lambda4,
    check_spectral_map_closure, check_subgroup_closure, compare_group_spectra, complement_spectrum,
    cycle_spectrum, group_spectrum, SpectrumMultiset,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

pub const SCHEMA: &str = "cyclospec/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cyclospec", version, about = "Spectra and characteristic polynomials of Laplacians of cyclic-group Cayley graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficient table of L_n or A_n
    Tables {
        /// Which table: L or A
        #[arg(value_parser = parse_table_kind)]
        which: TableKind,
        /// Highest row index
        #[arg(long, default_value_t = 9)]
        max: i64,
        /// Diff rows against the embedded reference table and fail on mismatch
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the characteristic polynomial of the Laplacian of Z_n
    Charpoly {
        n: i64,
        /// Variable: a (= 2 - lambda) or lambda
        #[arg(long = "var", value_enum, default_value_t = Variable::A)]
        variable: Variable,
        /// rec: recurrence route; det: exact determinant; both: cross-check
        #[arg(long, value_enum, default_value_t = Method::Rec)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the Laplacian spectrum of a group, e.g. Z6 or Z2xZ3
    Spectrum {
        group: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run a verification sweep for one identity or theorem
    Verify {
        /// One of: l-product, l-square, three-term, doubling, divisibility,
        /// addition, shifted-addition, composition, gcd, interval, lambda24,
        /// subgroup, spectral-map, iff, complement-example
        identity: String,
        /// Upper bound for n
        #[arg(long)]
        n: Option<i64>,
        /// Upper bound for k
        #[arg(long)]
        k: Option<i64>,
        /// Upper bound for m
        #[arg(long)]
        m: Option<i64>,
        /// Upper bound for p
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Compare the Laplacian spectra (and graphs) of two groups of equal order
    Compare {
        group1: String,
        group2: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variable {
    A,
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Rec,
    Det,
    Both,
}

fn parse_table_kind(s: &str) -> Result<TableKind, String> {
    match s {
        "L" | "l" => Ok(TableKind::L),
        "A" | "a" => Ok(TableKind::A),
        _ => Err(format!("unknown table {s:?}, expected L or A")),
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_command(cli.command)
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(cli.command),
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("CYCLOSPEC_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            // Ignore failure if a pool was already installed.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
}

fn run_command(command: Command) -> i32 {
    init_thread_pool();
    let result = match command {
        Command::Tables {
            which,
            max,
            check,
            format,
        } => cmd_tables(which, max, check, format),
        Command::Charpoly {
            n,
            variable,
            method,
            format,
        } => cmd_charpoly(n, variable, method, format),
        Command::Spectrum { group, format } => cmd_spectrum(&group, format),
        Command::Verify {
            identity,
            n,
            k,
            m,
            p,
            format,
        } => cmd_verify(&identity, Bounds { n, k, m, p }, format),
        Command::Compare {
            group1,
            group2,
            format,
        } => cmd_compare(&group1, &group2, format),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn cmd_tables(
    which: TableKind,
    max: i64,
    check: bool,
    format: OutputFormat,
) -> Result<i32, String> {
    let mut cache = SequenceCache::new();
    let rows = coefficient_table(&mut cache, which, max).map_err(|e| e.to_string())?;
    let cells: Vec<(String, Vec<String>)> = rows
        .iter()
        .map(|(label, coeffs)| (label.clone(), coeffs.iter().map(|c| c.to_string()).collect()))
        .collect();
    match format {
        OutputFormat::Plain => {
            for (label, row) in &cells {
                println!("{label}\t{}", row.join("\t"));
            }
        }
        OutputFormat::Csv => {
            for (label, row) in &cells {
                println!("{label},{}", row.join(","));
            }
        }
        OutputFormat::Markdown => {
            let width = cells.first().map_or(0, |(_, r)| r.len());
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((0..width).map(|i| format!("a^{i}")))
                .collect();
            println!("| {} |", header.join(" | "));
            println!("|{}|", vec!["---"; width + 1].join("|"));
            for (label, row) in &cells {
                println!("| {label} | {} |", row.join(" | "));
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = cells
                .iter()
                .map(|(label, row)| json!({"label": label, "coeffs": row}))
                .collect();
            let table = match which {
                TableKind::L => "L",
                TableKind::A => "A",
            };
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "schema": SCHEMA, "kind": "table", "table": table, "rows": rows
                }))
                .unwrap()
            );
        }
    }
    if check {
        let mismatches = diff_against_reference(which, &rows);
        if !mismatches.is_empty() {
            for m in mismatches {
                eprintln!("table check failed: {m}");
            }
            return Ok(1);
        }
    }
    Ok(0)
}

fn diff_against_reference(which: TableKind, rows: &[(String, Vec<BigInt>)]) -> Vec<String> {
    let mut mismatches = Vec::new();
    let (start, reference): (i64, Vec<Vec<i64>>) = match which {
        TableKind::L => (1, REFERENCE_L_TABLE.iter().map(|r| r.to_vec()).collect()),
        TableKind::A => (3, REFERENCE_A_TABLE.iter().map(|r| r.to_vec()).collect()),
    };
    for (i, expect) in reference.iter().enumerate() {
        let n = start + i as i64;
        let Some((label, got)) = rows.get(i) else {
            continue; // --max below the reference range checks fewer rows
        };
        for (j, &e) in expect.iter().enumerate() {
            let g = got.get(j).cloned().unwrap_or_else(|| BigInt::from(0));
            if g != BigInt::from(e) {
                mismatches.push(format!("{label} (n={n}) coefficient of a^{j}: {g} != {e}"));
            }
        }
    }
    mismatches
}

/// Recurrence polynomial converted between the a and lambda variables.
/// in_lambda = (-1)^n * in_a(2 - lambda) keeps both monic.
fn convert_variable(p: &IntPoly, n: i64) -> IntPoly {
    let flipped = p.compose(&IntPoly::from_i64s(&[2, -1]));
    if n % 2 == 1 {
        -flipped
    } else {
        flipped
    }
}

fn poly_json(var: Variable, p: &IntPoly) -> serde_json::Value {
    let var = match var {
        Variable::A => "a",
        Variable::Lambda => "lambda",
    };
    json!({"var": var, "coeffs": p.to_coeff_strings()})
}

fn cmd_charpoly(
    n: i64,
    variable: Variable,
    method: Method,
    format: OutputFormat,
) -> Result<i32, String> {
    if n < 1 {
        return Err(format!("charpoly needs n >= 1, got {n}"));
    }
    let mut cache = SequenceCache::new();
    let rec = |cache: &mut SequenceCache| -> Result<IntPoly, String> {
        let in_a = cache.a(n).map_err(|e| e.to_string())?;
        Ok(match variable {
            Variable::A => in_a,
            Variable::Lambda => convert_variable(&in_a, n),
        })
    };
    let det = || -> Result<IntPoly, String> {
        let (group, gens) = parse_group_spec(&format!("Z{n}")).map_err(|e| e.to_string())?;
        let graph = cayley_graph(&group, &gens).map_err(|e| e.to_string())?;
        let cp = charpoly_exact(&crate::cayley::laplacian_of(&graph)).map_err(|e| e.to_string())?;
        Ok(match variable {
            Variable::A => cp.in_a,
            Variable::Lambda => cp.in_lambda,
        })
    };
    let mut polys: Vec<(&str, IntPoly)> = Vec::new();
    match method {
        Method::Rec => polys.push(("rec", rec(&mut cache)?)),
        Method::Det => polys.push(("det", det()?)),
        Method::Both => {
            polys.push(("rec", rec(&mut cache)?));
            polys.push(("det", det()?));
        }
    }
    let agree = polys.len() < 2 || polys[0].1 == polys[1].1;
    match format {
        OutputFormat::Plain | OutputFormat::Markdown => {
            for (name, p) in &polys {
                let rendered = match variable {
                    Variable::A => p.to_string(),
                    Variable::Lambda => p.to_string().replace('a', "lambda"),
                };
                println!("{name}: {rendered}");
            }
        }
        OutputFormat::Csv => {
            for (name, p) in &polys {
                println!("{name},{}", p.to_coeff_strings().join(","));
            }
        }
        OutputFormat::Json => {
            let entries: Vec<_> = polys
                .iter()
                .map(|(name, p)| {
                    let mut v = poly_json(variable, p);
                    v["method"] = json!(name);
                    v
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "schema": SCHEMA, "kind": "charpoly", "n": n,
                    "polynomials": entries, "agree": agree
                }))
                .unwrap()
            );
        }
    }
    if method == Method::Both && !agree {
        if n <= 2 {
            // A_1, A_2 are formal sequence members, not these determinants.
            eprintln!(
                "note: for n = {n} the recurrence polynomial A_{n} intentionally \
                 differs from the determinant of the true Laplacian"
            );
            return Ok(0);
        }
        eprintln!("error: recurrence and determinant disagree at n = {n}");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_spectrum(group_text: &str, format: OutputFormat) -> Result<i32, String> {
    let (group, gens) = parse_group_spec(group_text).map_err(|e| e.to_string())?;
    // Exact rotations for a plain cycle with its default generator; numeric
    // for products and custom generator sets.
    let exact = group.orders().len() == 1 && gens == group.default_generators();
    let entries: Vec<(Option<String>, f64, usize)> = if exact {
        let spectrum = cycle_spectrum(group.order()).map_err(|e| e.to_string())?;
        spectrum
            .multiplicities()
            .into_iter()
            .map(|(r, m)| {
                let lambda = spectrum
                    .entries
                    .iter()
                    .find(|e| e.rotation == r)
                    .map(|e| e.lambda)
                    .unwrap();
                (Some(r.to_string()), lambda, m)
            })
            .collect()
    } else {
        group_spectrum(&group, &gens)
            .map_err(|e| e.to_string())?
            .entries()
            .iter()
            .map(|&(v, c)| (None, v, c))
            .collect()
    };
    match format {
        OutputFormat::Plain | OutputFormat::Markdown => {
            let parts: Vec<String> = entries
                .iter()
                .map(|(_, lambda, mult)| {
                    let lambda = format!("{lambda:.6}");
                    let lambda = lambda.trim_end_matches('0').trim_end_matches('.');
                    if *mult > 1 {
                        format!("{lambda}(x{mult})")
                    } else {
                        lambda.to_string()
                    }
                })
                .collect();
            println!("{}", parts.join(", "));
        }
        OutputFormat::Csv => {
            for (rotation, lambda, mult) in &entries {
                println!(
                    "{},{lambda},{mult}",
                    rotation.clone().unwrap_or_default()
                );
            }
        }
        OutputFormat::Json => {
            let list: Vec<_> = entries
                .iter()
                .map(|(rotation, lambda, mult)| {
                    json!({"rotation": rotation, "lambda": lambda, "multiplicity": mult})
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "schema": SCHEMA, "kind": "spectrum", "group": group_text,
                    "exact": exact, "entries": list
                }))
                .unwrap()
            );
        }
    }
    Ok(0)
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Bounds {
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub m: Option<i64>,
    pub p: Option<i64>,
}

impl Bounds {
    fn n_or(&self, default: i64) -> i64 {
        self.n.unwrap_or(default)
    }
    fn k_or(&self, default: i64) -> i64 {
        self.k.unwrap_or(default)
    }
    fn m_or(&self, default: i64) -> i64 {
        self.m.unwrap_or(default)
    }
}

/// Runs the full sweep for one identity id. Bound defaults match the ranges
/// the acceptance suite pins down.
pub fn run_sweep(identity: &str, bounds: Bounds) -> Result<VerificationReport, String> {
    let mut cache = SequenceCache::new();
    let seq = |r: Result<VerificationReport, crate::sequences::SequenceError>| {
        r.map_err(|e| e.to_string())
    };
    match identity {
        "l-product" => {
            let max_n = bounds.n_or(60);
            require(max_n >= 1, "l-product needs --n >= 1")?;
            let mut reports = Vec::new();
            for n in 1..=max_n {
                for k in 1..=n {
                    reports.push(seq(cache.check_l_product(n, k))?);
                }
            }
            Ok(VerificationReport::merge("l-product", reports))
        }
        "l-square" => {
            let max_n = bounds.n_or(60);
            require(max_n >= 2, "l-square needs --n >= 2")?;
            let mut reports = Vec::new();
            for n in 2..=max_n {
                reports.push(seq(cache.check_l_square(n))?);
            }
            Ok(VerificationReport::merge("l-square", reports))
        }
        "three-term" => {
            let max_n = bounds.n_or(200);
            require(max_n >= 1, "three-term needs --n >= 1")?;
            let mut reports = Vec::new();
            for n in 1..=max_n {
                reports.push(seq(cache.check_three_term(n))?);
            }
            Ok(VerificationReport::merge("three-term", reports))
        }
        "doubling" => {
            let max_n = bounds.n_or(50);
            require(max_n >= 1, "doubling needs --n >= 1")?;
            let mut reports = Vec::new();
            for n in 1..=max_n {
                reports.push(seq(cache.check_doubling(n))?);
            }
            Ok(VerificationReport::merge("doubling", reports))
        }
        "divisibility" => {
            let max_n = bounds.n_or(20);
            let max_k = bounds.k_or(10);
            require(max_n >= 1 && max_k >= 1, "divisibility needs --n, --k >= 1")?;
            let mut reports = Vec::new();
            for n in 1..=max_n {
                for k in 1..=max_k {
                    reports.push(seq(cache.check_divisibility(n, k))?);
                }
            }
            Ok(VerificationReport::merge("divisibility", reports))
        }
        "addition" => {
            let max_n = bounds.n_or(40);
            require(max_n >= 2, "addition needs --n >= 2")?;
            let mut reports = Vec::new();
            for n in 2..=max_n {
                for p in 1..n {
                    reports.push(seq(cache.check_addition(n, p))?);
                }
            }
            Ok(VerificationReport::merge("addition", reports))
        }
        "shifted-addition" => {
            let max_k = bounds.k_or(6);
            let max_n = bounds.n_or(12);
            require(max_k >= 1 && max_n >= 2, "shifted-addition needs --k >= 1, --n >= 2")?;
            let mut reports = Vec::new();
            for k in 1..=max_k {
                for n in 2..=max_n {
                    for p in 1..n {
                        if k * n - p >= 1 {
                            reports.push(seq(cache.check_shifted_addition(k, n, p))?);
                        }
                    }
                }
            }
            Ok(VerificationReport::merge("shifted-addition", reports))
        }
        "composition" => {
            let max_k = bounds.k_or(12);
            let max_n = bounds.n_or(12);
            require(max_k >= 1 && max_n >= 1, "composition needs --k, --n >= 1")?;
            let mut reports = Vec::new();
            for k in 1..=max_k {
                for n in 1..=max_n {
                    reports.push(seq(cache.check_composition(k, n))?);
                }
            }
            Ok(VerificationReport::merge("composition", reports))
        }
        "gcd" => {
            let max_n = bounds.n_or(40);
            let max_m = bounds.m_or(max_n);
            require(max_n >= 3 && max_m >= 3, "gcd needs --n, --m >= 3")?;
            let pairs: Vec<(u64, u64)> = (3..=max_n as u64)
                .flat_map(|n| (3..=max_m as u64).map(move |m| (n, m)))
                .collect();
            let reports = pairs
                .par_iter()
                .map(|&(n, m)| check_gcd_theorem(n, m).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VerificationReport::merge("gcd", reports))
        }
        "interval" => {
            let max_n = bounds.n_or(256);
            require(max_n >= 1, "interval needs --n >= 1")?;
            let reports = (1..=max_n as u64)
                .into_par_iter()
                .map(|n| check_interval(n).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VerificationReport::merge("interval", reports))
        }
        "lambda24" => {
            let max_n = bounds.n_or(200);
            require(max_n >= 2, "lambda24 needs --n >= 2")?;
            let reports = (2..=max_n as u64)
                .into_par_iter()
                .map(|n| check_lambda2_lambda4(n).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VerificationReport::merge("lambda24", reports))
        }
        "subgroup" => {
            let max_n = bounds.n_or(24);
            let max_k = bounds.k_or(8);
            require(max_n >= 3 && max_k >= 1, "subgroup needs --n >= 3, --k >= 1")?;
            let pairs: Vec<(u64, u64)> = (3..=max_n as u64)
                .flat_map(|n| (1..=max_k as u64).map(move |k| (n, k)))
                .collect();
            let reports = pairs
                .par_iter()
                .map(|&(n, k)| check_subgroup_closure(n, k).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VerificationReport::merge("subgroup", reports))
        }
        "spectral-map" => {
            let max_n = bounds.n_or(32);
            let max_m = bounds.m_or(16);
            require(max_n >= 3 && max_m >= 1, "spectral-map needs --n >= 3, --m >= 1")?;
            let mut reports = Vec::new();
            for n in 3..=max_n as u64 {
                for m in 1..=max_m as u64 {
                    reports.push(
                        check_spectral_map_closure(&mut cache, n, m).map_err(|e| e.to_string())?,
                    );
                }
            }
            Ok(VerificationReport::merge("spectral-map", reports))
        }
        "iff" => {
            let max_n = bounds.n_or(16);
            let max_k = bounds.k_or(8);
            require(max_n >= 3 && max_k >= 1, "iff needs --n >= 3, --k >= 1")?;
            let pairs: Vec<(u64, u64)> = (3..=max_n as u64)
                .flat_map(|n| (1..=max_k as u64).map(move |k| (n, k)))
                .collect();
            let reports = pairs
                .par_iter()
                .map(|&(n, k)| check_iff_corollary(n, k).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VerificationReport::merge("iff", reports))
        }
        "complement-example" => run_complement_example(),
        other => Err(format!("unknown identity {other:?}")),
    }
}

/// spec(Z_2 x Z_3) and spec(Z_6) differ with witness 2, and the former equals
/// the complement spectrum of the 6-cycle.
fn run_complement_example() -> Result<VerificationReport, String> {
    let id = "complement-example";
    let (z6, z6g) = parse_group_spec("Z6").map_err(|e| e.to_string())?;
    let (prod, prodg) = parse_group_spec("Z2xZ3").map_err(|e| e.to_string())?;
    let cmp = compare_group_spectra((&z6, &z6g), (&prod, &prodg)).map_err(|e| e.to_string())?;
    let fail = |lhs: String, rhs: String| {
        Ok(VerificationReport::fail(
            id,
            vec![vec![]],
            crate::report::Counterexample {
                parameters: vec![],
                lhs,
                rhs,
            },
        ))
    };
    if cmp.equal {
        return fail("spec(Z6)".into(), "spec(Z2xZ3) unexpectedly equal".into());
    }
    let witness_two = cmp.witness.map_or(false, |w| (w - 2.0).abs() < 1e-6);
    if !witness_two {
        return fail(
            format!("witness {:?}", cmp.witness),
            "expected witness lambda = 2".into(),
        );
    }
    if !cmp.spectrum2.contains(2.0) || cmp.spectrum1.contains(2.0) {
        return fail(
            "lambda = 2 membership".into(),
            "expected in spec(Z2xZ3) and not in spec(Z6)".into(),
        );
    }
    let complemented = complement_spectrum(&cmp.spectrum1, 6).map_err(|e| e.to_string())?;
    if !complemented.approx_eq(&cmp.spectrum2) {
        return fail(
            format!("complement of spec(Z6): {complemented:?}"),
            format!("spec(Z2xZ3): {:?}", cmp.spectrum2),
        );
    }
    Ok(VerificationReport::pass(id, vec![vec![]]))
}

fn require(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn cmd_verify(identity: &str, bounds: Bounds, format: OutputFormat) -> Result<i32, String> {
    let report = run_sweep(identity, bounds)?;
    match format {
        OutputFormat::Plain | OutputFormat::Markdown => {
            println!(
                "{}: {} over {} parameter tuples",
                report.identity_id,
                if report.passed { "PASS" } else { "FAIL" },
                report.parameters.len()
            );
            if let Some(ce) = &report.counterexample {
                println!(
                    "counterexample at {:?}: lhs = {}, rhs = {}",
                    ce.parameters, ce.lhs, ce.rhs
                );
            }
        }
        OutputFormat::Csv => {
            println!(
                "{},{},{}",
                report.identity_id,
                report.parameters.len(),
                report.passed
            );
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "schema": SCHEMA, "kind": "verify",
                    "identity": report.identity_id,
                    "cases": report.parameters.len(),
                    "passed": report.passed,
                    "counterexample": report.counterexample,
                }))
                .unwrap()
            );
        }
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_compare(group1: &str, group2: &str, format: OutputFormat) -> Result<i32, String> {
    let (g1, gens1) = parse_group_spec(group1).map_err(|e| e.to_string())?;
    let (g2, gens2) = parse_group_spec(group2).map_err(|e| e.to_string())?;
    let cmp = compare_group_spectra((&g1, &gens1), (&g2, &gens2)).map_err(|e| e.to_string())?;
    let graphs_isomorphic = if g1.order() <= 10 {
        let graph1 = cayley_graph(&g1, &gens1).map_err(|e| e.to_string())?;
        let graph2 = cayley_graph(&g2, &gens2).map_err(|e| e.to_string())?;
        Some(isomorphic_small(&graph1, &graph2).map_err(|e| e.to_string())?)
    } else {
        None
    };
    match format {
        OutputFormat::Plain | OutputFormat::Markdown => {
            println!(
                "spectra: {}",
                if cmp.equal {
                    "equal".to_string()
                } else {
                    format!("differ (witness eigenvalue {:.6})", cmp.witness.unwrap())
                }
            );
            match graphs_isomorphic {
                Some(true) => println!("graphs: isomorphic"),
                Some(false) => println!("graphs: not isomorphic"),
                None => println!("graphs: isomorphism not checked (more than 10 vertices)"),
            }
        }
        OutputFormat::Csv => {
            println!(
                "{group1},{group2},{},{},{}",
                cmp.equal,
                cmp.witness.map_or(String::new(), |w| format!("{w}")),
                graphs_isomorphic.map_or(String::new(), |b| b.to_string())
            );
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string(&json!({
                    "schema": SCHEMA, "kind": "compare",
                    "group1": group1, "group2": group2,
                    "spectra_equal": cmp.equal,
                    "witness": cmp.witness,
                    "isomorphic": graphs_isomorphic,
                }))
                .unwrap()
            );
        }
    }
    Ok(0)
}

/// Spectrum helper shared with the acceptance tests: numeric multiset of a
/// parsed group spec.
pub fn spectrum_of(group_text: &str) -> Result<SpectrumMultiset, String> {
    let (group, gens) = parse_group_spec(group_text).map_err(|e| e.to_string())?;
    group_spectrum(&group, &gens).map_err(|e| e.to_string())
}
