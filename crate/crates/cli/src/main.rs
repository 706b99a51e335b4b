//! Command-line front end: build operators from description files, evaluate
//! and tabulate them, run axiom checks, report idempotents and jump loci,
//! and decompose into ordinal sums.
//!
//! Exit codes: 0 success, 1 parse/validation error, 2 check failure,
//! 3 decomposition refused. Diagnostics go to stderr, one per line,
//! prefixed `E:`.

mod parser;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use uninorms::{axiom_report, classify, decompose, idempotent_set, jump_locus, Operator};

#[derive(Parser)]
#[command(
    name = "uninorms",
    version,
    about = "uninorm construction and analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the operator at a point
    Eval { file: PathBuf, x: f64, y: f64 },
    /// Print the operator on a uniform n-by-n grid
    Table {
        file: PathBuf,
        #[arg(long, default_value_t = 11)]
        n: usize,
        #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
        format: String,
    },
    /// Verify the uninorm axioms on a grid
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 41)]
        grid: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Report the detected idempotent set
    Idempotents { file: PathBuf },
    /// Report the discontinuity locus as CSV pairs
    Curve { file: PathBuf },
    /// Recover an ordinal sum representation
    Decompose {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report class membership flags
    Classify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version print to stdout and succeed
            if err.use_stderr() {
                fail(&err.to_string());
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            fail(&msg);
            ExitCode::from(1)
        }
    }
}

fn fail(msg: &str) {
    for line in msg.lines() {
        let line = line.trim_start_matches("- ");
        if !line.trim().is_empty() {
            eprintln!("E: {line}");
        }
    }
}

/// 17 significant digits: enough to reproduce any f64 exactly, fixed width.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn load(path: &PathBuf) -> Result<Operator, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parser::parse_spec(&text).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Eval { file, x, y } => {
            let op = load(&file)?;
            if !(0.0..=1.0).contains(&x) || !(0.0..=1.0).contains(&y) {
                return Err(format!("point ({x}, {y}) is outside the unit square"));
            }
            println!("{}", op.eval(x, y));
            Ok(0)
        }
        Command::Table { file, n, format } => {
            let op = load(&file)?;
            if n < 2 {
                return Err("table needs --n of at least 2".into());
            }
            let grid: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
            match format.as_str() {
                "csv" => {
                    println!("x,y,value");
                    for &x in &grid {
                        for &y in &grid {
                            println!("{},{},{}", fmt17(x), fmt17(y), fmt17(op.eval(x, y)));
                        }
                    }
                }
                _ => {
                    let mut rows = Vec::with_capacity(n * n);
                    for &x in &grid {
                        for &y in &grid {
                            rows.push(format!(
                                "[{},{},{}]",
                                fmt17(x),
                                fmt17(y),
                                fmt17(op.eval(x, y))
                            ));
                        }
                    }
                    println!(
                        "{{\"op\": {}, \"results\": [{}]}}",
                        json_string(&parser::print_canonical(&op)),
                        rows.join(",")
                    );
                }
            }
            Ok(0)
        }
        Command::Check { file, grid, tol } => {
            let op = load(&file)?;
            if grid < 3 {
                return Err("check needs --grid of at least 3".into());
            }
            let report = axiom_report(&op, grid, tol);
            let checks = [
                ("commutativity", &report.commutativity),
                ("monotonicity", &report.monotonicity),
                ("associativity", &report.associativity),
                ("neutrality", &report.neutrality),
                ("annihilator", &report.annihilator),
            ];
            for (name, check) in &checks {
                let verdict = if check.pass { "pass" } else { "FAIL" };
                let witness: Vec<String> = check.witness.iter().map(|w| w.to_string()).collect();
                println!(
                    "{name}: {verdict} (max violation {} at [{}])",
                    fmt17(check.max_violation),
                    witness.join(", ")
                );
            }
            if report.all_pass() {
                Ok(0)
            } else {
                fail("axiom check failed");
                Ok(2)
            }
        }
        Command::Idempotents { file } => {
            let op = load(&file)?;
            let report = idempotent_set(&op, 1024, 1e-9);
            println!("lo,hi");
            for &(lo, hi) in &report.intervals {
                println!("{},{}", fmt17(lo), fmt17(hi));
            }
            Ok(0)
        }
        Command::Curve { file } => {
            let op = load(&file)?;
            let locus = jump_locus(&op, 1024, 1e-3);
            println!("x,y_low,y_high");
            for p in locus.points() {
                println!("{},{},{}", fmt17(p.x), fmt17(p.y_low), fmt17(p.y_high));
            }
            Ok(0)
        }
        Command::Decompose { file, out } => {
            let op = load(&file)?;
            let result = decompose(&op, 512).map_err(|e| e.to_string())?;
            if result.refused() {
                for d in &result.diagnostics {
                    eprintln!("E: {d}");
                }
                return Ok(3);
            }
            let json = decomposition_json(&result);
            match out {
                Some(path) => fs::write(&path, json + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => println!("{json}"),
            }
            Ok(0)
        }
        Command::Classify { file } => {
            let op = load(&file)?;
            let flags = classify(&op, 128, 1e-6);
            println!("neutral: {}", op.neutral());
            println!("conjunctive: {}", flags.conjunctive);
            println!("disjunctive: {}", flags.disjunctive);
            println!("in_n: {}", flags.in_n);
            println!("in_u: {}", flags.in_u);
            println!("internal: {}", flags.internal);
            println!("s_internal: {}", flags.s_internal);
            println!("n_min: {}", flags.n_min);
            println!("n_max: {}", flags.n_max);
            Ok(0)
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn decomposition_json(result: &uninorms::DecompositionResult) -> String {
    let frames: Vec<String> = result
        .frames
        .iter()
        .zip(&result.classes)
        .map(|(f, class)| {
            let class = match class {
                uninorms::SummandClass::Representable => "representable",
                uninorms::SummandClass::SInternal => "s_internal",
                uninorms::SummandClass::Other => "other",
            };
            format!(
                "{{\"a\": {}, \"b\": {}, \"c\": {}, \"d\": {}, \
                 \"pairing_residual\": {}, \"class\": {}}}",
                fmt17(f.a),
                fmt17(f.b),
                fmt17(f.c),
                fmt17(f.d),
                fmt17(f.pairing_residual),
                json_string(class)
            )
        })
        .collect();
    format!(
        "{{\"e\": {}, \"summands\": [{}], \"recomposition_error\": {}}}",
        fmt17(result.e),
        frames.join(","),
        fmt17(result.recomposition_error)
    )
}
