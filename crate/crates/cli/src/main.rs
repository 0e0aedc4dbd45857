use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eulerian::families::half::half_integer_cycle;
use eulerian::families::verify::square_findings;
use eulerian::families::{a1_sum_poly, Family, FamilyCache};
use eulerian::operators::euler_poly2;
use eulerian::scalar::int;
use eulerian::suites::{resolve, run_suites};
use eulerian::tables::{compute, TableFn, TableFormat};
use eulerian::{QPoly, Rational};

/// Exact tables, polynomials and identity checks for the Eulerian families.
#[derive(Debug, Parser)]
#[command(name = "eulerian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integer table of P, A, Q or Ptilde with rows m and columns n.
    Table {
        #[arg(long = "fn", default_value = "P")]
        function: TableFn,
        #[arg(long, default_value_t = 8)]
        rows: u32,
        #[arg(long, default_value_t = 8)]
        cols: u32,
        #[arg(long, default_value = "markdown")]
        format: TableFormat,
    },
    /// One member of a family: coefficients, pretty form, symmetry, square form.
    Poly {
        /// P, Q, A1, A2, a1, e or e2.
        #[arg(long)]
        family: String,
        #[arg(long)]
        index: u32,
    },
    /// Run identity suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Whether 2·Q(m,x) is a square for m <= max.
    Conjecture {
        #[arg(long, default_value_t = 40)]
        max: u32,
    },
    /// Values at x = k + 1/2 from the half-integer recursion.
    Halfint {
        #[arg(long = "m-max", default_value_t = 6)]
        m_max: u32,
        #[arg(long = "k-max", default_value_t = 6)]
        k_max: u32,
    },
}

enum Failure {
    Usage(String),
    Check,
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = FamilyCache::new();
    let outcome = match cli.command {
        Command::Table {
            function,
            rows,
            cols,
            format,
        } => table(function, rows, cols, format, &cache),
        Command::Poly { family, index } => poly(&family, index, &cache),
        Command::Verify { suite, max, json } => verify(&suite, max, json, &cache),
        Command::Conjecture { max } => conjecture(max, &cache),
        Command::Halfint { m_max, k_max } => halfint(m_max, k_max, &cache),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn positive(name: &str, v: u32) -> Outcome {
    if v == 0 {
        Err(Failure::Usage(format!("--{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn table(function: TableFn, rows: u32, cols: u32, format: TableFormat, cache: &FamilyCache) -> Outcome {
    positive("rows", rows)?;
    positive("cols", cols)?;
    let t = compute(function, rows, cols, cache).map_err(|e| Failure::Usage(e.to_string()))?;
    match format {
        TableFormat::Markdown => print!("{}", t.to_markdown()),
        TableFormat::Csv => print!("{}", t.to_csv()),
        TableFormat::Json => println!("{}", serde_json::to_string_pretty(&t.view()).expect("serializable")),
    }
    Ok(())
}

fn family_member(family: &str, index: u32, cache: &FamilyCache) -> Result<QPoly, Failure> {
    let need = |lo: u32| {
        if index < lo {
            Err(Failure::Usage(format!("{family} needs --index >= {lo}")))
        } else {
            Ok(())
        }
    };
    let p = match family {
        "P" => (*cache.p(index)).clone(),
        "Q" => {
            need(1)?;
            (*cache.q(index)).clone()
        }
        "A1" => {
            need(1)?;
            (*cache.a1(index)).clone()
        }
        "A2" => {
            need(1)?;
            (*cache.a2(index)).clone()
        }
        "a1" => {
            need(1)?;
            a1_sum_poly(index)
        }
        "e" => (*cache.get(Family::Euler, index)).clone(),
        "e2" => euler_poly2(index as usize),
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    };
    Ok(p)
}

/// `k · r²` with `r` monic, when `p` or `2p` is a square.
fn square_form(p: &QPoly) -> Option<String> {
    for (scale, div) in [(int(1), int(1)), (int(2), int(2))] {
        if let Ok(root) = p.scale(&scale).sqrt() {
            let (lead, monic) = root.monic()?;
            let k = lead.clone() * lead / div;
            if monic.degree() == Some(0) {
                return None;
            }
            let body = monic.pretty("x");
            return Some(if k == int(1) {
                format!("({body})^2")
            } else {
                format!("({k})({body})^2")
            });
        }
    }
    None
}

/// The point `a` with `p(a + u) = p(a - u)`, if there is one.
fn symmetry_axis(p: &QPoly) -> Option<Rational> {
    let d = p.degree()?;
    if d == 0 {
        return Some(int(0));
    }
    let a = -p.coeff(d - 1) / (int(d as i64) * p.coeff(d));
    p.is_even_about(&a).then_some(a)
}

fn poly(family: &str, index: u32, cache: &FamilyCache) -> Outcome {
    let p = family_member(family, index, cache)?;
    println!("{family}({index}): {}", p.pretty("x"));
    println!("coefficients: {p}");
    let symmetry = match symmetry_axis(&p) {
        Some(a) => format!("even about {a}"),
        None => "none".to_string(),
    };
    println!("symmetry: {symmetry}");
    if let Some(form) = square_form(&p) {
        println!("square form: {form}");
    }
    Ok(())
}

fn verify(suite: &str, max: u32, json: bool, cache: &FamilyCache) -> Outcome {
    positive("max", max)?;
    let ids = resolve(suite).map_err(|e| Failure::Usage(e.to_string()))?;
    let reports = run_suites(&ids, max, cache).map_err(|e| Failure::Usage(e.to_string()))?;
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn conjecture(max: u32, cache: &FamilyCache) -> Outcome {
    positive("max", max)?;
    let findings = square_findings(max, cache);
    let squares = findings.iter().filter(|f| f.root.is_some()).count();
    for f in &findings {
        match &f.root {
            Some(root) => println!("m = {}: square, sqrt(2Q) = {} (coefficients {root})", f.m, root.pretty("x")),
            None => println!("m = {}: not a square", f.m),
        }
    }
    println!("{squares} of {} are squares", findings.len());
    Ok(())
}

fn halfint(m_max: u32, k_max: u32, cache: &FamilyCache) -> Outcome {
    positive("m-max", m_max)?;
    positive("k-max", k_max)?;
    let cycle = half_integer_cycle(m_max, k_max, cache);
    println!("| m | x | P(m,x) | A1(m,x) | A2(x,m) | Q(m,x) |");
    println!("|---|---|---|---|---|---|");
    for r in &cycle.rows {
        println!("| {} | {} | {} | {} | {} | {} |", r.m, r.x, r.p, r.a1, r.a2, r.q);
    }
    println!("{}", cycle.report);
    if cycle.report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
