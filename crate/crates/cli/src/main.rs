use std::process::ExitCode;

use apery_core::compositions::{enumerate, Filter, Listing};
use apery_core::delta::families::ClosedFamily;
use apery_core::delta::{delta_class, delta_explicit, delta_submatrix, p7_blocks, DeltaEngine};
use apery_core::exact_linalg::{ker_alpha_ranks, m_k_ranks};
use apery_core::lincomb::{IntPoly, LinComb};
use apery_core::numerics::{self, ApproxReal, DIGIT_CAP};
use apery_core::{Composition, DualityClass, Error};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Largest weight for rank tables without `--extended`.
const RANK_LIMIT: u32 = 12;
const RANK_LIMIT_EXTENDED: u32 = 16;
/// Largest precision for `verify` and `eval` without `--extended`.
const DIGITS_LIMIT: u32 = 60;

#[derive(Parser)]
#[command(name = "apery", version, about = "Multiple zeta values, the delta map and multiple Apery-like sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Inductive,
    Explicit,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingKind {
    Int,
    Poly,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Alpha,
    Delta,
}

#[derive(Subcommand)]
enum Command {
    /// List compositions or duality classes of a weight.
    Enumerate {
        #[arg(long)]
        weight: u32,
        /// admissible, classes, even, self-dual, ge2, le2 or 23
        #[arg(long, default_value = "admissible")]
        filter: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute delta of a class, or both sides of a closed family.
    Delta {
        /// A member of the class, e.g. "3,3"
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        class: Option<String>,
        /// A closed family such as "t_family:6" or "height_one:2,3"
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "inductive")]
        method: Method,
        #[arg(long, value_enum, default_value = "int")]
        ring: RingKind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Kernel rank tables of alpha_k or delta_k.
    RankTable {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        max_weight: u32,
        /// Allow weights up to 16 (slow and memory hungry).
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Evaluate a sigma tail, a symmetric zeta tail or a multiple zeta value.
    Eval {
        #[arg(long, group = "target")]
        sigma: Option<String>,
        #[arg(long, group = "target")]
        zeta_tail: Option<String>,
        #[arg(long, group = "target")]
        zeta: Option<String>,
        #[arg(long, default_value_t = 0)]
        n: u64,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check a named identity.
    Verify {
        #[arg(long, required_unless_present = "list")]
        identity: Option<String>,
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        params: Vec<u32>,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long)]
        extended: bool,
        /// Print the registry and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the matrix Delta_k and its block structure.
    DeltaMatrix {
        #[arg(long)]
        weight: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failure categories, mapped to exit codes.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capability(_) | Error::NoPreimage(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { weight, filter, format } => cmd_enumerate(weight, &filter, format),
        Command::Delta { class, family, method, ring, format } => {
            cmd_delta(class.as_deref(), family.as_deref(), method, ring, format)
        }
        Command::RankTable { map, max_weight, extended, format } => cmd_rank_table(map, max_weight, extended, format),
        Command::Eval { sigma, zeta_tail, zeta, n, digits, extended, format } => {
            cmd_eval(sigma, zeta_tail, zeta, n, digits, extended, format)
        }
        Command::Verify { identity, params, digits, extended, list, format } => {
            if list {
                cmd_list(format)
            } else {
                cmd_verify(identity.as_deref().unwrap_or_default(), &params, digits, extended, format)
            }
        }
        Command::DeltaMatrix { weight, format } => cmd_delta_matrix(weight, format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn cmd_enumerate(weight: u32, filter: &str, format: Format) -> Outcome {
    if weight > 24 {
        return Err(usage(format!("weight {weight} is too large to list")));
    }
    let filter: Filter = filter.parse()?;
    let listing = enumerate(weight, filter);
    let entries: Vec<Vec<u8>> = match &listing {
        Listing::Compositions(v) => v.iter().map(|c| c.entries().to_vec()).collect(),
        Listing::Classes(v) => v.iter().map(|c| c.representative().entries().to_vec()).collect(),
    };
    match format {
        Format::Json => print_json(&json!({ "weight": weight, "count": listing.len(), "items": entries })),
        Format::Text => {
            for s in listing.render() {
                println!("{s}");
            }
        }
        Format::Csv => {
            for e in &entries {
                let parts: Vec<String> = e.iter().map(u8::to_string).collect();
                println!("\"{}\"", parts.join(","));
            }
        }
    }
    Ok(true)
}

fn emit_lincomb<B: apery_core::lincomb::Basis, R: apery_core::lincomb::JsonCoeff + std::fmt::Display>(
    l: &LinComb<B, R>,
    format: Format,
) {
    match format {
        Format::Json => print_json(&l.to_json()),
        Format::Text => println!("{l}"),
        Format::Csv => {
            for (b, c) in l.iter().rev() {
                println!("\"{b}\",{c}");
            }
        }
    }
}

fn cmd_delta(class: Option<&str>, family: Option<&str>, method: Method, ring: RingKind, format: Format) -> Outcome {
    if let Some(f) = family {
        let fam: ClosedFamily = f.parse()?;
        let pair = fam.poly_pair()?;
        let image = DeltaEngine::global().apply(&pair.lhs);
        let holds = image == pair.rhs;
        match format {
            Format::Json => print_json(&json!({
                "family": fam.to_string(),
                "lhs": pair.lhs.to_json(),
                "delta": image.to_json(),
                "closed_form": pair.rhs.to_json(),
                "holds": holds,
            })),
            _ => {
                println!("lhs: {}", pair.lhs);
                println!("delta(lhs): {image}");
                println!("closed form: {}", pair.rhs);
                println!("holds: {holds}");
            }
        }
        return Ok(holds);
    }
    let class: DualityClass = class.expect("clap enforces one of class or family").parse()?;
    let inductive = || (*delta_class(&class)).clone();
    let (value, agree) = match method {
        Method::Inductive => (inductive(), true),
        Method::Explicit => (delta_explicit(&class), true),
        Method::Both => {
            let a = inductive();
            let b = delta_explicit(&class);
            let agree = a == b;
            if !agree {
                eprintln!("inductive and explicit values differ");
                eprintln!("inductive: {a}");
                eprintln!("explicit:  {b}");
            }
            (a, agree)
        }
    };
    match ring {
        RingKind::Int => emit_lincomb(&value, format),
        RingKind::Poly => emit_lincomb(&value.map_coeffs(|c: &BigInt| IntPoly::constant(c.clone())), format),
    }
    Ok(agree)
}

fn cmd_rank_table(map: MapKind, max_weight: u32, extended: bool, format: Format) -> Outcome {
    let limit = if extended { RANK_LIMIT_EXTENDED } else { RANK_LIMIT };
    if max_weight > limit {
        let hint = if extended { "" } else { " (use --extended for up to 16)" };
        return Err(usage(format!("max weight {max_weight} exceeds {limit}{hint}")));
    }
    let (name, rows) = match map {
        MapKind::Alpha => ("alpha", ker_alpha_ranks(max_weight)),
        MapKind::Delta => ("delta", m_k_ranks(max_weight)),
    };
    match format {
        Format::Csv => {
            println!("k,rank");
            for (k, r) in &rows {
                println!("{k},{r}");
            }
        }
        Format::Json => print_json(&json!({
            "map": name,
            "ranks": rows.iter().map(|(k, r)| json!({ "k": k, "rank": r })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            for (k, r) in &rows {
                println!("{k:>3} {r:>6}");
            }
        }
    }
    Ok(true)
}

fn check_precision(digits: u32, extended: bool) -> Result<(), Failure> {
    let cap = if extended { DIGIT_CAP } else { DIGITS_LIMIT };
    if digits > cap {
        let hint = if extended { "" } else { " (use --extended for more)" };
        return Err(usage(format!("{digits} digits exceeds {cap}{hint}")));
    }
    Ok(())
}

fn cmd_eval(
    sigma: Option<String>,
    zeta_tail: Option<String>,
    zeta: Option<String>,
    n: u64,
    digits: u32,
    extended: bool,
    format: Format,
) -> Outcome {
    check_precision(digits, extended)?;
    let (label, x): (String, ApproxReal) = if let Some(s) = sigma {
        let a: Composition = s.parse()?;
        (format!("sigma({a})_{n}"), numerics::sigma_tail(&a, n, digits)?)
    } else if let Some(s) = zeta_tail {
        let c: DualityClass = s.parse()?;
        (format!("zeta({})_{{{n},{n}}}", c.representative()), numerics::zeta_sym_tail(&c, n, digits)?)
    } else if let Some(s) = zeta {
        let a: Composition = s.parse()?;
        (format!("zeta({a})"), numerics::mzv(&a, digits)?)
    } else {
        return Err(usage("one of --sigma, --zeta-tail or --zeta is required"));
    };
    let value = x.to_decimal(digits);
    let err = x.error_string();
    match format {
        Format::Json => print_json(&json!({ "quantity": label, "digits": digits, "value": value, "error": err })),
        Format::Text => println!("{label} = {value} ± {err}"),
        Format::Csv => println!("\"{label}\",{value},{err}"),
    }
    Ok(true)
}

fn cmd_list(format: Format) -> Outcome {
    let reg = numerics::registry();
    match format {
        Format::Json => print_json(&Value::Array(
            reg.iter().map(|i| json!({ "name": i.name, "summary": i.summary, "params": i.params })).collect(),
        )),
        _ => {
            for i in reg {
                println!("{:<16} {}  {}", i.name, i.summary, i.params);
            }
        }
    }
    Ok(true)
}

fn cmd_verify(name: &str, params: &[u32], digits: u32, extended: bool, format: Format) -> Outcome {
    check_precision(digits, extended)?;
    let report = numerics::verify(name, params, digits)?;
    match format {
        Format::Json => print_json(&report.to_json()),
        Format::Text => {
            for c in &report.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                println!("{status} {:<8} {:.3e}  {}", c.kind.to_string(), c.residual, c.label);
            }
            println!(
                "{}: {} (max residual {:.3e}, tolerance {:.1e})",
                report.name,
                if report.passed() { "pass" } else { "FAIL" },
                report.max_residual(),
                report.tolerance
            );
        }
        Format::Csv => {
            println!("label,kind,residual,passed");
            for c in &report.checks {
                println!("\"{}\",{},{:.3e},{}", c.label, c.kind, c.residual, c.passed);
            }
        }
    }
    Ok(report.passed())
}

fn cmd_delta_matrix(weight: u32, format: Format) -> Outcome {
    let m = delta_submatrix(weight)?;
    let report = p7_blocks(weight)?;
    match format {
        Format::Json => print_json(&json!({
            "k": weight,
            "matrix": m.to_json(),
            "determinant": report.determinant.to_string(),
            "block_structure_holds": report.holds(),
        })),
        Format::Text | Format::Csv => {
            if format == Format::Csv {
                for i in 0..m.rows() {
                    let row: Vec<String> = m.row(i).iter().map(BigInt::to_string).collect();
                    println!("{}", row.join(","));
                }
            } else {
                print!("{}", m.render_text());
                println!("determinant: {}", report.determinant);
                println!("block structure holds: {}", report.holds());
            }
        }
    }
    Ok(report.holds())
}
