//! mucurve: exact analysis of rational plane curves from the command
//! line. Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 internal inconsistency.

mod curvefile;
mod report;

use clap::{Args, Parser, Subcommand};
use mucurve_core::adjoint::{
    adjoint_candidates, adjoint_pencils, report_with_retries, singularity_report, AdjointError,
    CurveModel,
};
use mucurve_core::inertia::moving_curve_generators;
use mucurve_core::verify::verify_curve;
use mucurve_core::MuBasisError;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "mucurve", version, about = "mu-bases, moving-curve ideals, adjoints and D-resultants of rational plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// curve file: `field = QQ` and three `g<i> = <binary form>` lines
    file: PathBuf,
    /// emit a JSON report envelope instead of text
    #[arg(long)]
    json: bool,
    /// reparametrization attempts when the D-resultant degree falls short
    #[arg(long, default_value_t = 5)]
    chart_retries: usize,
    /// seed for the reparametrization search
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// mu-basis (p, q), mu, and the degree of the map
    Mubasis(Common),
    /// implicit equation C with Res(p,q) = alpha C^deg(phi)
    Implicitize(Common),
    /// generators of the moving curve ideal with provenance
    Generators(Common),
    /// first-order subresultants of the mu-basis
    Subres(Common),
    /// adjoint candidates and adjoint pencils
    Adjoints(Common),
    /// the D-resultant Delta(t) and its squarefree structure
    Dres(Common),
    /// singularity report: clusters, multiplicities, genus ledger
    Singular(Common),
    /// run the invariant suite; exit 0 iff every check passes
    Verify(Common),
}

struct Failure {
    exit: i32,
    code: &'static str,
    message: String,
}

fn fail(exit: i32, code: &'static str, message: impl Into<String>) -> Failure {
    Failure { exit, code, message: message.into() }
}

impl From<curvefile::CurveFileError> for Failure {
    fn from(e: curvefile::CurveFileError) -> Self {
        let exit = if e.code == "E_INTERNAL" { 3 } else { 2 };
        Failure { exit, code: e.code, message: e.message }
    }
}

impl From<AdjointError> for Failure {
    fn from(e: AdjointError) -> Self {
        match &e {
            AdjointError::NotBirational => fail(2, "E_NOT_BIRATIONAL", e.to_string()),
            AdjointError::NoSingularities => fail(2, "E_NO_SINGULARITIES", e.to_string()),
            AdjointError::ZeroCurve => fail(2, "E_ZERO_CURVE", e.to_string()),
            AdjointError::PointOnCurve => fail(2, "E_POINT_ON_CURVE", e.to_string()),
            AdjointError::UnsupportedFixture => fail(2, "E_UNSUPPORTED", e.to_string()),
            AdjointError::Mu(MuBasisError::Internal(_)) | AdjointError::Internal(_) => {
                fail(3, "E_INTERNAL", e.to_string())
            }
            AdjointError::Mu(_) => fail(2, "E_INPUT", e.to_string()),
        }
    }
}

fn threads_from_env() -> usize {
    match std::env::var("MUCURVE_THREADS") {
        Ok(v) => v.parse::<usize>().ok().filter(|&n| n >= 1).unwrap_or(1),
        Err(_) => 1,
    }
}

fn main() {
    let cli = Cli::parse();
    let (name, common) = match &cli.command {
        Command::Mubasis(c) => ("mubasis", c),
        Command::Implicitize(c) => ("implicitize", c),
        Command::Generators(c) => ("generators", c),
        Command::Subres(c) => ("subres", c),
        Command::Adjoints(c) => ("adjoints", c),
        Command::Dres(c) => ("dres", c),
        Command::Singular(c) => ("singular", c),
        Command::Verify(c) => ("verify", c),
    };
    match run(name, common) {
        Ok(exit) => std::process::exit(exit),
        Err(f) => {
            eprintln!("{}: {}", f.code, f.message);
            std::process::exit(f.exit);
        }
    }
}

fn run(name: &str, common: &Common) -> Result<i32, Failure> {
    let start = Instant::now();
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| fail(2, "E_IO", format!("{}: {e}", common.file.display())))?;
    let input_hash = {
        let mut h = Sha256::new();
        h.update(text.as_bytes());
        format!("sha256:{}", hex::encode(h.finalize()))
    };
    let phi = curvefile::parse_curve(&text)?;
    let threads = threads_from_env();

    let mut exit = 0i32;
    let result: Value = match name {
        "mubasis" => report::mubasis(&CurveModel::new(phi)?),
        "implicitize" => report::implicitize(&CurveModel::new(phi)?),
        "generators" => {
            let cm = CurveModel::new(phi)?;
            report::generators(&moving_curve_generators(cm.mu_basis(), cm.deg_phi(), threads))
        }
        "subres" => {
            let cm = CurveModel::new(phi)?;
            report::subres(&cm.mu_basis().form_pair().subresultants())
        }
        "adjoints" => {
            let cm = CurveModel::new(phi)?;
            report::adjoints(&adjoint_candidates(&cm)?, &adjoint_pencils(&cm)?)
        }
        "dres" => {
            let cm = CurveModel::new(phi)?;
            report::dres(&singularity_report(&cm)?)
        }
        "singular" => {
            let (_, rep, used) = report_with_retries(&phi, common.chart_retries, common.seed)?;
            report::singular(&rep, used)
        }
        "verify" => {
            let checks = verify_curve(&phi, threads);
            if !checks.iter().all(|c| c.pass) {
                exit = 1;
            }
            report::verify(&checks)
        }
        _ => unreachable!("subcommand list is fixed"),
    };

    let timing_ms = start.elapsed().as_millis();
    if common.json {
        let env = report::envelope(name, &input_hash, result, timing_ms);
        println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
    } else {
        print_text(name, &result);
    }
    Ok(exit)
}

fn print_text(name: &str, result: &Value) {
    match name {
        "verify" => {
            for c in result["checks"].as_array().into_iter().flatten() {
                let mark = if c["pass"].as_bool().unwrap_or(false) { "PASS" } else { "FAIL" };
                println!("{mark}  {} - {}", c["name"].as_str().unwrap_or(""), c["detail"].as_str().unwrap_or(""));
            }
            println!(
                "verify: {}",
                if result["all_pass"].as_bool().unwrap_or(false) { "all checks passed" } else { "FAILED" }
            );
        }
        "generators" => {
            println!(
                "mu = {}, {} ({})",
                result["mu"],
                if result["complete"].as_bool().unwrap_or(false) { "complete" } else { "partial" },
                result["condition"].as_str().unwrap_or("")
            );
            for g in result["generators"].as_array().into_iter().flatten() {
                println!(
                    "  [{}] {}",
                    g["provenance"].as_str().unwrap_or(""),
                    g["form"].as_str().unwrap_or("")
                );
            }
        }
        "singular" => {
            println!(
                "Delta(t) = {}  (degree {} of expected {})",
                result["dres"].as_str().unwrap_or(""),
                result["degree"],
                result["expected_degree"]
            );
            for c in result["clusters"].as_array().into_iter().flatten() {
                let point = c["point"].as_str().unwrap_or("unresolved");
                let mult = c["multiplicity"]
                    .as_u64()
                    .map(|m| format!(", m = {m}"))
                    .unwrap_or_default();
                println!(
                    "  cluster {}: epsilon = {}, point {point}{mult}",
                    c["factor"].as_str().unwrap_or(""),
                    c["epsilon"]
                );
            }
            println!(
                "genus ledger: {} vs accounted {}/2 ({})",
                result["genus_lhs"],
                result["accounted_twice"],
                if result["balanced"].as_bool().unwrap_or(false) { "balanced" } else { "not balanced" }
            );
            if !result["reparametrization"].is_null() {
                println!("reparametrized by {}", result["reparametrization"]);
            }
        }
        _ => print_flat(result, 0),
    }
}

fn print_flat(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_flat(val, indent + 1);
                    }
                    _ => println!("{pad}{k} = {}", flat(val)),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => print_flat(item, indent),
                    _ => println!("{pad}- {}", flat(item)),
                }
            }
        }
        other => println!("{pad}{}", flat(other)),
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
