use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use tabverify::correspondences::{
    bur1, bur1_inverse, bur2, bur2_inverse, burge, burge_inverse, dual_rsk, dual_rsk_inverse, rsk,
    rsk_inverse, IntMatrix,
};
use tabverify::harness::{self, Params, Status, TheoremCase, REGISTRY};
use tabverify::partitions::Partition;
use tabverify::symchar::{
    character, schur_expand, schur_poly, schur_terms, Construction, SchurExpansion, SymPoly,
};
use tabverify::tableaux::Tableau;

/// Tableau bijections and exact checks of the decompositions they induce.
#[derive(Parser)]
#[command(name = "tabverify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// RSK: matrix JSON to {"P","Q"}, or back with --invert.
    Rsk(Bijection),
    /// Dual RSK on 0/1 matrices.
    DualRsk(Bijection),
    /// Burge correspondence (column insertion).
    Burge(Bijection),
    /// Simple graphs to tableaux of threshold shape.
    Bur1(Bijection),
    /// Graphs with loops to tableaux of conjugate-threshold shape.
    Bur2(Bijection),
    /// Schur polynomial in the monomial basis.
    Schur {
        /// Partition, e.g. 3,1.
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        json: bool,
    },
    /// Schur expansion of a symmetric polynomial given as JSON.
    Expand {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Character of a construction such as "sym(2) * sym_ext2(1)".
    Character {
        #[arg(long)]
        spec: Construction,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run one registry entry.
    Verify {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run every registry entry with all sizes capped at --max-size.
    VerifyAll {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the registry.
    List,
}

#[derive(Args)]
struct Bijection {
    /// Input JSON file, or - for stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Map tableaux back to a matrix.
    #[arg(long)]
    invert: bool,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    lambda: Option<Partition>,
}

impl From<ParamArgs> for Params {
    fn from(a: ParamArgs) -> Self {
        Params {
            n: a.n,
            m: a.m,
            d: a.d,
            k: a.k,
            l: a.l,
            lambda: a.lambda,
        }
    }
}

#[derive(Clone, Copy)]
enum Algorithm {
    Rsk,
    DualRsk,
    Burge,
    Bur1,
    Bur2,
}

#[derive(Serialize, Deserialize)]
struct TableauPair {
    #[serde(rename = "P")]
    p: Tableau,
    #[serde(rename = "Q")]
    q: Tableau,
}

#[derive(Serialize, Deserialize)]
struct SingleTableau {
    #[serde(rename = "P")]
    p: Tableau,
}

/// Maximum sweep size for `verify-all` before the runtime warning.
const VERIFY_ALL_DESK_SIZE: usize = 6;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Rsk(b) => bijection(Algorithm::Rsk, &b),
        Command::DualRsk(b) => bijection(Algorithm::DualRsk, &b),
        Command::Burge(b) => bijection(Algorithm::Burge, &b),
        Command::Bur1(b) => bijection(Algorithm::Bur1, &b),
        Command::Bur2(b) => bijection(Algorithm::Bur2, &b),
        Command::Schur { lambda, vars, json } => {
            print_poly(&schur_poly(&lambda, vars), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { input, json } => {
            let f: SymPoly = read_json(&input)?;
            let e = schur_expand(&f)?;
            print_expansion(&e, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Character { spec, vars, json } => {
            let ch = character(&spec, vars);
            let e = schur_expand(&ch)?;
            if json {
                let out = serde_json::json!({
                    "spec": spec.to_string(),
                    "vars": vars,
                    "character": ch,
                    "schur": schur_terms(&e),
                });
                println!("{out}");
            } else {
                println!("ch = {ch}");
                println!("   = {}", expansion_text(&e));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { name, params, json } => {
            let params = Params::from(params);
            for w in harness::desk_scale_warnings(&name, &params)? {
                eprintln!("warning: {w}");
            }
            let case = harness::verify(&name, &params)?;
            if json {
                println!("{}", serde_json::to_string(&case)?);
            } else {
                print_case(&case);
            }
            Ok(exit_for([&case]))
        }
        Command::VerifyAll { max_size, json } => {
            if max_size > VERIFY_ALL_DESK_SIZE {
                eprintln!(
                    "warning: --max-size {max_size} exceeds the desk-scale bound \
                     {VERIFY_ALL_DESK_SIZE}; only the defaults up to it are raised"
                );
            }
            let cases = harness::verify_all(max_size);
            if json {
                println!("{}", serde_json::to_string(&cases)?);
            } else {
                print_summary(&cases);
            }
            Ok(exit_for(&cases))
        }
        Command::List => {
            for t in REGISTRY {
                let params: Vec<&str> = t.params.iter().map(|p| p.param.as_str()).collect();
                println!("{:<22} [{}] {}", t.name, params.join(","), t.statement);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for<'a>(cases: impl IntoIterator<Item = &'a TheoremCase>) -> ExitCode {
    if cases.into_iter().any(|c| c.status == Status::Failed) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        anyhow!(
            "{}: invalid input at `{}`: {}",
            path.display(),
            e.path(),
            e.inner()
        )
    })
}

fn bijection(alg: Algorithm, b: &Bijection) -> Result<ExitCode> {
    let out = if b.invert {
        let a: IntMatrix = match alg {
            Algorithm::Bur1 | Algorithm::Bur2 => {
                let t: SingleTableau = read_json(&b.input)?;
                if matches!(alg, Algorithm::Bur1) {
                    bur1_inverse(&t.p)
                } else {
                    bur2_inverse(&t.p)
                }?
            }
            _ => {
                let t: TableauPair = read_json(&b.input)?;
                match alg {
                    Algorithm::Rsk => rsk_inverse(&t.p, &t.q),
                    Algorithm::DualRsk => dual_rsk_inverse(&t.p, &t.q),
                    _ => burge_inverse(&t.p, &t.q),
                }?
            }
        };
        serde_json::to_string(&a)?
    } else {
        let a: IntMatrix = read_json(&b.input)?;
        match alg {
            Algorithm::Rsk => pair_json(rsk(&a))?,
            Algorithm::DualRsk => pair_json(dual_rsk(&a)?)?,
            Algorithm::Burge => pair_json(burge(&a))?,
            Algorithm::Bur1 => serde_json::to_string(&SingleTableau { p: bur1(&a)? })?,
            Algorithm::Bur2 => serde_json::to_string(&SingleTableau { p: bur2(&a)? })?,
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn pair_json((p, q): (Tableau, Tableau)) -> Result<String> {
    Ok(serde_json::to_string(&TableauPair { p, q })?)
}

fn print_poly(f: &SymPoly, json: bool) {
    if json {
        println!("{}", serde_json::to_string(f).expect("serializable"));
    } else {
        println!("{f}");
    }
}

fn expansion_text(e: &SchurExpansion) -> String {
    if e.is_empty() {
        return "0".to_string();
    }
    let terms: Vec<String> = e
        .iter()
        .rev()
        .map(|(lambda, c)| {
            if *c == 1.into() {
                format!("s{lambda}")
            } else {
                format!("{c}·s{lambda}")
            }
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

fn print_expansion(e: &SchurExpansion, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&schur_terms(e)).expect("serializable")
        );
    } else {
        println!("{}", expansion_text(e));
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Failed => "FAILED",
        Status::Skipped => "skipped",
    }
}

fn print_case(case: &TheoremCase) {
    let failures = case.failures().count();
    println!(
        "{}: {} ({} instances, {} failures)",
        case.name,
        status_word(case.status),
        case.details.len(),
        failures
    );
    if let Some(reason) = &case.reason {
        println!("  reason: {reason}");
    }
    let width = case
        .details
        .iter()
        .map(|d| d.instance.len())
        .max()
        .unwrap_or(0);
    for d in &case.details {
        let mark = if d.ok { "ok" } else { "MISMATCH" };
        println!(
            "  {:<width$}  {mark:<8}  expected {}  actual {}",
            d.instance, d.expected, d.actual
        );
    }
}

fn print_summary(cases: &[TheoremCase]) {
    println!(
        "{:<22} {:<9} {:>9} {:>9}",
        "theorem", "status", "instances", "failures"
    );
    for c in cases {
        println!(
            "{:<22} {:<9} {:>9} {:>9}",
            c.name,
            status_word(c.status),
            c.details.len(),
            c.failures().count()
        );
        if let Some(reason) = &c.reason {
            println!("  reason: {reason}");
        }
    }
}
