use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use gpplanar::cayley::{ball_with_cap, BallError, DEFAULT_MAX_VERTICES};
use gpplanar::corpus::{run_corpus, CorpusConfig};
use gpplanar::decider::{decide, Condition};
use gpplanar::decomposition::{plan, validate_plan, PlanError};
use gpplanar::io::{read_product_graph, read_text};
use gpplanar::planarity::kuratowski_witness;
use gpplanar::witnesses::{
    verify_graph_certificate, verify_witness, witness_for, witness_to_dot, CertificateJson, Level,
};
use gpplanar::ProductGraph;

const SUCCESS: u8 = 0;
const INVALID: u8 = 1;
const INPUT_ERROR: u8 = 2;
const CAP_EXCEEDED: u8 = 3;
const NON_PLANAR: u8 = 10;
const PLANAR_INPUT: u8 = 11;

#[derive(Parser)]
#[command(author, version, about = "Planarity of Cayley graphs of graph products of cyclic groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for witnesses, balls and plans.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Largest Cayley ball to build before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_ball_vertices: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide planarity; exits 0 when planar and 10 when not.
    Decide { input: PathBuf },
    /// Emit a verified non-planarity certificate; exits 11 on planar input.
    Witness {
        input: PathBuf,
        /// For condition I, extract a Cayley-level subdivision from a ball
        /// instead of the graph-level certificate.
        #[arg(long)]
        ball_certificate: bool,
        /// Largest radius tried when extracting from balls.
        #[arg(long, default_value_t = 4)]
        max_radius: u32,
    },
    /// Emit the ball of the given radius around the identity.
    Ball { input: PathBuf, radius: u32 },
    /// Emit a validated decomposition plan; exits 10 on non-planar input.
    Plan { input: PathBuf },
    /// Run a seeded random corpus through every cross-check.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_order: u32,
        #[arg(long, default_value_t = 2)]
        ball_radius: u32,
        /// Attach ball-extracted certificates to condition I records.
        #[arg(long)]
        ball_certificates: bool,
    },
    /// Check a witness file against a graph; exits 0 if valid, 1 if not.
    CheckWitness { graph: PathBuf, witness: PathBuf },
}

enum Failure {
    Input(anyhow::Error),
    Cap(BallError),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn load(path: &Path) -> Result<ProductGraph, Failure> {
    read_product_graph(path).map_err(|e| Failure::Input(anyhow!("{}: {e}", path.display())))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value).context("serializing output")?);
    Ok(())
}

fn graph_certificate_dot(c: &CertificateJson) -> String {
    let mut out = String::from("graph certificate {\n");
    for b in &c.branch {
        out.push_str(&format!("  \"{b}\" [style=filled, fillcolor=gold];\n"));
    }
    for p in &c.paths {
        for w in p.windows(2) {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", w[0], w[1]));
        }
    }
    out.push_str("}\n");
    out
}

fn emit_certificate(g: &ProductGraph, c: &CertificateJson, format: Format) -> Result<(), Failure> {
    match (format, c.level) {
        (Format::Json, _) => print_json(c),
        (Format::Dot, Level::Cayley) => {
            let w = c.to_witness(g).context("re-reading the witness")?;
            print!("{}", witness_to_dot(g, &w));
            Ok(())
        }
        (Format::Dot, Level::Graph) => {
            print!("{}", graph_certificate_dot(c));
            Ok(())
        }
    }
}

fn cmd_witness(cli: &Cli, input: &Path, ball_certificate: bool, max_radius: u32) -> Result<u8, Failure> {
    let g = load(input)?;
    let verdict = decide(&g);
    if verdict.planar {
        eprintln!("the Cayley graph is planar; there is nothing to certify");
        return Ok(PLANAR_INPUT);
    }
    if let Some(w) = witness_for(&g, &verdict).map_err(|e| anyhow!(e))? {
        if !verify_witness(&g, &w) {
            return Err(anyhow!("constructed witness failed verification").into());
        }
        emit_certificate(&g, &CertificateJson::from_witness(&g, &w), cli.format)?;
        return Ok(SUCCESS);
    }
    if ball_certificate {
        for r in 1..=max_radius {
            let b = ball_with_cap(&g, r, cli.max_ball_vertices).map_err(Failure::Cap)?;
            if let Ok(cert) = kuratowski_witness(&b.to_simple_graph()) {
                let w = cert.map(|&i| b.elements()[i].clone());
                if !verify_witness(&g, &w) {
                    return Err(anyhow!("ball certificate failed verification").into());
                }
                emit_certificate(&g, &CertificateJson::from_witness(&g, &w), cli.format)?;
                return Ok(SUCCESS);
            }
        }
        return Err(anyhow!("every ball up to radius {max_radius} is planar").into());
    }
    let cert = verdict
        .violation(Condition::I)
        .and_then(|v| v.certificate.as_ref())
        .ok_or_else(|| anyhow!("no certificate available"))?;
    if !verify_graph_certificate(&g, cert) {
        return Err(anyhow!("graph certificate failed verification").into());
    }
    emit_certificate(&g, &CertificateJson::from_graph(cert), cli.format)?;
    Ok(SUCCESS)
}

fn cmd_check_witness(graph: &Path, witness: &Path) -> Result<u8, Failure> {
    let g = load(graph)?;
    let text = read_text(witness).map_err(|e| Failure::Input(e.into()))?;
    let c: CertificateJson = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(anyhow!("{}: {e}", witness.display())))?;
    let valid = match c.level {
        Level::Cayley => match c.to_witness(&g) {
            Ok(w) => verify_witness(&g, &w),
            Err(e) => return Err(Failure::Input(anyhow!("{}: {e}", witness.display()))),
        },
        Level::Graph => verify_graph_certificate(&g, &c.as_subdivision()),
    };
    println!("{}", if valid { "valid" } else { "invalid" });
    Ok(if valid { SUCCESS } else { INVALID })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Decide { input } => {
            let verdict = decide(&load(input)?);
            print_json(&verdict)?;
            Ok(if verdict.planar { SUCCESS } else { NON_PLANAR })
        }
        Command::Witness { input, ball_certificate, max_radius } => {
            cmd_witness(cli, input, *ball_certificate, *max_radius)
        }
        Command::Ball { input, radius } => {
            let b = ball_with_cap(&load(input)?, *radius, cli.max_ball_vertices).map_err(Failure::Cap)?;
            match cli.format {
                Format::Json => print_json(&b)?,
                Format::Dot => print!("{}", b.to_dot()),
            }
            Ok(SUCCESS)
        }
        Command::Plan { input } => {
            let g = load(input)?;
            match plan(&g) {
                Ok(p) => {
                    if !validate_plan(&g, &p) {
                        return Err(anyhow!("the plan failed validation").into());
                    }
                    match cli.format {
                        Format::Json => print_json(&p)?,
                        Format::Dot => print!("{}", p.to_dot()),
                    }
                    Ok(SUCCESS)
                }
                Err(PlanError::NonPlanar(v)) => {
                    print_json(&v)?;
                    Ok(NON_PLANAR)
                }
                Err(e) => Err(anyhow!(e).into()),
            }
        }
        Command::Corpus { seed, count, max_vertices, max_order, ball_radius, ball_certificates } => {
            if *max_vertices == 0 || *max_order < 2 {
                return Err(Failure::Input(anyhow!("--max-vertices must be positive and --max-order at least 2")));
            }
            let report = run_corpus(&CorpusConfig {
                seed: *seed,
                count: *count,
                max_vertices: *max_vertices,
                max_order: *max_order,
                ball_radius: *ball_radius,
                max_ball_vertices: cli.max_ball_vertices,
                ball_certificates: *ball_certificates,
            });
            print_json(&report)?;
            for rec in report.records.iter().filter(|r| r.inconsistency.is_some()) {
                eprintln!("{}", serde_json::to_string(rec).context("serializing record")?);
            }
            Ok(if report.inconsistencies == 0 { SUCCESS } else { INVALID })
        }
        Command::CheckWitness { graph, witness } => cmd_check_witness(graph, witness),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            INPUT_ERROR
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e}");
            CAP_EXCEEDED
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            INVALID
        }
    };
    ExitCode::from(code)
}
