use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cayley_embed::cayley::cayley_graph;
use cayley_embed::graph::{named, SimpleGraph};
use cayley_embed::groupspec::{parse_generators, GroupSpec};
use cayley_embed::topology::genus::{DEFAULT_BUDGET, DEFAULT_EFFORT};
use cayley_embed::topology::{exact_genus_with, EmbeddingCertificate, ExactOptions};
use cayley_embed::verify::{self, SuiteOptions};
use cayley_embed::Error;

const EXIT_PARSE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_FAILED: u8 = 4;

/// Cayley graphs of right groups and their embeddings on surfaces.
#[derive(Parser)]
#[command(name = "cayley-embed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Cay(S, C) for a semigroup such as Z6, D3 or Z2xR3.
    Cayley {
        spec: String,
        /// Generators: indices, element names or tuples like (1,*).
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long, value_enum)]
        export: Option<Export>,
        /// Write the export here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound the orientable genus of a graph.
    ///
    /// INPUT is an edge-list or rotation-certificate file, a named graph
    /// (K5, K3,3, C8, P4), or a semigroup name when --gens is given.
    Genus {
        input: String,
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_EFFORT)]
        effort: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the best embedding found as a rotation certificate.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Re-run the published results against the library.
    #[command(visible_alias = "verify-paper")]
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_r: usize,
        #[arg(long, value_enum, default_value_t = Report::Text)]
        report: Report,
        /// Run a single suite: products, blowup, cyclic, bounds, genus,
        /// theorem, example38 or oracle.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        effort: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Dot,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cayley { spec, gens, export, out } => cmd_cayley(&spec, &gens, export, out.as_deref()),
        Command::Genus { input, gens, budget, effort, seed, certificate } => {
            cmd_genus(&input, gens.as_deref(), ExactOptions { budget, effort, seed }, certificate.as_deref())
        }
        Command::Verify { max_n, max_r, report, only, budget, effort, seed } => {
            let defaults = SuiteOptions::default();
            let opts = SuiteOptions {
                max_n,
                max_r,
                budget,
                effort: effort.unwrap_or(defaults.effort),
                seed: seed.unwrap_or(defaults.seed),
            };
            cmd_verify(&opts, only.as_deref(), report)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PARSE)
        }
    }
}

enum CliError {
    Io(String),
    Lib(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_cayley(spec: &str, gens: &str, export: Option<Export>, out: Option<&Path>) -> Result<u8, CliError> {
    let spec: GroupSpec = spec.parse()?;
    let table = spec.table()?;
    let c = parse_generators(&spec, &table, gens)?;
    let g = cayley_graph(&table, &c).with_labels(table.names().to_vec());
    println!("# Cay({spec}, {}): {} vertices, {} edges", c.display(&table), g.n(), g.m());
    if let Some(fmt) = export {
        let text = match fmt {
            Export::Dot => g.to_dot("cayley"),
            Export::Edges => g.to_edge_list(),
        };
        write_or_print(out, &text)?;
    }
    Ok(0)
}

fn named_graph(name: &str) -> Option<SimpleGraph> {
    let (kind, rest) = (name.get(..1)?, name.get(1..)?);
    let nums: Vec<usize> = rest.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?;
    match (kind, nums.as_slice()) {
        ("K", [n]) => Some(named::complete(*n)),
        ("K", parts) if parts.len() >= 2 => Some(named::complete_multipartite(parts)),
        ("C", [n]) if *n >= 3 => Some(named::cycle(*n)),
        ("P", [n]) => Some(named::path(*n)),
        _ => None,
    }
}

fn load_graph(input: &str, gens: Option<&str>) -> Result<SimpleGraph, CliError> {
    if let Some(gens) = gens {
        let spec: GroupSpec = input.parse()?;
        let table = spec.table()?;
        let c = parse_generators(&spec, &table, gens)?;
        return Ok(cayley_graph(&table, &c));
    }
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{input}: {e}")))?;
        if text.trim_start().starts_with("rotation-certificate") {
            return Ok(EmbeddingCertificate::from_text(&text)?.graph);
        }
        return Ok(SimpleGraph::parse_edge_list(&text, None)?);
    }
    named_graph(input).ok_or_else(|| {
        CliError::Lib(Error::Parse(format!(
            "`{input}` is not a file or a named graph (K5, K3,3, C8, P4); pass --gens for a semigroup"
        )))
    })
}

fn cmd_genus(input: &str, gens: Option<&str>, opts: ExactOptions, cert_out: Option<&Path>) -> Result<u8, CliError> {
    let g = load_graph(input, gens)?;
    let b = exact_genus_with(&g, opts);
    println!("graph: {} vertices, {} edges", g.n(), g.m());
    match b.exact() {
        Some(k) => println!("exact {k} (lower via {}, {} expansions)", b.lower_reason, b.expansions),
        None => {
            let upper = b.upper_genus().map_or("none".to_string(), |u| u.to_string());
            println!("lower {} via {}, upper {upper} ({} expansions)", b.lower, b.lower_reason, b.expansions);
        }
    }
    if let (Some(path), Some(cert)) = (cert_out, b.upper.as_ref()) {
        write_or_print(Some(path), &cert.to_text())?;
    }
    Ok(if b.exact().is_some() { 0 } else { EXIT_INCONCLUSIVE })
}

fn cmd_verify(opts: &SuiteOptions, only: Option<&str>, report: Report) -> Result<u8, CliError> {
    let checks = verify::run(only, opts)?;
    if only.is_some() && checks.is_empty() {
        return Err(CliError::Lib(Error::Parse(format!(
            "unknown suite; expected one of {:?}",
            verify::SUITES
        ))));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    match report {
        Report::Json => {
            let json = serde_json::to_string_pretty(&checks).map_err(|e| CliError::Io(e.to_string()))?;
            println!("{json}");
        }
        Report::Text => {
            for c in &checks {
                println!(
                    "[{}] {} {:<10} {} ({:.1}s)\n       {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.criterion,
                    c.suite,
                    c.name,
                    c.seconds,
                    c.detail
                );
            }
            println!("{} checks, {} failed", checks.len(), failed);
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_FAILED })
}
