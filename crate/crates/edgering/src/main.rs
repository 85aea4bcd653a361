use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use edgering::cli::{
    self, analyze, cmd_corpus, cmd_verify, corpus_table, parse_edge_list, parse_inline,
    report_table, verify::verification_table, CliError, CorpusScope, LemmaId, VerifyParams,
};

/// Edge polytopes, δ-polynomials and toric ideals of finite simple
/// graphs, with exhaustive small-graph verifiers.
#[derive(Parser)]
#[command(name = "edgering", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one connected graph from an edge-list file or an inline
    /// literal.
    Analyze {
        /// Edge-list file ("N M" header, then "u v" lines; '#' comments).
        input: Option<PathBuf>,
        /// Inline literal "N;u-v,u-v,…" instead of a file.
        #[arg(long)]
        graph: Option<String>,
        /// Truncation bound for minimal generators.
        #[arg(long, default_value_t = cli::DEFAULT_QMAX)]
        qmax: usize,
        /// Truncation bound for first syzygies.
        #[arg(long, default_value_t = cli::DEFAULT_JMAX)]
        jmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run a lemma/theorem verifier: L41, L42, L43, L44, L45, THM, CONJ,
    /// or MONO (sampled degree monotonicity).
    Verify {
        lemma: String,
        /// Corpus bound for the exhaustive verifiers (guarded to ≤ 7).
        #[arg(long, default_value_t = cli::DEFAULT_MAX_N)]
        max_n: usize,
        /// Half-length parameter of C_(k,ℓ) for L44.
        #[arg(long)]
        k: Option<usize>,
        /// Chord offset of C_(k,ℓ) for L44.
        #[arg(long)]
        ell: Option<usize>,
        /// Linearity degree for CONJ (4 or 5).
        #[arg(long, default_value_t = 4)]
        q: usize,
        #[arg(long, default_value_t = cli::DEFAULT_QMAX)]
        qmax: usize,
        #[arg(long, default_value_t = cli::DEFAULT_JMAX)]
        jmax: usize,
        /// Enable the slow tier (k = 5 chorded cycles, exact shared-vertex
        /// hexagon degree).
        #[arg(long)]
        slow: bool,
        /// Seed for sampled property verifications (MONO).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count for MONO.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Sweep the connected-graph corpus and print per-graph records plus
    /// aggregates.
    Corpus {
        #[arg(long, default_value_t = cli::DEFAULT_MAX_N)]
        max_n: usize,
        /// all | polytope | ideal
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long, default_value_t = cli::DEFAULT_QMAX)]
        qmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("EDGERING_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run() -> Result<ExitCode, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            input,
            graph,
            qmax,
            jmax,
            format,
        } => {
            let g = match (input, graph) {
                (_, Some(lit)) => parse_inline(&lit)?,
                (Some(path), None) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Parse {
                        line: 0,
                        message: format!("cannot read {}: {e}", path.display()),
                    })?;
                    parse_edge_list(&text)?
                }
                (None, None) => {
                    return Err(CliError::Parse {
                        line: 0,
                        message: "provide an input file or --graph".into(),
                    })
                }
            };
            let report = analyze(&g, qmax, jmax)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| CliError::Internal(e.to_string()))?
                ),
                Format::Table => print!("{}", report_table(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            lemma,
            max_n,
            k,
            ell,
            q,
            qmax,
            jmax,
            slow,
            seed,
            pairs,
            format,
        } => {
            let id: LemmaId = lemma.parse().map_err(CliError::Guard)?;
            let params = VerifyParams {
                max_n,
                k,
                ell,
                q,
                qmax,
                jmax,
                slow,
                seed,
                pairs,
            };
            let result = cmd_verify(id, &params)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&result)
                        .map_err(|e| CliError::Internal(e.to_string()))?
                ),
                Format::Table => print!("{}", verification_table(&result)),
            }
            Ok(if result.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Corpus {
            max_n,
            which,
            qmax,
            format,
        } => {
            let scope: CorpusScope = which.parse().map_err(CliError::Guard)?;
            let summary = cmd_corpus(max_n, scope, qmax)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&summary)
                        .map_err(|e| CliError::Internal(e.to_string()))?
                ),
                Format::Table => print!("{}", corpus_table(&summary)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
