//! `dern`: degree-associated edge reconstruction numbers from the command
//! line. Wraps the `dedeck` library with batch verification, caching, and
//! machine-readable reports.
//!
//! Exit status: 0 on success and full agreement, 1 when a verification sweep
//! found mismatches (certificates are written), 2 on usage or capacity
//! errors.

mod cache;

use cache::{tool_version, Cache, CacheEntry, ENV_CACHE_PATH};
use clap::{Parser, Subcommand, ValueEnum};
use dedeck::{
    canonical_form, confusers, csv_report, discrepancies, double_broom, extensions, graph6,
    lemma1_every_edge, lemma1_holds, params_in_range, parse_spec, predict, recon_report,
    report_from_confusers, Dedeck, DoubleBroomParams, Error, Graph, VerifiedInstance, VerifyStatus,
    VERTEX_CAP,
};
use rayon::prelude::*;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dern",
    version,
    about = "Degree-associated edge reconstruction numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dedeck: one line per decard class, as `card degree multiplicity`.
    Deck {
        /// Family spec such as `dbroom:1,2,4`, a graph6 string, or `-` for graph6 on stdin.
        spec: String,
    },
    /// Compute dern and adern with witnesses; prints JSON.
    Recon {
        /// Family spec, graph6 string, or `-` for stdin.
        spec: String,
    },
    /// List the non-isomorphic graphs sharing decards with the input.
    Confusers {
        /// Family spec, graph6 string, or `-` for stdin.
        spec: String,
        /// Keep only confusers sharing at least this many decards.
        #[arg(long, default_value_t = 1)]
        min_overlap: usize,
    },
    /// Check the unique-completion condition on every edge.
    Lemma1 {
        /// Family spec, graph6 string, or `-` for stdin.
        spec: String,
    },
    /// Compare the closed-form predictions against brute force on every
    /// double-broom in range.
    Verify {
        /// Largest instance order to sweep.
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Worker threads; any value produces output identical to 1.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Reuse and record per-instance results in this file (defaults to
        /// the DERN_CACHE environment variable; no cache when both absent).
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Directory that receives one JSON certificate per mismatch.
        #[arg(long, default_value = "certificates")]
        cert_dir: PathBuf,
    },
    /// List the canonical keys of the one-edge completions of a card.
    Extensions {
        /// graph6 string, or `-` for stdin.
        graph6: String,
        /// Degree the missing edge must have in the completed graph.
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Deck { spec } => {
            print!("{}", Dedeck::of(&input_graph(&spec)?)?.to_text());
        }
        Command::Recon { spec } => {
            print!("{}", recon_report(&input_graph(&spec)?)?.to_json());
        }
        Command::Confusers { spec, min_overlap } => {
            let cs = confusers(&input_graph(&spec)?)?;
            let mut members: Vec<_> = cs
                .members()
                .iter()
                .filter(|c| c.overlap >= min_overlap)
                .collect();
            members.sort_by(|a, b| b.overlap.cmp(&a.overlap).then_with(|| a.key.cmp(&b.key)));
            for c in members {
                println!("{} {}", c.key.as_str(), c.overlap);
            }
        }
        Command::Lemma1 { spec } => {
            let g = input_graph(&spec)?;
            println!("u v d(e) unique_completion");
            for e in g.edges() {
                let verdict = if lemma1_holds(&g, e)? { "yes" } else { "no" };
                println!("{} {} {} {}", e.0, e.1, g.edge_degree(e.0, e.1)?, verdict);
            }
        }
        Command::Verify {
            max_vertices,
            format,
            jobs,
            cache,
            cert_dir,
        } => {
            return verify(max_vertices, format, jobs, cache, cert_dir);
        }
        Command::Extensions { graph6, degree } => {
            for h in extensions(&input_graph(&graph6)?, degree) {
                println!("{}", canonical_form(&h).as_str());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Resolves a positional input: `-` reads graph6 from stdin, anything else is
/// a family spec or graph6 string.
fn input_graph(spec: &str) -> Result<Graph, CliError> {
    if spec == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(graph6::decode(text.trim())?)
    } else {
        Ok(parse_spec(spec)?)
    }
}

fn verify(
    max_vertices: usize,
    format: Format,
    jobs: usize,
    cache_flag: Option<PathBuf>,
    cert_dir: PathBuf,
) -> Result<ExitCode, CliError> {
    if max_vertices > VERTEX_CAP {
        return Err(Error::TooManyVertices(max_vertices).into());
    }
    let cache_path = cache_flag.or_else(|| std::env::var_os(ENV_CACHE_PATH).map(PathBuf::from));
    let cache = cache_path.as_deref().map(Cache::load);
    let params = params_in_range(max_vertices);
    let outcomes: Vec<(VerifiedInstance, Option<CacheEntry>)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(std::io::Error::other)?;
        // an indexed parallel map collects in input order, so the report is
        // byte-identical to the sequential one
        pool.install(|| {
            params
                .par_iter()
                .map(|p| verified_row(p, cache.as_ref()))
                .collect::<Result<_, _>>()
        })?
    } else {
        params
            .iter()
            .map(|p| verified_row(p, cache.as_ref()))
            .collect::<Result<_, _>>()?
    };
    if let Some(cache) = &cache {
        let fresh: Vec<CacheEntry> = outcomes
            .iter()
            .filter_map(|(_, entry)| entry.clone())
            .collect();
        cache.append(&fresh);
    }
    let rows: Vec<VerifiedInstance> = outcomes.into_iter().map(|(row, _)| row).collect();
    match format {
        Format::Csv => print!("{}", csv_report(&rows)),
        Format::Json => print!("{}", json_report(&rows)),
    }
    let certs = discrepancies(&rows);
    if certs.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    std::fs::create_dir_all(&cert_dir)?;
    for cert in &certs {
        let p = &cert.params;
        let file = cert_dir.join(format!("D_{}_{}_{}.json", p.m(), p.n(), p.p()));
        std::fs::write(file, cert.to_json())?;
    }
    eprintln!(
        "{} mismatch(es); certificates written to {}",
        certs.len(),
        cert_dir.display()
    );
    Ok(ExitCode::from(1))
}

/// Verifies one instance, going through the cache for the expensive
/// exhaustive part when one is configured.
fn verified_row(
    params: &DoubleBroomParams,
    cache: Option<&Cache>,
) -> Result<(VerifiedInstance, Option<CacheEntry>), CliError> {
    let g = double_broom(*params)?;
    let key = canonical_form(&g);
    let mut fresh = None;
    let computed = match cache.and_then(|c| c.lookup_report(key.as_str())) {
        Some(report) => report,
        None => {
            let report = report_from_confusers(&confusers(&g)?)?;
            if cache.is_some() {
                fresh = Some(CacheEntry {
                    key: key.as_str().to_string(),
                    dedeck: Dedeck::of(&g)?.to_text(),
                    report: Some(report.wire()),
                    tool_version: tool_version().to_string(),
                });
            }
            report
        }
    };
    let row = VerifiedInstance {
        params: *params,
        predicted: predict(params)?,
        computed,
        lemma1_every_edge: lemma1_every_edge(params)?,
    };
    Ok((row, fresh))
}

/// The CSV columns as a pretty-printed JSON array, one object per instance.
fn json_report(rows: &[VerifiedInstance]) -> String {
    let rows: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            serde_json::json!({
                "m": row.params.m(),
                "n": row.params.n(),
                "p": row.params.p(),
                "dern_pred": row.predicted.dern_predicted,
                "dern_comp": row.computed.dern,
                "adern_pred": row.predicted.adern_predicted,
                "adern_comp": row.computed.adern,
                "case_label": row.predicted.case_label,
                "status": match row.status() {
                    VerifyStatus::Agree => "agree",
                    VerifyStatus::Mismatch => "mismatch",
                },
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&rows).expect("rows serialize");
    text.push('\n');
    text
}
