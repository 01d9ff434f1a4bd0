use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use pipeline_cli::{gen_polyhedra, gen_tangles, records, verify, write_csv, VerifyConfig, CHECKPOINT_ROOT_VAR};

#[derive(Parser)]
#[command(name = "knotsieve", version, about = "Search for nontrivial knots with trivial Jones polynomial")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Non-thin Conway polyhedra as JSONL.
    GenPolyhedra {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Algebraic tangle classes as JSONL.
    GenTangles {
        #[arg(long)]
        max_crossings: u32,
        #[arg(long)]
        trivializable_only: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sieve every diagram with the given crossing number and confirm the candidates.
    /// Exit status: 0 all confirmed, 2 some unresolved, 1 error.
    Verify {
        #[arg(long)]
        crossings: u32,
        #[arg(long)]
        polyhedra: PathBuf,
        #[arg(long)]
        tangles: PathBuf,
        /// Defaults to `$KNOTSIEVE_CHECKPOINT_ROOT/c<N>`, or `checkpoints/c<N>`.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: PathBuf,
        /// Search nodes per candidate.
        #[arg(long, default_value_t = simplifier::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// CSV summary of finished runs and generated inputs.
    Stats {
        #[arg(long, num_args = 0..)]
        runs: Vec<PathBuf>,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        tangles: Option<PathBuf>,
        #[arg(long)]
        polyhedra: Option<PathBuf>,
        /// Adds wall-clock columns, which differ between runs.
        #[arg(long)]
        timings: bool,
    },
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::GenPolyhedra { max_vertices, out } => {
            if max_vertices < 6 {
                eprintln!("warning: no polyhedron has fewer than 6 vertices; writing an empty file");
            }
            let rows = gen_polyhedra(max_vertices, &out)?;
            println!("{:>8} {:>10}", "vertices", "polyhedra");
            for (v, n) in &rows {
                println!("{v:>8} {n:>10}");
            }
            println!("{:>8} {:>10}", "total", rows.iter().map(|r| r.1).sum::<usize>());
        }
        Cmd::GenTangles { max_crossings, trivializable_only, out } => {
            let rows = gen_tangles(max_crossings, trivializable_only, &out)?;
            println!("{:>9} {:>10} {:>14}", "crossings", "total", "trivializable");
            for (c, all, triv) in &rows {
                println!("{c:>9} {all:>10} {triv:>14}");
            }
        }
        Cmd::Verify { crossings, polyhedra, tangles, checkpoint, workers, out, budget } => {
            let checkpoint = checkpoint.unwrap_or_else(|| {
                let root = std::env::var_os(CHECKPOINT_ROOT_VAR).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("checkpoints"));
                root.join(format!("c{crossings}"))
            });
            let cfg = VerifyConfig { crossings, polyhedra, tangles, checkpoint, workers, out, budget };
            let s = verify(&cfg)?;
            let st = &s.stats;
            println!(
                "c={} diagrams={} knots={} det1={} candidates={} confirmed={} unresolved={} batches={} (computed {})",
                st.crossings, st.diagrams, st.knots, st.survivors, st.candidates, st.confirmed, st.unresolved, s.batches, s.computed
            );
            return Ok(s.verdict.exit_code() as u8);
        }
        Cmd::Stats { runs, csv, tangles, polyhedra, timings } => {
            let t = tangles.map(|p| records::load_tangles(&p)).transpose()?;
            let p = polyhedra.map(|p| records::load_polyhedra(&p)).transpose()?;
            write_csv(&runs, t.as_deref(), p.as_deref(), timings, &csv)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
