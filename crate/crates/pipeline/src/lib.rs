//! Generation, verification and statistics commands behind the `knotsieve` binary.

pub mod records;
pub mod report;
pub mod stats;
pub mod verify;

use std::path::Path;

use anyhow::Result;

pub use report::CandidateReport;
pub use stats::{write_csv, StatsRow};
pub use verify::{verdict_of_report, verify, InputError, RunManifest, Verdict, VerifyConfig, VerifySummary, LEDGER_FILE, MANIFEST_FILE};

/// Environment variable naming the default checkpoint root.
pub const CHECKPOINT_ROOT_VAR: &str = "KNOTSIEVE_CHECKPOINT_ROOT";

/// Writes polyhedra with up to `max_vertices` vertices; returns the count per vertex number from 6.
pub fn gen_polyhedra(max_vertices: usize, out: &Path) -> Result<Vec<(usize, usize)>> {
    let recs = polyhedra_gen::enumerate_polyhedra(max_vertices);
    records::write_jsonl(out, recs.iter().map(|r| r.to_json()))?;
    Ok((6..=max_vertices).map(|v| (v, recs.iter().filter(|r| r.vertex_count == v).count())).collect())
}

/// Writes tangle classes up to `max_crossings`; returns (crossings, total, trivializable) per level.
pub fn gen_tangles(max_crossings: u32, trivializable_only: bool, out: &Path) -> Result<Vec<(u32, usize, usize)>> {
    let recs = tangle_gen::enumerate_tangles(max_crossings, trivializable_only);
    records::write_jsonl(out, recs.iter().map(|r| r.to_json()))?;
    Ok((1..=max_crossings)
        .map(|c| {
            let level = recs.iter().filter(|r| r.crossings == c);
            let (all, triv) = level.fold((0, 0), |(a, t), r| (a + 1, t + r.trivializable as usize));
            (c, all, triv)
        })
        .collect())
}
