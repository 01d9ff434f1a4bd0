//! The checkpointed verification run for one crossing number.
//!
//! A checkpoint directory holds `manifest.json` (target, input digests and
//! batch labels), one output file per finished batch under `batches/`, and
//! `ledger.jsonl`, appended once per finished batch with its output digest
//! and counts. A restarted run trusts a ledger line only when the batch file
//! still hashes to the recorded digest.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use diagram_engine::{determinant, plan_batches, run_batch, BatchId, TanglePool};
use polyhedra_gen::PolyhedronRecord;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use simplifier::{expand_to_pd, simplify, Status};

use crate::records::{file_digest, load_polyhedra, load_tangles, sha256_hex, write_atomic};
use crate::report::CandidateReport;
use crate::stats::{StatsRow, STATS_FILE};

pub const MANIFEST_FILE: &str = "manifest.json";
pub const LEDGER_FILE: &str = "ledger.jsonl";

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub crossings: u32,
    pub polyhedra: PathBuf,
    pub tangles: PathBuf,
    pub checkpoint: PathBuf,
    pub workers: usize,
    pub out: PathBuf,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("tangle pool too small: crossings up to {have}, need {need}")]
    TanglePoolTooSmall { have: u32, need: u32 },
    #[error("tangle pool holds only trivializable tangles; closures need every tangle")]
    TrivializableOnly,
    #[error("polyhedra cover vertex counts up to {have}, need {need}")]
    PolyhedraTooSmall { have: usize, need: usize },
    #[error("checkpoint {0} belongs to a different run")]
    ForeignCheckpoint(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every candidate was confirmed.
    Verified,
    Unresolved,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Unresolved => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifySummary {
    pub stats: StatsRow,
    pub verdict: Verdict,
    pub batches: usize,
    /// Batches computed by this invocation rather than taken from the ledger.
    pub computed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub version: String,
    pub crossings: u32,
    pub polyhedra_digest: String,
    pub tangles_digest: String,
    pub budget: usize,
    pub batches: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct LedgerEntry {
    batch: usize,
    label: String,
    digest: String,
    diagrams: u64,
    knots: u64,
    survivors: u64,
    candidates: u64,
    confirmed: u64,
    unresolved: u64,
    sieve_ms: u64,
    confirm_ms: u64,
}

fn batch_path(dir: &Path, i: usize) -> PathBuf {
    dir.join("batches").join(format!("{i:06}.jsonl"))
}

/// No 4-valent polyhedron has seven vertices, so a file generated with
/// bound 7 only reaches 6.
fn polyhedra_needed(c: u32) -> usize {
    match c {
        0..=5 => 0,
        7 => 6,
        _ => c as usize,
    }
}

fn check_inputs(c: u32, polys: &[PolyhedronRecord], pool: &TanglePool, tangles: &[tangle_gen::TangleRecord]) -> Result<(), InputError> {
    if pool.max_crossings() < c {
        return Err(InputError::TanglePoolTooSmall { have: pool.max_crossings(), need: c });
    }
    if c >= 6 && tangles.iter().all(|t| t.trivializable) {
        return Err(InputError::TrivializableOnly);
    }
    let have = polys.iter().map(|p| p.vertex_count).max().unwrap_or(0);
    let need = polyhedra_needed(c);
    if have < need {
        return Err(InputError::PolyhedraTooSmall { have, need });
    }
    Ok(())
}

/// Entries whose batch files are intact; rewrites the ledger without the rest.
fn load_ledger(dir: &Path, labels: &[String]) -> Result<BTreeMap<usize, LedgerEntry>> {
    let path = dir.join(LEDGER_FILE);
    let mut done = BTreeMap::new();
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(e).context("reading ledger"),
    };
    for line in text.lines() {
        let Ok(e) = serde_json::from_str::<LedgerEntry>(line) else { continue };
        if labels.get(e.batch) != Some(&e.label) {
            continue;
        }
        let ok = fs::read(batch_path(dir, e.batch)).map(|b| sha256_hex(&b) == e.digest).unwrap_or(false);
        if ok {
            done.insert(e.batch, e);
        }
    }
    let mut clean = String::new();
    for e in done.values() {
        clean.push_str(&serde_json::to_string(e)?);
        clean.push('\n');
    }
    write_atomic(&path, clean.as_bytes())?;
    Ok(done)
}

fn run_one(i: usize, id: &BatchId, label: &str, c: u32, polys: &[Arc<PolyhedronRecord>], pool: &TanglePool, budget: usize) -> Result<(Vec<u8>, LedgerEntry)> {
    let t = Instant::now();
    let outcome = run_batch(id, c, polys, pool);
    let sieve_ms = t.elapsed().as_millis() as u64;
    let t = Instant::now();
    let mut bytes = Vec::new();
    let (mut confirmed, mut unresolved) = (0, 0);
    for (d, bracket) in outcome.candidates.iter().cloned() {
        let det = determinant(&d)?;
        let pd = expand_to_pd(&d).with_context(|| format!("expanding a candidate of {label}"))?;
        let s = simplify(&pd, budget);
        match s.status {
            Status::Confirmed => confirmed += 1,
            Status::Unresolved => unresolved += 1,
        }
        let r = CandidateReport { diagram: d, bracket, det: u64::try_from(det)?, status: s.status, moves: s.trace.len() };
        bytes.extend_from_slice(r.to_json().as_bytes());
        bytes.push(b'\n');
    }
    let entry = LedgerEntry {
        batch: i,
        label: label.to_string(),
        digest: sha256_hex(&bytes),
        diagrams: outcome.diagrams as u64,
        knots: outcome.knots as u64,
        survivors: outcome.survivors as u64,
        candidates: outcome.candidates.len() as u64,
        confirmed,
        unresolved,
        sieve_ms,
        confirm_ms: t.elapsed().as_millis() as u64,
    };
    Ok((bytes, entry))
}

pub fn verify(cfg: &VerifyConfig) -> Result<VerifySummary> {
    let c = cfg.crossings;
    let all_polys = load_polyhedra(&cfg.polyhedra)?;
    let tangles = load_tangles(&cfg.tangles)?;
    let pool_records: Vec<_> = tangles.iter().filter(|t| t.crossings <= c).cloned().collect();
    let pool = TanglePool::new(pool_records)?;
    check_inputs(c, &all_polys, &pool, &tangles)?;
    let polys: Vec<Arc<PolyhedronRecord>> = all_polys.into_iter().filter(|p| p.vertex_count <= c as usize).map(Arc::new).collect();

    let plan = plan_batches(c, &polys);
    let labels: Vec<String> = plan.iter().map(|b| b.label(&polys)).collect();
    let manifest = RunManifest {
        version: env!("CARGO_PKG_VERSION").to_string(),
        crossings: c,
        polyhedra_digest: file_digest(&cfg.polyhedra)?,
        tangles_digest: file_digest(&cfg.tangles)?,
        budget: cfg.budget,
        batches: labels.clone(),
    };

    let dir = &cfg.checkpoint;
    fs::create_dir_all(dir.join("batches")).with_context(|| format!("creating {}", dir.display()))?;
    let mpath = dir.join(MANIFEST_FILE);
    match fs::read_to_string(&mpath) {
        Ok(s) => {
            let old: RunManifest = serde_json::from_str(&s).context("reading manifest")?;
            if old != manifest {
                bail!(InputError::ForeignCheckpoint(dir.clone()));
            }
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            write_atomic(&mpath, serde_json::to_string_pretty(&manifest)?.as_bytes())?;
        }
        Err(e) => return Err(e).context("reading manifest"),
    }

    let done = load_ledger(dir, &labels)?;
    let pending: Vec<usize> = (0..plan.len()).filter(|i| !done.contains_key(i)).collect();
    let ledger = Mutex::new((
        OpenOptions::new().append(true).create(true).open(dir.join(LEDGER_FILE))?,
        done,
    ));

    let workers = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers.max(1)).build()?;
    workers.install(|| {
        pending.par_iter().try_for_each(|&i| -> Result<()> {
            let (bytes, entry) = run_one(i, &plan[i], &labels[i], c, &polys, &pool, cfg.budget)?;
            write_atomic(&batch_path(dir, i), &bytes)?;
            let mut guard = ledger.lock().expect("ledger lock");
            let (file, map) = &mut *guard;
            writeln!(file, "{}", serde_json::to_string(&entry)?)?;
            file.sync_data()?;
            map.insert(i, entry);
            Ok(())
        })
    })?;

    let (_, done) = ledger.into_inner().expect("ledger lock");
    let mut report = Vec::new();
    let mut stats = StatsRow { crossings: c, ..Default::default() };
    for i in 0..plan.len() {
        let e = &done[&i];
        report.extend(fs::read(batch_path(dir, i))?);
        stats.diagrams += e.diagrams;
        stats.knots += e.knots;
        stats.survivors += e.survivors;
        stats.candidates += e.candidates;
        stats.confirmed += e.confirmed;
        stats.unresolved += e.unresolved;
        stats.sieve_seconds += e.sieve_ms as f64 / 1000.0;
        stats.confirm_seconds += e.confirm_ms as f64 / 1000.0;
    }
    write_atomic(&cfg.out, &report)?;
    write_atomic(&dir.join(STATS_FILE), serde_json::to_string_pretty(&stats)?.as_bytes())?;
    let verdict = if stats.unresolved == 0 { Verdict::Verified } else { Verdict::Unresolved };
    Ok(VerifySummary { stats, verdict, batches: plan.len(), computed: pending.len() })
}

/// Exit status implied by a finished report file: 0 when every line is confirmed.
pub fn verdict_of_report(bytes: &[u8]) -> Result<Verdict> {
    for line in bytes.split(|&b| b == b'\n').filter(|l| !l.is_empty()) {
        let v: serde_json::Value = serde_json::from_slice(line)?;
        if v["status"] != "confirmed" {
            return Ok(Verdict::Unresolved);
        }
    }
    Ok(Verdict::Verified)
}
