//! JSONL input and output for generated records.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use polyhedra_gen::PolyhedronRecord;
use sha2::{Digest, Sha256};
use tangle_gen::TangleRecord;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn file_digest(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(sha256_hex(&bytes))
}

fn read_lines<T>(path: &Path, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse(&line).with_context(|| format!("{}:{}", path.display(), i + 1))?);
    }
    Ok(out)
}

/// Polyhedra ordered by vertex count, then canonical code.
pub fn load_polyhedra(path: &Path) -> Result<Vec<PolyhedronRecord>> {
    let mut v = read_lines(path, |l| Ok(PolyhedronRecord::from_json(l)?))?;
    v.sort_by(|a, b| (a.vertex_count, &a.canonical_code).cmp(&(b.vertex_count, &b.canonical_code)));
    Ok(v)
}

/// Tangles ordered by crossing number, then canonical key.
pub fn load_tangles(path: &Path) -> Result<Vec<TangleRecord>> {
    let mut v = read_lines(path, |l| Ok(TangleRecord::from_json(l)?))?;
    v.sort_by(|a, b| (a.crossings, &a.key).cmp(&(b.crossings, &b.key)));
    Ok(v)
}

/// Writes through a temporary sibling and renames, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = BufWriter::new(File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?);
        f.write_all(bytes)?;
        f.into_inner().map_err(|e| e.into_error())?.sync_all()?;
    }
    fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}

pub fn write_jsonl(path: &Path, lines: impl IntoIterator<Item = String>) -> Result<()> {
    let mut buf = Vec::new();
    for l in lines {
        buf.extend_from_slice(l.as_bytes());
        buf.push(b'\n');
    }
    write_atomic(path, &buf)
}
