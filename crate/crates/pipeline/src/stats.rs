//! Funnel statistics per run and the CSV summary.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::Result;
use polyhedra_gen::PolyhedronRecord;
use serde::{Deserialize, Serialize};
use tangle_gen::TangleRecord;

pub const STATS_FILE: &str = "stats.json";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct StatsRow {
    pub crossings: u32,
    pub diagrams: u64,
    pub knots: u64,
    pub survivors: u64,
    pub candidates: u64,
    pub confirmed: u64,
    pub unresolved: u64,
    pub sieve_seconds: f64,
    pub confirm_seconds: f64,
}

impl StatsRow {
    /// survivors <= knots <= diagrams, candidates <= survivors, confirmed + unresolved = candidates.
    pub fn funnel_holds(&self) -> bool {
        self.knots <= self.diagrams
            && self.survivors <= self.knots
            && self.candidates <= self.survivors
            && self.confirmed + self.unresolved == self.candidates
    }
}

#[derive(Clone, Debug, Default)]
struct CsvRow {
    kind: &'static str,
    n: Option<u64>,
    generated: Option<u64>,
    funnel: Option<[u64; 5]>,
    seconds: Option<(f64, f64)>,
    note: String,
}

fn ratio(prev: Option<&CsvRow>, row: &CsvRow) -> String {
    match (prev, row.n, row.generated) {
        (Some(p), Some(n), Some(g)) if p.n == Some(n - 1) => match p.generated {
            Some(pg) if pg > 0 => format!("{:.4}", g as f64 / pg as f64),
            _ => String::new(),
        },
        _ => String::new(),
    }
}

fn counts_by<T>(items: &[T], key: impl Fn(&T) -> u64, lo: u64, hi: u64) -> BTreeMap<u64, u64> {
    let mut m: BTreeMap<u64, u64> = (lo..=hi).map(|k| (k, 0)).collect();
    for x in items {
        *m.entry(key(x)).or_default() += 1;
    }
    m
}

/// One section per input kind; growth ratios compare consecutive sizes within a section.
pub fn write_csv(
    runs: &[PathBuf],
    tangles: Option<&[TangleRecord]>,
    polyhedra: Option<&[PolyhedronRecord]>,
    timings: bool,
    out: &Path,
) -> Result<()> {
    let mut sections: Vec<Vec<CsvRow>> = Vec::new();

    let mut verify = Vec::new();
    for dir in runs {
        let path = dir.join(STATS_FILE);
        match std::fs::read_to_string(&path).map_err(anyhow::Error::from).and_then(|s| Ok(serde_json::from_str::<StatsRow>(&s)?)) {
            Ok(s) => verify.push(CsvRow {
                kind: "verify",
                n: Some(s.crossings.into()),
                generated: Some(s.diagrams),
                funnel: Some([s.knots, s.survivors, s.candidates, s.confirmed, s.unresolved]),
                seconds: Some((s.sieve_seconds, s.confirm_seconds)),
                note: if s.funnel_holds() { String::new() } else { "funnel violated".into() },
            }),
            Err(e) => verify.push(CsvRow { kind: "verify", note: format!("{}: {e}", dir.display()), ..Default::default() }),
        }
    }
    verify.sort_by_key(|r| r.n.unwrap_or(u64::MAX));
    sections.push(verify);

    if let Some(ts) = tangles {
        let hi = ts.iter().map(|t| t.crossings).max().unwrap_or(0) as u64;
        let all = counts_by(ts, |t| t.crossings.into(), 1, hi);
        let triv: Vec<&TangleRecord> = ts.iter().filter(|t| t.trivializable).collect();
        let triv = counts_by(&triv, |t| t.crossings.into(), 1, hi);
        for (kind, m) in [("tangles", all), ("tangles-triv", triv)] {
            sections.push(m.into_iter().map(|(n, g)| CsvRow { kind, n: Some(n), generated: Some(g), ..Default::default() }).collect());
        }
    }
    if let Some(ps) = polyhedra {
        let hi = ps.iter().map(|p| p.vertex_count).max().unwrap_or(0) as u64;
        let m = counts_by(ps, |p| p.vertex_count as u64, 6.min(hi), hi);
        sections.push(m.into_iter().map(|(n, g)| CsvRow { kind: "polyhedra", n: Some(n), generated: Some(g), ..Default::default() }).collect());
    }

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["kind", "n", "generated", "knots", "survivors", "candidates", "confirmed", "unresolved", "ratio", "note"];
    if timings {
        header.extend(["sieve_seconds", "confirm_seconds"]);
    }
    w.write_record(&header)?;
    let opt = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_default();
    for rows in &sections {
        for (i, r) in rows.iter().enumerate() {
            let mut rec = vec![r.kind.to_string(), opt(r.n), opt(r.generated)];
            match r.funnel {
                Some(f) => rec.extend(f.iter().map(u64::to_string)),
                None => rec.extend(std::iter::repeat_n(String::new(), 5)),
            }
            rec.push(ratio(i.checked_sub(1).map(|j| &rows[j]), r));
            rec.push(r.note.clone());
            if timings {
                match r.seconds {
                    Some((a, b)) => rec.extend([format!("{a:.3}"), format!("{b:.3}")]),
                    None => rec.extend([String::new(), String::new()]),
                }
            }
            w.write_record(&rec)?;
        }
    }
    crate::records::write_atomic(out, &w.into_inner().map_err(|e| e.into_error())?)?;
    Ok(())
}
