//! Candidate reports, one JSON object per line.

use diagram_engine::{FilledDiagram, Source};
use serde::Serialize;
use simplifier::Status;
use skein_core::LaurentPoly;

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub diagram: FilledDiagram,
    pub bracket: LaurentPoly,
    pub det: u64,
    pub status: Status,
    /// Length of the simplification trace.
    pub moves: usize,
}

#[derive(Serialize)]
struct Wire<'a> {
    src: &'static str,
    poly: Option<String>,
    tangles: Vec<String>,
    orient: Vec<u32>,
    c: u32,
    det: u64,
    candidate: bool,
    bracket: Option<&'a LaurentPoly>,
    status: Status,
    moves: usize,
}

impl CandidateReport {
    pub fn to_json(&self) -> String {
        let (src, poly, tangles, orient) = match &self.diagram.source {
            Source::Closure { tangle, orient } => ("closure", None, vec![tangle.expr.to_string()], vec![orient.degrees()]),
            Source::Fill { poly, assignment } => (
                "fill",
                Some(hex::encode(&poly.canonical_code)),
                assignment.iter().map(|(t, _)| t.expr.to_string()).collect(),
                assignment.iter().map(|(_, o)| o.degrees()).collect(),
            ),
        };
        let w = Wire {
            src,
            poly,
            tangles,
            orient,
            c: self.diagram.crossings,
            det: self.det,
            candidate: true,
            bracket: Some(&self.bracket),
            status: self.status,
            moves: self.moves,
        };
        serde_json::to_string(&w).expect("serializable report")
    }
}
