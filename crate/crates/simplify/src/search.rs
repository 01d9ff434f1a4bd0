//! Best-first search for a crossingless diagram.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::{Deserialize, Serialize};

use crate::moves::{apply_move, available_moves, push_moves, Move};
use crate::pd::PDCode;

pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifyOutcome {
    pub status: Status,
    /// Fewest crossings reached.
    pub final_crossings: usize,
    /// Moves from the normalized input to the smallest diagram reached.
    pub trace: Vec<Move>,
    pub nodes_explored: usize,
}

struct Node {
    pd: PDCode,
    parent: usize,
    via: Option<Move>,
}

fn trace_to(nodes: &[Node], mut i: usize) -> Vec<Move> {
    let mut out = Vec::new();
    while let Some(m) = nodes[i].via {
        out.push(m);
        i = nodes[i].parent;
    }
    out.reverse();
    out
}

/// Crossings the search may add above the input, tried in turn.
const SLACKS: [usize; 3] = [0, 2, 4];

/// Best-first over Reidemeister moves, fewest crossings first, until the
/// crossingless diagram appears or `budget` nodes are expanded in total.
/// Moves that add crossings are only tried once the monotone search stalls.
pub fn simplify(pd: &PDCode, budget: usize) -> SimplifyOutcome {
    let Ok(start) = pd.normalized() else {
        return SimplifyOutcome { status: Status::Unresolved, final_crossings: pd.len(), trace: Vec::new(), nodes_explored: 0 };
    };
    let mut explored = 0;
    let mut best: Option<SimplifyOutcome> = None;
    for slack in SLACKS {
        let mut out = search(&start, budget - explored, slack);
        explored += out.nodes_explored;
        out.nodes_explored = explored;
        let done = out.status == Status::Confirmed || explored >= budget;
        if best.as_ref().is_none_or(|b| out.final_crossings < b.final_crossings) {
            best = Some(out);
        }
        if done {
            break;
        }
    }
    let mut best = best.expect("at least one pass");
    best.nodes_explored = explored;
    best
}

fn search(start: &PDCode, budget: usize, slack: usize) -> SimplifyOutcome {
    let cap = start.len() + slack;
    let mut nodes = vec![Node { pd: start.clone(), parent: 0, via: None }];
    let mut seen: HashSet<Vec<u32>> = HashSet::from([start.canonical_key()]);
    // Entries are (crossings, phase, node): phase 0 expands reducing moves,
    // phase 1 the rest, so flat moves wait until smaller diagrams run out.
    let mut heap = BinaryHeap::from([Reverse((start.len(), 0u8, 0usize))]);
    let mut best = 0;
    let mut explored = 0;

    while let Some(Reverse((n, phase, i))) = heap.pop() {
        if n < nodes[best].pd.len() {
            best = i;
        }
        if n == 0 {
            return SimplifyOutcome { status: Status::Confirmed, final_crossings: 0, trace: trace_to(&nodes, i), nodes_explored: explored };
        }
        if explored >= budget {
            break;
        }
        explored += 1;
        let (reducing, flat) = available_moves(&nodes[i].pd);
        let moves = if phase == 0 {
            heap.push(Reverse((n, 1, i)));
            reducing
        } else if n + 2 <= cap {
            flat.into_iter().chain(push_moves(&nodes[i].pd)).collect()
        } else {
            flat
        };
        for m in moves {
            let Ok(next) = apply_move(&nodes[i].pd, m) else { continue };
            if !seen.insert(next.canonical_key()) {
                continue;
            }
            heap.push(Reverse((next.len(), 0, nodes.len())));
            nodes.push(Node { pd: next, parent: i, via: Some(m) });
        }
    }
    SimplifyOutcome {
        status: Status::Unresolved,
        final_crossings: nodes[best].pd.len(),
        trace: trace_to(&nodes, best),
        nodes_explored: explored,
    }
}

/// Applies a trace to the normalized input, failing on the first move that does not apply.
pub fn replay(pd: &PDCode, trace: &[Move]) -> Option<PDCode> {
    let mut cur = pd.normalized().ok()?;
    for &m in trace {
        cur = apply_move(&cur, m).ok()?;
    }
    Some(cur)
}
