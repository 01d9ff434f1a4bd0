//! Runs the sieve for one crossing number: `cargo run --release --example sieve -- 9`.

use std::sync::Arc;
use std::time::Instant;

use diagram_engine::{plan_batches, run_batch, TanglePool};

fn main() {
    let c: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let t = Instant::now();
    let polys: Vec<_> = polyhedra_gen::enumerate_polyhedra(c as usize).into_iter().map(Arc::new).collect();
    let pool = TanglePool::new(tangle_gen::enumerate_tangles(c, false)).unwrap();
    eprintln!("inputs {:.2?}", t.elapsed());
    let t = Instant::now();
    let (mut n, mut k, mut s, mut cand) = (0, 0, 0, 0);
    for id in plan_batches(c, &polys) {
        let o = run_batch(&id, c, &polys, &pool);
        n += o.diagrams;
        k += o.knots;
        s += o.survivors;
        cand += o.candidates.len();
    }
    println!("c={c} diagrams={n} knots={k} det1={s} candidates={cand} {:.2?}", t.elapsed());
}
