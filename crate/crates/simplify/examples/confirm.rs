//! Runs the sieve and the move search for one crossing number:
//! `cargo run --release --example confirm -- 9`.

use std::sync::Arc;
use std::time::Instant;

use diagram_engine::{plan_batches, run_batch, TanglePool};
use simplifier::{expand_to_pd, simplify, Status, DEFAULT_BUDGET};

fn main() {
    let c: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let polys: Vec<_> = polyhedra_gen::enumerate_polyhedra(c as usize).into_iter().map(Arc::new).collect();
    let pool = TanglePool::new(tangle_gen::enumerate_tangles(c, false)).unwrap();
    let t = Instant::now();
    let (mut cand, mut ok, mut nodes, mut worst) = (0, 0, 0, 0);
    for id in plan_batches(c, &polys) {
        for (d, _) in run_batch(&id, c, &polys, &pool).candidates {
            cand += 1;
            let pd = expand_to_pd(&d).expect("knot");
            let out = simplify(&pd, DEFAULT_BUDGET);
            nodes += out.nodes_explored;
            worst = worst.max(out.nodes_explored);
            if out.status == Status::Confirmed {
                ok += 1;
            } else {
                println!("unresolved {} ({}): {}", id.label(&polys), out.final_crossings, pd.to_string().replace('\n', "; "));
            }
        }
    }
    println!("c={c} candidates={cand} confirmed={ok} nodes={nodes} worst={worst} {:.2?}", t.elapsed());
}
