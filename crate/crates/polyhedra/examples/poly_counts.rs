//! Prints polyhedron counts per vertex count: `cargo run --release --example poly_counts -- 12`.

use std::time::Instant;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for v in 6..=max {
        let t = Instant::now();
        let n = polyhedra_gen::polyhedra_with_vertices(v).len();
        println!("{v:>3} {n:>6} {:.2?}", t.elapsed());
    }
}
