//! Prints per-crossing class counts: `cargo run --release --example counts -- 9`.

use std::time::Instant;

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let t = Instant::now();
    let recs = tangle_gen::enumerate_tangles(max, false);
    for (c, (total, triv)) in tangle_gen::class_counts(&recs, max).into_iter().enumerate() {
        println!("{:>3} {:>8} {:>8}", c + 1, total, triv);
    }
    eprintln!("{:.2?}", t.elapsed());
}
