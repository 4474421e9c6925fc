//! Show the reduction tree of the rewriting engine, with and without
//! memoization, and check that a random feature order gives the same result.
//!
//! ```bash
//! cargo run --example reduction_trace
//! ```

use webcolor::generate_web;
use webcolor::rewrite::{bracket_reduce_with, ReduceOptions};

fn main() {
    let w = generate_web(5, 3);
    println!(
        "{} ({} vertices, {} loops)",
        w.name(),
        w.vertex_count(),
        w.loop_count()
    );

    let opts = ReduceOptions {
        trace: true,
        ..Default::default()
    };
    let (p, trace) = bracket_reduce_with(&w, &opts);
    print!("{trace}");
    println!("bracket: {p}  ({} steps)\n", trace.steps.len());

    let memo = ReduceOptions {
        memo: true,
        trace: true,
        ..Default::default()
    };
    let (pm, tm) = bracket_reduce_with(&w, &memo);
    println!("with memo: {pm}  ({} steps)", tm.steps.len());

    for seed in 0..3 {
        let shuffled = ReduceOptions {
            shuffle_seed: Some(seed),
            ..Default::default()
        };
        let (ps, _) = bracket_reduce_with(&w, &shuffled);
        println!("random order, seed {seed}: {ps}");
        assert_eq!(ps, p);
    }
}
