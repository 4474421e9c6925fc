//! Compute the colored bracket by enumeration and by local rewriting and
//! compare the two.
//!
//! ```bash
//! cargo run --example bracket_engines
//! ```

use std::time::Instant;

use webcolor::web::{circle, theta};
use webcolor::{bracket_enum, bracket_reduce, generate_web, quantum_int, Winding};

fn main() {
    let q2 = quantum_int(2).unwrap();
    let q3 = quantum_int(3).unwrap();
    println!(
        "[2] = {q2}, [3] = {q3}, [2][3] = {}",
        q2.clone() * q3.clone()
    );

    let mut webs = vec![circle(Winding::Ccw), theta()];
    webs.extend((0..6).map(|s| generate_web(s, 5)));
    for w in &webs {
        let t = Instant::now();
        let a = bracket_enum(w);
        let ta = t.elapsed();
        let t = Instant::now();
        let b = bracket_reduce(w);
        let tb = t.elapsed();
        println!(
            "{:<12} {:>2} vertices  {:<28} enum {ta:>9.2?}  reduce {tb:>9.2?}  {}",
            w.name(),
            w.vertex_count(),
            a.to_string(),
            if a == b { "agree" } else { "DISAGREE" }
        );
        assert_eq!(
            a.eval_at_one() as usize,
            webcolor::enumerate_colorings(w).len()
        );
    }
}
