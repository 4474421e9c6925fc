//! List the proper 3-edge-colorings of a web with their configuration
//! degrees.
//!
//! ```bash
//! cargo run --example enumerate_colorings
//! ```

use webcolor::coloring::degree_table;
use webcolor::web::{circle, theta};
use webcolor::{enumerate_colorings, Color, Winding};

fn main() {
    for w in [circle(Winding::Ccw), theta()] {
        println!("{}:", w.name());
        for c in enumerate_colorings(&w) {
            let t = degree_table(&w, &c);
            let cells: Vec<String> = Color::ALL
                .iter()
                .map(|u| format!("D_{u}={:+}", t[u.index()]))
                .collect();
            println!(
                "  {c}  {}  d_t={:+}",
                cells.join(" "),
                t.iter().sum::<i64>()
            );
        }
    }
}
