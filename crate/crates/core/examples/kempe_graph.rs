//! Build the Kempe graph of a web and check the degree change of every
//! τ-move.
//!
//! ```bash
//! cargo run --example kempe_graph
//! ```

use webcolor::kempe::{
    bicolored_cycles, connected_components, cycle_orientation_in, delta_dt, kempe_graph, KempeMode,
};
use webcolor::{enumerate_colorings, generate_web, Color};

fn main() {
    let w = generate_web(11, 4);
    println!("{}: {} vertices", w.name(), w.vertex_count());
    for mode in [KempeMode::Weak, KempeMode::Strong] {
        let g = kempe_graph(&w, mode);
        let comps = connected_components(&g);
        println!(
            "{mode:?}: {} colorings, {} moves, {} component(s)",
            g.colorings.len(),
            g.edges.len(),
            comps.len()
        );
    }

    let c = &enumerate_colorings(&w)[0];
    println!("coloring {c}");
    for u in [Color::Red, Color::Blue] {
        for cyc in bicolored_cycles(&w, c, u) {
            println!(
                "  cycle avoiding {u} through {} edge(s): {:?}, Δd_t = {:+}",
                cyc.edges.len(),
                cycle_orientation_in(&w, c, &cyc),
                delta_dt(&w, c, &cyc).unwrap()
            );
        }
    }
}
