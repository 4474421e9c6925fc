//! Cubic graphs whose colorings are not all Kempe equivalent: the
//! dodecahedron and K3,3.
//!
//! ```bash
//! cargo run --release --example counterexamples
//! ```

use webcolor::kempe::{bicolored_cycles, connected_components, kempe_graph, tau, KempeMode};
use webcolor::web::CubicGraph;
use webcolor::{enumerate_colorings, Color, Coloring};

fn rotate(g: &CubicGraph, c: &Coloring) -> Coloring {
    let r = CubicGraph::dodecahedron_rotation;
    let mut edges = c.edges.clone();
    for (e, (_, a, b)) in g.edges.iter().enumerate() {
        edges[g.edge_between(r(*a), r(*b)).unwrap()] = c.edges[e];
    }
    Coloring::new(edges, vec![])
}

fn main() {
    let g = CubicGraph::dodecahedron();
    let kg = kempe_graph(&g, KempeMode::Weak);
    let comps = connected_components(&kg);
    println!(
        "dodecahedron: {} colorings, {} Kempe components",
        kg.colorings.len(),
        comps.len()
    );

    let c = &kg.colorings[0];
    for u in Color::ALL {
        let cycles = bicolored_cycles(&g, c, u);
        let swapped = tau(c, &cycles[0]).unwrap();
        let (a, b) = u.others();
        let perm = c.permute(|x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        });
        println!(
            "  avoiding {u}: {} cycle of length {}; τ swaps {a} and {b} everywhere: {}",
            cycles.len(),
            cycles[0].edges.len(),
            swapped == perm
        );
    }
    let rc = rotate(&g, c);
    let comp = |x: &Coloring| {
        let i = kg.colorings.iter().position(|y| y == x).unwrap();
        comps.iter().position(|m| m.contains(&i)).unwrap()
    };
    println!(
        "  coloring 0 in component {}, its rotation in component {}",
        comp(c),
        comp(&rc)
    );

    let k = CubicGraph::k33();
    let cols = enumerate_colorings(&k);
    let kc = connected_components(&kempe_graph(&k, KempeMode::Weak));
    println!(
        "K3,3: {} colorings, component sizes {:?}",
        cols.len(),
        kc.iter().map(Vec::len).collect::<Vec<_>>()
    );
}
