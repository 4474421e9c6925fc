mod common;

use webcolor::coloring::enumerate_colorings;
use webcolor::kempe::{
    bicolored_cycles, check_square_edges, connected_components, cycle_orientation_in, delta_dt,
    kempe_graph, tau, KempeError, KempeMode, SquareEdgeVerdict,
};
use webcolor::web::CubicGraph;
use webcolor::{Color, Coloring, Orientation};

#[test]
fn tau_is_a_proper_involution() {
    for w in common::corpus(25) {
        for c in enumerate_colorings(&w) {
            for u in Color::ALL {
                for cyc in bicolored_cycles(&w, &c, u) {
                    let d = tau(&c, &cyc).unwrap();
                    assert!(d.is_proper(&w));
                    assert_ne!(d, c);
                    assert_eq!(tau(&d, &cyc).unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn tau_rejects_foreign_cycles() {
    let t = common::web("theta");
    let cols = enumerate_colorings(&t);
    let cyc = bicolored_cycles(&t, &cols[0], Color::Red).remove(0);
    let other = cols
        .iter()
        .find(|c| bicolored_cycles(&t, c, Color::Red)[0] != cyc)
        .unwrap();
    assert_eq!(
        tau(other, &cyc),
        Err(KempeError::CycleNotBicoloredInColoring(Color::Red))
    );
}

#[test]
fn degree_changes_by_two_against_orientation() {
    for w in common::corpus(40) {
        for c in enumerate_colorings(&w) {
            for u in [Color::Red, Color::Blue] {
                for cyc in bicolored_cycles(&w, &c, u) {
                    let expected = match cycle_orientation_in(&w, &c, &cyc) {
                        Orientation::Positive => -2,
                        Orientation::Negative => 2,
                    };
                    assert_eq!(delta_dt(&w, &c, &cyc).unwrap(), expected, "{}", w.name());
                }
            }
            if let Some(cyc) = bicolored_cycles(&w, &c, Color::Green).first() {
                assert_eq!(delta_dt(&w, &c, cyc), Err(KempeError::GreenSwapUnsupported));
            }
        }
    }
}

#[test]
fn webs_have_connected_kempe_graphs() {
    for w in common::corpus(40) {
        let weak = connected_components(&kempe_graph(&w, KempeMode::Weak));
        let strong = connected_components(&kempe_graph(&w, KempeMode::Strong));
        assert_eq!(weak.len(), 1, "{}", w.name());
        assert_eq!(weak, strong, "{}", w.name());
    }
}

#[test]
fn weak_and_strong_partitions_agree_on_graphs() {
    for g in [common::graph("dodecahedron"), common::graph("k33")] {
        let weak = connected_components(&kempe_graph(&g, KempeMode::Weak));
        let strong = connected_components(&kempe_graph(&g, KempeMode::Strong));
        assert_eq!(weak, strong, "{}", g.name);
    }
}

/// Vertex labels are the integers used by `CubicGraph::dodecahedron`.
fn label(g: &CubicGraph, v: usize) -> usize {
    g.vertices[v].parse().unwrap()
}

fn named_edges(g: &CubicGraph) -> Vec<(String, usize, usize)> {
    g.edges
        .iter()
        .map(|(n, a, b)| (n.clone(), label(g, *a), label(g, *b)))
        .collect()
}

fn rotate(g: &CubicGraph, c: &Coloring) -> Coloring {
    let index = |x: usize| {
        g.vertices
            .iter()
            .position(|n| n.parse::<usize>().unwrap() == x)
            .unwrap()
    };
    let r = CubicGraph::dodecahedron_rotation;
    let mut edges = c.edges.clone();
    for (e, (_, a, b)) in g.edges.iter().enumerate() {
        let (ra, rb) = (index(r(label(g, *a))), index(r(label(g, *b))));
        edges[g.edge_between(ra, rb).unwrap()] = c.edges[e];
    }
    Coloring::new(edges, vec![])
}

#[test]
fn dodecahedron_counterexample() {
    let g = common::graph("dodecahedron");
    assert_eq!(named_edges(&g), named_edges(&CubicGraph::dodecahedron()));
    let ham = common::graph_coloring(&g, "dodecahedron-hamiltonian.coloring");
    let rotated = common::graph_coloring(&g, "dodecahedron-hamiltonian-rotated.coloring");
    assert!(ham.is_proper(&g) && rotated.is_proper(&g));
    assert_eq!(rotate(&g, &ham), rotated);

    for u in Color::ALL {
        let cycles = bicolored_cycles(&g, &ham, u);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].edges.len(), 20);
        // a Hamiltonian bicolored cycle makes τ a global transposition
        let (a, b) = u.others();
        let swapped = ham.permute(|x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        });
        assert_eq!(tau(&ham, &cycles[0]).unwrap(), swapped);
    }

    let kg = kempe_graph(&g, KempeMode::Weak);
    assert_eq!(kg.colorings.len(), 60);
    let comps = connected_components(&kg);
    assert_eq!(comps.len(), 10);
    assert!(comps.iter().all(|c| c.len() == 6));
    let find = |c: &Coloring| {
        let i = kg.colorings.iter().position(|x| x == c).unwrap();
        comps.iter().position(|comp| comp.contains(&i)).unwrap()
    };
    assert_ne!(find(&ham), find(&rotated));
}

#[test]
fn k33_is_disconnected() {
    let g = common::graph("k33");
    let kg = kempe_graph(&g, KempeMode::Weak);
    assert_eq!(kg.colorings.len(), 12);
    assert!(connected_components(&kg).len() >= 2);
}

#[test]
fn square_attachments_never_share_a_cycle() {
    let mut confirmed = 0;
    for w in common::corpus(40) {
        let faces = w.faces();
        for f in faces
            .ids()
            .filter(|&f| faces.size(f) == 4 && !faces.is_outer(f))
        {
            for c in enumerate_colorings(&w) {
                match check_square_edges(&w, &c, f) {
                    Ok(SquareEdgeVerdict::Violated { first, second }) => {
                        panic!("{}: edges {} and {}", w.name(), first.0, second.0)
                    }
                    Ok(SquareEdgeVerdict::Confirmed) => confirmed += 1,
                    Ok(SquareEdgeVerdict::Vacuous) => {}
                    Err(_) => {}
                }
            }
        }
    }
    assert!(confirmed > 0);
}
