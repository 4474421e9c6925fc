use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::web::{Role, WebMap};

/// Graphviz digraph of a web; edges and loops are colored when a coloring is given.
pub fn web_to_dot(map: &WebMap, coloring: Option<&Coloring>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", map.name());
    for v in map.vertices() {
        let shape = match v.role {
            Role::Source => "circle",
            Role::Sink => "doublecircle",
        };
        let _ = writeln!(s, "  \"{}\" [shape={shape}];", v.name);
    }
    for (i, e) in map.edges().iter().enumerate() {
        let attrs = match coloring {
            Some(c) => format!(" [label=\"{}\", color={}]", e.name, c.edges[i]),
            None => format!(" [label=\"{}\"]", e.name),
        };
        let _ = writeln!(
            s,
            "  \"{}\" -> \"{}\"{attrs};",
            map.vertex(e.source).name,
            map.vertex(e.sink).name
        );
    }
    for (i, l) in map.loops().iter().enumerate() {
        let color = coloring
            .map(|c| format!(", color={}", c.loops[i]))
            .unwrap_or_default();
        let _ = writeln!(s, "  \"loop:{}\" [shape=point{color}];", l.name);
        let _ = writeln!(
            s,
            "  \"loop:{}\" -> \"loop:{}\" [label=\"{}\"{color}];",
            l.name, l.name, l.name
        );
    }
    s.push_str("}\n");
    s
}

/// Undirected Graphviz graph with one node per coloring index.
pub fn kempe_to_dot(name: &str, nodes: usize, edges: &[(usize, usize)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{name}\" {{");
    for i in 0..nodes {
        let _ = writeln!(s, "  {i};");
    }
    for (a, b) in edges {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}
