#![allow(dead_code)]

use std::path::PathBuf;

use webcolor::format::{parse, parse_coords, Coords, Document};
use webcolor::web::CubicGraph;
use webcolor::web::Dart;
use webcolor::{generate_web, Orientation, WebMap};

pub const WEB_FIXTURES: [&str; 6] = [
    "circle",
    "theta",
    "cube",
    "cube-digon",
    "square-loops",
    "generated-12",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn web(name: &str) -> WebMap {
    match parse(&read_fixture(&format!("{name}.webx")))
        .unwrap()
        .document
    {
        Document::Web(w) => w,
        Document::Graph(_) => panic!("{name} is a graph"),
    }
}

pub fn graph(name: &str) -> CubicGraph {
    match parse(&read_fixture(&format!("{name}.graphx")))
        .unwrap()
        .document
    {
        Document::Graph(g) => g,
        Document::Web(_) => panic!("{name} is a web"),
    }
}

pub fn coords(name: &str) -> Option<Coords> {
    let p = fixture_path(&format!("{name}.coords"));
    p.exists()
        .then(|| parse_coords(&std::fs::read_to_string(p).unwrap()).unwrap())
}

/// Seeded generated webs with 1 to 6 inverse moves each.
pub fn generated(count: u64) -> Vec<WebMap> {
    (0..count)
        .map(|s| generate_web(s, 1 + (s % 6) as usize))
        .collect()
}

pub fn fixtures() -> Vec<WebMap> {
    WEB_FIXTURES.iter().map(|n| web(n)).collect()
}

/// Fixtures, their mirror images and `count` generated webs.
pub fn corpus(count: u64) -> Vec<WebMap> {
    let mut out = fixtures();
    out.extend(fixtures().iter().map(WebMap::mirror));
    out.extend(generated(count));
    out
}

/// Reads a `.coloring` fixture against the edge names of `g`.
pub fn graph_coloring(g: &CubicGraph, name: &str) -> webcolor::Coloring {
    let names: Vec<&str> = g.edges.iter().map(|(n, _, _)| n.as_str()).collect();
    webcolor::format::parse_coloring(&names, &[], read_fixture(name).trim()).unwrap()
}

pub fn polyline(map: &WebMap, xy: &Coords, d: Dart) -> Vec<(f64, f64)> {
    let e = map.edge(d.edge());
    let mut pts = vec![xy.vertices[&map.vertex(e.source).name]];
    pts.extend(xy.bends.get(&e.name).cloned().unwrap_or_default());
    pts.push(xy.vertices[&map.vertex(e.sink).name]);
    if !d.is_tail() {
        pts.reverse();
    }
    pts
}

pub fn signed_area(map: &WebMap, xy: &Coords, walk: &[Dart]) -> f64 {
    let mut poly = Vec::new();
    for &d in walk {
        let mut seg = polyline(map, xy, d);
        seg.pop();
        poly.extend(seg);
    }
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            a.0 * b.1 - b.0 * a.1
        })
        .sum::<f64>()
        / 2.0
}

/// Counterclockwise exactly when the traced polygon has positive signed area.
pub fn oracle(map: &WebMap, xy: &Coords, walk: &[Dart]) -> Orientation {
    if signed_area(map, xy, walk) > 0.0 {
        Orientation::Positive
    } else {
        Orientation::Negative
    }
}
