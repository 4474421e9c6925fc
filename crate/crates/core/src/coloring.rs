//! Proper 3-edge-colorings, bicolored configurations and degrees.

use std::fmt;

use crate::color::Color;
use crate::laurent::LaurentPoly;
use crate::web::{CubicStructure, Dart, EdgeId, LoopId, Orientation, WebMap};

/// A color for every edge and every vertexless loop, index-aligned with the
/// structure it colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    pub edges: Vec<Color>,
    pub loops: Vec<Color>,
}

impl Coloring {
    pub fn new(edges: Vec<Color>, loops: Vec<Color>) -> Coloring {
        Coloring { edges, loops }
    }

    pub fn edge(&self, e: EdgeId) -> Color {
        self.edges[e.0]
    }

    pub fn loop_color(&self, l: LoopId) -> Color {
        self.loops[l.0]
    }

    /// Applies a permutation of the colors to every edge and loop.
    pub fn permute(&self, perm: impl Fn(Color) -> Color) -> Coloring {
        Coloring {
            edges: self.edges.iter().map(|&c| perm(c)).collect(),
            loops: self.loops.iter().map(|&c| perm(c)).collect(),
        }
    }

    /// Whether the three edges at every vertex carry three distinct colors.
    pub fn is_proper<G: CubicStructure + ?Sized>(&self, g: &G) -> bool {
        if self.edges.len() != g.edge_count() || self.loops.len() != g.loop_count() {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let mut mask = 0u8;
            for e in g.incident(v) {
                mask |= 1 << self.edges[e].index();
            }
            mask == 0b111 && g.incident(v).len() == 3
        })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges.iter().map(|c| c.name().to_string()).collect();
        let l: Vec<String> = self.loops.iter().map(|c| c.name().to_string()).collect();
        write!(f, "[{}] / [{}]", e.join(","), l.join(","))
    }
}

/// All proper colorings, in lexicographic order of `(edge colors, loop colors)`.
///
/// Backtracks over edges in index order, pruning any color already used at
/// either endpoint.
pub fn enumerate_colorings<G: CubicStructure + ?Sized>(g: &G) -> Vec<Coloring> {
    let ne = g.edge_count();
    let ends: Vec<(usize, usize)> = (0..ne).map(|e| g.endpoints(e)).collect();
    let mut used = vec![0u8; g.vertex_count()];
    let mut current = Vec::with_capacity(ne);
    let mut edge_colorings = Vec::new();
    fn rec(
        i: usize,
        ends: &[(usize, usize)],
        used: &mut [u8],
        current: &mut Vec<Color>,
        out: &mut Vec<Vec<Color>>,
    ) {
        if i == ends.len() {
            out.push(current.clone());
            return;
        }
        let (u, v) = ends[i];
        for c in Color::ALL {
            let bit = 1 << c.index();
            if used[u] & bit != 0 || used[v] & bit != 0 {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            current.push(c);
            rec(i + 1, ends, used, current, out);
            current.pop();
            used[u] &= !bit;
            used[v] &= !bit;
        }
    }
    rec(0, &ends, &mut used, &mut current, &mut edge_colorings);

    let nl = g.loop_count();
    let loop_colorings: Vec<Vec<Color>> = (0..3usize.pow(nl as u32))
        .map(|mut k| {
            let mut v = vec![Color::Red; nl];
            for slot in v.iter_mut().rev() {
                *slot = Color::from_index(k % 3);
                k /= 3;
            }
            v
        })
        .collect();
    let mut out = Vec::with_capacity(edge_colorings.len() * loop_colorings.len());
    for e in &edge_colorings {
        for l in &loop_colorings {
            out.push(Coloring::new(e.clone(), l.clone()));
        }
    }
    out
}

/// A directed cycle of a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleWalk {
    /// Darts in traversal order.
    Darts(Vec<Dart>),
    /// A vertexless loop, traversed along or against its own direction.
    Loop { id: LoopId, along: bool },
}

impl CycleWalk {
    pub fn edges(&self) -> Vec<EdgeId> {
        match self {
            CycleWalk::Darts(ds) => ds.iter().map(|d| d.edge()).collect(),
            CycleWalk::Loop { .. } => vec![],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigCycle {
    pub walk: CycleWalk,
    pub orientation: Orientation,
}

/// The subweb left after deleting every edge and loop colored `u`: disjoint
/// cycles, each directed so that edges of the smaller remaining color are
/// followed forward and edges of the greater one backward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub u: Color,
    pub cycles: Vec<ConfigCycle>,
}

/// Decomposes the `u`-deleted part of a colored web into directed cycles and
/// orients each one.
pub fn configuration(map: &WebMap, c: &Coloring, u: Color) -> Configuration {
    let (small, great) = u.others();
    let mut cycles = Vec::new();
    let mut visited = vec![false; map.edge_count()];
    for start in 0..map.edge_count() {
        if visited[start] || c.edges[start] != small {
            continue;
        }
        let first = Dart::tail(EdgeId(start));
        let mut walk = Vec::new();
        let mut d = first;
        loop {
            visited[d.edge().0] = true;
            walk.push(d);
            let at = map.target(d);
            let want = if c.edge(d.edge()) == small {
                great
            } else {
                small
            };
            let next = map
                .darts_at(at)
                .iter()
                .copied()
                .find(|n| c.edge(n.edge()) == want)
                .expect("proper coloring");
            if next == first {
                break;
            }
            d = next;
        }
        let orientation = map
            .cycle_orientation(&walk)
            .expect("configuration cycles are simple");
        cycles.push(ConfigCycle {
            walk: CycleWalk::Darts(walk),
            orientation,
        });
    }
    for (i, &lc) in c.loops.iter().enumerate() {
        if lc == u {
            continue;
        }
        let id = LoopId(i);
        let along = lc == small;
        cycles.push(ConfigCycle {
            walk: CycleWalk::Loop { id, along },
            orientation: map.loop_orientation(id, along),
        });
    }
    Configuration { u, cycles }
}

/// Positively oriented cycles minus negatively oriented ones.
pub fn config_degree(d: &Configuration) -> i64 {
    d.cycles.iter().map(|c| c.orientation.sign()).sum()
}

/// `d(D_u)` for `u = red, green, blue`.
pub fn degree_table(map: &WebMap, c: &Coloring) -> [i64; 3] {
    Color::ALL.map(|u| config_degree(&configuration(map, c, u)))
}

/// `d_t`: the sum of the three configuration degrees.
pub fn total_degree(map: &WebMap, c: &Coloring) -> i64 {
    degree_table(map, c).iter().sum()
}

/// `Σ_c q^{d_t(c)}` over all proper colorings.
pub fn bracket_enum(map: &WebMap) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for c in enumerate_colorings(map) {
        p.add_term(total_degree(map, &c), 1);
    }
    p
}
