//! Kempe changes (τ-moves) and the graph they generate on colorings.
//!
//! Deleting one color `u` from a proper coloring leaves a 2-regular
//! subgraph whose components are cycles colored alternately by the other two
//! colors. Swapping those two colors along one such cycle gives another
//! proper coloring. Everything here works on plain cubic graphs as well as
//! webs; only [`delta_dt`] needs the embedding.

use std::collections::{BTreeSet, HashMap};

use crate::color::Color;
use crate::coloring::{configuration, enumerate_colorings, total_degree, Coloring, CycleWalk};
use crate::rewrite::{square_frame, SurgeryError};
use crate::web::{CubicStructure, EdgeId, FaceId, LoopId, Orientation, WebMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KempeError {
    #[error("the cycle is not bicolored by the two colors other than {0}")]
    CycleNotBicoloredInColoring(Color),
    #[error("no degree change is claimed for red/blue swaps")]
    GreenSwapUnsupported,
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
}

/// One component of the subgraph left after deleting color `u`: either a
/// cycle of edges or a single vertexless loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicoloredCycle {
    pub u: Color,
    pub edges: Vec<EdgeId>,
    pub loop_id: Option<LoopId>,
}

/// The `u`-deleted components, ordered by smallest edge, then loops.
pub fn bicolored_cycles<G: CubicStructure + ?Sized>(
    g: &G,
    c: &Coloring,
    u: Color,
) -> Vec<BicoloredCycle> {
    let mut seen = vec![false; g.edge_count()];
    let mut out = Vec::new();
    for start in 0..g.edge_count() {
        if seen[start] || c.edges[start] == u {
            continue;
        }
        let mut edges = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(e) = stack.pop() {
            edges.push(EdgeId(e));
            let (a, b) = g.endpoints(e);
            for v in [a, b] {
                for f in g.incident(v) {
                    if !seen[f] && c.edges[f] != u {
                        seen[f] = true;
                        stack.push(f);
                    }
                }
            }
        }
        edges.sort();
        out.push(BicoloredCycle {
            u,
            edges,
            loop_id: None,
        });
    }
    for (i, &lc) in c.loops.iter().enumerate() {
        if lc != u {
            out.push(BicoloredCycle {
                u,
                edges: vec![],
                loop_id: Some(LoopId(i)),
            });
        }
    }
    out
}

/// Exchanges the two colors other than `C.u` along `C`.
pub fn tau(c: &Coloring, cycle: &BicoloredCycle) -> Result<Coloring, KempeError> {
    let (a, b) = cycle.u.others();
    let swap = |x: Color| if x == a { b } else { a };
    let mut out = c.clone();
    let bad = || KempeError::CycleNotBicoloredInColoring(cycle.u);
    for e in &cycle.edges {
        let x = c.edges.get(e.0).copied().ok_or_else(bad)?;
        if x == cycle.u {
            return Err(bad());
        }
        out.edges[e.0] = swap(x);
    }
    if let Some(l) = cycle.loop_id {
        let x = c.loops.get(l.0).copied().ok_or_else(bad)?;
        if x == cycle.u {
            return Err(bad());
        }
        out.loops[l.0] = swap(x);
    }
    Ok(out)
}

/// Orientation of `C` as a cycle of the configuration `D_u`.
pub fn cycle_orientation_in(map: &WebMap, c: &Coloring, cycle: &BicoloredCycle) -> Orientation {
    configuration(map, c, cycle.u)
        .cycles
        .into_iter()
        .find(|cc| match (&cc.walk, cycle.loop_id) {
            (CycleWalk::Loop { id, .. }, Some(l)) => *id == l,
            (CycleWalk::Darts(_), None) => {
                let mut es = cc.walk.edges();
                es.sort();
                es == cycle.edges
            }
            _ => false,
        })
        .expect("a bicolored cycle is a configuration cycle")
        .orientation
}

/// `d_t(τ_C(c)) − d_t(c)` for a swap along an `S_red` or `S_blue` cycle.
pub fn delta_dt(map: &WebMap, c: &Coloring, cycle: &BicoloredCycle) -> Result<i64, KempeError> {
    if cycle.u == Color::Green {
        return Err(KempeError::GreenSwapUnsupported);
    }
    let swapped = tau(c, cycle)?;
    Ok(total_degree(map, &swapped) - total_degree(map, c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KempeMode {
    /// Swaps along any bicolored cycle.
    Weak,
    /// Swaps only along cycles avoiding red or avoiding blue.
    Strong,
}

impl KempeMode {
    pub fn colors(self) -> &'static [Color] {
        match self {
            KempeMode::Weak => &Color::ALL,
            KempeMode::Strong => &[Color::Red, Color::Blue],
        }
    }
}

/// Colorings (in enumeration order) joined by single τ-moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeGraph {
    pub mode: KempeMode,
    pub colorings: Vec<Coloring>,
    /// Sorted pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

pub fn kempe_graph<G: CubicStructure + ?Sized>(g: &G, mode: KempeMode) -> KempeGraph {
    let colorings = enumerate_colorings(g);
    let index: HashMap<&Coloring, usize> =
        colorings.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = BTreeSet::new();
    for (i, c) in colorings.iter().enumerate() {
        for &u in mode.colors() {
            for cycle in bicolored_cycles(g, c, u) {
                let d = tau(c, &cycle).expect("cycle taken from this coloring");
                let j = index[&d];
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    KempeGraph {
        mode,
        colorings,
        edges: edges.into_iter().collect(),
    }
}

/// Connected components as sorted node lists, ordered by smallest node.
pub fn connected_components(g: &KempeGraph) -> Vec<Vec<usize>> {
    let n = g.colorings.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        comp[s] = out.len();
        let mut i = 0;
        while i < members.len() {
            for &w in &adj[members[i]] {
                if comp[w] == usize::MAX {
                    comp[w] = out.len();
                    members.push(w);
                }
            }
            i += 1;
        }
        members.sort();
        out.push(members);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareEdgeVerdict {
    /// Some opposite attachments differ in color and no bicolored cycle holds both.
    Confirmed,
    /// Both pairs of opposite attachments share a color; nothing to check.
    Vacuous,
    /// Two differently colored opposite attachments lie on one bicolored cycle.
    Violated { first: EdgeId, second: EdgeId },
}

/// Checks that differently colored attachments at opposite corners of a
/// square never lie on a common bicolored cycle.
pub fn check_square_edges(
    map: &WebMap,
    c: &Coloring,
    f: FaceId,
) -> Result<SquareEdgeVerdict, KempeError> {
    let (corners, sides) = square_frame(map, f)?;
    let attach = corners.map(|v| {
        map.incident_edges(v)
            .find(|e| !sides.contains(e))
            .expect("each corner has an attachment")
    });
    let mut verdict = SquareEdgeVerdict::Vacuous;
    for (e1, e2) in [(attach[0], attach[2]), (attach[1], attach[3])] {
        if c.edge(e1) == c.edge(e2) {
            continue;
        }
        for u in Color::ALL {
            for cycle in bicolored_cycles(map, c, u) {
                if cycle.edges.contains(&e1) && cycle.edges.contains(&e2) {
                    return Ok(SquareEdgeVerdict::Violated {
                        first: e1,
                        second: e2,
                    });
                }
            }
        }
        verdict = SquareEdgeVerdict::Confirmed;
    }
    Ok(verdict)
}
