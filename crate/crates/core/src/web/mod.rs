//! Closed webs as combinatorial maps.
//!
//! Every edge `e` owns two darts: `Dart::tail(e)`, based at the source
//! endpoint and pointing along the orientation, and `Dart::head(e)`, based
//! at the sink and pointing back. The flip involution swaps them. Each
//! vertex lists its three darts in counterclockwise order; faces are the
//! orbits of `d ↦ σ(α(d))`, and with that walk the face of a dart lies on
//! its *right*.

mod cubic;
mod face;
mod orient;
mod validate;

use std::sync::OnceLock;

pub use cubic::{CubicGraph, CubicGraphError, CubicStructure};
pub use face::{FaceId, Faces, ReducibleFeature};
pub use orient::Orientation;
pub use validate::{ValidationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopId(pub usize);

/// A half-edge. Even ids are tails, odd ids are heads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn tail(e: EdgeId) -> Dart {
        Dart(2 * e.0)
    }

    pub fn head(e: EdgeId) -> Dart {
        Dart(2 * e.0 + 1)
    }

    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 / 2)
    }

    pub fn is_tail(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// The flip involution α.
    pub fn flip(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Sink,
    Source,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Winding {
    Ccw,
    Cw,
}

impl Winding {
    pub fn reversed(self) -> Winding {
        match self {
            Winding::Ccw => Winding::Cw,
            Winding::Cw => Winding::Ccw,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub sink: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loop {
    pub name: String,
    pub winding: Winding,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WebError {
    #[error("not a closed web: {0}")]
    Invalid(ValidationReport),
    #[error("the web is empty")]
    EmptyWeb,
    #[error("walk is not a simple closed cycle: {0}")]
    NotSimpleCycle(String),
    #[error("cycle does not separate the faces of its component")]
    CycleSeparationFailure,
}

/// A plane web: vertices with sink/source roles, oriented edges, vertexless
/// loops, counterclockwise rotations and one outer-face mark per connected
/// component.
///
/// A `WebMap` can hold arbitrary candidate data; [`WebMap::validate`] reports
/// every violated axiom. All other operations assume a valid web.
#[derive(Clone, Debug)]
pub struct WebMap {
    name: String,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    loops: Vec<Loop>,
    rotations: Vec<Vec<Dart>>,
    outer: Vec<Dart>,
    // dart -> (vertex, position in rotation); first occurrence wins
    slots: Vec<Option<(usize, usize)>>,
    faces: OnceLock<Faces>,
    components: OnceLock<(Vec<usize>, usize)>,
}

impl PartialEq for WebMap {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.loops == other.loops
            && self.rotations == other.rotations
            && self.outer == other.outer
    }
}

impl Eq for WebMap {}

impl WebMap {
    /// Assembles a map without checking any axiom.
    pub fn from_parts(
        name: impl Into<String>,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        loops: Vec<Loop>,
        rotations: Vec<Vec<Dart>>,
        outer: Vec<Dart>,
    ) -> WebMap {
        let mut slots = vec![None; 2 * edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, d) in rot.iter().enumerate() {
                if let Some(slot) = slots.get_mut(d.0) {
                    if slot.is_none() {
                        *slot = Some((v, i));
                    }
                }
            }
        }
        WebMap {
            name: name.into(),
            vertices,
            edges,
            loops,
            rotations,
            outer,
            slots,
            faces: OnceLock::new(),
            components: OnceLock::new(),
        }
    }

    /// Like [`from_parts`](Self::from_parts) but rejects anything that is not a closed web.
    pub fn checked(
        name: impl Into<String>,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        loops: Vec<Loop>,
        rotations: Vec<Vec<Dart>>,
        outer: Vec<Dart>,
    ) -> Result<WebMap, WebError> {
        let map = Self::from_parts(name, vertices, edges, loops, rotations, outer);
        let report = map.validate();
        if report.is_valid() {
            Ok(map)
        } else {
            Err(WebError::Invalid(report))
        }
    }

    pub fn empty() -> WebMap {
        Self::from_parts("empty", vec![], vec![], vec![], vec![], vec![])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> WebMap {
        self.name = name.into();
        self
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn outer_marks(&self) -> &[Dart] {
        &self.outer
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.loops.is_empty()
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn find_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertices
            .iter()
            .position(|v| v.name == name)
            .map(VertexId)
    }

    pub fn find_edge(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name).map(EdgeId)
    }

    pub fn find_loop(&self, name: &str) -> Option<LoopId> {
        self.loops.iter().position(|l| l.name == name).map(LoopId)
    }

    /// Vertex the dart is based at.
    pub fn base(&self, d: Dart) -> VertexId {
        let e = &self.edges[d.edge().0];
        if d.is_tail() {
            e.source
        } else {
            e.sink
        }
    }

    /// Vertex the dart points to.
    pub fn target(&self, d: Dart) -> VertexId {
        self.base(d.flip())
    }

    /// Counterclockwise successor of `d` around its base vertex.
    pub fn sigma(&self, d: Dart) -> Dart {
        let (v, i) = self.slots[d.0].expect("dart missing from rotation");
        let rot = &self.rotations[v];
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise successor of `d` around its base vertex.
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        let (v, i) = self.slots[d.0].expect("dart missing from rotation");
        let rot = &self.rotations[v];
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// The face walk `σ ∘ α`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.sigma(d.flip())
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count()).map(Dart)
    }

    /// Darts based at `v`, counterclockwise.
    pub fn darts_at(&self, v: VertexId) -> &[Dart] {
        &self.rotations[v.0]
    }

    /// Edges incident to `v`, in rotation order.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.rotations[v.0].iter().map(|d| d.edge())
    }

    pub fn faces(&self) -> &Faces {
        self.faces.get_or_init(|| Faces::compute(self))
    }

    /// Vertex component labels (`component_of[v]`) and the number of components.
    pub fn vertex_components(&self) -> (&[usize], usize) {
        let (c, n) = self.components.get_or_init(|| self.compute_components());
        (c, *n)
    }

    fn compute_components(&self) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            if e.source.0 < n && e.sink.0 < n {
                adj[e.source.0].push(e.sink.0);
                adj[e.sink.0].push(e.source.0);
            }
        }
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// The outer-mark dart of the component containing vertex `v`.
    pub fn outer_mark_of(&self, v: VertexId) -> Option<Dart> {
        let (comp, _) = self.vertex_components();
        self.outer
            .iter()
            .copied()
            .find(|&d| comp[self.base(d).0] == comp[v.0])
    }

    /// Splits the web into its connected components. Each vertexless loop
    /// is a component of its own; components with vertices come first in
    /// order of their smallest vertex.
    pub fn components(&self) -> Vec<WebMap> {
        let (comp, count) = self.vertex_components();
        let mut out = Vec::with_capacity(count + self.loops.len());
        for c in 0..count {
            let keep: Vec<bool> = comp.iter().map(|&x| x == c).collect();
            out.push(self.restrict_to(&keep, format!("{}#{}", self.name, c)));
        }
        for (i, l) in self.loops.iter().enumerate() {
            out.push(WebMap::from_parts(
                format!("{}#L{}", self.name, i),
                vec![],
                vec![],
                vec![l.clone()],
                vec![],
                vec![],
            ));
        }
        out
    }

    /// Sub-map on the kept vertices (which must be a union of components), without loops.
    fn restrict_to(&self, keep: &[bool], name: String) -> WebMap {
        let mut vmap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                vmap[i] = vertices.len();
                vertices.push(v.clone());
            }
        }
        let mut emap = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if keep[e.source.0] {
                emap[i] = edges.len();
                edges.push(Edge {
                    name: e.name.clone(),
                    source: VertexId(vmap[e.source.0]),
                    sink: VertexId(vmap[e.sink.0]),
                });
            }
        }
        let md = |d: Dart| Dart(2 * emap[d.edge().0] + (d.0 & 1));
        let rotations = (0..self.vertices.len())
            .filter(|&i| keep[i])
            .map(|i| self.rotations[i].iter().map(|&d| md(d)).collect())
            .collect();
        let outer = self
            .outer
            .iter()
            .filter(|d| keep[self.base(**d).0])
            .map(|&d| md(d))
            .collect();
        WebMap::from_parts(name, vertices, edges, vec![], rotations, outer)
    }

    /// Disjoint union; names of `other` are suffixed when they collide.
    pub fn disjoint_union(&self, other: &WebMap) -> WebMap {
        let voff = self.vertices.len();
        let eoff = self.edges.len();
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        let mut loops = self.loops.clone();
        let fresh = |taken: &dyn Fn(&str) -> bool, name: &str| {
            let mut n = name.to_string();
            while taken(&n) {
                n.push('\'');
            }
            n
        };
        for v in &other.vertices {
            let name = fresh(&|n| vertices.iter().any(|x: &Vertex| x.name == n), &v.name);
            vertices.push(Vertex { name, role: v.role });
        }
        for e in &other.edges {
            let name = fresh(&|n| edges.iter().any(|x: &Edge| x.name == n), &e.name);
            edges.push(Edge {
                name,
                source: VertexId(e.source.0 + voff),
                sink: VertexId(e.sink.0 + voff),
            });
        }
        for l in &other.loops {
            let name = fresh(&|n| loops.iter().any(|x: &Loop| x.name == n), &l.name);
            loops.push(Loop {
                name,
                winding: l.winding,
            });
        }
        let shift = |d: &Dart| Dart(d.0 + 2 * eoff);
        let mut rotations = self.rotations.clone();
        rotations.extend(
            other
                .rotations
                .iter()
                .map(|r| r.iter().map(shift).collect()),
        );
        let mut outer = self.outer.clone();
        outer.extend(other.outer.iter().map(shift));
        WebMap::from_parts(
            format!("{}+{}", self.name, other.name),
            vertices,
            edges,
            loops,
            rotations,
            outer,
        )
    }

    /// Mirror image: every rotation and loop winding reversed. Regions are
    /// preserved, so the outer face of each component is now traced by the
    /// flipped outer dart.
    pub fn mirror(&self) -> WebMap {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let loops = self
            .loops
            .iter()
            .map(|l| Loop {
                name: l.name.clone(),
                winding: l.winding.reversed(),
            })
            .collect();
        let outer = self.outer.iter().map(|d| d.flip()).collect();
        WebMap::from_parts(
            format!("{}-mirror", self.name),
            self.vertices.clone(),
            self.edges.clone(),
            loops,
            rotations,
            outer,
        )
    }

    /// Replaces the outer mark of the component containing `d` by `d`.
    pub fn with_outer_face(&self, d: Dart) -> WebMap {
        let (comp, _) = self.vertex_components();
        let c = comp[self.base(d).0];
        let outer = self
            .outer
            .iter()
            .map(|&o| if comp[self.base(o).0] == c { d } else { o })
            .collect();
        WebMap::from_parts(
            self.name.clone(),
            self.vertices.clone(),
            self.edges.clone(),
            self.loops.clone(),
            self.rotations.clone(),
            outer,
        )
    }

    /// Display name of a dart: `<edge>t` or `<edge>h`.
    pub fn dart_name(&self, d: Dart) -> String {
        format!(
            "{}{}",
            self.edges[d.edge().0].name,
            if d.is_tail() { 't' } else { 'h' }
        )
    }
}

/// The plain theta web: two vertices joined by three parallel edges.
pub fn theta() -> WebMap {
    let v = |n: &str, role| Vertex {
        name: n.into(),
        role,
    };
    let e = |n: &str| Edge {
        name: n.into(),
        source: VertexId(0),
        sink: VertexId(1),
    };
    let (e1, e2, e3) = (EdgeId(0), EdgeId(1), EdgeId(2));
    WebMap::from_parts(
        "theta",
        vec![v("a", Role::Source), v("b", Role::Sink)],
        vec![e("e1"), e("e2"), e("e3")],
        vec![],
        vec![
            vec![Dart::tail(e2), Dart::tail(e1), Dart::tail(e3)],
            vec![Dart::head(e1), Dart::head(e2), Dart::head(e3)],
        ],
        vec![Dart::head(e1)],
    )
}

/// A single vertexless loop.
pub fn circle(winding: Winding) -> WebMap {
    WebMap::from_parts(
        "circle",
        vec![],
        vec![],
        vec![Loop {
            name: "c".into(),
            winding,
        }],
        vec![],
        vec![],
    )
}
