use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::web::{Dart, Edge, EdgeId, Loop, LoopId, Role, Vertex, VertexId, WebMap, Winding};

/// Mutable copy of a map's parts.
struct Parts {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    loops: Vec<Loop>,
    rotations: Vec<Vec<Dart>>,
    outer: Vec<Dart>,
}

impl Parts {
    fn of(map: &WebMap) -> Parts {
        Parts {
            vertices: map.vertices().to_vec(),
            edges: map.edges().to_vec(),
            loops: map.loops().to_vec(),
            rotations: map.rotations().to_vec(),
            outer: map.outer_marks().to_vec(),
        }
    }

    fn build(self, name: &str) -> WebMap {
        WebMap::from_parts(
            name,
            self.vertices,
            self.edges,
            self.loops,
            self.rotations,
            self.outer,
        )
    }

    fn vertex(&mut self, role: Role) -> VertexId {
        self.vertices.push(Vertex {
            name: format!("v{}", self.vertices.len()),
            role,
        });
        self.rotations.push(Vec::new());
        VertexId(self.vertices.len() - 1)
    }

    fn edge(&mut self, source: VertexId, sink: VertexId) -> EdgeId {
        self.edges.push(Edge {
            name: format!("e{}", self.edges.len()),
            source,
            sink,
        });
        EdgeId(self.edges.len() - 1)
    }

    /// Moves dart `from` to `to` wherever it occurs in a rotation or outer mark.
    fn replace(&mut self, from: Dart, to: Dart) {
        for d in self
            .rotations
            .iter_mut()
            .flatten()
            .chain(self.outer.iter_mut())
        {
            if *d == from {
                *d = to;
            }
        }
    }
}

/// Inverse digon move: edge `e` (y → x) becomes y → b, a digon b ⇇ a, and a → x.
pub fn insert_digon_on_edge(map: &WebMap, e: EdgeId) -> WebMap {
    let mut p = Parts::of(map);
    let x = p.edges[e.0].sink;
    let b = p.vertex(Role::Sink);
    let a = p.vertex(Role::Source);
    let e1 = p.edge(a, b);
    let e2 = p.edge(a, b);
    let f = p.edge(a, x);
    p.replace(Dart::head(e), Dart::head(f));
    p.edges[e.0].sink = b;
    p.rotations[b.0] = vec![Dart::head(e1), Dart::head(e), Dart::head(e2)];
    p.rotations[a.0] = vec![Dart::tail(f), Dart::tail(e1), Dart::tail(e2)];
    p.build(map.name())
}

/// Inverse digon move on a loop: the loop becomes a theta component whose
/// strand, after reducing a digon, winds the same way.
pub fn insert_digon_on_loop(map: &WebMap, l: LoopId) -> WebMap {
    let mut p = Parts::of(map);
    let winding = p.loops.remove(l.0).winding;
    let a = p.vertex(Role::Source);
    let b = p.vertex(Role::Sink);
    let [e1, e2, e3] = [(); 3].map(|_| p.edge(a, b));
    let mut ra = vec![Dart::tail(e2), Dart::tail(e1), Dart::tail(e3)];
    let mut rb = vec![Dart::head(e1), Dart::head(e2), Dart::head(e3)];
    let mut mark = Dart::head(e1);
    if winding == Winding::Cw {
        ra.reverse();
        rb.reverse();
        mark = mark.flip();
    }
    p.rotations[a.0] = ra;
    p.rotations[b.0] = rb;
    p.outer.push(mark);
    p.build(map.name())
}

/// Inverse square move: the edges of tail darts `ds` and `dt`, which must
/// bound a common face, are joined by a new square inside that face.
pub fn unsmooth(map: &WebMap, ds: Dart, dt: Dart) -> WebMap {
    let (s, t) = (ds.edge(), dt.edge());
    let mut p = Parts::of(map);
    let (x, x2) = (p.edges[s.0].sink, p.edges[t.0].sink);
    let v0 = p.vertex(Role::Source);
    let v1 = p.vertex(Role::Sink);
    let v2 = p.vertex(Role::Source);
    let v3 = p.vertex(Role::Sink);
    let s0 = p.edge(v0, v1);
    let s1 = p.edge(v2, v1);
    let s2 = p.edge(v2, v3);
    let s3 = p.edge(v0, v3);
    let sb = p.edge(v0, x);
    let tb = p.edge(v2, x2);
    p.replace(Dart::head(s), Dart::head(sb));
    p.replace(Dart::head(t), Dart::head(tb));
    p.edges[s.0].sink = v1;
    p.edges[t.0].sink = v3;
    p.rotations[v1.0] = vec![Dart::head(s0), Dart::head(s), Dart::head(s1)];
    p.rotations[v0.0] = vec![Dart::tail(sb), Dart::tail(s0), Dart::tail(s3)];
    p.rotations[v3.0] = vec![Dart::head(s2), Dart::head(t), Dart::head(s3)];
    p.rotations[v2.0] = vec![Dart::tail(tb), Dart::tail(s2), Dart::tail(s1)];
    p.build(map.name())
}

/// Adds a vertexless loop.
pub fn add_circle(map: &WebMap, winding: Winding) -> WebMap {
    let mut p = Parts::of(map);
    let mut k = p.loops.len();
    while p.loops.iter().any(|l| l.name == format!("c{k}")) {
        k += 1;
    }
    p.loops.push(Loop {
        name: format!("c{k}"),
        winding,
    });
    p.build(map.name())
}

#[derive(Clone, Copy)]
enum Move {
    Circle,
    DigonOnEdge,
    DigonOnLoop,
    Square,
}

/// Pairs of distinct tail darts sharing a face.
fn square_sites(map: &WebMap) -> Vec<(Dart, Dart)> {
    let faces = map.faces();
    let mut out = Vec::new();
    for f in faces.ids() {
        let tails: Vec<Dart> = faces
            .orbit(f)
            .iter()
            .copied()
            .filter(|d| d.is_tail())
            .collect();
        for i in 0..tails.len() {
            for j in 0..tails.len() {
                if i != j {
                    out.push((tails[i], tails[j]));
                }
            }
        }
    }
    out
}

/// A random closed web: one or two circles followed by `steps` random
/// inverse rewrites. The same seed always gives the same web.
pub fn generate_web(seed: u64, steps: usize) -> WebMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let winding = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            Winding::Ccw
        } else {
            Winding::Cw
        }
    };
    let mut map = WebMap::empty().with_name(format!("gen-{seed}-{steps}"));
    for _ in 0..rng.gen_range(1..=2) {
        let w = winding(&mut rng);
        map = add_circle(&map, w);
    }
    for _ in 0..steps {
        let sites = square_sites(&map);
        let mut moves = vec![Move::Circle];
        if map.edge_count() > 0 {
            moves.extend([Move::DigonOnEdge; 3]);
        }
        if map.loop_count() > 0 {
            moves.extend([Move::DigonOnLoop; 3]);
        }
        if !sites.is_empty() {
            moves.extend([Move::Square; 4]);
        }
        map = match *moves.choose(&mut rng).unwrap() {
            Move::Circle => {
                let w = winding(&mut rng);
                add_circle(&map, w)
            }
            Move::DigonOnEdge => {
                let e = EdgeId(rng.gen_range(0..map.edge_count()));
                insert_digon_on_edge(&map, e)
            }
            Move::DigonOnLoop => {
                let l = LoopId(rng.gen_range(0..map.loop_count()));
                insert_digon_on_loop(&map, l)
            }
            Move::Square => {
                let (ds, dt) = *sites.choose(&mut rng).unwrap();
                unsmooth(&map, ds, dt)
            }
        };
        debug_assert!(map.validate().is_valid(), "{}", map.validate());
    }
    map
}
