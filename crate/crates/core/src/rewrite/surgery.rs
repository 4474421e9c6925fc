//! Map surgery for the three local relations.
//!
//! A digon or square is cut out together with its corner vertices and the
//! boundary attachments are rejoined through it. Each corner keeps exactly
//! one *attachment* (its edge leaving the feature); a *pairing* joins each
//! sink corner to a source corner along one side of the feature. Following
//! attachment → paired corner → attachment traces the new strands. A strand
//! that starts and ends outside the feature becomes a single edge; one that
//! closes up inside becomes a vertexless loop.

use std::collections::VecDeque;

use crate::web::{
    Dart, Edge, EdgeId, FaceId, Loop, LoopId, Orientation, Role, VertexId, WebError, WebMap,
    Winding,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurgeryError {
    #[error("loop {0} does not exist")]
    NotALoop(usize),
    #[error("face {0} is not a digon")]
    NotADigon(usize),
    #[error("face {0} is not a square")]
    NotASquare(usize),
    #[error("square face {0} visits a corner vertex twice")]
    DegenerateSquare(usize),
    #[error(transparent)]
    Web(#[from] WebError),
}

/// Where a strand of the reduced web came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrandImage {
    Edge(EdgeId),
    Loop(LoopId),
}

/// Fate of one edge of the original web.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeImage {
    /// Survives unchanged under a new id.
    Survive(EdgeId),
    /// Attachment merged into a strand of the reduced web.
    Chain(StrandImage),
    /// Side of the removed feature.
    Internal,
}

/// The two ways of resolving a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Each source corner is joined to its clockwise neighbour.
    Horizontal,
    /// Each source corner is joined to its counterclockwise neighbour.
    Vertical,
}

/// A sink corner joined to a source corner along one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pair {
    pub sink: VertexId,
    pub source: VertexId,
    pub along: EdgeId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Circle(LoopId),
    /// `along` is the side the new strand follows; `forward` is the side
    /// traversed source-to-sink by the counterclockwise boundary cycle.
    Digon {
        along: EdgeId,
        other: EdgeId,
        forward: EdgeId,
    },
    /// Corners in counterclockwise order starting at a source corner;
    /// `sides[i]` joins `corners[i]` and `corners[i + 1]`.
    Square {
        corners: [VertexId; 4],
        sides: [EdgeId; 4],
        smoothing: Smoothing,
    },
}

/// Correspondence between an original web and one reduced web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub shape: Shape,
    /// Indexed by original edge id.
    pub edges: Vec<EdgeImage>,
    /// Indexed by original loop id.
    pub loops: Vec<Option<LoopId>>,
    /// The attachment edge of each corner, aligned with `corners`.
    pub corners: Vec<VertexId>,
    pub attachments: Vec<EdgeId>,
    pub pairs: Vec<Pair>,
    /// Whether the removed digon or square was a bounded face.
    pub bounded: bool,
}

impl Witness {
    pub fn attachment_of(&self, v: VertexId) -> Option<EdgeId> {
        self.corners
            .iter()
            .position(|&c| c == v)
            .map(|i| self.attachments[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub web: WebMap,
    pub witness: Witness,
}

pub fn remove_circle(map: &WebMap, l: LoopId) -> Result<Reduction, SurgeryError> {
    if l.0 >= map.loop_count() {
        return Err(SurgeryError::NotALoop(l.0));
    }
    let mut loops = map.loops().to_vec();
    loops.remove(l.0);
    let web = WebMap::from_parts(
        map.name(),
        map.vertices().to_vec(),
        map.edges().to_vec(),
        loops,
        map.rotations().to_vec(),
        map.outer_marks().to_vec(),
    );
    let witness = Witness {
        shape: Shape::Circle(l),
        edges: (0..map.edge_count())
            .map(|e| EdgeImage::Survive(EdgeId(e)))
            .collect(),
        loops: (0..map.loop_count())
            .map(|i| match i.cmp(&l.0) {
                std::cmp::Ordering::Less => Some(LoopId(i)),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(LoopId(i - 1)),
            })
            .collect(),
        corners: vec![],
        attachments: vec![],
        pairs: vec![],
        bounded: true,
    };
    Ok(Reduction { web, witness })
}

/// Replaces a digon face by a single strand running where its
/// lower-numbered side was.
pub fn reduce_digon(map: &WebMap, f: FaceId) -> Result<Reduction, SurgeryError> {
    let faces = map.faces();
    if f.0 >= faces.len() || faces.size(f) != 2 {
        return Err(SurgeryError::NotADigon(f.0));
    }
    let orbit = faces.orbit(f);
    let (x, y) = (orbit[0].edge(), orbit[1].edge());
    let (along, other) = (x.min(y), x.max(y));
    let e = map.edge(along);
    let (a, b) = (e.source, e.sink);
    let forward = match map.cycle_orientation(&[Dart::tail(along), Dart::head(other)])? {
        Orientation::Positive => along,
        Orientation::Negative => other,
    };
    let beyond = other_side(map, other, f);
    let shape = Shape::Digon {
        along,
        other,
        forward,
    };
    let pairs = [Pair {
        sink: b,
        source: a,
        along,
    }];
    resolve(map, shape, &[a, b], &[along, other], &pairs, &[f, beyond])
}

/// Both smoothings of a square face: `(horizontal, vertical)`.
pub fn smooth_square(map: &WebMap, f: FaceId) -> Result<(Reduction, Reduction), SurgeryError> {
    let (corners, sides) = square_frame(map, f)?;
    let [v0, v1, v2, v3] = corners;
    let [s0, s1, s2, s3] = sides;
    let beyond = |s: EdgeId| other_side(map, s, f);
    let horizontal = resolve(
        map,
        Shape::Square {
            corners,
            sides,
            smoothing: Smoothing::Horizontal,
        },
        &corners,
        &sides,
        &[
            Pair {
                sink: v3,
                source: v0,
                along: s3,
            },
            Pair {
                sink: v1,
                source: v2,
                along: s1,
            },
        ],
        &[f, beyond(s0), beyond(s2)],
    )?;
    let vertical = resolve(
        map,
        Shape::Square {
            corners,
            sides,
            smoothing: Smoothing::Vertical,
        },
        &corners,
        &sides,
        &[
            Pair {
                sink: v1,
                source: v0,
                along: s0,
            },
            Pair {
                sink: v3,
                source: v2,
                along: s2,
            },
        ],
        &[f, beyond(s1), beyond(s3)],
    )?;
    Ok((horizontal, vertical))
}

/// Corners of a square face in counterclockwise order, starting at its
/// lower-numbered source corner, and the sides between consecutive corners.
pub fn square_frame(map: &WebMap, f: FaceId) -> Result<([VertexId; 4], [EdgeId; 4]), SurgeryError> {
    let faces = map.faces();
    if f.0 >= faces.len() || faces.size(f) != 4 {
        return Err(SurgeryError::NotASquare(f.0));
    }
    let orbit = faces.orbit(f).to_vec();
    let mut bases: Vec<VertexId> = orbit.iter().map(|&d| map.base(d)).collect();
    bases.sort();
    bases.dedup();
    if bases.len() != 4 {
        return Err(SurgeryError::DegenerateSquare(f.0));
    }
    let walk: Vec<Dart> = match map.cycle_orientation(&orbit)? {
        Orientation::Positive => orbit,
        Orientation::Negative => orbit.iter().rev().map(|d| d.flip()).collect(),
    };
    let start = (0..4)
        .filter(|&i| map.vertex(map.base(walk[i])).role == Role::Source)
        .min_by_key(|&i| map.base(walk[i]))
        .expect("a square has two source corners");
    let at = |i: usize| walk[(start + i) % 4];
    Ok((
        [0, 1, 2, 3].map(|i| map.base(at(i))),
        [0, 1, 2, 3].map(|i| at(i).edge()),
    ))
}

fn other_side(map: &WebMap, e: EdgeId, f: FaceId) -> FaceId {
    let faces = map.faces();
    let t = faces.face_of(Dart::tail(e));
    if t == f {
        faces.face_of(Dart::head(e))
    } else {
        t
    }
}

struct Chain {
    attachments: Vec<EdgeId>,
    closed: bool,
}

fn resolve(
    map: &WebMap,
    shape: Shape,
    corners: &[VertexId],
    internal: &[EdgeId],
    pairs: &[Pair],
    merged: &[FaceId],
) -> Result<Reduction, SurgeryError> {
    let nv = map.vertex_count();
    let ne = map.edge_count();
    let mut corner_idx = vec![None; nv];
    for (i, &v) in corners.iter().enumerate() {
        corner_idx[v.0] = Some(i);
    }
    let mut is_internal = vec![false; ne];
    for &e in internal {
        is_internal[e.0] = true;
    }
    let attachments: Vec<EdgeId> = corners
        .iter()
        .map(|&v| {
            map.incident_edges(v)
                .find(|e| !is_internal[e.0])
                .expect("every corner has one attachment")
        })
        .collect();
    let attach_at = |v: VertexId| attachments[corner_idx[v.0].unwrap()];
    let partner_of_sink = |t: VertexId| pairs.iter().find(|p| p.sink == t).copied().unwrap();
    let is_attachment = |e: EdgeId| attachments.contains(&e);

    // trace strands
    let mut used = vec![false; ne];
    let mut chains: Vec<Chain> = Vec::new();
    let mut order: Vec<EdgeId> = attachments.clone();
    order.sort();
    order.dedup();
    for &a in &order {
        let src = map.edge(a).source;
        if corner_idx[src.0].is_some() || used[a.0] {
            continue;
        }
        let mut chain = vec![a];
        used[a.0] = true;
        let mut cur = a;
        while corner_idx[map.edge(cur).sink.0].is_some() {
            let p = partner_of_sink(map.edge(cur).sink);
            cur = attach_at(p.source);
            used[cur.0] = true;
            chain.push(cur);
        }
        chains.push(Chain {
            attachments: chain,
            closed: false,
        });
    }
    for &a in &order {
        if used[a.0] {
            continue;
        }
        let mut chain = Vec::new();
        let mut cur = a;
        while !used[cur.0] {
            used[cur.0] = true;
            chain.push(cur);
            let p = partner_of_sink(map.edge(cur).sink);
            cur = attach_at(p.source);
        }
        chains.push(Chain {
            attachments: chain,
            closed: true,
        });
    }

    // vertices
    let mut vmap = vec![None; nv];
    let mut vertices = Vec::new();
    for (i, v) in map.vertices().iter().enumerate() {
        if corner_idx[i].is_none() {
            vmap[i] = Some(VertexId(vertices.len()));
            vertices.push(v.clone());
        }
    }
    let vm = |v: VertexId| vmap[v.0].expect("kept vertex");

    // edges
    let mut images = vec![EdgeImage::Internal; ne];
    let mut first_of_chain = vec![None; ne];
    for (ci, ch) in chains.iter().enumerate() {
        if !ch.closed {
            first_of_chain[ch.attachments[0].0] = Some(ci);
        }
    }
    let mut edges = Vec::new();
    let mut chain_edge = vec![None; chains.len()];
    for (i, e) in map.edges().iter().enumerate() {
        if is_internal[i] {
            continue;
        }
        if let Some(ci) = first_of_chain[i] {
            let last = *chains[ci].attachments.last().unwrap();
            chain_edge[ci] = Some(EdgeId(edges.len()));
            edges.push(Edge {
                name: e.name.clone(),
                source: vm(e.source),
                sink: vm(map.edge(last).sink),
            });
        } else if !is_attachment(EdgeId(i)) {
            images[i] = EdgeImage::Survive(EdgeId(edges.len()));
            edges.push(e.clone());
            let last = edges.last_mut().unwrap();
            last.source = vm(e.source);
            last.sink = vm(e.sink);
        }
    }

    // loops
    let mut loop_sides = Vec::new();
    let mut loops = map.loops().to_vec();
    let loop_images = (0..loops.len()).map(|i| Some(LoopId(i))).collect();
    for (ci, ch) in chains.iter().enumerate() {
        let image = if ch.closed {
            let mut cycle = Vec::new();
            for &a in &ch.attachments {
                cycle.push(Dart::tail(a));
                cycle.push(Dart::head(partner_of_sink(map.edge(a).sink).along));
            }
            let winding = match map.cycle_orientation(&cycle)? {
                Orientation::Positive => Winding::Ccw,
                Orientation::Negative => Winding::Cw,
            };
            let a = ch.attachments[0];
            loop_sides.push((Dart::tail(a), Dart::head(a)));
            let mut name = map.edge(a).name.clone();
            while loops.iter().any(|l| l.name == name) {
                name.push('\'');
            }
            loops.push(Loop { name, winding });
            StrandImage::Loop(LoopId(loops.len() - 1))
        } else {
            StrandImage::Edge(chain_edge[ci].unwrap())
        };
        for &a in &ch.attachments {
            images[a.0] = EdgeImage::Chain(image);
        }
    }

    // darts
    let mut dmap = vec![None; 2 * ne];
    let mut back = vec![Dart(0); 2 * edges.len()];
    for (i, img) in images.iter().enumerate() {
        if let EdgeImage::Survive(n) = img {
            for (o, d) in [
                (Dart::tail(EdgeId(i)), Dart::tail(*n)),
                (Dart::head(EdgeId(i)), Dart::head(*n)),
            ] {
                dmap[o.0] = Some(d);
                back[d.0] = o;
            }
        }
    }
    for (ci, ch) in chains.iter().enumerate() {
        if let Some(n) = chain_edge[ci] {
            let first = Dart::tail(ch.attachments[0]);
            let last = Dart::head(*ch.attachments.last().unwrap());
            dmap[first.0] = Some(Dart::tail(n));
            dmap[last.0] = Some(Dart::head(n));
            back[Dart::tail(n).0] = first;
            back[Dart::head(n).0] = last;
        }
    }
    let dm = |d: Dart| dmap[d.0].expect("dart at a kept vertex");
    let rotations: Vec<Vec<Dart>> = (0..nv)
        .filter(|&v| corner_idx[v].is_none())
        .map(|v| map.rotations()[v].iter().map(|&d| dm(d)).collect())
        .collect();

    // outer marks: untouched components keep theirs
    let (old_comp, _) = map.vertex_components();
    let hit = old_comp[corners[0].0];
    let mut outer: Vec<Dart> = map
        .outer_marks()
        .iter()
        .filter(|&&d| old_comp[map.base(d).0] != hit)
        .map(|&d| dm(d))
        .collect();
    let draft = WebMap::from_parts(map.name(), vertices, edges, loops, rotations, vec![]);
    outer.extend(relocate_outer(
        map,
        &draft,
        hit,
        merged,
        &back,
        &vmap,
        &loop_sides,
    ));
    let web = WebMap::from_parts(
        map.name(),
        draft.vertices().to_vec(),
        draft.edges().to_vec(),
        draft.loops().to_vec(),
        draft.rotations().to_vec(),
        outer,
    );
    Ok(Reduction {
        web,
        witness: Witness {
            shape,
            edges: images,
            loops: loop_images,
            corners: corners.to_vec(),
            attachments,
            pairs: pairs.to_vec(),
            bounded: !map.faces().is_outer(merged[0]),
        },
    })
}

/// Outer marks for the pieces of the operated component. Old faces merged
/// by the surgery form one region; pieces touching the old outer region get
/// it as their outer face, and a piece sitting inside a bounded face of an
/// already placed piece gets that face. New loops take part as pieces with
/// two faces, given by the old darts on either side of them.
fn relocate_outer(
    old: &WebMap,
    new: &WebMap,
    hit: usize,
    merged: &[FaceId],
    back: &[Dart],
    vmap: &[Option<VertexId>],
    loop_sides: &[(Dart, Dart)],
) -> Vec<Dart> {
    let old_faces = old.faces();
    let mut parent: Vec<usize> = (0..old_faces.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    for w in merged.windows(2) {
        let (a, b) = (find(&mut parent, w[0].0), find(&mut parent, w[1].0));
        parent[a] = b;
    }
    let old_outer = old
        .outer_marks()
        .iter()
        .find(|&&d| old.vertex_components().0[old.base(d).0] == hit)
        .map(|&d| old_faces.face_of(d).0);
    let Some(old_outer) = old_outer else {
        return vec![];
    };
    let outer_region = find(&mut parent, old_outer);

    let (old_comp, _) = old.vertex_components();
    let (new_comp, ncomp) = new.vertex_components();
    let mut affected = vec![false; ncomp];
    for (v, m) in vmap.iter().enumerate() {
        if let Some(n) = m {
            if old_comp[v] == hit {
                affected[new_comp[n.0]] = true;
            }
        }
    }
    let new_faces = new.faces();
    // per affected component: (region, representative dart) of each face
    let mut faces_of: Vec<Vec<(usize, Dart)>> = vec![Vec::new(); ncomp];
    for f in new_faces.ids() {
        let d = new_faces.orbit(f)[0];
        let c = new_comp[new.base(d).0];
        if affected[c] {
            let r = find(&mut parent, old_faces.face_of(back[d.0]).0);
            faces_of[c].push((r, d));
        }
    }
    for &(r, l) in loop_sides {
        let side = |d: Dart, p: &mut Vec<usize>| find(p, old_faces.face_of(d).0);
        let pair = vec![(side(r, &mut parent), r), (side(l, &mut parent), l)];
        faces_of.push(pair);
        affected.push(true);
    }
    let pieces = faces_of.len();
    let mut assigned: Vec<Option<(usize, Dart)>> = vec![None; pieces];
    let mut queue = VecDeque::new();
    for c in (0..pieces).filter(|&c| affected[c]) {
        if let Some(&(r, d)) = faces_of[c].iter().find(|(r, _)| *r == outer_region) {
            assigned[c] = Some((r, d));
            queue.push_back(c);
        }
    }
    while let Some(a) = queue.pop_front() {
        let own = assigned[a].unwrap().0;
        let inner: Vec<usize> = faces_of[a]
            .iter()
            .map(|x| x.0)
            .filter(|&r| r != own)
            .collect();
        for b in 0..pieces {
            if !affected[b] || assigned[b].is_some() {
                continue;
            }
            if let Some(&(r, d)) = faces_of[b].iter().find(|(r, _)| inner.contains(r)) {
                assigned[b] = Some((r, d));
                queue.push_back(b);
            }
        }
    }
    (0..ncomp)
        .filter(|&c| affected[c])
        .map(|c| match assigned[c] {
            Some((_, d)) => d,
            None => faces_of[c][0].1,
        })
        .collect()
}
