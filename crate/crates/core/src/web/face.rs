use super::{Dart, LoopId, WebError, WebMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

/// Face orbits of a map. Face ids are assigned in order of the smallest dart
/// of each orbit, so they are deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    face_of: Vec<usize>,
    orbits: Vec<Vec<Dart>>,
    is_outer: Vec<bool>,
}

impl Faces {
    pub(crate) fn compute(map: &WebMap) -> Faces {
        let n = map.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut d = Dart(start);
            // bounded walk: broken rotation data must not loop forever
            while face_of[d.0] == usize::MAX && orbit.len() <= n {
                face_of[d.0] = id;
                orbit.push(d);
                d = match map.slots.get(d.flip().0).copied().flatten() {
                    Some(_) => map.face_next(d),
                    None => break,
                };
            }
            orbits.push(orbit);
        }
        let mut is_outer = vec![false; orbits.len()];
        for d in map.outer_marks() {
            if let Some(&f) = face_of.get(d.0) {
                if f != usize::MAX {
                    is_outer[f] = true;
                }
            }
        }
        Faces {
            face_of,
            orbits,
            is_outer,
        }
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        FaceId(self.face_of[d.0])
    }

    /// Darts of the face in walk order.
    pub fn orbit(&self, f: FaceId) -> &[Dart] {
        &self.orbits[f.0]
    }

    /// Number of edge-sides of the face.
    pub fn size(&self, f: FaceId) -> usize {
        self.orbits[f.0].len()
    }

    pub fn ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.orbits.len()).map(FaceId)
    }

    /// Whether `f` is the declared outer face of its component.
    pub fn is_outer(&self, f: FaceId) -> bool {
        self.is_outer[f.0]
    }

    /// `histogram[i]` = number of faces with `i` sides.
    pub fn size_histogram(&self) -> Vec<usize> {
        let max = self.orbits.iter().map(Vec::len).max().unwrap_or(0);
        let mut h = vec![0; max + 1];
        for o in &self.orbits {
            h[o.len()] += 1;
        }
        h
    }
}

/// A local feature the rewriting relations apply to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReducibleFeature {
    Circle(LoopId),
    Digon(FaceId),
    Square(FaceId),
}

impl WebMap {
    /// Every reducible feature: all loops, then all bounded digon faces, then
    /// all bounded square faces, each group in id order.
    ///
    /// Outer faces are skipped; a nonempty web always has a bounded digon or
    /// square unless it consists only of loops.
    pub fn reducible_features(&self) -> Vec<ReducibleFeature> {
        let faces = self.faces();
        let mut out: Vec<ReducibleFeature> = (0..self.loop_count())
            .map(|i| ReducibleFeature::Circle(LoopId(i)))
            .collect();
        for (size, wrap) in [
            (2, ReducibleFeature::Digon as fn(FaceId) -> ReducibleFeature),
            (4, ReducibleFeature::Square),
        ] {
            out.extend(
                faces
                    .ids()
                    .filter(|&f| faces.size(f) == size && !faces.is_outer(f))
                    .map(wrap),
            );
        }
        out
    }

    /// A circle if there is one, else a bounded digon, else a bounded square,
    /// smallest id first.
    pub fn find_reducible(&self) -> Result<ReducibleFeature, WebError> {
        if self.is_empty() {
            return Err(WebError::EmptyWeb);
        }
        self.reducible_features()
            .into_iter()
            .next()
            .ok_or(WebError::EmptyWeb)
    }
}
