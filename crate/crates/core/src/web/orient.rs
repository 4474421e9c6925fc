use std::collections::HashSet;
use std::ops::Neg;

use super::{Dart, LoopId, WebError, WebMap, Winding};

/// Whether a directed cycle runs counterclockwise (`Positive`) in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

impl Neg for Orientation {
    type Output = Orientation;
    fn neg(self) -> Orientation {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl WebMap {
    /// Orientation of a vertexless loop traversed along (`along = true`) or
    /// against its own direction.
    pub fn loop_orientation(&self, l: LoopId, along: bool) -> Orientation {
        let o = match self.loops()[l.0].winding {
            Winding::Ccw => Orientation::Positive,
            Winding::Cw => Orientation::Negative,
        };
        if along {
            o
        } else {
            -o
        }
    }

    /// Orientation of a vertex-simple directed cycle given as consecutive darts.
    ///
    /// The cycle splits the faces of its component into two regions, reached
    /// from its left and right sides by crossing only non-cycle edges. The
    /// region without the outer face is the interior; the cycle is positive
    /// when the interior is on its left.
    pub fn cycle_orientation(&self, cycle: &[Dart]) -> Result<Orientation, WebError> {
        self.check_simple_cycle(cycle)?;
        let faces = self.faces();
        let on_cycle: HashSet<usize> = cycle.iter().map(|d| d.edge().0).collect();

        let outer_dart = self
            .outer_mark_of(self.base(cycle[0]))
            .ok_or(WebError::CycleSeparationFailure)?;
        let outer = faces.face_of(outer_dart).0;

        // dual adjacency over non-cycle edges
        let mut adj = vec![Vec::new(); faces.len()];
        for e in 0..self.edge_count() {
            if on_cycle.contains(&e) {
                continue;
            }
            let a = faces.face_of(Dart(2 * e)).0;
            let b = faces.face_of(Dart(2 * e + 1)).0;
            adj[a].push(b);
            adj[b].push(a);
        }
        let flood = |seeds: Vec<usize>| {
            let mut seen = vec![false; faces.len()];
            let mut stack = seeds;
            for &s in &stack {
                seen[s] = true;
            }
            while let Some(f) = stack.pop() {
                for &g in &adj[f] {
                    if !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
            seen
        };
        let left = flood(cycle.iter().map(|d| faces.face_of(d.flip()).0).collect());
        let right = flood(cycle.iter().map(|d| faces.face_of(*d).0).collect());
        if (0..faces.len()).any(|f| left[f] && right[f]) || left[outer] == right[outer] {
            return Err(WebError::CycleSeparationFailure);
        }
        Ok(if left[outer] {
            Orientation::Negative
        } else {
            Orientation::Positive
        })
    }

    fn check_simple_cycle(&self, cycle: &[Dart]) -> Result<(), WebError> {
        if cycle.len() < 2 {
            return Err(WebError::NotSimpleCycle("fewer than two darts".into()));
        }
        let mut verts = HashSet::new();
        let mut edges = HashSet::new();
        for (i, &d) in cycle.iter().enumerate() {
            if d.0 >= self.dart_count() {
                return Err(WebError::NotSimpleCycle(format!(
                    "dart {} does not exist",
                    d.0
                )));
            }
            let next = cycle[(i + 1) % cycle.len()];
            if next.0 >= self.dart_count() || self.target(d) != self.base(next) {
                return Err(WebError::NotSimpleCycle(format!(
                    "{} is not followed by a dart at its endpoint",
                    self.dart_name(d)
                )));
            }
            if !verts.insert(self.base(d)) || !edges.insert(d.edge()) {
                return Err(WebError::NotSimpleCycle("repeated vertex or edge".into()));
            }
        }
        Ok(())
    }
}
