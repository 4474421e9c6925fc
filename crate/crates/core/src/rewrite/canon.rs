use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::web::{Dart, WebMap, Winding};

/// Encoding of one connected component, minimal over all relabelings that
/// start from a dart of its outer face.
fn component_code(map: &WebMap, outer: Dart) -> Vec<u32> {
    let faces = map.faces();
    let n = map.dart_count();
    let mut best: Option<Vec<u32>> = None;
    for &start in faces.orbit(faces.face_of(outer)) {
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        let mut seen = 1;
        label[start.0] = 0;
        while let Some(d) = queue.pop_front() {
            order.push(d);
            for next in [d.flip(), map.sigma(d)] {
                if label[next.0] == u32::MAX {
                    label[next.0] = seen;
                    seen += 1;
                    queue.push_back(next);
                }
            }
        }
        let code: Vec<u32> = order
            .iter()
            .flat_map(|&d| [label[d.flip().0], label[map.sigma(d).0], d.is_tail() as u32])
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

/// Isomorphism-invariant key of a plane web: equal keys mean the webs are
/// the same up to renaming, with the same outer faces and loop windings.
pub fn canonical_key(map: &WebMap) -> Vec<Vec<u32>> {
    let (comp, count) = map.vertex_components();
    let mut codes = Vec::new();
    for c in 0..count {
        let outer = map
            .outer_marks()
            .iter()
            .copied()
            .find(|&d| comp[map.base(d).0] == c)
            .expect("one outer mark per component");
        codes.push(component_code(map, outer));
    }
    for l in map.loops() {
        codes.push(vec![match l.winding {
            Winding::Ccw => u32::MAX - 1,
            Winding::Cw => u32::MAX - 2,
        }]);
    }
    codes.sort();
    codes
}

pub fn canonical_hash(map: &WebMap) -> u64 {
    let mut h = DefaultHasher::new();
    canonical_key(map).hash(&mut h);
    h.finish()
}
