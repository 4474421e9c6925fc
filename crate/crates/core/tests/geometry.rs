//! Orientation checks against coordinates: a cycle is counterclockwise
//! exactly when the polygon traced through its vertices and bend points has
//! positive signed area.

mod common;

use common::{oracle, polyline, signed_area};
use webcolor::coloring::{configuration, enumerate_colorings, CycleWalk};
use webcolor::format::Coords;
use webcolor::rewrite::{smooth_square, Shape, Smoothing};
use webcolor::web::{Dart, FaceId};
use webcolor::{Orientation, WebMap, Winding};

fn with_coords() -> Vec<(&'static str, WebMap, Coords)> {
    common::WEB_FIXTURES
        .iter()
        .filter_map(|n| common::coords(n).map(|c| (*n, common::web(n), c)))
        .collect()
}

#[test]
fn coordinate_fixtures_exist() {
    let names: Vec<&str> = with_coords().iter().map(|t| t.0).collect();
    assert_eq!(names, vec!["theta", "cube", "square-loops"]);
}

#[test]
fn rotations_follow_angles() {
    for (name, map, xy) in with_coords() {
        for (v, rot) in map.rotations().iter().enumerate() {
            let (x, y) = xy.vertices[&map.vertices()[v].name];
            let angle = |d: &Dart| {
                let p = polyline(&map, &xy, *d)[1];
                (p.1 - y).atan2(p.0 - x).rem_euclid(std::f64::consts::TAU)
            };
            let mut sorted = rot.clone();
            sorted.sort_by(|a, b| angle(a).partial_cmp(&angle(b)).unwrap());
            let k = sorted.iter().position(|d| *d == rot[0]).unwrap();
            sorted.rotate_left(k);
            assert_eq!(&sorted, rot, "{name}: vertex {v}");
        }
    }
}

#[test]
fn theta_digon_cycle_is_counterclockwise() {
    let (_, t, xy) = with_coords().into_iter().find(|x| x.0 == "theta").unwrap();
    let (e1, e2) = (t.find_edge("e1").unwrap(), t.find_edge("e2").unwrap());
    // along e2 (the straight middle edge) then back over the top along e1
    let walk = [Dart::tail(e2), Dart::head(e1)];
    assert!(signed_area(&t, &xy, &walk) > 0.0);
    assert_eq!(t.cycle_orientation(&walk), Ok(Orientation::Positive));
}

#[test]
fn configuration_cycles_match_signed_area() {
    for (name, map, xy) in with_coords() {
        let mut checked = 0;
        for c in enumerate_colorings(&map) {
            for u in webcolor::Color::ALL {
                for cycle in configuration(&map, &c, u).cycles {
                    let CycleWalk::Darts(walk) = cycle.walk else {
                        continue;
                    };
                    assert_eq!(cycle.orientation, oracle(&map, &xy, &walk), "{name}");
                    let rev: Vec<Dart> = walk.iter().rev().map(|d| d.flip()).collect();
                    assert_eq!(map.cycle_orientation(&rev).unwrap(), -cycle.orientation);
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn face_boundaries_match_signed_area() {
    for (name, map, xy) in with_coords() {
        let faces = map.faces();
        for f in faces.ids() {
            let walk = faces.orbit(f);
            let mut verts: Vec<_> = walk.iter().map(|d| map.base(*d)).collect();
            verts.sort();
            verts.dedup();
            if verts.len() != walk.len() {
                continue;
            }
            let got = map.cycle_orientation(walk).unwrap();
            assert_eq!(got, oracle(&map, &xy, walk), "{name} face {}", f.0);
            // bounded faces lie to the right of their walk
            assert_eq!(
                got == Orientation::Negative,
                !faces.is_outer(f),
                "{name} face {}",
                f.0
            );
        }
    }
}

#[test]
fn loop_from_smoothing_has_geometric_winding() {
    let (_, map, xy) = with_coords()
        .into_iter()
        .find(|x| x.0 == "square-loops")
        .unwrap();
    let faces = map.faces();
    let square = faces
        .ids()
        .find(|&f| faces.size(f) == 4 && !faces.is_outer(f))
        .unwrap_or(FaceId(0));
    let (h, v) = smooth_square(&map, square).unwrap();
    let with_loops = [&h, &v]
        .into_iter()
        .find(|r| r.web.loop_count() == 2)
        .unwrap();
    assert!(matches!(
        with_loops.witness.shape,
        Shape::Square {
            smoothing: Smoothing::Vertical,
            ..
        }
    ));
    for pair in &with_loops.witness.pairs {
        let attach = with_loops.witness.attachment_of(pair.source).unwrap();
        let name = &map.edge(attach).name;
        let l = with_loops
            .web
            .loops()
            .iter()
            .find(|l| &l.name == name)
            .unwrap();
        let walk = [Dart::tail(attach), Dart::head(pair.along)];
        let expected = match oracle(&map, &xy, &walk) {
            Orientation::Positive => Winding::Ccw,
            Orientation::Negative => Winding::Cw,
        };
        assert_eq!(l.winding, expected);
    }
}
