//! Lift colorings of reduced webs back through a digon and a square and
//! watch the total degree.
//!
//! ```bash
//! cargo run --example lifts
//! ```

use webcolor::rewrite::{digon_lift, reduce_digon, smooth_square, square_lift, Sign};
use webcolor::web::{theta, FaceId};
use webcolor::{enumerate_colorings, generate_web, total_degree, WebMap};

fn bounded(w: &WebMap, size: usize) -> FaceId {
    let faces = w.faces();
    faces
        .ids()
        .find(|&f| faces.size(f) == size && !faces.is_outer(f))
        .unwrap()
}

fn main() {
    let t = theta();
    let r = reduce_digon(&t, bounded(&t, 2)).unwrap();
    println!("theta digon -> {} loop(s)", r.web.loop_count());
    for c in enumerate_colorings(&r.web) {
        for sign in [Sign::Plus, Sign::Minus] {
            let l = digon_lift(&t, &r, &c, sign).unwrap();
            println!(
                "  {c} d_t={:+}  --{sign:?}-->  {l} d_t={:+}",
                total_degree(&r.web, &c),
                total_degree(&t, &l)
            );
        }
    }

    // a generated web with a bounded square face
    let w = generate_web(27, 4);
    let f = bounded(&w, 4);
    let (h, v) = smooth_square(&w, f).unwrap();
    let mut count = 0;
    for red in [&h, &v] {
        for c in enumerate_colorings(&red.web) {
            let l = square_lift(&w, red, &c).unwrap();
            assert_eq!(total_degree(&w, &l), total_degree(&red.web, &c));
            count += 1;
        }
    }
    println!(
        "{}: square face {} lifts {count} colorings of its smoothings onto {} colorings, degrees kept",
        w.name(),
        f.0,
        enumerate_colorings(&w).len()
    );
}
