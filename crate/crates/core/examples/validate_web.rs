//! Parse a web from WEBX text, validate it and look at its faces.
//!
//! ```bash
//! cargo run --example validate_web
//! ```

use webcolor::format::{parse, Document};

const THETA: &str = "\
web theta
vertex a source
vertex b sink
edge e1 a b
edge e2 a b
edge e3 a b
rot a e2t e1t e3t
rot b e1h e2h e3h
outer e1h
";

fn main() {
    let doc = parse(THETA).expect("theta parses");
    let Document::Web(w) = doc.document else {
        unreachable!()
    };
    println!("{}: {}", w.name(), w.validate());

    let faces = w.faces();
    for f in faces.ids() {
        let walk: Vec<String> = faces.orbit(f).iter().map(|d| w.dart_name(*d)).collect();
        let kind = if faces.is_outer(f) {
            "outer"
        } else {
            "bounded"
        };
        println!("face {} ({kind}): {}", f.0, walk.join(" -> "));
    }
    println!("first reducible feature: {:?}", w.find_reducible().unwrap());

    // a rotation that names a missing dart is reported with its position
    let broken = THETA.replace("rot b e1h e2h e3h", "rot b e1h e2h e9h");
    match parse(&broken) {
        Ok(_) => unreachable!(),
        Err(e) => println!("broken input: {e}"),
    }
}
