//! Generate random webs by inverse rewriting and write them as WEBX.
//!
//! ```bash
//! cargo run --example generate_corpus -- /tmp/webs
//! ```

use std::path::PathBuf;

use webcolor::format::{parse, write_webx};
use webcolor::rewrite::canonical_hash;
use webcolor::{bracket_reduce, generate_web};

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("webs"));
    std::fs::create_dir_all(&dir).unwrap();
    for seed in 0..8 {
        let w = generate_web(seed, 2 + seed as usize % 4);
        let text = write_webx(&w);
        let again = parse(&text).unwrap();
        assert_eq!(again.web(), Some(&w));
        let path = dir.join(format!("{}.webx", w.name()));
        std::fs::write(&path, &text).unwrap();
        println!(
            "{}  {:>2} vertices {} loops  #{:016x}  {}",
            path.display(),
            w.vertex_count(),
            w.loop_count(),
            canonical_hash(&w),
            bracket_reduce(&w)
        );
    }
}
