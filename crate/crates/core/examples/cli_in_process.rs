//! Drive the command-line interface from Rust, capturing its output.
//!
//! ```bash
//! cargo run --example cli_in_process
//! ```

use std::path::Path;

fn main() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let cube = fixtures.join("cube.webx").display().to_string();
    for args in [
        vec!["validate", cube.as_str()],
        vec!["colorings", cube.as_str(), "--count"],
        vec!["bracket", cube.as_str(), "--engine", "both"],
        vec!["kempe", cube.as_str(), "--mode", "strong"],
        vec!["bracket", cube.as_str(), "--engine", "nope"],
    ] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = webcolor::cli::run(
            std::iter::once("webcolor").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        println!("$ webcolor {}  -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        if code != 0 {
            print!(
                "{}",
                String::from_utf8_lossy(&err).lines().next().unwrap_or("")
            );
            println!();
        }
    }
}
