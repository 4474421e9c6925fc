//! Render a colored web and a Kempe graph as Graphviz DOT.
//!
//! ```bash
//! cargo run --example export_dot | dot -Tsvg > theta.svg
//! ```

use webcolor::enumerate_colorings;
use webcolor::format::{kempe_to_dot, web_to_dot};
use webcolor::kempe::{kempe_graph, KempeMode};
use webcolor::web::theta;

fn main() {
    let t = theta();
    let c = &enumerate_colorings(&t)[0];
    print!("{}", web_to_dot(&t, Some(c)));
    let g = kempe_graph(&t, KempeMode::Weak);
    eprint!("{}", kempe_to_dot(t.name(), g.colorings.len(), &g.edges));
}
