//! Command-line front end. [`run`] takes the argument list and two output
//! streams and returns the process exit code: 0 on success, 1 when the
//! input is rejected or a check fails, 2 on a usage error.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::color::Color;
use crate::coloring::{bracket_enum, degree_table, enumerate_colorings, Coloring};
use crate::format::{
    format_coloring, kempe_to_dot, parse, parse_coloring, web_to_dot, write_webx, Document,
};
use crate::kempe::{connected_components, kempe_graph, KempeMode};
use crate::rewrite::{bracket_reduce_with, generate_web, ReduceOptions};
use crate::web::WebMap;

#[derive(Parser, Debug)]
#[command(
    name = "webcolor",
    version,
    about = "Graded 3-edge-colorings of closed webs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Engine {
    Enum,
    Reduce,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Weak,
    Strong,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a .webx or .graphx file
    Validate { file: PathBuf },
    /// List all proper 3-edge-colorings
    Colorings {
        file: PathBuf,
        /// Print only the number of colorings
        #[arg(long)]
        count: bool,
    },
    /// Configuration degrees and total degree of one coloring
    Degree {
        file: PathBuf,
        /// `e1=r,e2=g,...`, or `@path` to read it from a file
        #[arg(long)]
        coloring: String,
    },
    /// Colored bracket as sparse `exponent:coefficient` pairs
    Bracket {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        engine: Engine,
        /// Print the reduction steps (rewriting engine)
        #[arg(long)]
        trace: bool,
        /// Cache sub-results by canonical web hash
        #[arg(long)]
        memo: bool,
    },
    /// Kempe graph of the colorings
    Kempe {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "weak")]
        mode: Mode,
        /// List the members of every component
        #[arg(long)]
        components: bool,
        /// Write the graph in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Random web built by inverse rewriting
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Graphviz rendering of a web
    ExportDot {
        file: PathBuf,
        out: PathBuf,
        /// Color the edges
        #[arg(long)]
        coloring: Option<String>,
    },
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Document, Failure> {
    let doc = parse(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok(doc.document)
}

fn load_web(path: &Path) -> Result<WebMap, Failure> {
    match load(path)? {
        Document::Web(w) => Ok(w),
        Document::Graph(_) => Err(Failure(format!(
            "{}: expected a web, found a graph",
            path.display()
        ))),
    }
}

fn coloring_arg(map: &WebMap, arg: &str) -> Result<Coloring, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(p) => read(Path::new(p))?,
        None => arg.to_string(),
    };
    let edges: Vec<&str> = map.edges().iter().map(|e| e.name.as_str()).collect();
    let loops: Vec<&str> = map.loops().iter().map(|l| l.name.as_str()).collect();
    let c = parse_coloring(&edges, &loops, text.trim())?;
    if !c.is_proper(map) {
        return Err(Failure("coloring is not proper".into()));
    }
    Ok(c)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Validate { file } => match load(&file)? {
            Document::Web(w) => writeln!(
                out,
                "valid web {}: {} vertices, {} edges, {} loops, {} faces",
                w.name(),
                w.vertex_count(),
                w.edge_count(),
                w.loop_count(),
                w.faces().len()
            )?,
            Document::Graph(g) => writeln!(
                out,
                "valid cubic graph {}: {} vertices, {} edges",
                g.name,
                g.vertices.len(),
                g.edges.len()
            )?,
        },
        Command::Colorings { file, count } => {
            let (cols, edges, loops): (_, Vec<String>, Vec<String>) = match load(&file)? {
                Document::Web(w) => (
                    enumerate_colorings(&w),
                    w.edges().iter().map(|e| e.name.clone()).collect(),
                    w.loops().iter().map(|l| l.name.clone()).collect(),
                ),
                Document::Graph(g) => (
                    enumerate_colorings(&g),
                    g.edges.iter().map(|e| e.0.clone()).collect(),
                    vec![],
                ),
            };
            if count {
                writeln!(out, "{}", cols.len())?;
            } else {
                let e: Vec<&str> = edges.iter().map(String::as_str).collect();
                let l: Vec<&str> = loops.iter().map(String::as_str).collect();
                for c in &cols {
                    writeln!(out, "{}", format_coloring(&e, &l, c))?;
                }
            }
        }
        Command::Degree { file, coloring } => {
            let w = load_web(&file)?;
            let c = coloring_arg(&w, &coloring)?;
            let t = degree_table(&w, &c);
            for u in Color::ALL {
                writeln!(out, "{u}: {}", t[u.index()])?;
            }
            writeln!(out, "total: {}", t.iter().sum::<i64>())?;
        }
        Command::Bracket {
            file,
            engine,
            trace,
            memo,
        } => {
            let w = load_web(&file)?;
            let opts = ReduceOptions {
                memo,
                trace,
                ..Default::default()
            };
            match engine {
                Engine::Enum => writeln!(out, "{}", bracket_enum(&w))?,
                Engine::Reduce | Engine::Both => {
                    let (p, t) = bracket_reduce_with(&w, &opts);
                    if trace {
                        write!(out, "{t}")?;
                    }
                    if let Engine::Both = engine {
                        let e = bracket_enum(&w);
                        if e != p {
                            return Err(Failure(format!("engines disagree: enum {e}, reduce {p}")));
                        }
                    }
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Kempe {
            file,
            mode,
            components,
            dot,
        } => {
            let mode = match mode {
                Mode::Weak => KempeMode::Weak,
                Mode::Strong => KempeMode::Strong,
            };
            let (name, g) = match load(&file)? {
                Document::Web(w) => (w.name().to_string(), kempe_graph(&w, mode)),
                Document::Graph(c) => (c.name.clone(), kempe_graph(&c, mode)),
            };
            let comps = connected_components(&g);
            writeln!(out, "colorings: {}", g.colorings.len())?;
            writeln!(out, "moves: {}", g.edges.len())?;
            writeln!(out, "components: {}", comps.len())?;
            let sizes: Vec<String> = comps.iter().map(|c| c.len().to_string()).collect();
            writeln!(out, "sizes: {}", sizes.join(" "))?;
            if components {
                for (i, c) in comps.iter().enumerate() {
                    let m: Vec<String> = c.iter().map(usize::to_string).collect();
                    writeln!(out, "component {i}: {}", m.join(" "))?;
                }
            }
            if let Some(p) = dot {
                fs::write(&p, kempe_to_dot(&name, g.colorings.len(), &g.edges))
                    .map_err(|e| Failure(format!("{}: {e}", p.display())))?;
            }
        }
        Command::Generate {
            seed,
            steps,
            out: path,
        } => {
            let w = generate_web(seed, steps);
            fs::write(&path, write_webx(&w))
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            writeln!(
                out,
                "wrote {} ({} vertices, {} loops)",
                path.display(),
                w.vertex_count(),
                w.loop_count()
            )?;
        }
        Command::ExportDot {
            file,
            out: path,
            coloring,
        } => {
            let w = load_web(&file)?;
            let c = coloring.map(|s| coloring_arg(&w, &s)).transpose()?;
            fs::write(&path, web_to_dot(&w, c.as_ref()))
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
