//! Text formats: WEBX webs, GRAPHX cubic graphs, coordinate sidecars,
//! colorings and DOT export.

mod dot;
mod text;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::web::{
    CubicGraph, CubicGraphError, Dart, Edge, EdgeId, Loop, Role, ValidationReport, Vertex,
    VertexId, WebMap, Winding,
};

pub use dot::{kempe_to_dot, web_to_dot};
pub use text::{format_coloring, parse_coloring, parse_coords, ColoringError, Coords};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    SyntaxError(String),
    #[error("unknown dart `{0}`")]
    UnknownDart(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateName(String),
    #[error("vertex `{0}` has more than one rot line")]
    DuplicateRotation(String),
    #[error("vertex `{0}` has no rot line")]
    MissingRotation(String),
    #[error("{0}")]
    MissingOuter(String),
    #[error("not a closed web: {0}")]
    ValidationFailure(ValidationReport),
    #[error("not a cubic graph: {0}")]
    GraphFailure(CubicGraphError),
}

/// A diagnostic with a 1-based source position (line 0 means "whole file").
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(tok: &Token<'_>, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: tok.line,
            column: tok.column,
            kind,
        }
    }

    fn whole(kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: 0,
            column: 0,
            kind,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Web(WebMap),
    Graph(CubicGraph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDocument {
    pub name: String,
    pub document: Document,
    /// Source line of every statement, keyed by `"<keyword> <id>"`.
    pub lines: HashMap<String, usize>,
}

impl ParsedDocument {
    pub fn web(&self) -> Option<&WebMap> {
        match &self.document {
            Document::Web(w) => Some(w),
            Document::Graph(_) => None,
        }
    }

    pub fn graph(&self) -> Option<&CubicGraph> {
        match &self.document {
            Document::Graph(g) => Some(g),
            Document::Web(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(input: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (j, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    toks.push(Token {
                        text: &line[s..j],
                        line: i + 1,
                        column: line[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

fn expect_args(stmt: &[Token<'_>], n: usize) -> Result<(), ParseError> {
    if stmt.len() != n + 1 {
        return Err(ParseError::at(
            &stmt[0],
            ParseErrorKind::SyntaxError(format!("`{}` takes {} argument(s)", stmt[0].text, n)),
        ));
    }
    Ok(())
}

/// Parses a WEBX or GRAPHX document. Never panics; web documents are
/// validated before being returned.
pub fn parse(input: &str) -> Result<ParsedDocument, ParseError> {
    let stmts = tokenize(input);
    let Some(header) = stmts.first() else {
        return Err(ParseError::whole(ParseErrorKind::SyntaxError(
            "empty document".into(),
        )));
    };
    match header[0].text {
        "web" => {
            expect_args(header, 1)?;
            parse_web(header[1].text, &stmts[1..])
        }
        "graph" => {
            expect_args(header, 1)?;
            parse_graph(header[1].text, &stmts[1..])
        }
        _ => Err(ParseError::at(
            &header[0],
            ParseErrorKind::SyntaxError(
                "document must start with `web <name>` or `graph <name>`".into(),
            ),
        )),
    }
}

fn parse_web(name: &str, stmts: &[Vec<Token<'_>>]) -> Result<ParsedDocument, ParseError> {
    let mut lines = HashMap::new();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut vindex: HashMap<&str, usize> = HashMap::new();
    let mut raw_edges: Vec<(Token<'_>, Token<'_>, Token<'_>)> = Vec::new();
    let mut eindex: HashMap<&str, usize> = HashMap::new();
    let mut loops: Vec<Loop> = Vec::new();
    let mut lindex: HashMap<&str, usize> = HashMap::new();
    let mut raw_rots: Vec<Vec<Token<'_>>> = Vec::new();
    let mut raw_outer: Vec<Token<'_>> = Vec::new();

    for stmt in stmts {
        let kw = stmt[0];
        match kw.text {
            "vertex" => {
                expect_args(stmt, 2)?;
                let role = match stmt[2].text {
                    "sink" => Role::Sink,
                    "source" => Role::Source,
                    other => {
                        return Err(ParseError::at(
                            &stmt[2],
                            ParseErrorKind::SyntaxError(format!(
                                "role must be sink or source, got `{other}`"
                            )),
                        ))
                    }
                };
                if vindex.insert(stmt[1].text, vertices.len()).is_some() {
                    return Err(ParseError::at(
                        &stmt[1],
                        ParseErrorKind::DuplicateName(stmt[1].text.into()),
                    ));
                }
                lines.insert(format!("vertex {}", stmt[1].text), kw.line);
                vertices.push(Vertex {
                    name: stmt[1].text.into(),
                    role,
                });
            }
            "edge" => {
                expect_args(stmt, 3)?;
                if eindex.insert(stmt[1].text, raw_edges.len()).is_some() {
                    return Err(ParseError::at(
                        &stmt[1],
                        ParseErrorKind::DuplicateName(stmt[1].text.into()),
                    ));
                }
                lines.insert(format!("edge {}", stmt[1].text), kw.line);
                raw_edges.push((stmt[1], stmt[2], stmt[3]));
            }
            "loop" => {
                expect_args(stmt, 2)?;
                let winding = match stmt[2].text {
                    "ccw" => Winding::Ccw,
                    "cw" => Winding::Cw,
                    other => {
                        return Err(ParseError::at(
                            &stmt[2],
                            ParseErrorKind::SyntaxError(format!(
                                "winding must be ccw or cw, got `{other}`"
                            )),
                        ))
                    }
                };
                if lindex.insert(stmt[1].text, loops.len()).is_some() {
                    return Err(ParseError::at(
                        &stmt[1],
                        ParseErrorKind::DuplicateName(stmt[1].text.into()),
                    ));
                }
                lines.insert(format!("loop {}", stmt[1].text), kw.line);
                loops.push(Loop {
                    name: stmt[1].text.into(),
                    winding,
                });
            }
            "rot" => {
                if stmt.len() < 2 {
                    return Err(ParseError::at(
                        &kw,
                        ParseErrorKind::SyntaxError("`rot` needs a vertex".into()),
                    ));
                }
                raw_rots.push(stmt.clone());
            }
            "outer" => {
                expect_args(stmt, 1)?;
                raw_outer.push(stmt[1]);
            }
            other => {
                return Err(ParseError::at(
                    &kw,
                    ParseErrorKind::SyntaxError(format!("unknown statement `{other}`")),
                ))
            }
        }
    }

    let lookup_vertex = |t: &Token<'_>| {
        vindex
            .get(t.text)
            .copied()
            .ok_or_else(|| ParseError::at(t, ParseErrorKind::UnknownVertex(t.text.into())))
    };
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (n, s, t) in &raw_edges {
        edges.push(Edge {
            name: n.text.into(),
            source: VertexId(lookup_vertex(s)?),
            sink: VertexId(lookup_vertex(t)?),
        });
    }
    let lookup_dart = |t: &Token<'_>| -> Result<Dart, ParseError> {
        let unknown = || ParseError::at(t, ParseErrorKind::UnknownDart(t.text.into()));
        let (stem, end) = t.text.split_at(t.text.len().saturating_sub(1));
        let e = *eindex.get(stem).ok_or_else(unknown)?;
        match end {
            "t" => Ok(Dart::tail(EdgeId(e))),
            "h" => Ok(Dart::head(EdgeId(e))),
            _ => Err(unknown()),
        }
    };

    let mut rotations: Vec<Option<Vec<Dart>>> = vec![None; vertices.len()];
    for stmt in &raw_rots {
        let v = lookup_vertex(&stmt[1])?;
        let darts = stmt[2..]
            .iter()
            .map(lookup_dart)
            .collect::<Result<Vec<_>, _>>()?;
        if rotations[v].is_some() {
            return Err(ParseError::at(
                &stmt[1],
                ParseErrorKind::DuplicateRotation(stmt[1].text.into()),
            ));
        }
        lines.insert(format!("rot {}", stmt[1].text), stmt[0].line);
        rotations[v] = Some(darts);
    }
    let mut rots = Vec::with_capacity(vertices.len());
    for (i, r) in rotations.into_iter().enumerate() {
        match r {
            Some(r) => rots.push(r),
            None => {
                return Err(ParseError::whole(ParseErrorKind::MissingRotation(
                    vertices[i].name.clone(),
                )))
            }
        }
    }
    let outer = raw_outer
        .iter()
        .map(lookup_dart)
        .collect::<Result<Vec<_>, _>>()?;

    let map = WebMap::from_parts(name, vertices, edges, loops, rots, outer);
    // outer marks are checked here so the diagnostic names the right error
    let (comp, ncomp) = map.vertex_components();
    let mut marks = vec![Vec::new(); ncomp];
    for (tok, &d) in raw_outer.iter().zip(map.outer_marks()) {
        marks[comp[map.base(d).0]].push(tok);
    }
    for (c, m) in marks.iter().enumerate() {
        match m.len() {
            1 => {}
            0 => {
                return Err(ParseError::whole(ParseErrorKind::MissingOuter(format!(
                    "component {c} has no outer mark"
                ))))
            }
            _ => {
                return Err(ParseError::at(
                    m[1],
                    ParseErrorKind::MissingOuter(format!(
                        "component {c} has more than one outer mark"
                    )),
                ))
            }
        }
    }
    let report = map.validate();
    if !report.is_valid() {
        return Err(ParseError::whole(ParseErrorKind::ValidationFailure(report)));
    }
    Ok(ParsedDocument {
        name: name.into(),
        document: Document::Web(map),
        lines,
    })
}

fn parse_graph(name: &str, stmts: &[Vec<Token<'_>>]) -> Result<ParsedDocument, ParseError> {
    let mut lines = HashMap::new();
    let mut vertices: Vec<String> = Vec::new();
    let mut vindex: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut enames = std::collections::HashSet::new();
    let mut vertex_id = |name: &str, vertices: &mut Vec<String>| {
        *vindex.entry(name.to_string()).or_insert_with(|| {
            vertices.push(name.to_string());
            vertices.len() - 1
        })
    };
    for stmt in stmts {
        match stmt[0].text {
            "edge" => {
                expect_args(stmt, 3)?;
                if !enames.insert(stmt[1].text) {
                    return Err(ParseError::at(
                        &stmt[1],
                        ParseErrorKind::DuplicateName(stmt[1].text.into()),
                    ));
                }
                let u = vertex_id(stmt[2].text, &mut vertices);
                let v = vertex_id(stmt[3].text, &mut vertices);
                lines.insert(format!("edge {}", stmt[1].text), stmt[0].line);
                edges.push((stmt[1].text.to_string(), u, v));
            }
            "vertex" => {
                expect_args(stmt, 1)?;
                vertex_id(stmt[1].text, &mut vertices);
            }
            other => {
                return Err(ParseError::at(
                    &stmt[0],
                    ParseErrorKind::SyntaxError(format!(
                        "unknown statement `{other}` in graph mode"
                    )),
                ))
            }
        }
    }
    let g = CubicGraph::new(name, vertices, edges)
        .map_err(|e| ParseError::whole(ParseErrorKind::GraphFailure(e)))?;
    Ok(ParsedDocument {
        name: name.into(),
        document: Document::Graph(g),
        lines,
    })
}

/// WEBX text for a web.
pub fn write_webx(map: &WebMap) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "web {}", map.name());
    for v in map.vertices() {
        let role = match v.role {
            Role::Sink => "sink",
            Role::Source => "source",
        };
        let _ = writeln!(s, "vertex {} {}", v.name, role);
    }
    for e in map.edges() {
        let _ = writeln!(
            s,
            "edge {} {} {}",
            e.name,
            map.vertex(e.source).name,
            map.vertex(e.sink).name
        );
    }
    for l in map.loops() {
        let w = match l.winding {
            Winding::Ccw => "ccw",
            Winding::Cw => "cw",
        };
        let _ = writeln!(s, "loop {} {}", l.name, w);
    }
    for (v, rot) in map.rotations().iter().enumerate() {
        let darts: Vec<String> = rot.iter().map(|&d| map.dart_name(d)).collect();
        let _ = writeln!(s, "rot {} {}", map.vertices()[v].name, darts.join(" "));
    }
    for &d in map.outer_marks() {
        let _ = writeln!(s, "outer {}", map.dart_name(d));
    }
    s
}

/// GRAPHX text for a cubic graph.
pub fn write_graphx(g: &CubicGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {}", g.name);
    for (n, u, v) in &g.edges {
        let _ = writeln!(s, "edge {} {} {}", n, g.vertices[*u], g.vertices[*v]);
    }
    s
}

pub fn write_document(doc: &ParsedDocument) -> String {
    match &doc.document {
        Document::Web(w) => write_webx(w),
        Document::Graph(g) => write_graphx(g),
    }
}
