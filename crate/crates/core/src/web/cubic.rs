use std::fmt;

use super::WebMap;

/// Read access shared by webs and plain cubic graphs: enough structure to
/// enumerate edge-colorings and follow bicolored cycles.
pub trait CubicStructure {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    /// Vertexless loops; always zero for plain graphs.
    fn loop_count(&self) -> usize;
    fn endpoints(&self, edge: usize) -> (usize, usize);
    /// Incident edge indices at `vertex`.
    fn incident(&self, vertex: usize) -> Vec<usize>;
}

impl CubicStructure for WebMap {
    fn vertex_count(&self) -> usize {
        WebMap::vertex_count(self)
    }

    fn edge_count(&self) -> usize {
        WebMap::edge_count(self)
    }

    fn loop_count(&self) -> usize {
        WebMap::loop_count(self)
    }

    fn endpoints(&self, edge: usize) -> (usize, usize) {
        let e = &self.edges()[edge];
        (e.source.0, e.sink.0)
    }

    fn incident(&self, vertex: usize) -> Vec<usize> {
        self.rotations()[vertex]
            .iter()
            .map(|d| d.edge().0)
            .collect()
    }
}

/// An unembedded, unoriented cubic multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicGraph {
    pub name: String,
    pub vertices: Vec<String>,
    /// `(name, u, v)`
    pub edges: Vec<(String, usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubicGraphError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: String, degree: usize },
    #[error("edge {0} is a self-loop")]
    SelfLoop(String),
    #[error("edge {0} has an endpoint out of range")]
    BadEndpoint(String),
}

impl CubicGraph {
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        edges: Vec<(String, usize, usize)>,
    ) -> Result<CubicGraph, CubicGraphError> {
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (i, (n, u, v)) in edges.iter().enumerate() {
            if *u >= vertices.len() || *v >= vertices.len() {
                return Err(CubicGraphError::BadEndpoint(n.clone()));
            }
            if u == v {
                return Err(CubicGraphError::SelfLoop(n.clone()));
            }
            adjacency[*u].push(i);
            adjacency[*v].push(i);
        }
        for (i, a) in adjacency.iter().enumerate() {
            if a.len() != 3 {
                return Err(CubicGraphError::NotCubic {
                    vertex: vertices[i].clone(),
                    degree: a.len(),
                });
            }
        }
        Ok(CubicGraph {
            name: name.into(),
            vertices,
            edges,
            adjacency,
        })
    }

    /// Builds a graph from index pairs, naming vertices `0..n` and edges `e0..`.
    pub fn from_pairs(
        name: &str,
        n: usize,
        pairs: &[(usize, usize)],
    ) -> Result<CubicGraph, CubicGraphError> {
        CubicGraph::new(
            name,
            (0..n).map(|i| i.to_string()).collect(),
            pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (format!("e{i}"), u, v))
                .collect(),
        )
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u].iter().copied().find(|&e| {
            let (_, a, b) = &self.edges[e];
            (*a == u && *b == v) || (*a == v && *b == u)
        })
    }

    pub fn dodecahedron() -> CubicGraph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, 5 + 2 * i));
        }
        for k in 0..10 {
            pairs.push((5 + k, 5 + (k + 1) % 10));
        }
        for i in 0..5 {
            pairs.push((5 + 2 * i + 1, 15 + i));
            pairs.push((15 + i, 15 + (i + 1) % 5));
        }
        Self::from_pairs("dodecahedron", 20, &pairs).expect("dodecahedron is cubic")
    }

    /// The rotation of the dodecahedron by a fifth of a turn, as a vertex permutation.
    pub fn dodecahedron_rotation(v: usize) -> usize {
        match v {
            0..=4 => (v + 1) % 5,
            5..=14 => 5 + (v - 5 + 2) % 10,
            _ => 15 + (v - 15 + 1) % 5,
        }
    }

    pub fn k33() -> CubicGraph {
        let pairs: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        Self::from_pairs("k33", 6, &pairs).expect("K3,3 is cubic")
    }
}

impl CubicStructure for CubicGraph {
    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn loop_count(&self) -> usize {
        0
    }

    fn endpoints(&self, edge: usize) -> (usize, usize) {
        let (_, u, v) = &self.edges[edge];
        (*u, *v)
    }

    fn incident(&self, vertex: usize) -> Vec<usize> {
        self.adjacency[vertex].clone()
    }
}

impl fmt::Display for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} vertices, {} edges)",
            self.name,
            self.vertices.len(),
            self.edges.len()
        )
    }
}
