use std::fmt;

use super::{Dart, Role, WebMap};

/// One violated web axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Vertex does not have exactly three incident darts.
    NotCubic {
        vertex: String,
        degree: usize,
    },
    /// Vertex is the source of one edge and the sink of another.
    MixedVertexOrientation {
        vertex: String,
    },
    SelfLoop {
        edge: String,
    },
    /// Per connected component `F - E + V != 2`: the rotations do not describe a plane embedding.
    EulerViolation {
        component: usize,
        faces: usize,
        edges: usize,
        vertices: usize,
    },
    /// Rotation data refers to a missing dart, omits a dart, repeats one or
    /// lists it at the wrong vertex.
    DanglingDart {
        detail: String,
    },
    /// Outer-face marks are not exactly one per component.
    OuterMark {
        detail: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotCubic { vertex, degree } => {
                write!(f, "NotCubic: vertex {vertex} has degree {degree}")
            }
            Violation::MixedVertexOrientation { vertex } => {
                write!(f, "MixedVertexOrientation: vertex {vertex} is neither a sink nor a source")
            }
            Violation::SelfLoop { edge } => write!(f, "SelfLoop: edge {edge}"),
            Violation::EulerViolation { component, faces, edges, vertices } => write!(
                f,
                "EulerViolation: component {component} has F - E + V = {faces} - {edges} + {vertices} != 2"
            ),
            Violation::DanglingDart { detail } => write!(f, "DanglingDart: {detail}"),
            Violation::OuterMark { detail } => write!(f, "OuterMark: {detail}"),
        }
    }
}

/// Result of [`WebMap::validate`]: empty means the map is a closed web.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid closed web");
        }
        let lines: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&lines.join("; "))
    }
}

impl WebMap {
    /// Checks every closed-web axiom and lists all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let nv = self.vertex_count();
        let nd = self.dart_count();

        for e in self.edges() {
            if e.source.0 >= nv || e.sink.0 >= nv {
                violations.push(Violation::DanglingDart {
                    detail: format!("edge {} has an endpoint that is not a vertex", e.name),
                });
            } else if e.source == e.sink {
                violations.push(Violation::SelfLoop {
                    edge: e.name.clone(),
                });
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }

        let mut degree = vec![0usize; nv];
        for e in self.edges() {
            degree[e.source.0] += 1;
            degree[e.sink.0] += 1;
        }
        for (i, v) in self.vertices().iter().enumerate() {
            let rot_len = self.rotations().get(i).map_or(0, Vec::len);
            if degree[i] != 3 || rot_len != 3 {
                violations.push(Violation::NotCubic {
                    vertex: v.name.clone(),
                    degree: degree[i].max(rot_len),
                });
            }
            let is_source = self.edges().iter().any(|e| e.source.0 == i);
            let is_sink = self.edges().iter().any(|e| e.sink.0 == i);
            let role_ok = match v.role {
                Role::Source => !is_sink,
                Role::Sink => !is_source,
            };
            if !role_ok {
                violations.push(Violation::MixedVertexOrientation {
                    vertex: v.name.clone(),
                });
            }
        }

        let mut seen = vec![0usize; nd];
        let mut rotation_ok = self.rotations().len() == nv;
        for (i, rot) in self.rotations().iter().enumerate() {
            for &d in rot {
                if d.0 >= nd {
                    rotation_ok = false;
                    violations.push(Violation::DanglingDart {
                        detail: format!("rotation of vertex {i} lists nonexistent dart {}", d.0),
                    });
                    continue;
                }
                seen[d.0] += 1;
                if self.base(d).0 != i {
                    rotation_ok = false;
                    violations.push(Violation::DanglingDart {
                        detail: format!(
                            "dart {} is listed at a vertex it is not based at",
                            self.dart_name(d)
                        ),
                    });
                }
            }
        }
        for (d, &count) in seen.iter().enumerate() {
            if count != 1 {
                rotation_ok = false;
                violations.push(Violation::DanglingDart {
                    detail: format!(
                        "dart {} appears {count} times in rotations",
                        self.dart_name(Dart(d))
                    ),
                });
            }
        }

        let (comp, ncomp) = self.vertex_components();
        let mut marks = vec![0usize; ncomp];
        for &d in self.outer_marks() {
            if d.0 >= nd {
                violations.push(Violation::OuterMark {
                    detail: format!("outer mark {} is not a dart", d.0),
                });
            } else {
                marks[comp[self.base(d).0]] += 1;
            }
        }
        for (c, &m) in marks.iter().enumerate() {
            if m != 1 {
                violations.push(Violation::OuterMark {
                    detail: format!("component {c} has {m} outer marks"),
                });
            }
        }

        if rotation_ok && violations.is_empty() {
            let faces = self.faces();
            let mut fcount = vec![0usize; ncomp];
            for f in faces.ids() {
                let d = faces.orbit(f)[0];
                fcount[comp[self.base(d).0]] += 1;
            }
            let mut ecount = vec![0usize; ncomp];
            for e in self.edges() {
                ecount[comp[e.source.0]] += 1;
            }
            let mut vcount = vec![0usize; ncomp];
            for &c in comp {
                vcount[c] += 1;
            }
            for c in 0..ncomp {
                if fcount[c] + vcount[c] != 2 + ecount[c] {
                    violations.push(Violation::EulerViolation {
                        component: c,
                        faces: fcount[c],
                        edges: ecount[c],
                        vertices: vcount[c],
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Face counts per connected component (a vertexless loop bounds two faces).
    pub fn component_face_counts(&self) -> Vec<usize> {
        let (comp, ncomp) = self.vertex_components();
        let mut counts = vec![0usize; ncomp];
        let faces = self.faces();
        for f in faces.ids() {
            counts[comp[self.base(faces.orbit(f)[0]).0]] += 1;
        }
        counts.extend(std::iter::repeat_n(2, self.loop_count()));
        counts
    }
}
