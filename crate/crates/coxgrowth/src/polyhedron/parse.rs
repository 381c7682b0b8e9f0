//! Loader and writer for the polyhedron file format: a `faces` section with
//! one cyclic vertex-id list per line, then an `angles` section with
//! `v1 v2 m` per edge. `#` starts a comment.

use super::{CombinatorialPolyhedron, Edge, PolyhedronError, VertexId};
use std::fmt::Write;

/// Renders a polyhedron back into the file format; `parse_polyhedron` of
/// the output reproduces the input exactly (faces in stored order, angles
/// in edge order).
pub fn render_polyhedron(p: &CombinatorialPolyhedron) -> String {
    let mut out = String::from("faces\n");
    for face in p.faces() {
        let ids: Vec<String> = face.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", ids.join(" ")).expect("string write");
    }
    out.push_str("angles\n");
    for (&(a, b), &m) in p.labels() {
        writeln!(out, "{a} {b} {m}").expect("string write");
    }
    out
}

enum Section {
    Preamble,
    Faces,
    Angles,
}

pub fn parse_polyhedron(text: &str) -> Result<CombinatorialPolyhedron, PolyhedronError> {
    let err = |line: usize, message: String| PolyhedronError::Parse { line, message };
    let mut section = Section::Preamble;
    let mut faces: Vec<Vec<VertexId>> = Vec::new();
    let mut labels: Vec<(Edge, u32)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "faces" => {
                section = Section::Faces;
                continue;
            }
            "angles" => {
                if faces.is_empty() {
                    return Err(err(line_no, "angles section before any face".into()));
                }
                section = Section::Angles;
                continue;
            }
            _ => {}
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match section {
            Section::Preamble => {
                return Err(err(line_no, format!("expected `faces`, got `{line}`")));
            }
            Section::Faces => {
                let ids: Result<Vec<VertexId>, _> = tokens
                    .iter()
                    .map(|t| {
                        t.parse::<VertexId>()
                            .map_err(|_| err(line_no, format!("invalid vertex id `{t}`")))
                    })
                    .collect();
                let ids = ids?;
                if ids.len() < 3 {
                    return Err(err(line_no, "a face needs at least 3 vertices".into()));
                }
                faces.push(ids);
            }
            Section::Angles => {
                if tokens.len() != 3 {
                    return Err(err(line_no, format!("expected `v1 v2 m`, got `{line}`")));
                }
                let a: VertexId = tokens[0]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid vertex id `{}`", tokens[0])))?;
                let b: VertexId = tokens[1]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid vertex id `{}`", tokens[1])))?;
                let m: u32 = tokens[2]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid angle order `{}`", tokens[2])))?;
                if a == b {
                    return Err(err(line_no, format!("degenerate edge ({a}, {a})")));
                }
                labels.push((super::edge(a, b), m));
            }
        }
    }

    if faces.is_empty() {
        return Err(PolyhedronError::Parse {
            line: text.lines().count().max(1),
            message: "no faces section".into(),
        });
    }
    CombinatorialPolyhedron::new(faces, labels)
}
