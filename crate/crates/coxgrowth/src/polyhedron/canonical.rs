//! Canonical encoding of a labeled oriented face complex.
//!
//! The complex is traversed breadth-first from every possible starting dart
//! (oriented face edge) in both chiralities; vertices are renamed in
//! first-visit order and each traversal emits one linear code. The
//! lexicographically smallest code is canonical, so two polyhedra are
//! combinatorially isomorphic (allowing mirror images) exactly when their
//! canonical codes agree.

use super::{edge, CombinatorialPolyhedron, VertexId};
use std::collections::VecDeque;

const FACE_SEPARATOR: u64 = u64::MAX;

pub(super) fn canonical_code(poly: &CombinatorialPolyhedron) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for mirrored in [false, true] {
        let cycles: Vec<Vec<VertexId>> = poly
            .faces()
            .iter()
            .map(|c| {
                let mut c = c.clone();
                if mirrored {
                    c.reverse();
                }
                c
            })
            .collect();
        for f in 0..cycles.len() {
            for start in 0..cycles[f].len() {
                let code = encode_from(poly, &cycles, f, start);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.expect("polyhedra have at least one face")
}

fn encode_from(
    poly: &CombinatorialPolyhedron,
    cycles: &[Vec<VertexId>],
    start_face: usize,
    start_pos: usize,
) -> Vec<u64> {
    let mut rename: Vec<Option<u64>> = vec![None; poly.vertex_count()];
    let mut next_name = 0u64;
    let mut face_seen = vec![false; cycles.len()];
    let mut queue = VecDeque::from([(start_face, start_pos)]);
    face_seen[start_face] = true;
    let mut code = Vec::new();

    while let Some((f, start)) = queue.pop_front() {
        let cycle = &cycles[f];
        let n = cycle.len();
        code.push(FACE_SEPARATOR);
        for k in 0..n {
            let u = cycle[(start + k) % n];
            let w = cycle[(start + k + 1) % n];
            let name = *rename[u].get_or_insert_with(|| {
                let name = next_name;
                next_name += 1;
                name
            });
            code.push(name);
            code.push(u64::from(poly.label(edge(u, w))));

            let (f1, f2) = poly.faces_of_edge(edge(u, w));
            let g = if f1 == f { f2 } else { f1 };
            if !face_seen[g] {
                face_seen[g] = true;
                let gcycle = &cycles[g];
                let gn = gcycle.len();
                let gstart = (0..gn)
                    .find(|&j| gcycle[j] == w && gcycle[(j + 1) % gn] == u)
                    .expect("coherently oriented neighbor traverses the edge backwards");
                queue.push_back((g, gstart));
            }
        }
    }
    code
}
