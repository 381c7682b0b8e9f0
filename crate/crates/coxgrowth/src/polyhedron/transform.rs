//! The two mutually inverse deformations: contracting a high-order edge to
//! a 4-valent cusp, and opening such a cusp back into an edge.

use super::{edge, CombinatorialPolyhedron, Edge, PolyhedronError, VertexId};

/// A (2,2,2,2) vertex splits into an edge in two combinatorially distinct
/// ways; the variants name which adjacent pair of rotation neighbors stays
/// on the original vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspPairing {
    /// Keep rotation neighbors 0 and 1; the new edge ends up on the faces
    /// between neighbors (1,2) and (3,0).
    KeepFirst,
    /// Keep rotation neighbors 1 and 2; the new edge ends up on the faces
    /// between neighbors (0,1) and (2,3).
    KeepSecond,
}

impl CuspPairing {
    pub const BOTH: [CuspPairing; 2] = [CuspPairing::KeepFirst, CuspPairing::KeepSecond];

    fn offset(self) -> usize {
        match self {
            CuspPairing::KeepFirst => 0,
            CuspPairing::KeepSecond => 1,
        }
    }
}

pub(super) fn pinch(
    poly: &CombinatorialPolyhedron,
    e: Edge,
) -> Result<CombinatorialPolyhedron, PolyhedronError> {
    let e = edge(e.0, e.1);
    let fail = |reason: String| PolyhedronError::PinchPrecondition { edge: e, reason };
    let Some(&m) = poly.labels().get(&e) else {
        return Err(fail("not an edge".into()));
    };
    if m < 7 {
        return Err(fail(format!("label {m} is below 7")));
    }
    let (a, b) = e;
    for endpoint in [a, b] {
        let sig = poly.vertex_signature(endpoint);
        if sig != vec![2, 2, m] {
            return Err(fail(format!(
                "endpoint {endpoint} has type ({}), need (2,2,{m})",
                sig.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )));
        }
    }

    // Merge b into a, dropping the contracted edge from each of its two
    // faces, then close the id gap left by b.
    let squeeze = |v: VertexId| -> VertexId {
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let mut faces = Vec::with_capacity(poly.face_count());
    for cycle in poly.faces() {
        let renamed: Vec<VertexId> = cycle.iter().map(|&v| if v == b { a } else { v }).collect();
        let mut collapsed: Vec<VertexId> = Vec::with_capacity(renamed.len());
        for &v in &renamed {
            if collapsed.last() != Some(&v) {
                collapsed.push(v);
            }
        }
        if collapsed.len() > 1 && collapsed.first() == collapsed.last() {
            collapsed.pop();
        }
        faces.push(collapsed.into_iter().map(squeeze).collect());
    }
    let labels: Vec<(Edge, u32)> = poly
        .labels()
        .iter()
        .filter(|(&key, _)| key != e)
        .map(|(&(u, v), &lab)| {
            let u = if u == b { a } else { u };
            let v = if v == b { a } else { v };
            (edge(squeeze(u), squeeze(v)), lab)
        })
        .collect();
    CombinatorialPolyhedron::new(faces, labels)
}

pub(super) fn open_cusp(
    poly: &CombinatorialPolyhedron,
    v: VertexId,
    pairing: CuspPairing,
    m: u32,
) -> Result<CombinatorialPolyhedron, PolyhedronError> {
    let fail = |reason: String| PolyhedronError::OpenPrecondition { vertex: v, reason };
    if v >= poly.vertex_count() {
        return Err(fail("no such vertex".into()));
    }
    let sig = poly.vertex_signature(v);
    if sig != vec![2, 2, 2, 2] {
        return Err(fail(format!(
            "vertex type is ({}), need (2,2,2,2)",
            sig.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )));
    }
    if m < 7 {
        return Err(fail(format!("new edge label {m} is below 7")));
    }

    let rotation = poly.rotation_at(v);
    let w = |i: usize| rotation[(pairing.offset() + i) % 4];
    // v keeps w(0), w(1); the fresh vertex u takes w(2), w(3). The faces
    // with corners w(1) -> v -> w(2) and w(3) -> v -> w(0) gain the new
    // edge; the face through w(2) -> v -> w(3) moves to u entirely.
    let u = poly.vertex_count();
    let mut faces = Vec::with_capacity(poly.face_count());
    for cycle in poly.faces() {
        let Some(p) = cycle.iter().position(|&x| x == v) else {
            faces.push(cycle.clone());
            continue;
        };
        let n = cycle.len();
        let prev = cycle[(p + n - 1) % n];
        let next = cycle[(p + 1) % n];
        let mut cycle = cycle.clone();
        if prev == w(1) && next == w(2) {
            cycle.insert(p + 1, u);
        } else if prev == w(3) && next == w(0) {
            cycle.insert(p, u);
        } else if prev == w(2) && next == w(3) {
            cycle[p] = u;
        } else {
            debug_assert!(prev == w(0) && next == w(1));
        }
        faces.push(cycle);
    }
    let moving = [edge(v, w(2)), edge(v, w(3))];
    let mut labels: Vec<(Edge, u32)> = poly
        .labels()
        .iter()
        .map(|(&key, &lab)| {
            if moving.contains(&key) {
                let other = if key.0 == v { key.1 } else { key.0 };
                (edge(u, other), lab)
            } else {
                (key, lab)
            }
        })
        .collect();
    labels.push((edge(v, u), m));
    CombinatorialPolyhedron::new(faces, labels)
}
