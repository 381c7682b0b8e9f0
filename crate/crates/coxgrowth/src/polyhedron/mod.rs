//! Combinatorial polyhedra with dihedral-angle labels.
//!
//! A polyhedron is a face complex on the 2-sphere whose vertices are all
//! 3-valent or 4-valent, together with a label m >= 2 on every edge standing
//! for the dihedral angle pi/m. The module validates the complex, classifies
//! vertices as spherical / euclidean / hyperbolic, evaluates the census
//! identities that every such polyhedron must satisfy, checks Andreev's
//! realizability conditions, converts the face structure into a Coxeter
//! system, and supports the two mutually inverse deformations: pinching a
//! high-order edge to a 4-valent cusp and opening such a cusp back into an
//! edge.

mod andreev;
mod canonical;
mod parse;
mod transform;

pub use andreev::{AndreevCondition, AndreevReport};
pub use parse::{parse_polyhedron, render_polyhedron};
pub use transform::CuspPairing;

use crate::coxeter::{CoxeterOrder, CoxeterSystem};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type VertexId = usize;
/// Unordered vertex pair, stored (lo, hi).
pub type Edge = (VertexId, VertexId);

pub fn edge(a: VertexId, b: VertexId) -> Edge {
    (a.min(b), a.max(b))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedronError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("face {face} has fewer than 3 vertices")]
    FaceTooSmall { face: usize },
    #[error("face {face} repeats vertex {vertex}")]
    RepeatedVertex { face: usize, vertex: VertexId },
    #[error("vertex ids must cover 0..V without gaps (missing {missing})")]
    MissingVertexId { missing: VertexId },
    #[error("edge ({0}, {1}) lies on {2} faces instead of 2", .edge.0, .edge.1, .count)]
    EdgeFaceCount { edge: Edge, count: usize },
    #[error("faces {f1} and {f2} share more than one edge")]
    DoubledAdjacency { f1: usize, f2: usize },
    #[error("face complex is not orientable")]
    NotOrientable,
    #[error("face complex is not connected")]
    Disconnected,
    #[error("the faces around vertex {vertex} do not close into a single cycle")]
    BrokenVertexLink { vertex: VertexId },
    #[error("V - E + F = {0} - {1} + {2} != 2, not a sphere", .v, .e, .f)]
    EulerDefect { v: usize, e: usize, f: usize },
    #[error("vertex {vertex} has valence {valence}, need 3 or 4")]
    BadValence { vertex: VertexId, valence: usize },
    #[error("edge ({0}, {1}) has no angle label", .edge.0, .edge.1)]
    UnlabeledEdge { edge: Edge },
    #[error("angle given for ({0}, {1}) which is not an edge", .pair.0, .pair.1)]
    LabelOnNonEdge { pair: Edge },
    #[error("conflicting labels for edge ({0}, {1})", .edge.0, .edge.1)]
    ConflictingLabel { edge: Edge },
    #[error("label {label} on edge ({0}, {1}) is below 2", .edge.0, .edge.1)]
    LabelTooSmall { edge: Edge, label: u32 },
    #[error("vertex {vertex} is hyperbolic; census identities only cover spherical and euclidean vertices")]
    HyperbolicVertex { vertex: VertexId },
    #[error("polyhedron has no cusp")]
    NoCusp,
    #[error("cannot pinch edge ({0}, {1}): {reason}", .edge.0, .edge.1)]
    PinchPrecondition { edge: Edge, reason: String },
    #[error("cannot open vertex {vertex}: {reason}")]
    OpenPrecondition { vertex: VertexId, reason: String },
}

/// Validated face complex on the sphere with labeled edges.
///
/// Face cycles are stored coherently oriented: every edge is traversed once
/// in each direction over the two faces containing it.
#[derive(Debug, Clone)]
pub struct CombinatorialPolyhedron {
    faces: Vec<Vec<VertexId>>,
    labels: BTreeMap<Edge, u32>,
    vertex_count: usize,
    edges: Vec<Edge>,
    edge_faces: BTreeMap<Edge, (usize, usize)>,
}

impl CombinatorialPolyhedron {
    pub fn new(
        faces: Vec<Vec<VertexId>>,
        labels: impl IntoIterator<Item = (Edge, u32)>,
    ) -> Result<Self, PolyhedronError> {
        let labels: BTreeMap<Edge, u32> = {
            let mut out = BTreeMap::new();
            for (pair, m) in labels {
                let e = edge(pair.0, pair.1);
                if let Some(&old) = out.get(&e) {
                    if old != m {
                        return Err(PolyhedronError::ConflictingLabel { edge: e });
                    }
                }
                out.insert(e, m);
            }
            out
        };

        for (idx, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(PolyhedronError::FaceTooSmall { face: idx });
            }
            let mut seen = BTreeSet::new();
            for &v in face {
                if !seen.insert(v) {
                    return Err(PolyhedronError::RepeatedVertex { face: idx, vertex: v });
                }
            }
        }

        let present: BTreeSet<VertexId> = faces.iter().flatten().copied().collect();
        let vertex_count = present.iter().copied().max().map_or(0, |m| m + 1);
        for v in 0..vertex_count {
            if !present.contains(&v) {
                return Err(PolyhedronError::MissingVertexId { missing: v });
            }
        }

        let mut edge_face_list: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (idx, face) in faces.iter().enumerate() {
            for k in 0..face.len() {
                let e = edge(face[k], face[(k + 1) % face.len()]);
                edge_face_list.entry(e).or_default().push(idx);
            }
        }
        for (&e, fs) in &edge_face_list {
            if fs.len() != 2 {
                return Err(PolyhedronError::EdgeFaceCount { edge: e, count: fs.len() });
            }
        }
        let mut pair_seen = BTreeSet::new();
        for fs in edge_face_list.values() {
            let key = (fs[0].min(fs[1]), fs[0].max(fs[1]));
            if !pair_seen.insert(key) {
                return Err(PolyhedronError::DoubledAdjacency { f1: key.0, f2: key.1 });
            }
        }

        let faces = orient_coherently(faces, &edge_face_list)?;

        let edges: Vec<Edge> = edge_face_list.keys().copied().collect();
        let edge_faces: BTreeMap<Edge, (usize, usize)> = edge_face_list
            .iter()
            .map(|(&e, fs)| (e, (fs[0], fs[1])))
            .collect();

        let poly = CombinatorialPolyhedron {
            faces,
            labels,
            vertex_count,
            edges,
            edge_faces,
        };

        for v in 0..poly.vertex_count {
            let valence = poly.incident_edges(v).len();
            if valence != 3 && valence != 4 {
                return Err(PolyhedronError::BadValence { vertex: v, valence });
            }
            poly.check_vertex_link(v)?;
        }
        let (vc, ec, fc) = (poly.vertex_count, poly.edges.len(), poly.faces.len());
        if vc + fc != ec + 2 {
            return Err(PolyhedronError::EulerDefect { v: vc, e: ec, f: fc });
        }

        for &e in &poly.edges {
            match poly.labels.get(&e) {
                None => return Err(PolyhedronError::UnlabeledEdge { edge: e }),
                Some(&m) if m < 2 => {
                    return Err(PolyhedronError::LabelTooSmall { edge: e, label: m })
                }
                Some(_) => {}
            }
        }
        if let Some(&pair) = poly.labels.keys().find(|e| !poly.edge_faces.contains_key(e)) {
            return Err(PolyhedronError::LabelOnNonEdge { pair });
        }

        Ok(poly)
    }

    fn check_vertex_link(&self, v: VertexId) -> Result<(), PolyhedronError> {
        // Corner at v in face f joins the two incident edges {v, prev} and
        // {v, next}; the link is a single cycle iff the corners connect all
        // incident edges into one component.
        let incident = self.incident_edges(v);
        let corner_faces: Vec<usize> = (0..self.faces.len())
            .filter(|&f| self.faces[f].contains(&v))
            .collect();
        if corner_faces.len() != incident.len() {
            return Err(PolyhedronError::BrokenVertexLink { vertex: v });
        }
        let index_of = |e: Edge| incident.iter().position(|&x| x == e).unwrap();
        let mut reach: Vec<BTreeSet<usize>> = incident.iter().map(|_| BTreeSet::new()).collect();
        for &f in &corner_faces {
            let (prev, next) = self.face_neighbors(f, v);
            let a = index_of(edge(v, prev));
            let b = index_of(edge(v, next));
            reach[a].insert(b);
            reach[b].insert(a);
        }
        let mut seen = vec![false; incident.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &reach[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(PolyhedronError::BrokenVertexLink { vertex: v })
        }
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> &BTreeMap<Edge, u32> {
        &self.labels
    }

    pub fn label(&self, e: Edge) -> u32 {
        self.labels[&edge(e.0, e.1)]
    }

    /// The two faces containing an edge.
    pub fn faces_of_edge(&self, e: Edge) -> (usize, usize) {
        self.edge_faces[&edge(e.0, e.1)]
    }

    /// Shared edge of two faces, if they are adjacent. The two faces of an
    /// edge are stored with the smaller index first.
    pub fn shared_edge(&self, f: usize, g: usize) -> Option<Edge> {
        let key = (f.min(g), f.max(g));
        self.edge_faces.iter().find(|(_, &fs)| fs == key).map(|(&e, _)| e)
    }

    pub fn incident_edges(&self, v: VertexId) -> Vec<Edge> {
        self.edges.iter().copied().filter(|&(a, b)| a == v || b == v).collect()
    }

    /// Sorted labels of the edges at a vertex.
    pub fn vertex_signature(&self, v: VertexId) -> Vec<u32> {
        let mut sig: Vec<u32> = self
            .incident_edges(v)
            .into_iter()
            .map(|e| self.labels[&e])
            .collect();
        sig.sort_unstable();
        sig
    }

    /// Predecessor and successor of v in the oriented cycle of face f.
    pub fn face_neighbors(&self, f: usize, v: VertexId) -> (VertexId, VertexId) {
        let cycle = &self.faces[f];
        let p = cycle.iter().position(|&x| x == v).expect("vertex on face");
        let n = cycle.len();
        (cycle[(p + n - 1) % n], cycle[(p + 1) % n])
    }

    /// Neighbors of v in rotation order around v, obtained by chaining
    /// corners through the coherently oriented faces.
    pub fn rotation_at(&self, v: VertexId) -> Vec<VertexId> {
        let corner_faces: Vec<usize> = (0..self.faces.len())
            .filter(|&f| self.faces[f].contains(&v))
            .collect();
        // Corner in f is prev -> v -> next; the next corner around v is the
        // one whose incoming neighbor equals this corner's outgoing one.
        let corners: Vec<(VertexId, VertexId)> = corner_faces
            .iter()
            .map(|&f| self.face_neighbors(f, v))
            .collect();
        let mut order = Vec::with_capacity(corners.len());
        let (mut incoming, first_out) = corners[0];
        order.push(incoming);
        let mut out = first_out;
        while out != order[0] {
            order.push(out);
            incoming = out;
            let &(_, next_out) = corners
                .iter()
                .find(|&&(inc, _)| inc == incoming)
                .expect("coherent orientation chains every corner");
            out = next_out;
        }
        order
    }

    /// One generator per face; adjacent faces use the shared edge's label,
    /// any other pair is infinite.
    pub fn coxeter_system(&self) -> CoxeterSystem {
        let f = self.faces.len();
        let mut sys = CoxeterSystem::all_commuting(f);
        for i in 0..f {
            sys.set_label(i, format!("face{i}"));
            for j in i + 1..f {
                sys.set_order(i, j, CoxeterOrder::Infinite);
            }
        }
        for (&e, &(a, b)) in &self.edge_faces {
            sys.set_order(a, b, CoxeterOrder::Finite(self.labels[&e]));
        }
        sys
    }

    pub fn classify_vertices(&self) -> VertexCensus {
        let types: Vec<VertexType> = (0..self.vertex_count)
            .map(|v| VertexType::from_signature(self.vertex_signature(v)))
            .collect();
        let mut signature_counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for t in &types {
            *signature_counts.entry(t.signature.clone()).or_insert(0) += 1;
        }
        let mut edge_label_counts: BTreeMap<u32, u64> = BTreeMap::new();
        for &m in self.labels.values() {
            *edge_label_counts.entry(m).or_insert(0) += 1;
        }
        VertexCensus {
            types,
            signature_counts,
            edge_label_counts,
            face_count: self.faces.len() as u64,
            edge_count: self.edges.len() as u64,
        }
    }

    /// Evaluates the census identities and the cusp-existence inequality
    /// that hold for every hyperbolic Coxeter polyhedron; requires a census
    /// free of hyperbolic vertices.
    pub fn check_counting_identities(&self) -> Result<IdentityReport, PolyhedronError> {
        let census = self.classify_vertices();
        if let Some(v) = census
            .types
            .iter()
            .position(|t| t.kind == VertexKind::Hyperbolic)
        {
            return Err(PolyhedronError::HyperbolicVertex { vertex: v });
        }
        Ok(census.identity_report())
    }

    /// Bound on the number of edges of order >= 7: with k such edges and F
    /// faces, pinching forces k <= F - 3 for any polyhedron with a cusp. In
    /// the equality case the census must consist of one (2,2,2,2) cusp and
    /// otherwise only (2,2,m) vertices, m >= 7.
    pub fn large_edge_bound(&self) -> Result<LargeEdgeBoundReport, PolyhedronError> {
        let census = self.classify_vertices();
        if census.cusp_count() == 0 {
            return Err(PolyhedronError::NoCusp);
        }
        Ok(census.large_edge_bound_report())
    }

    /// Canonical encoding of the labeled oriented face structure; equal
    /// codes mean combinatorially isomorphic polyhedra (mirror images
    /// included).
    pub fn canonical_code(&self) -> Vec<u64> {
        canonical::canonical_code(self)
    }

    pub fn is_isomorphic_to(&self, other: &CombinatorialPolyhedron) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// The same face complex with one edge's label replaced.
    pub fn relabeled(&self, e: Edge, m: u32) -> Result<CombinatorialPolyhedron, PolyhedronError> {
        let e = edge(e.0, e.1);
        if !self.edge_faces.contains_key(&e) {
            return Err(PolyhedronError::LabelOnNonEdge { pair: e });
        }
        let labels: Vec<(Edge, u32)> = self
            .labels
            .iter()
            .map(|(&key, &old)| (key, if key == e { m } else { old }))
            .collect();
        CombinatorialPolyhedron::new(self.faces.clone(), labels)
    }

    /// Contracts a high-order edge to a 4-valent (2,2,2,2) vertex.
    pub fn pinch(&self, e: Edge) -> Result<CombinatorialPolyhedron, PolyhedronError> {
        transform::pinch(self, e)
    }

    /// Splits a (2,2,2,2) vertex into an edge of order m; `pairing` selects
    /// which opposite pair of faces at the vertex gains the new edge.
    pub fn open_cusp(
        &self,
        v: VertexId,
        pairing: CuspPairing,
        m: u32,
    ) -> Result<CombinatorialPolyhedron, PolyhedronError> {
        transform::open_cusp(self, v, pairing, m)
    }

    /// Andreev's realizability conditions; (d)-(f) are skipped (partial
    /// report) for the tetrahedron and the triangular prism.
    pub fn andreev_check(&self) -> AndreevReport {
        andreev::andreev_check(self)
    }
}

fn orient_coherently(
    mut faces: Vec<Vec<VertexId>>,
    edge_face_list: &BTreeMap<Edge, Vec<usize>>,
) -> Result<Vec<Vec<VertexId>>, PolyhedronError> {
    let n = faces.len();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for fs in edge_face_list.values() {
        adjacency[fs[0]].push(fs[1]);
        adjacency[fs[1]].push(fs[0]);
    }
    let directed = |face: &[VertexId], a: VertexId, b: VertexId| -> bool {
        // Does the oriented cycle traverse a -> b?
        let p = face.iter().position(|&x| x == a).unwrap();
        face[(p + 1) % face.len()] == b
    };
    let mut state = vec![0u8; n]; // 0 unvisited, 1 kept, 2 flipped
    state[0] = 1;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for &g in adjacency[f].clone().iter() {
            let &(a, b) = edge_face_list
                .iter()
                .find(|(_, fs)| {
                    (fs[0] == f && fs[1] == g) || (fs[0] == g && fs[1] == f)
                })
                .map(|(e, _)| e)
                .expect("adjacency came from this map");
            let same_direction = directed(&faces[f], a, b) == directed(&faces[g], a, b);
            // Coherent means the two faces traverse the shared edge in
            // opposite directions.
            let needs_flip = same_direction;
            if state[g] == 0 {
                if needs_flip {
                    faces[g].reverse();
                    state[g] = 2;
                } else {
                    state[g] = 1;
                }
                queue.push_back(g);
            } else {
                let coherent_now =
                    directed(&faces[f], a, b) != directed(&faces[g], a, b);
                if !coherent_now {
                    return Err(PolyhedronError::NotOrientable);
                }
            }
        }
    }
    if state.iter().any(|&s| s == 0) {
        return Err(PolyhedronError::Disconnected);
    }
    Ok(faces)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// Kind plus sorted incident labels; 3-valent kinds follow the sign of
/// 1/a1 + 1/a2 + 1/a3 - 1, and the only euclidean 4-valent type is
/// (2,2,2,2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexType {
    pub kind: VertexKind,
    pub signature: Vec<u32>,
}

impl VertexType {
    pub fn from_signature(signature: Vec<u32>) -> Self {
        let kind = match signature.as_slice() {
            [a, b, c] => {
                let (a, b, c) = (*a as u64, *b as u64, *c as u64);
                // 1/a + 1/b + 1/c vs 1, cleared to bc + ac + ab vs abc.
                match (b * c + a * c + a * b).cmp(&(a * b * c)) {
                    std::cmp::Ordering::Greater => VertexKind::Spherical,
                    std::cmp::Ordering::Equal => VertexKind::Euclidean,
                    std::cmp::Ordering::Less => VertexKind::Hyperbolic,
                }
            }
            [2, 2, 2, 2] => VertexKind::Euclidean,
            [_, _, _, _] => VertexKind::Hyperbolic,
            _ => unreachable!("valence is 3 or 4"),
        };
        VertexType { kind, signature }
    }

    pub fn is_cusp(&self) -> bool {
        self.kind == VertexKind::Euclidean
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig: Vec<String> = self.signature.iter().map(|m| m.to_string()).collect();
        let kind = match self.kind {
            VertexKind::Spherical => "spherical",
            VertexKind::Euclidean => "euclidean",
            VertexKind::Hyperbolic => "hyperbolic",
        };
        write!(f, "{kind} ({})", sig.join(","))
    }
}

/// Aggregated vertex and edge counts of a polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCensus {
    pub types: Vec<VertexType>,
    /// Count per sorted signature, valences 3 and 4 mixed.
    pub signature_counts: BTreeMap<Vec<u32>, u64>,
    /// e_m: number of edges labeled m.
    pub edge_label_counts: BTreeMap<u32, u64>,
    pub face_count: u64,
    pub edge_count: u64,
}

impl VertexCensus {
    pub fn vertex_count(&self) -> u64 {
        self.types.len() as u64
    }

    pub fn v3(&self, a: u32, b: u32, c: u32) -> u64 {
        let mut sig = vec![a, b, c];
        sig.sort_unstable();
        self.signature_counts.get(&sig).copied().unwrap_or(0)
    }

    pub fn v2222(&self) -> u64 {
        self.signature_counts.get(&vec![2, 2, 2, 2]).copied().unwrap_or(0)
    }

    pub fn e(&self, m: u32) -> u64 {
        self.edge_label_counts.get(&m).copied().unwrap_or(0)
    }

    /// k: number of edges of order >= 7.
    pub fn large_edge_count(&self) -> u64 {
        self.edge_label_counts
            .iter()
            .filter(|(&m, _)| m >= 7)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Euclidean vertices of either valence.
    pub fn cusp_count(&self) -> u64 {
        self.types.iter().filter(|t| t.is_cusp()).count() as u64
    }

    pub fn hyperbolic_count(&self) -> u64 {
        self.types
            .iter()
            .filter(|t| t.kind == VertexKind::Hyperbolic)
            .count() as u64
    }

    pub fn three_valent_count(&self) -> u64 {
        self.types.iter().filter(|t| t.signature.len() == 3).count() as u64
    }

    /// F - 2 = v2222 + (number of 3-valent vertices) / 2, a consequence of
    /// the Euler and valence counts.
    pub fn face_defect_identity_holds(&self) -> bool {
        2 * (self.face_count - 2) == 2 * self.v2222() + self.three_valent_count()
    }

    /// The k <= F - 3 bound with equality-case diagnostics; see
    /// `CombinatorialPolyhedron::large_edge_bound` for the precondition.
    pub fn large_edge_bound_report(&self) -> LargeEdgeBoundReport {
        let k = self.large_edge_count();
        let f = self.face_count;
        let bound_holds = k + 3 <= f;
        let equality_case = if bound_holds && k + 3 == f {
            let others_are_22m = self.types.iter().all(|t| {
                t.signature.len() == 4
                    || matches!(t.signature.as_slice(), [2, 2, m] if *m >= 7)
            });
            Some(EqualityCaseReport {
                unique_2222_cusp: self.v2222() == 1,
                all_other_vertices_22m: others_are_22m,
            })
        } else {
            None
        };
        LargeEdgeBoundReport {
            large_edge_count: k,
            face_count: f,
            bound_holds,
            equality_case,
        }
    }

    /// All v_{2,2,n}, keyed by n.
    fn v22n_counts(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (sig, &count) in &self.signature_counts {
            if let [2, 2, n] = sig.as_slice() {
                *out.entry(*n).or_insert(0) += count;
            }
        }
        out
    }

    /// Evaluates the standard identities over this census. Intended for
    /// censuses without hyperbolic vertices; hyperbolic counts make the
    /// vertex total fail, which the report will show.
    pub fn identity_report(&self) -> IdentityReport {
        let v22n = self.v22n_counts();
        let sum_v22n: u64 = v22n.values().sum();
        let sum_v22n_from3: u64 = v22n.iter().filter(|(&n, _)| n >= 3).map(|(_, &c)| c).sum();
        let eq = |name: String, lhs: i128, rhs: i128| IdentityLine {
            name,
            lhs,
            rhs,
            relation: Relation::Eq,
            pass: lhs == rhs,
        };

        let v = self.vertex_count() as i128;
        let e = self.edge_count as i128;
        let f = self.face_count as i128;
        let mut lines = vec![
            eq("euler: V - E + F = 2".into(), v - e + f, 2),
            eq(
                "vertex census total".into(),
                v,
                (self.v2222()
                    + sum_v22n
                    + self.v3(2, 3, 3)
                    + self.v3(2, 3, 4)
                    + self.v3(2, 3, 5)
                    + self.v3(2, 3, 6)
                    + self.v3(2, 4, 4)
                    + self.v3(3, 3, 3)) as i128,
            ),
            eq(
                "edge census total".into(),
                e,
                self.edge_label_counts.values().sum::<u64>() as i128,
            ),
            eq(
                "order-2 edge incidences".into(),
                2 * self.e(2) as i128,
                (4 * self.v2222()
                    + 3 * self.v3(2, 2, 2)
                    + 2 * sum_v22n_from3
                    + self.v3(2, 3, 3)
                    + self.v3(2, 3, 4)
                    + self.v3(2, 3, 5)
                    + self.v3(2, 3, 6)
                    + self.v3(2, 4, 4)) as i128,
            ),
            eq(
                "order-3 edge incidences".into(),
                2 * self.e(3) as i128,
                (3 * self.v3(3, 3, 3)
                    + 2 * self.v3(2, 3, 3)
                    + self.v3(2, 2, 3)
                    + self.v3(2, 3, 4)
                    + self.v3(2, 3, 5)
                    + self.v3(2, 3, 6)) as i128,
            ),
            eq(
                "order-4 edge incidences".into(),
                2 * self.e(4) as i128,
                (2 * self.v3(2, 4, 4) + self.v3(2, 2, 4) + self.v3(2, 3, 4)) as i128,
            ),
            eq(
                "order-5 edge incidences".into(),
                2 * self.e(5) as i128,
                (self.v3(2, 2, 5) + self.v3(2, 3, 5)) as i128,
            ),
            eq(
                "order-6 edge incidences".into(),
                2 * self.e(6) as i128,
                (self.v3(2, 2, 6) + self.v3(2, 3, 6)) as i128,
            ),
        ];
        let larges: BTreeSet<u32> = self
            .edge_label_counts
            .keys()
            .copied()
            .chain(v22n.keys().copied())
            .filter(|&n| n >= 7)
            .collect();
        for n in larges {
            lines.push(eq(
                format!("order-{n} edge incidences"),
                2 * self.e(n) as i128,
                v22n.get(&n).copied().unwrap_or(0) as i128,
            ));
        }
        let cusp_lhs =
            (self.v2222() + self.v3(2, 3, 6) + self.v3(2, 4, 4) + self.v3(3, 3, 3)) as i128;
        lines.push(IdentityLine {
            name: "cusp existence (non-compactness)".into(),
            lhs: cusp_lhs,
            rhs: 1,
            relation: Relation::Ge,
            pass: cusp_lhs >= 1,
        });

        let all_pass = lines.iter().all(|l| l.pass);
        IdentityReport { lines, all_pass }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityLine {
    pub name: String,
    pub lhs: i128,
    pub rhs: i128,
    pub relation: Relation,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lines: Vec<IdentityLine>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCaseReport {
    pub unique_2222_cusp: bool,
    pub all_other_vertices_22m: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeEdgeBoundReport {
    pub large_edge_count: u64,
    pub face_count: u64,
    pub bound_holds: bool,
    pub equality_case: Option<EqualityCaseReport>,
}
