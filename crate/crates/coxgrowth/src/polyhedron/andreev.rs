//! Andreev's realizability conditions for acute-angled polyhedra of finite
//! volume, evaluated combinatorially on the labeled face complex. For the
//! tetrahedron and the triangular prism only the vertex conditions apply
//! and the report is marked partial.

use super::{CombinatorialPolyhedron, VertexKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndreevCondition {
    pub name: &'static str,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndreevReport {
    /// True when only the vertex conditions were checked (tetrahedron or
    /// triangular prism).
    pub partial: bool,
    pub conditions: Vec<AndreevCondition>,
    pub all_pass: bool,
}

fn is_tetrahedron(poly: &CombinatorialPolyhedron) -> bool {
    poly.face_count() == 4
}

fn is_triangular_prism(poly: &CombinatorialPolyhedron) -> bool {
    if poly.face_count() != 5 {
        return false;
    }
    let mut sizes: Vec<usize> = poly.faces().iter().map(|f| f.len()).collect();
    sizes.sort_unstable();
    sizes == [3, 3, 4, 4, 4]
}

pub(super) fn andreev_check(poly: &CombinatorialPolyhedron) -> AndreevReport {
    let census = poly.classify_vertices();
    let mut conditions = Vec::new();

    // (a) three facets meeting at a finite vertex: angle sum above pi.
    let mut witnesses = Vec::new();
    for (v, t) in census.types.iter().enumerate() {
        if t.signature.len() == 3 && t.kind == VertexKind::Hyperbolic {
            witnesses.push(format!("vertex {v} of type {t} has angle sum below pi"));
        }
    }
    conditions.push(AndreevCondition {
        name: "3-valent vertices have angle sum at least pi",
        pass: witnesses.is_empty(),
        witnesses,
    });

    // (b) three facets meeting at a cusp sum to exactly pi; the cusp
    // classification is the angle sum, so this can only hold.
    conditions.push(AndreevCondition {
        name: "3-valent cusps have angle sum exactly pi",
        pass: true,
        witnesses: Vec::new(),
    });

    // (c) four facets meet only at right angles.
    let mut witnesses = Vec::new();
    for (v, t) in census.types.iter().enumerate() {
        if t.signature.len() == 4 && t.signature != vec![2, 2, 2, 2] {
            witnesses.push(format!("4-valent vertex {v} has type {t}"));
        }
    }
    conditions.push(AndreevCondition {
        name: "4-valent vertices are all right-angled",
        pass: witnesses.is_empty(),
        witnesses,
    });

    let partial = is_tetrahedron(poly) || is_triangular_prism(poly);
    if !partial {
        conditions.push(prismatic_triples(poly));
        conditions.push(cusp_separation(poly));
        conditions.push(prismatic_quadruples(poly));
    }

    let all_pass = conditions.iter().all(|c| c.pass);
    AndreevReport {
        partial,
        conditions,
        all_pass,
    }
}

/// (d) pairwise adjacent face triples with no common vertex: angle sum
/// below pi.
fn prismatic_triples(poly: &CombinatorialPolyhedron) -> AndreevCondition {
    let f = poly.face_count();
    let mut witnesses = Vec::new();
    for i in 0..f {
        for j in i + 1..f {
            let Some(eij) = poly.shared_edge(i, j) else { continue };
            for k in j + 1..f {
                let (Some(eik), Some(ejk)) = (poly.shared_edge(i, k), poly.shared_edge(j, k))
                else {
                    continue;
                };
                let common_vertex = poly.faces()[i]
                    .iter()
                    .any(|v| poly.faces()[j].contains(v) && poly.faces()[k].contains(v));
                if common_vertex {
                    continue;
                }
                // 1/a + 1/b + 1/c < 1, cleared of denominators.
                let (a, b, c) = (
                    poly.label(eij) as u64,
                    poly.label(eik) as u64,
                    poly.label(ejk) as u64,
                );
                if b * c + a * c + a * b >= a * b * c {
                    witnesses.push(format!(
                        "faces {i}, {j}, {k} are pairwise adjacent away from any vertex \
                         with angle sum at least pi (orders {a}, {b}, {c})"
                    ));
                }
            }
        }
    }
    AndreevCondition {
        name: "pairwise adjacent face triples off a vertex have angle sum below pi",
        pass: witnesses.is_empty(),
        witnesses,
    }
}

/// (e) two faces meeting only at a 4-valent cusp: any third face adjacent
/// to both must make a non-right angle with one of them.
fn cusp_separation(poly: &CombinatorialPolyhedron) -> AndreevCondition {
    let census = poly.classify_vertices();
    let mut witnesses = Vec::new();
    for (v, t) in census.types.iter().enumerate() {
        if t.signature != vec![2, 2, 2, 2] {
            continue;
        }
        let around = faces_around(poly, v);
        for (a, b) in [(around[0], around[2]), (around[1], around[3])] {
            if poly.shared_edge(a, b).is_some() {
                continue;
            }
            for i in 0..poly.face_count() {
                if poly.faces()[i].contains(&v) {
                    continue;
                }
                let (Some(eia), Some(eib)) = (poly.shared_edge(i, a), poly.shared_edge(i, b))
                else {
                    continue;
                };
                if poly.label(eia) == 2 && poly.label(eib) == 2 {
                    witnesses.push(format!(
                        "face {i} joins faces {a} and {b} at right angles around the cusp at vertex {v}"
                    ));
                }
            }
        }
    }
    AndreevCondition {
        name: "faces bridging the opposite pair at a 4-valent cusp bend somewhere",
        pass: witnesses.is_empty(),
        witnesses,
    }
}

/// (f) cyclically adjacent face quadruples meeting no common vertex: not
/// all four circuit angles are right.
fn prismatic_quadruples(poly: &CombinatorialPolyhedron) -> AndreevCondition {
    let f = poly.face_count();
    let mut witnesses = Vec::new();
    let adjacent = |a: usize, b: usize| poly.shared_edge(a, b).is_some();
    for a in 0..f {
        for b in a + 1..f {
            for c in b + 1..f {
                for d in c + 1..f {
                    // Three circular orders of the 4-set, keyed by which
                    // element sits opposite `a`.
                    for (p, q, r, s) in [(a, b, c, d), (a, b, d, c), (a, c, b, d)] {
                        // Circuit p-q-r-s with diagonals p-r, q-s absent.
                        if !(adjacent(p, q)
                            && adjacent(q, r)
                            && adjacent(r, s)
                            && adjacent(s, p))
                            || adjacent(p, r)
                            || adjacent(q, s)
                        {
                            continue;
                        }
                        let shared_vertex = poly.faces()[p].iter().any(|v| {
                            poly.faces()[q].contains(v)
                                && poly.faces()[r].contains(v)
                                && poly.faces()[s].contains(v)
                        });
                        if shared_vertex {
                            continue;
                        }
                        let labels = [
                            poly.label(poly.shared_edge(p, q).unwrap()),
                            poly.label(poly.shared_edge(q, r).unwrap()),
                            poly.label(poly.shared_edge(r, s).unwrap()),
                            poly.label(poly.shared_edge(s, p).unwrap()),
                        ];
                        if labels.iter().all(|&m| m == 2) {
                            witnesses.push(format!(
                                "faces {p}, {q}, {r}, {s} form a right-angled circuit off any vertex"
                            ));
                        }
                    }
                }
            }
        }
    }
    AndreevCondition {
        name: "face circuits of length 4 off a vertex are not all right-angled",
        pass: witnesses.is_empty(),
        witnesses,
    }
}

/// The four faces around a 4-valent vertex, in rotation order.
fn faces_around(poly: &CombinatorialPolyhedron, v: usize) -> Vec<usize> {
    let rotation = poly.rotation_at(v);
    let n = rotation.len();
    (0..n)
        .map(|i| {
            let (win, wout) = (rotation[i], rotation[(i + 1) % n]);
            (0..poly.face_count())
                .find(|&f| {
                    poly.faces()[f].contains(&v) && poly.face_neighbors(f, v) == (win, wout)
                })
                .expect("every corner belongs to a face")
        })
        .collect()
}
