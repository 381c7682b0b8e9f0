//! Built-in corpus of labeled polyhedra shared by the verification suite,
//! the command-line tool and the benchmarks.
//!
//! Every entry is a non-compact hyperbolic Coxeter polyhedron (each has at
//! least one euclidean vertex), and the corpus deliberately spans the cases
//! the verification suite exercises: all angles at most pi/6, a single
//! large-order edge, several large-order edges, and the bound-saturating
//! pyramid family.

use crate::polyhedron::{parse_polyhedron, CombinatorialPolyhedron};

/// A named corpus entry with its source text in the polyhedron file format.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: &'static str,
}

impl CatalogEntry {
    pub fn load(&self) -> CombinatorialPolyhedron {
        parse_polyhedron(self.source).expect("catalog entry is well-formed")
    }
}

macro_rules! entry {
    ($name:literal) => {
        CatalogEntry {
            name: $name,
            source: include_str!(concat!("../fixtures/", $name, ".poly")),
        }
    };
}

pub const CATALOG: &[CatalogEntry] = &[
    entry!("octahedron-ideal"),
    entry!("tetrahedron-333"),
    entry!("cube-244"),
    entry!("cube-244-m7"),
    entry!("pyramid-2222-m7"),
    entry!("pyramid-2222-m8"),
    entry!("prism-244-m6"),
    entry!("prism-244-m7"),
    entry!("prism-236-m6"),
    entry!("prism-236-m7"),
    entry!("bipyramid-opened-77"),
    entry!("pentaprism-244-m78"),
    entry!("heptaprism-244-m789"),
];

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Entries whose edge labels all lie in 2..=6.
pub fn small_angle_entries() -> impl Iterator<Item = &'static CatalogEntry> {
    CATALOG
        .iter()
        .filter(|e| e.load().labels().values().all(|&m| m <= 6))
}

/// Entries with exactly one edge of order 7 or more, paired with that edge.
pub fn single_large_edge_entries() -> impl Iterator<Item = (&'static CatalogEntry, crate::polyhedron::Edge, u32)> {
    CATALOG.iter().filter_map(|e| {
        let p = e.load();
        let large: Vec<_> = p
            .labels()
            .iter()
            .filter(|(_, &m)| m >= 7)
            .map(|(&edge, &m)| (edge, m))
            .collect();
        match large.as_slice() {
            &[(edge, m)] => Some((e, edge, m)),
            _ => None,
        }
    })
}
