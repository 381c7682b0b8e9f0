//! Coxeter systems: finite-type recognition and exact growth functions.
//!
//! A system is the symmetric table of pairwise orders m_ij. The Coxeter graph
//! has an edge for every pair with m_ij >= 3 (bold when infinite); order-2
//! pairs commute and are non-edges. Finite standard parabolic subsets are
//! recognized against the classification of irreducible finite Coxeter
//! groups, their growth polynomials come from Solomon's product formula over
//! exponents, and the growth function of the whole (generally infinite)
//! system comes from Steinberg's alternating sum over finite subsets.

use crate::polyalg::{bracket_product, IntPolynomial, RationalFunction};
use std::fmt;

/// Subsets of generators as bitmasks; bit i is generator i.
pub type SubsetMask = u64;

/// Largest supported rank (masks are 64-bit).
pub const MAX_RANK: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Order of the product of two distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterOrder {
    Finite(u32),
    Infinite,
}

impl CoxeterOrder {
    /// Edges of the Coxeter graph are the pairs that do not commute.
    pub fn is_edge(self) -> bool {
        self != CoxeterOrder::Finite(2)
    }

    pub fn as_finite(self) -> Option<u32> {
        match self {
            CoxeterOrder::Finite(m) => Some(m),
            CoxeterOrder::Infinite => None,
        }
    }
}

impl fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterOrder::Finite(m) => write!(f, "{m}"),
            CoxeterOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Irreducible finite Coxeter group, with its classification parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteTypeLabel {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral of order 2m, m >= 4 (A2 and the rank-1/2 overlaps are
    /// reported under A/B instead).
    I2(u32),
}

impl FiniteTypeLabel {
    pub fn rank(&self) -> u32 {
        match *self {
            FiniteTypeLabel::A(n) => n,
            FiniteTypeLabel::B(n) => n,
            FiniteTypeLabel::D(n) => n,
            FiniteTypeLabel::E6 => 6,
            FiniteTypeLabel::E7 => 7,
            FiniteTypeLabel::E8 => 8,
            FiniteTypeLabel::F4 => 4,
            FiniteTypeLabel::H3 => 3,
            FiniteTypeLabel::H4 => 4,
            FiniteTypeLabel::I2(_) => 2,
        }
    }

    /// Exponents m_1 <= ... <= m_k of the reflection group.
    pub fn exponents(&self) -> Vec<u32> {
        match *self {
            FiniteTypeLabel::A(n) => (1..=n).collect(),
            FiniteTypeLabel::B(n) => (1..=n).map(|i| 2 * i - 1).collect(),
            FiniteTypeLabel::D(n) => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            FiniteTypeLabel::E6 => vec![1, 4, 5, 7, 8, 11],
            FiniteTypeLabel::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            FiniteTypeLabel::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            FiniteTypeLabel::F4 => vec![1, 5, 7, 11],
            FiniteTypeLabel::H3 => vec![1, 5, 9],
            FiniteTypeLabel::H4 => vec![1, 11, 19, 29],
            FiniteTypeLabel::I2(m) => vec![1, m - 1],
        }
    }

    /// Growth polynomial [m_1 + 1, ..., m_k + 1] (Solomon's formula).
    pub fn solomon_series(&self) -> IntPolynomial {
        let degrees: Vec<u32> = self.exponents().iter().map(|e| e + 1).collect();
        bracket_product(&degrees).expect("exponents are >= 1")
    }
}

impl fmt::Display for FiniteTypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiniteTypeLabel::A(n) => write!(f, "A{n}"),
            FiniteTypeLabel::B(n) => write!(f, "B{n}"),
            FiniteTypeLabel::D(n) => write!(f, "D{n}"),
            FiniteTypeLabel::E6 => write!(f, "E6"),
            FiniteTypeLabel::E7 => write!(f, "E7"),
            FiniteTypeLabel::E8 => write!(f, "E8"),
            FiniteTypeLabel::F4 => write!(f, "F4"),
            FiniteTypeLabel::H3 => write!(f, "H3"),
            FiniteTypeLabel::H4 => write!(f, "H4"),
            FiniteTypeLabel::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A Coxeter system of given rank with named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    labels: Vec<String>,
    /// Full symmetric rank x rank table; diagonal entries are Finite(1).
    orders: Vec<CoxeterOrder>,
}

impl CoxeterSystem {
    /// Right-angled start: every off-diagonal order is 2.
    pub fn all_commuting(rank: usize) -> Self {
        assert!(rank >= 1 && rank <= MAX_RANK, "rank out of range");
        let mut orders = vec![CoxeterOrder::Finite(2); rank * rank];
        for i in 0..rank {
            orders[i * rank + i] = CoxeterOrder::Finite(1);
        }
        let labels = (0..rank).map(|i| i.to_string()).collect();
        CoxeterSystem { labels, orders }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_label(&mut self, i: usize, label: impl Into<String>) {
        self.labels[i] = label.into();
    }

    pub fn order(&self, i: usize, j: usize) -> CoxeterOrder {
        self.orders[i * self.rank() + j]
    }

    pub fn set_order(&mut self, i: usize, j: usize, m: CoxeterOrder) {
        assert!(i != j, "diagonal orders are fixed at 1");
        if let CoxeterOrder::Finite(v) = m {
            assert!(v >= 2, "off-diagonal orders must be >= 2");
        }
        let rank = self.rank();
        self.orders[i * rank + j] = m;
        self.orders[j * rank + i] = m;
    }

    pub fn full_mask(&self) -> SubsetMask {
        (1u64 << self.rank()) - 1
    }

    /// Connected components of the Coxeter graph restricted to `subset`,
    /// ordered by smallest member.
    pub fn connected_components(&self, subset: SubsetMask) -> Vec<SubsetMask> {
        let mut components = Vec::new();
        let mut unseen = subset;
        while unseen != 0 {
            let seed = unseen.trailing_zeros() as usize;
            let mut comp: SubsetMask = 1 << seed;
            let mut frontier: SubsetMask = comp;
            while frontier != 0 {
                let mut grown: SubsetMask = 0;
                let mut f = frontier;
                while f != 0 {
                    let i = f.trailing_zeros() as usize;
                    f &= f - 1;
                    let mut rest = subset & !comp;
                    while rest != 0 {
                        let j = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        if self.order(i, j).is_edge() {
                            grown |= 1 << j;
                        }
                    }
                    comp |= grown;
                }
                frontier = grown;
            }
            components.push(comp);
            unseen &= !comp;
        }
        components
    }

    /// Matches every component of `subset` against the finite list;
    /// `None` means the standard parabolic subgroup is infinite.
    pub fn classify_finite(&self, subset: SubsetMask) -> Option<Vec<FiniteTypeLabel>> {
        self.connected_components(subset)
            .into_iter()
            .map(|comp| self.classify_component(comp))
            .collect()
    }

    pub fn is_finite_subset(&self, subset: SubsetMask) -> bool {
        self.classify_finite(subset).is_some()
    }

    fn classify_component(&self, comp: SubsetMask) -> Option<FiniteTypeLabel> {
        let verts: Vec<usize> = mask_indices(comp);
        let n = verts.len();
        if n == 1 {
            return Some(FiniteTypeLabel::A(1));
        }
        if n == 2 {
            return match self.order(verts[0], verts[1]) {
                CoxeterOrder::Finite(3) => Some(FiniteTypeLabel::A(2)),
                CoxeterOrder::Finite(4) => Some(FiniteTypeLabel::B(2)),
                CoxeterOrder::Finite(m) => Some(FiniteTypeLabel::I2(m)),
                CoxeterOrder::Infinite => None,
            };
        }

        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let m = self.order(verts[a], verts[b]);
                if m.is_edge() {
                    edges.push((a, b, m));
                }
            }
        }
        // A connected graph on n vertices with more edges has a cycle, and
        // every finite diagram of rank >= 3 is a tree.
        if edges.len() != n - 1 {
            return None;
        }
        if edges.iter().any(|&(_, _, m)| m == CoxeterOrder::Infinite) {
            return None;
        }

        let mut degree = vec![0usize; n];
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b, m) in &edges {
            let m = m.as_finite().unwrap();
            degree[a] += 1;
            degree[b] += 1;
            adjacency[a].push((b, m));
            adjacency[b].push((a, m));
        }
        if degree.iter().any(|&d| d >= 4) {
            return None;
        }

        let branches: Vec<usize> = (0..n).filter(|&v| degree[v] == 3).collect();
        match branches.len() {
            0 => {
                // A path; read the labels off from one endpoint.
                let start = (0..n).find(|&v| degree[v] == 1).expect("a tree has leaves");
                let mut labels = Vec::with_capacity(n - 1);
                let mut prev = usize::MAX;
                let mut cur = start;
                while labels.len() < n - 1 {
                    let &(next, m) = adjacency[cur]
                        .iter()
                        .find(|&&(w, _)| w != prev)
                        .expect("interior path vertices have a forward edge");
                    labels.push(m);
                    prev = cur;
                    cur = next;
                }
                let big: Vec<(usize, u32)> = labels
                    .iter()
                    .copied()
                    .enumerate()
                    .filter(|&(_, m)| m > 3)
                    .collect();
                match big.as_slice() {
                    [] => Some(FiniteTypeLabel::A(n as u32)),
                    [(pos, m)] => {
                        let terminal = *pos == 0 || *pos == n - 2;
                        match (m, terminal) {
                            (4, true) => Some(FiniteTypeLabel::B(n as u32)),
                            (4, false) if n == 4 => Some(FiniteTypeLabel::F4),
                            (5, true) if n == 3 => Some(FiniteTypeLabel::H3),
                            (5, true) if n == 4 => Some(FiniteTypeLabel::H4),
                            _ => None,
                        }
                    }
                    _ => None,
                }
            }
            1 => {
                // Branched diagrams are simply laced in the finite list.
                if edges.iter().any(|&(_, _, m)| m != CoxeterOrder::Finite(3)) {
                    return None;
                }
                let center = branches[0];
                let mut legs: Vec<u32> = adjacency[center]
                    .iter()
                    .map(|&(first, _)| {
                        let mut len = 1u32;
                        let mut prev = center;
                        let mut cur = first;
                        while let Some(&(next, _)) =
                            adjacency[cur].iter().find(|&&(w, _)| w != prev)
                        {
                            len += 1;
                            prev = cur;
                            cur = next;
                        }
                        len
                    })
                    .collect();
                legs.sort_unstable();
                match (legs[0], legs[1], legs[2]) {
                    (1, 1, k) => Some(FiniteTypeLabel::D(k + 3)),
                    (1, 2, 2) => Some(FiniteTypeLabel::E6),
                    (1, 2, 3) => Some(FiniteTypeLabel::E7),
                    (1, 2, 4) => Some(FiniteTypeLabel::E8),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Growth polynomial of a finite subset: Solomon's product over the
    /// components. `None` if the subset is infinite.
    pub fn solomon_series(&self, subset: SubsetMask) -> Option<IntPolynomial> {
        let types = self.classify_finite(subset)?;
        let mut f = IntPolynomial::one();
        for label in types {
            f = &f * &label.solomon_series();
        }
        Some(f)
    }

    /// Growth function of the whole system by Steinberg's formula:
    /// 1/f_S(1/t) equals the alternating sum of 1/f_T(t) over finite
    /// subsets T. Enumeration prunes supersets of infinite subsets, which
    /// is sound because adjoining generators never makes a group finite.
    pub fn steinberg_growth(&self) -> RationalFunction {
        let mut w = RationalFunction::zero();
        self.accumulate_finite_subsets(0, 0, &mut w);
        let w_reversed = w.reverse_variable();
        w_reversed
            .reciprocal()
            .expect("the alternating sum of a growth series is non-zero")
    }

    fn accumulate_finite_subsets(&self, mask: SubsetMask, start: usize, acc: &mut RationalFunction) {
        let f_t = self
            .solomon_series(mask)
            .expect("only finite subsets are visited");
        let mut term = RationalFunction::new(IntPolynomial::one(), f_t)
            .expect("growth polynomials are non-zero");
        if mask.count_ones() % 2 == 1 {
            term = -&term;
        }
        *acc = &*acc + &term;
        for j in start..self.rank() {
            let grown = mask | (1 << j);
            if self.is_finite_subset(grown) {
                self.accumulate_finite_subsets(grown, j + 1, acc);
            }
        }
    }

    /// Number of finite subsets, enumerated with the same pruning as
    /// `steinberg_growth`.
    pub fn finite_subset_count(&self) -> u64 {
        fn visit(sys: &CoxeterSystem, mask: SubsetMask, start: usize) -> u64 {
            let mut count = 1;
            for j in start..sys.rank() {
                let grown = mask | (1 << j);
                if sys.is_finite_subset(grown) {
                    count += visit(sys, grown, j + 1);
                }
            }
            count
        }
        visit(self, 0, 0)
    }
}

/// Indices of the set bits, ascending.
pub fn mask_indices(mask: SubsetMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Parses the graph file format: a line `rank N`, then lines `i j m` with
/// 0-based generator indices and m an integer >= 2 or `inf`; pairs not
/// listed have order 2. `#` starts a comment.
pub fn parse_coxeter_graph(text: &str) -> Result<CoxeterSystem, CoxeterError> {
    let err = |line: usize, message: String| CoxeterError::Parse { line, message };
    let mut system: Option<CoxeterSystem> = None;
    let mut seen: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();

        let Some(sys) = system.as_mut() else {
            if tokens.len() != 2 || tokens[0] != "rank" {
                return Err(err(line_no, "expected `rank N` as the first entry".into()));
            }
            let rank: usize = tokens[1]
                .parse()
                .map_err(|_| err(line_no, format!("invalid rank `{}`", tokens[1])))?;
            if rank == 0 || rank > MAX_RANK {
                return Err(err(line_no, format!("rank must be in 1..={MAX_RANK}")));
            }
            system = Some(CoxeterSystem::all_commuting(rank));
            continue;
        };

        if tokens.len() != 3 {
            return Err(err(line_no, format!("expected `i j m`, got `{line}`")));
        }
        let parse_index = |tok: &str| -> Result<usize, CoxeterError> {
            let i: usize = tok
                .parse()
                .map_err(|_| err(line_no, format!("invalid generator index `{tok}`")))?;
            if i >= sys.rank() {
                return Err(err(
                    line_no,
                    format!("generator index {i} out of range for rank {}", sys.rank()),
                ));
            }
            Ok(i)
        };
        let i = parse_index(tokens[0])?;
        let j = parse_index(tokens[1])?;
        if i == j {
            return Err(err(line_no, format!("order of a generator with itself ({i})")));
        }
        let m = if tokens[2] == "inf" {
            CoxeterOrder::Infinite
        } else {
            let v: u32 = tokens[2]
                .parse()
                .map_err(|_| err(line_no, format!("invalid order `{}`", tokens[2])))?;
            if v < 2 {
                return Err(err(line_no, format!("order must be >= 2, got {v}")));
            }
            CoxeterOrder::Finite(v)
        };
        let key = (i.min(j), i.max(j));
        if seen.contains(&key) {
            if sys.order(i, j) != m {
                return Err(err(
                    line_no,
                    format!("conflicting orders for pair {} {}", key.0, key.1),
                ));
            }
        } else {
            seen.push(key);
            sys.set_order(i, j, m);
        }
    }

    system.ok_or_else(|| CoxeterError::Parse {
        line: text.lines().count().max(1),
        message: "missing `rank N` line".into(),
    })
}
