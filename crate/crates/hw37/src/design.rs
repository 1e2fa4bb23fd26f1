//! Core vocabulary: labeled vertices, edges, difference classes, cycles,
//! 2-factors and 2-factorizations, plus the composition operators
//! (vertex-disjoint union, edge-disjoint merge) and development mod 7
//! that every construction in this crate is built from.
//!
//! Vertices live in `Z_7 x groups`: a vertex `j_i` has residue `j` mod 7
//! and group index `i`. All canonical orderings are lexicographic by
//! `(group, residue)` so serialized artifacts are byte-stable.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex `j_i`: residue `j` in `Z_7`, group index `i`.
///
/// Field order matters: derived `Ord` is lexicographic by `(group, residue)`,
/// which is the canonical vertex order used everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    group: u16,
    residue: u8,
}

impl Vertex {
    pub fn new(residue: u8, group: u16) -> Self {
        assert!(residue < 7, "residue {residue} out of Z_7");
        Vertex { group, residue }
    }

    pub fn residue(&self) -> u8 {
        self.residue
    }

    pub fn group(&self) -> u16 {
        self.group
    }

    /// Adds `k` to the residue mod 7, fixing the group index.
    pub fn shift(&self, k: u8) -> Self {
        Vertex {
            group: self.group,
            residue: (self.residue + k) % 7,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.residue, self.group)
    }
}

/// An unordered pair of distinct vertices, stored smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert!(a != b, "degenerate edge at {a}");
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    /// The difference class this edge belongs to.
    pub fn class(&self) -> DifferenceClass {
        DifferenceClass::of_edge(self)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// The edge orbit `E_ij(d) = {{l_i, (l+d)_j} | l in Z_7}`.
///
/// Canonical form: within-group classes (`i == j`) store `d in {1,2,3}`
/// (a raw difference `d` is normalized to `min(d, 7-d)`); cross classes
/// store `i < j` with `d in 0..=6` (swapping endpoints maps `d` to `7-d`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DifferenceClass {
    i: u16,
    j: u16,
    d: u8,
}

impl DifferenceClass {
    /// Builds the class for groups `(i, j)` and difference `d`, normalizing
    /// to canonical form. Within-group `d` must reduce into `{1,2,3}`.
    pub fn new(i: u16, j: u16, d: u8) -> Result<Self> {
        if i == j {
            let d = d % 7;
            let d = d.min(7 - d);
            if d == 0 {
                return Err(Error::InvalidWithinDifference { d });
            }
            Ok(DifferenceClass { i, j, d })
        } else if i < j {
            Ok(DifferenceClass { i, j, d: d % 7 })
        } else {
            Ok(DifferenceClass {
                i: j,
                j: i,
                d: (7 - d % 7) % 7,
            })
        }
    }

    pub fn of_edge(e: &Edge) -> Self {
        let (a, b) = e.endpoints();
        if a.group() == b.group() {
            let d = (7 + b.residue() - a.residue()) % 7;
            DifferenceClass {
                i: a.group(),
                j: a.group(),
                d: d.min(7 - d),
            }
        } else {
            // a <= b, so a.group < b.group and the class is already canonical
            DifferenceClass {
                i: a.group(),
                j: b.group(),
                d: (7 + b.residue() - a.residue()) % 7,
            }
        }
    }

    pub fn groups(&self) -> (u16, u16) {
        (self.i, self.j)
    }

    pub fn difference(&self) -> u8 {
        self.d
    }

    pub fn is_within_group(&self) -> bool {
        self.i == self.j
    }
}

impl fmt::Display for DifferenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{}{}}}({})", self.i, self.j, self.d)
    }
}

/// Expands a difference class into its 7 edges `{l_i, (l+d)_j}`, `l = 0..6`.
pub fn expand_difference_class(c: DifferenceClass) -> Vec<Edge> {
    let (i, j) = c.groups();
    let d = c.difference();
    let mut edges: Vec<Edge> = (0..7)
        .map(|l| Edge::new(Vertex::new(l, i), Vertex::new((l + d) % 7, j)))
        .collect();
    edges.sort();
    edges
}

/// All 30 difference classes of a 3-group block viewed as `K_21`:
/// 9 within-group classes plus 21 cross classes.
pub fn class_catalog(groups: [u16; 3]) -> Vec<DifferenceClass> {
    let mut out = Vec::with_capacity(30);
    for &g in &groups {
        for d in 1..=3 {
            out.push(DifferenceClass::new(g, g, d).unwrap());
        }
    }
    for a in 0..3 {
        for b in (a + 1)..3 {
            for d in 0..7 {
                out.push(DifferenceClass::new(groups[a], groups[b], d).unwrap());
            }
        }
    }
    out.sort();
    out
}

/// A cycle on at least 3 distinct vertices, held in canonical form:
/// rotated so the minimum vertex comes first, oriented so the second
/// vertex is the smaller of the first vertex's two neighbors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::CycleTooShort {
                len: vertices.len(),
            });
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for v in &vertices {
            if !seen.insert(*v) {
                return Err(Error::RepeatedVertex {
                    vertex: v.to_string(),
                });
            }
        }
        Ok(Cycle {
            vertices: canonical_rotation(vertices),
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |k| Edge::new(self.vertices[k], self.vertices[(k + 1) % n]))
    }

    fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        Cycle::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

fn canonical_rotation(vs: Vec<Vertex>) -> Vec<Vertex> {
    let n = vs.len();
    let m = (0..n).min_by_key(|&k| vs[k]).unwrap();
    let mut rot: Vec<Vertex> = vs[m..].iter().chain(vs[..m].iter()).copied().collect();
    if rot[n - 1] < rot[1] {
        rot[1..].reverse();
    }
    rot
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Uniformity label of a 2-factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FactorKind {
    C3,
    C7,
    Mixed,
}

impl FactorKind {
    pub fn name(&self) -> &'static str {
        match self {
            FactorKind::C3 => "C3",
            FactorKind::C7 => "C7",
            FactorKind::Mixed => "mixed",
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of vertex-disjoint cycles. Whether it spans an ambient vertex set
/// is checked where the ambient is known ([`Factorization::new`] and the
/// verifier); the type itself only guarantees disjointness and canonical
/// ordering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoFactor {
    cycles: Vec<Cycle>,
    kind: FactorKind,
}

impl TwoFactor {
    pub fn new(mut cycles: Vec<Cycle>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &cycles {
            for v in c.vertices() {
                if !seen.insert(*v) {
                    return Err(Error::OverlappingCycles {
                        vertex: v.to_string(),
                    });
                }
            }
        }
        cycles.sort();
        let kind = if cycles.iter().all(|c| c.len() == 3) {
            FactorKind::C3
        } else if cycles.iter().all(|c| c.len() == 7) {
            FactorKind::C7
        } else {
            FactorKind::Mixed
        };
        Ok(TwoFactor { cycles, kind })
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.cycles.iter().flat_map(|c| c.edges())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.cycles.iter().flat_map(|c| c.vertices().iter().copied())
    }

    /// Sorted vertex set spanned by this factor.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.vertices().collect();
        vs.sort();
        vs
    }

    /// Translate every residue by `k` mod 7, fixing group indices.
    pub fn shift_residues(&self, k: u8) -> TwoFactor {
        let cycles = self
            .cycles
            .iter()
            .map(|c| c.map(|v| v.shift(k)).expect("shift preserves validity"))
            .collect();
        TwoFactor::new(cycles).expect("shift preserves disjointness")
    }

    /// Relabels group indices through `map`; `map` must be injective on the
    /// groups present or the disjointness check fails.
    pub fn relabel_groups(&self, map: impl Fn(u16) -> u16) -> Result<TwoFactor> {
        let cycles: Result<Vec<Cycle>> = self
            .cycles
            .iter()
            .map(|c| c.map(|v| Vertex::new(v.residue(), map(v.group()))))
            .collect();
        TwoFactor::new(cycles?)
    }

    /// The difference classes of all edges, in edge order (repeats preserved).
    pub fn edge_classes(&self) -> Vec<DifferenceClass> {
        self.edges().map(|e| e.class()).collect()
    }
}

/// Development mod 7: the 7 translates `base+0, base+1, ..., base+6`,
/// adding `k` to every residue and fixing group indices.
pub fn develop_mod7(base: &TwoFactor) -> Vec<TwoFactor> {
    (0..7).map(|k| base.shift_residues(k)).collect()
}

/// An ordered list of 2-factors claimed to partition the edges of an
/// ambient graph on `n` vertices. The claim is audited by the verifier;
/// this type only enforces that every factor spans the same `n` vertices
/// and that the declared `(r, s)` counts match the factor kinds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    n: usize,
    factors: Vec<TwoFactor>,
    r: usize,
    s: usize,
}

impl Factorization {
    pub fn new(n: usize, factors: Vec<TwoFactor>) -> Result<Self> {
        let mut span: Option<Vec<Vertex>> = None;
        for (index, f) in factors.iter().enumerate() {
            let vs = f.vertex_set();
            match &span {
                None => {
                    if vs.len() != n {
                        return Err(Error::WrongVertexCount {
                            expected: n,
                            actual: vs.len(),
                        });
                    }
                    span = Some(vs);
                }
                Some(s) => {
                    if &vs != s {
                        return Err(Error::NotSpanning { index });
                    }
                }
            }
        }
        let r = factors.iter().filter(|f| f.kind() == FactorKind::C3).count();
        let s = factors.iter().filter(|f| f.kind() == FactorKind::C7).count();
        Ok(Factorization { n, factors, r, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn factors(&self) -> &[TwoFactor] {
        &self.factors
    }

    pub fn vertex_set(&self) -> Vec<Vertex> {
        match self.factors.first() {
            Some(f) => f.vertex_set(),
            None => Vec::new(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.factors.iter().flat_map(|f| f.edges())
    }

    pub fn relabel_groups(&self, map: impl Fn(u16) -> u16 + Copy) -> Result<Factorization> {
        let factors: Result<Vec<TwoFactor>> = self
            .factors
            .iter()
            .map(|f| f.relabel_groups(map))
            .collect();
        Factorization::new(self.n, factors?)
    }

    /// Reorders factors so all C3-factors come before all C7-factors,
    /// preserving relative order within each kind.
    pub fn sorted_by_kind(mut self) -> Factorization {
        self.factors.sort_by_key(|f| match f.kind() {
            FactorKind::C3 => 0,
            FactorKind::C7 => 1,
            FactorKind::Mixed => 2,
        });
        self
    }
}

/// Lemma: position-aligned union of factorizations over pairwise disjoint
/// vertex sets. Part `k` of every input must have the same kind; factor `k`
/// of the result is the union of the inputs' factor `k`.
pub fn disjoint_union(parts: &[Factorization]) -> Result<Factorization> {
    assert!(!parts.is_empty(), "disjoint_union of nothing");
    let want = parts[0].factors.len();
    for (part, p) in parts.iter().enumerate() {
        if p.factors.len() != want {
            return Err(Error::FactorCountMismatch {
                part,
                got: p.factors.len(),
                want,
            });
        }
    }
    let mut seen: HashSet<Vertex> = HashSet::new();
    for p in parts {
        for v in p.vertex_set() {
            if !seen.insert(v) {
                return Err(Error::OverlappingParts {
                    vertex: v.to_string(),
                });
            }
        }
    }
    let mut factors = Vec::with_capacity(want);
    for k in 0..want {
        let kind = parts[0].factors[k].kind();
        let mut cycles = Vec::new();
        for p in parts {
            let f = &p.factors[k];
            if f.kind() != kind {
                return Err(Error::KindMismatch {
                    index: k,
                    left: kind.name(),
                    right: f.kind().name(),
                });
            }
            cycles.extend_from_slice(f.cycles());
        }
        factors.push(TwoFactor::new(cycles)?);
    }
    let n = parts.iter().map(|p| p.n).sum();
    Factorization::new(n, factors)
}

/// Lemma: concatenation of two factorizations of edge-disjoint graphs on
/// the same vertex set; `r` and `s` add. Rejects (naming the edge) if the
/// inputs share any edge.
pub fn merge_edge_disjoint(a: &Factorization, b: &Factorization) -> Result<Factorization> {
    if !a.factors.is_empty() && !b.factors.is_empty() && a.vertex_set() != b.vertex_set() {
        return Err(Error::VertexSetMismatch);
    }
    let mut seen: HashSet<Edge> = a.edges().collect();
    for e in b.edges() {
        if !seen.insert(e) {
            return Err(Error::DuplicateEdge(e));
        }
    }
    let mut factors = a.factors.clone();
    factors.extend_from_slice(&b.factors);
    Factorization::new(a.n.max(b.n), factors)
}
