//! Independent certificate checking. Everything here recomputes the
//! ambient vertex and edge sets from scratch and audits factors at the
//! raw edge level; nothing is shared with the constructive modules, so an
//! accepted certificate really is a 2-factorization.

use std::collections::HashMap;
use std::fmt;

use crate::cert::{Certificate, KtsDoc};
use crate::design::Factorization;

/// A vertex as the verifier sees it: unvalidated `(residue, group)`.
pub type RawVertex = (u32, u32);
/// An unvalidated edge.
pub type RawEdge = (RawVertex, RawVertex);

/// Untrusted edge-level view of a certificate. Cycles from a JSON
/// certificate are lowered to their edge lists before checking, and the
/// mutation harness edits this form directly.
#[derive(Clone, Debug)]
pub struct RawFactorization {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub factors: Vec<RawFactor>,
}

#[derive(Clone, Debug)]
pub struct RawFactor {
    pub kind: String,
    pub edges: Vec<RawEdge>,
}

impl RawFactorization {
    pub fn from_certificate(cert: &Certificate) -> RawFactorization {
        RawFactorization {
            n: cert.n,
            r: cert.r,
            s: cert.s,
            factors: cert
                .factors
                .iter()
                .map(|f| RawFactor {
                    kind: f.kind.clone(),
                    edges: f
                        .cycles
                        .iter()
                        .flat_map(|cyc| {
                            let m = cyc.len();
                            (0..m).map(move |k| (cyc[k], cyc[(k + 1) % m]))
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_factorization(f: &Factorization) -> RawFactorization {
        RawFactorization::from_certificate(&Certificate::from_factorization(f))
    }
}

/// The graph a certificate claims to factorize: groups of 7 vertices,
/// either all pairs (complete graph) or cross-group pairs only
/// (complete multipartite; used for the 3-group blocks).
#[derive(Clone, Debug)]
pub struct Ambient {
    groups: Vec<u32>,
    cross_only: bool,
}

impl Ambient {
    /// Complete graph on `n = 7g` vertices with group indices `0..g`.
    /// An order not divisible by 7 has no vertex set in this labeling;
    /// that is reported as a violation at verification time.
    pub fn complete(n: usize) -> Ambient {
        Ambient {
            groups: (0..(n / 7) as u32).collect(),
            cross_only: false,
        }
    }

    /// Complete tripartite block on three ambient groups.
    pub fn tripartite(groups: [u16; 3]) -> Ambient {
        Ambient {
            groups: groups.iter().map(|&g| g as u32).collect(),
            cross_only: true,
        }
    }

    /// Complete graph on 21 vertices spread over three ambient groups.
    pub fn block_k21(groups: [u16; 3]) -> Ambient {
        Ambient {
            groups: groups.iter().map(|&g| g as u32).collect(),
            cross_only: false,
        }
    }

    /// Arbitrary groups-of-7 ambient, complete or cross-only.
    pub fn custom(groups: Vec<u16>, cross_only: bool) -> Ambient {
        Ambient {
            groups: groups.into_iter().map(|g| g as u32).collect(),
            cross_only,
        }
    }

    fn vertices(&self) -> Vec<RawVertex> {
        let mut vs = Vec::with_capacity(self.groups.len() * 7);
        for &g in &self.groups {
            for j in 0..7 {
                vs.push((j, g));
            }
        }
        vs
    }

    fn contains_vertex(&self, v: RawVertex) -> bool {
        v.0 < 7 && self.groups.contains(&v.1)
    }

    fn contains_edge(&self, a: RawVertex, b: RawVertex) -> bool {
        self.contains_vertex(a)
            && self.contains_vertex(b)
            && a != b
            && (!self.cross_only || a.1 != b.1)
    }

    fn edge_count(&self) -> usize {
        let n = self.groups.len() * 7;
        if self.cross_only {
            n * (n - 7) / 2
        } else {
            n * (n - 1) / 2
        }
    }
}

fn fmt_vertex(v: RawVertex) -> String {
    format!("{}_{}", v.0, v.1)
}

fn fmt_edge(e: RawEdge) -> String {
    format!("{{{},{}}}", fmt_vertex(e.0), fmt_vertex(e.1))
}

/// A concrete defect, with enough of a witness to locate it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadOrder { n: usize },
    DegenerateEdge { factor: usize, vertex: RawVertex },
    ForeignVertex { factor: usize, vertex: RawVertex },
    ForeignEdge { factor: usize, edge: RawEdge },
    WrongDegree { factor: usize, vertex: RawVertex, degree: usize },
    RepeatedEdgeInFactor { factor: usize, edge: RawEdge },
    MixedFactor { factor: usize, lengths: Vec<usize> },
    BadCycleLength { factor: usize, length: usize },
    KindLabelWrong { factor: usize, declared: String, actual: String },
    UnknownKind { factor: usize, declared: String },
    DuplicateEdge { edge: RawEdge, factors: (usize, usize) },
    UncoveredEdge { edge: RawEdge },
    DeclaredCountsWrong { declared: (usize, usize), actual: (usize, usize) },
    CountMismatch { expected: (usize, usize), actual: (usize, usize) },
    DeclaredOrderWrong { declared: usize, actual: usize },
    // KTS-specific
    ClassNotPartition { class: usize, point: usize, count: usize },
    PairCoverage { pair: (usize, usize), count: usize },
    WrongClassCount { got: usize, want: usize },
    PointOutOfRange { class: usize, point: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            BadOrder { n } => write!(f, "order {n} does not describe groups of 7"),
            DegenerateEdge { factor, vertex } => {
                write!(f, "factor {factor}: self-loop at {}", fmt_vertex(*vertex))
            }
            ForeignVertex { factor, vertex } => {
                write!(f, "factor {factor}: vertex {} outside the ambient set", fmt_vertex(*vertex))
            }
            ForeignEdge { factor, edge } => {
                write!(f, "factor {factor}: edge {} not in the ambient graph", fmt_edge(*edge))
            }
            WrongDegree { factor, vertex, degree } => {
                write!(f, "factor {factor}: vertex {} has degree {degree}, want 2", fmt_vertex(*vertex))
            }
            RepeatedEdgeInFactor { factor, edge } => {
                write!(f, "factor {factor}: edge {} repeated", fmt_edge(*edge))
            }
            MixedFactor { factor, lengths } => {
                write!(f, "factor {factor}: mixed cycle lengths {lengths:?}")
            }
            BadCycleLength { factor, length } => {
                write!(f, "factor {factor}: cycle length {length} is neither 3 nor 7")
            }
            KindLabelWrong { factor, declared, actual } => {
                write!(f, "factor {factor}: labeled {declared}, cycles say {actual}")
            }
            UnknownKind { factor, declared } => {
                write!(f, "factor {factor}: unknown kind label {declared:?}")
            }
            DuplicateEdge { edge, factors } => {
                write!(f, "edge {} used by factors {} and {}", fmt_edge(*edge), factors.0, factors.1)
            }
            UncoveredEdge { edge } => write!(f, "edge {} covered by no factor", fmt_edge(*edge)),
            DeclaredCountsWrong { declared, actual } => {
                write!(f, "declared (r,s)=({},{}) but factors give ({},{})", declared.0, declared.1, actual.0, actual.1)
            }
            CountMismatch { expected, actual } => {
                write!(f, "expected (r,s)=({},{}) but got ({},{})", expected.0, expected.1, actual.0, actual.1)
            }
            DeclaredOrderWrong { declared, actual } => {
                write!(f, "declared n={declared} but ambient has {actual} vertices")
            }
            ClassNotPartition { class, point, count } => {
                write!(f, "class {class}: point {point} appears {count} times, want 1")
            }
            PairCoverage { pair, count } => {
                write!(f, "pair {{{},{}}} covered {count} times, want 1", pair.0, pair.1)
            }
            WrongClassCount { got, want } => {
                write!(f, "{got} parallel classes, want {want}")
            }
            PointOutOfRange { class, point } => {
                write!(f, "class {class}: point {point} out of range")
            }
        }
    }
}

/// Outcome of a verification run: accepted, or up to [`MAX_WITNESSES`]
/// concrete violations plus the total count.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    witnesses: Vec<Violation>,
    total: usize,
}

/// Number of violation witnesses retained in a report.
pub const MAX_WITNESSES: usize = 10;

impl VerificationReport {
    fn new() -> Self {
        VerificationReport {
            witnesses: Vec::new(),
            total: 0,
        }
    }

    fn push(&mut self, v: Violation) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(v);
        }
        self.total += 1;
    }

    pub fn accepted(&self) -> bool {
        self.total == 0
    }

    pub fn violations(&self) -> &[Violation] {
        &self.witnesses
    }

    pub fn total_violations(&self) -> usize {
        self.total
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.accepted() {
            return write!(f, "accepted");
        }
        writeln!(f, "rejected: {} violation(s)", self.total)?;
        for v in &self.witnesses {
            writeln!(f, "  - {v}")?;
        }
        if self.total > self.witnesses.len() {
            writeln!(f, "  ... and {} more", self.total - self.witnesses.len())?;
        }
        Ok(())
    }
}

fn norm(e: RawEdge) -> RawEdge {
    // order endpoints by (group, residue)
    let ka = (e.0 .1, e.0 .0);
    let kb = (e.1 .1, e.1 .0);
    if ka <= kb {
        e
    } else {
        (e.1, e.0)
    }
}

/// Checks a raw factorization against an explicit ambient graph.
pub fn verify_raw(
    raw: &RawFactorization,
    ambient: &Ambient,
    expect_r: usize,
    expect_s: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let vertices = ambient.vertices();
    if raw.n != vertices.len() {
        report.push(Violation::DeclaredOrderWrong {
            declared: raw.n,
            actual: vertices.len(),
        });
    }

    let mut edge_owner: HashMap<RawEdge, usize> = HashMap::new();
    let mut actual_r = 0usize;
    let mut actual_s = 0usize;

    for (fi, factor) in raw.factors.iter().enumerate() {
        // per-factor adjacency over ambient vertices
        let mut adj: HashMap<RawVertex, Vec<RawVertex>> = HashMap::new();
        let mut local_seen: HashMap<RawEdge, usize> = HashMap::new();
        let mut structurally_sound = true;
        for &(a, b) in &factor.edges {
            if a == b {
                report.push(Violation::DegenerateEdge { factor: fi, vertex: a });
                structurally_sound = false;
                continue;
            }
            for v in [a, b] {
                if !ambient.contains_vertex(v) {
                    report.push(Violation::ForeignVertex { factor: fi, vertex: v });
                    structurally_sound = false;
                }
            }
            if !ambient.contains_edge(a, b) {
                report.push(Violation::ForeignEdge { factor: fi, edge: (a, b) });
                structurally_sound = false;
            }
            let e = norm((a, b));
            let count = local_seen.entry(e).or_insert(0);
            *count += 1;
            if *count == 2 {
                report.push(Violation::RepeatedEdgeInFactor { factor: fi, edge: e });
                structurally_sound = false;
            }
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }

        // spanning 2-regularity: every ambient vertex sees exactly 2 edge ends
        for &v in &vertices {
            let degree = adj.get(&v).map_or(0, |ns| ns.len());
            if degree != 2 {
                report.push(Violation::WrongDegree { factor: fi, vertex: v, degree });
                structurally_sound = false;
            }
        }

        // walk the cycles; only meaningful if degrees are clean
        let mut lengths: Vec<usize> = Vec::new();
        if structurally_sound {
            let mut visited: HashMap<RawVertex, bool> = HashMap::new();
            for &start in &vertices {
                if visited.get(&start).copied().unwrap_or(false) {
                    continue;
                }
                let mut len = 0usize;
                let mut prev = start;
                let mut cur = start;
                loop {
                    visited.insert(cur, true);
                    len += 1;
                    let ns = &adj[&cur];
                    // first step takes either direction; afterwards avoid
                    // walking back (degree 2, no multi-edges at this point)
                    let next = if len == 1 || ns[0] != prev { ns[0] } else { ns[1] };
                    prev = cur;
                    cur = next;
                    if cur == start {
                        break;
                    }
                }
                lengths.push(len);
            }
            lengths.sort();
            let uniform = lengths.first().zip(lengths.last()).map(|(a, b)| a == b);
            let actual_kind = match (uniform, lengths.first()) {
                (Some(true), Some(3)) => "C3",
                (Some(true), Some(7)) => "C7",
                _ => "mixed",
            };
            if actual_kind == "mixed" {
                report.push(Violation::MixedFactor { factor: fi, lengths: lengths.clone() });
            } else if lengths.iter().any(|&l| l != 3 && l != 7) {
                report.push(Violation::BadCycleLength { factor: fi, length: lengths[0] });
            }
            match factor.kind.as_str() {
                "C3" | "C7" => {
                    if factor.kind != actual_kind {
                        report.push(Violation::KindLabelWrong {
                            factor: fi,
                            declared: factor.kind.clone(),
                            actual: actual_kind.to_string(),
                        });
                    }
                }
                _ => {
                    report.push(Violation::UnknownKind {
                        factor: fi,
                        declared: factor.kind.clone(),
                    });
                }
            }
            match actual_kind {
                "C3" => actual_r += 1,
                "C7" => actual_s += 1,
                _ => {}
            }
        }

        // global edge accounting (count every structurally plausible edge)
        for &(a, b) in &factor.edges {
            if a != b && ambient.contains_edge(a, b) {
                let e = norm((a, b));
                match edge_owner.get(&e) {
                    Some(&prev) => {
                        report.push(Violation::DuplicateEdge { edge: e, factors: (prev, fi) });
                    }
                    None => {
                        edge_owner.insert(e, fi);
                    }
                }
            }
        }
    }

    // coverage: every ambient edge exactly once
    if edge_owner.len() != ambient.edge_count() {
        for (ai, &a) in vertices.iter().enumerate() {
            for &b in &vertices[ai + 1..] {
                if ambient.contains_edge(a, b) && !edge_owner.contains_key(&norm((a, b))) {
                    report.push(Violation::UncoveredEdge { edge: (a, b) });
                }
            }
        }
    }

    if (raw.r, raw.s) != (actual_r, actual_s) {
        report.push(Violation::DeclaredCountsWrong {
            declared: (raw.r, raw.s),
            actual: (actual_r, actual_s),
        });
    }
    if (actual_r, actual_s) != (expect_r, expect_s) {
        report.push(Violation::CountMismatch {
            expected: (expect_r, expect_s),
            actual: (actual_r, actual_s),
        });
    }
    report
}

/// Checks a certificate as a 2-factorization of the complete graph `K_n`.
pub fn verify(cert: &Certificate, expect_n: usize, expect_r: usize, expect_s: usize) -> VerificationReport {
    if expect_n % 7 != 0 || expect_n == 0 {
        let mut report = VerificationReport::new();
        report.push(Violation::BadOrder { n: expect_n });
        return report;
    }
    verify_raw(
        &RawFactorization::from_certificate(cert),
        &Ambient::complete(expect_n),
        expect_r,
        expect_s,
    )
}

/// Checks an in-memory factorization against `K_n`.
pub fn verify_factorization(
    f: &Factorization,
    expect_n: usize,
    expect_r: usize,
    expect_s: usize,
) -> VerificationReport {
    verify(&Certificate::from_factorization(f), expect_n, expect_r, expect_s)
}

/// Checks a factorization of one block against an explicit ambient
/// (tripartite or complete-on-21) graph.
pub fn verify_block(
    f: &Factorization,
    ambient: &Ambient,
    expect_r: usize,
    expect_s: usize,
) -> VerificationReport {
    verify_raw(
        &RawFactorization::from_factorization(f),
        ambient,
        expect_r,
        expect_s,
    )
}

/// Checks a Kirkman triple system document: each class partitions the
/// point set, every pair is covered exactly once, (v-1)/2 classes.
pub fn verify_kts(doc: &KtsDoc) -> VerificationReport {
    let mut report = VerificationReport::new();
    let v = doc.v;
    if v < 3 || v % 6 != 3 {
        report.push(Violation::BadOrder { n: v });
        return report;
    }
    let want_classes = (v - 1) / 2;
    if doc.classes.len() != want_classes {
        report.push(Violation::WrongClassCount {
            got: doc.classes.len(),
            want: want_classes,
        });
    }
    let mut pair_count = vec![0u32; v * v];
    for (ci, class) in doc.classes.iter().enumerate() {
        let mut point_count = vec![0u32; v];
        let mut in_range = true;
        for triple in class {
            for &p in triple {
                if p >= v {
                    report.push(Violation::PointOutOfRange { class: ci, point: p });
                    in_range = false;
                } else {
                    point_count[p] += 1;
                }
            }
            if in_range {
                for a in 0..3 {
                    for b in (a + 1)..3 {
                        let (p, q) = (triple[a].min(triple[b]), triple[a].max(triple[b]));
                        pair_count[p * v + q] += 1;
                    }
                }
            }
        }
        for (p, &count) in point_count.iter().enumerate() {
            if count != 1 {
                report.push(Violation::ClassNotPartition {
                    class: ci,
                    point: p,
                    count: count as usize,
                });
            }
        }
    }
    for p in 0..v {
        for q in (p + 1)..v {
            let count = pair_count[p * v + q] as usize;
            if count != 1 {
                report.push(Violation::PairCoverage { pair: (p, q), count });
            }
        }
    }
    report
}
