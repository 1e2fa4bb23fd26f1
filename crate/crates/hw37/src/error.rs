use crate::design::{DifferenceClass, Edge};

/// Errors raised by constructions and composition operators.
///
/// Verification problems are *not* errors: the verifier returns a report
/// listing violations instead (see [`crate::verify`]). `Error` covers
/// precondition failures and internal checks that abort a construction.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("difference {d} is invalid for a within-group class (want 1..=3 after normalization)")]
    InvalidWithinDifference { d: u8 },

    #[error("difference triple ({d0},{d1},{d2}) does not sum to 0 mod 7; the classes close into longer cycles")]
    NotZeroSumTriple { d0: u8, d1: u8, d2: u8 },

    #[error("cycle needs at least 3 distinct vertices, got {len}")]
    CycleTooShort { len: usize },

    #[error("repeated vertex {vertex} in cycle")]
    RepeatedVertex { vertex: String },

    #[error("cycles are not vertex-disjoint: {vertex} appears twice")]
    OverlappingCycles { vertex: String },

    #[error("factor {index} does not span the expected vertex set")]
    NotSpanning { index: usize },

    #[error("expected {expected} vertices, factorization spans {actual}")]
    WrongVertexCount { expected: usize, actual: usize },

    #[error("disjoint union needs aligned factor lists: part {part} has {got} factors, expected {want}")]
    FactorCountMismatch { part: usize, got: usize, want: usize },

    #[error("disjoint union kind mismatch at factor {index}: {left} vs {right}")]
    KindMismatch {
        index: usize,
        left: &'static str,
        right: &'static str,
    },

    #[error("vertex sets overlap at {vertex}; disjoint union requires disjoint parts")]
    OverlappingParts { vertex: String },

    #[error("edge-disjoint merge requires identical vertex sets")]
    VertexSetMismatch,

    #[error("factorizations share edge {0}")]
    DuplicateEdge(Edge),

    #[error("starter reuses difference class {0}; development would collide")]
    StarterClassCollision(DifferenceClass),

    #[error("starter is not a C7-factor of the tripartite block: {reason}")]
    BadStarter { reason: String },

    #[error("alpha={alpha} is not one of {{0,1,3,5,7}}; even alpha is only probed by the search lab")]
    InadmissibleAlpha { alpha: usize },

    #[error("gamma={gamma} is not one of {{0,1,3,5,7,8,9,10}}; gamma in {{2,4,6}} is an open case (see the open-case search)")]
    InadmissibleGamma { gamma: usize },

    #[error("no factorization for n={n}: n must be ≡ 21 (mod 42) and odd")]
    BadOrder { n: usize },

    #[error("r={r} infeasible for n={n}: {reason}")]
    InfeasibleR { n: usize, r: usize, reason: String },

    #[error("order {v} is not ≡ 3 (mod 6)")]
    BadKirkmanOrder { v: usize },

    #[error("r={r} is constructible for n=21; the open-case search only takes r in {{2,4,6}}")]
    NotAnOpenCase { r: usize },

    #[error("alpha={alpha} is outside the even-probe range {{2,4,6}}; alpha=0 is the cyclic-starter search")]
    NotAnEvenProbe { alpha: usize },

    #[error("search budget exhausted after {nodes} nodes without finding {target}")]
    SearchExhausted { target: String, nodes: u64 },

    #[error("{component} failed internal verification:\n{report}")]
    VerificationFailed { component: String, report: String },

    #[error("asset {name} is corrupt: {reason}")]
    AssetCorrupt { name: String, reason: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
