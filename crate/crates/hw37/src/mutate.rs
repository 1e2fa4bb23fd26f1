//! Seeded mutation operators for exercising verifier soundness. Every
//! operator, applied to an accepted certificate, produces an object the
//! verifier must reject; the soundness tests drive thousands of these.

use rand::prelude::IndexedRandom;
use rand::Rng;

use crate::verify::{RawFactorization, RawVertex};

/// The five mutation operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mutation {
    /// Remove one edge from one factor (leaves two degree-1 vertices).
    DeleteEdge,
    /// Swap one edge between two factors (breaks degrees in both).
    SwapEdges,
    /// Flip a factor's kind label C3 <-> C7.
    FlipKind,
    /// Rewrite one vertex inside one factor to another ambient vertex
    /// (the old vertex drops to degree 0, the new one climbs to 4).
    RelabelVertex,
    /// Append a copy of an existing factor (duplicates all its edges).
    DuplicateFactor,
}

pub const ALL_MUTATIONS: [Mutation; 5] = [
    Mutation::DeleteEdge,
    Mutation::SwapEdges,
    Mutation::FlipKind,
    Mutation::RelabelVertex,
    Mutation::DuplicateFactor,
];

/// Applies `op` to a copy of `raw`. Returns `None` when the certificate is
/// too small for the operator (e.g. a swap needs two factors).
pub fn mutate(raw: &RawFactorization, op: Mutation, rng: &mut impl Rng) -> Option<RawFactorization> {
    let mut out = raw.clone();
    match op {
        Mutation::DeleteEdge => {
            let fi = nonempty_factor(&out, rng)?;
            let ei = rng.random_range(0..out.factors[fi].edges.len());
            out.factors[fi].edges.remove(ei);
        }
        Mutation::SwapEdges => {
            if out.factors.len() < 2 {
                return None;
            }
            let fi = rng.random_range(0..out.factors.len());
            let mut gi = rng.random_range(0..out.factors.len() - 1);
            if gi >= fi {
                gi += 1;
            }
            if out.factors[fi].edges.is_empty() || out.factors[gi].edges.is_empty() {
                return None;
            }
            let ei = rng.random_range(0..out.factors[fi].edges.len());
            let ej = rng.random_range(0..out.factors[gi].edges.len());
            let a = out.factors[fi].edges[ei];
            let b = out.factors[gi].edges[ej];
            out.factors[fi].edges[ei] = b;
            out.factors[gi].edges[ej] = a;
        }
        Mutation::FlipKind => {
            if out.factors.is_empty() {
                return None;
            }
            let fi = rng.random_range(0..out.factors.len());
            out.factors[fi].kind = match out.factors[fi].kind.as_str() {
                "C3" => "C7".to_string(),
                _ => "C3".to_string(),
            };
        }
        Mutation::RelabelVertex => {
            let fi = nonempty_factor(&out, rng)?;
            let vertices: Vec<RawVertex> = {
                let mut vs: Vec<RawVertex> = out.factors[fi]
                    .edges
                    .iter()
                    .flat_map(|&(a, b)| [a, b])
                    .collect();
                vs.sort();
                vs.dedup();
                vs
            };
            if vertices.len() < 2 {
                return None;
            }
            let old = *vertices.choose(rng).unwrap();
            let new = loop {
                let v = *vertices.choose(rng).unwrap();
                if v != old {
                    break v;
                }
            };
            for (a, b) in out.factors[fi].edges.iter_mut() {
                if *a == old {
                    *a = new;
                }
                if *b == old {
                    *b = new;
                }
            }
        }
        Mutation::DuplicateFactor => {
            if out.factors.is_empty() {
                return None;
            }
            let fi = rng.random_range(0..out.factors.len());
            let copy = out.factors[fi].clone();
            out.factors.push(copy);
        }
    }
    Some(out)
}

fn nonempty_factor(raw: &RawFactorization, rng: &mut impl Rng) -> Option<usize> {
    let idx: Vec<usize> = (0..raw.factors.len())
        .filter(|&i| !raw.factors[i].edges.is_empty())
        .collect();
    idx.choose(rng).copied()
}
