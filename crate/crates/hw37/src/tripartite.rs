//! 2-factorizations of the complete tripartite graph K_{7,7,7} into
//! `alpha` triangle-factors and `7 - alpha` heptagon-factors, for every
//! admissible `alpha` in {0,1,3,5,7}.
//!
//! Constructions are stated in local parts 0,1,2 and relabeled to ambient
//! groups last. Each factorization is self-verified before it is returned.

use serde::{Deserialize, Serialize};

use crate::assets;
use crate::design::{
    develop_mod7, expand_difference_class, Cycle, DifferenceClass, Edge, Factorization,
    FactorKind, TwoFactor, Vertex,
};
use crate::error::{Error, Result};
use crate::verify::{verify_block, Ambient};

/// One K_{7,7,7} block: which three ambient groups it sits on and how many
/// of its seven 2-factors are triangle-factors.
#[derive(Clone, Copy, Debug)]
pub struct TripartiteBlock {
    pub groups: [u16; 3],
    pub alpha: usize,
}

impl TripartiteBlock {
    pub fn local(alpha: usize) -> Self {
        TripartiteBlock {
            groups: [0, 1, 2],
            alpha,
        }
    }

    pub fn beta(&self) -> usize {
        7 - self.alpha
    }
}

/// The three cross-difference pairs `{d, 7-d}` whose class unions split
/// into two heptagon-factors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeptagonPair {
    D16,
    D25,
    D34,
}

impl HeptagonPair {
    pub const ALL: [HeptagonPair; 3] = [HeptagonPair::D16, HeptagonPair::D25, HeptagonPair::D34];

    pub fn differences(&self) -> (u8, u8) {
        match self {
            HeptagonPair::D16 => (1, 6),
            HeptagonPair::D25 => (2, 5),
            HeptagonPair::D34 => (3, 4),
        }
    }
}

fn vx(j: u8, i: u16) -> Vertex {
    Vertex::new(j % 7, i)
}

/// Triangle-factor from a zero-sum difference triple, rotated by `rot`:
/// the 7 triangles `(l_i, (l+d0)_{i+1}, (l+d0+d1)_{i+2})` with `i = rot`.
fn rotated_triangle_factor(rot: u16, d0: u8, d1: u8, d2: u8) -> Result<TwoFactor> {
    if (d0 as u16 + d1 as u16 + d2 as u16) % 7 != 0 {
        return Err(Error::NotZeroSumTriple { d0, d1, d2 });
    }
    let (i0, i1, i2) = (rot % 3, (rot + 1) % 3, (rot + 2) % 3);
    let cycles: Result<Vec<Cycle>> = (0..7)
        .map(|l| {
            Cycle::new(vec![
                vx(l, i0),
                vx(l + d0, i1),
                vx(l + d0 + d1, i2),
            ])
        })
        .collect();
    TwoFactor::new(cycles?)
}

/// Triangle-factor `E_01(d0) ∪ E_12(d1) ∪ E_20(d2)`; requires
/// `d0 + d1 + d2 ≡ 0 (mod 7)`, otherwise the classes close into longer
/// cycles and the call is rejected.
pub fn triangle_factor_from_triple(d0: u8, d1: u8, d2: u8) -> Result<TwoFactor> {
    rotated_triangle_factor(0, d0, d1, d2)
}

/// The Hamilton cycle `E_ii(d)` on one 7-vertex part, `d in {1,2,3}`.
pub fn part_hamilton_factor(part: u16, d: u8) -> Result<TwoFactor> {
    if !(1..=3).contains(&d) {
        return Err(Error::InvalidWithinDifference { d });
    }
    let mut vs = Vec::with_capacity(7);
    let mut l = 0u8;
    for _ in 0..7 {
        vs.push(vx(l, part));
        l = (l + d) % 7;
    }
    TwoFactor::new(vec![Cycle::new(vs)?])
}

/// The explicit pair of heptagon-factors whose edge union is
/// `⋃_{d in pair} E_01(d) ∪ E_12(d) ∪ E_20(d)`. The union identity is
/// checked on construction.
pub fn heptagon_factor_pair(pair: HeptagonPair) -> (TwoFactor, TwoFactor) {
    // residue sequences per cycle; subscript offsets say which part each
    // vertex falls in relative to the cycle index i
    let (residues, offsets_f1, offsets_f2): ([u8; 7], [u16; 7], [u16; 7]) = match pair {
        HeptagonPair::D16 => (
            [0, 1, 2, 3, 4, 5, 6],
            [0, 1, 2, 0, 1, 0, 1],
            [0, 2, 1, 0, 2, 0, 2],
        ),
        HeptagonPair::D25 => (
            [0, 2, 4, 6, 1, 3, 5],
            [0, 1, 2, 0, 1, 0, 1],
            [0, 2, 1, 0, 2, 0, 2],
        ),
        HeptagonPair::D34 => (
            [0, 3, 6, 2, 5, 1, 4],
            [0, 1, 2, 0, 1, 0, 1],
            [0, 2, 1, 0, 2, 0, 2],
        ),
    };
    let build = |offsets: [u16; 7]| -> TwoFactor {
        let cycles: Vec<Cycle> = (0..3u16)
            .map(|i| {
                Cycle::new(
                    residues
                        .iter()
                        .zip(offsets.iter())
                        .map(|(&j, &o)| vx(j, (i + o) % 3))
                        .collect(),
                )
                .expect("paper cycles are valid")
            })
            .collect();
        TwoFactor::new(cycles).expect("paper factors are vertex-disjoint")
    };
    let f1 = build(offsets_f1);
    let f2 = build(offsets_f2);

    // union-of-edges identity from the construction
    let mut got: Vec<Edge> = f1.edges().chain(f2.edges()).collect();
    got.sort();
    let (da, db) = pair.differences();
    let mut want: Vec<Edge> = Vec::new();
    for d in [da, db] {
        for (i, j) in [(0u16, 1u16), (1, 2), (2, 0)] {
            want.extend(expand_difference_class(DifferenceClass::new(i, j, d).unwrap()));
        }
    }
    want.sort();
    assert_eq!(got, want, "heptagon pair {pair:?} does not tile its classes");
    (f1, f2)
}

/// Validates a starter for the all-heptagon factorization: a C7-factor of
/// the local K_{7,7,7} whose 21 edges occupy 21 distinct cross-difference
/// classes.
fn check_starter(starter: &TwoFactor) -> Result<()> {
    if starter.kind() != FactorKind::C7 || starter.cycles().len() != 3 {
        return Err(Error::BadStarter {
            reason: format!(
                "want 3 heptagons, got {} cycles of kind {}",
                starter.cycles().len(),
                starter.kind()
            ),
        });
    }
    let vs = starter.vertex_set();
    if vs.len() != 21 || vs.iter().any(|v| v.group() > 2) {
        return Err(Error::BadStarter {
            reason: "does not span Z_7 x {0,1,2}".to_string(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for e in starter.edges() {
        let (a, b) = e.endpoints();
        if a.group() == b.group() {
            return Err(Error::BadStarter {
                reason: format!("within-part edge {e}"),
            });
        }
        let c = e.class();
        if !seen.insert(c) {
            return Err(Error::StarterClassCollision(c));
        }
    }
    Ok(())
}

/// Starter asset schema: a single C7-factor plus its difference-class tags.
#[derive(Serialize, Deserialize)]
struct StarterDoc {
    kind: String,
    cycles: Vec<Vec<(u8, u16)>>,
    classes: Vec<(u16, u16, u8)>,
}

/// Renders a starter in the asset schema, class tags included, so a
/// searched starter can be saved and used via the asset-dir override.
pub fn starter_doc_json(starter: &TwoFactor) -> String {
    let mut classes: Vec<(u16, u16, u8)> = starter
        .edge_classes()
        .iter()
        .map(|c| {
            let (i, j) = c.groups();
            (i, j, c.difference())
        })
        .collect();
    classes.sort();
    let doc = StarterDoc {
        kind: starter.kind().name().to_string(),
        cycles: starter
            .cycles()
            .iter()
            .map(|c| c.vertices().iter().map(|v| (v.residue(), v.group())).collect())
            .collect(),
        classes,
    };
    let mut s = serde_json::to_string(&doc).expect("starter serializes");
    s.push('\n');
    s
}

/// Loads the bundled starter, re-deriving and cross-checking its class tags.
pub fn bundled_starter() -> Result<TwoFactor> {
    let text = assets::load("starter_c7.json", assets::STARTER_C7)?;
    let corrupt = |reason: String| Error::AssetCorrupt {
        name: "starter_c7.json".to_string(),
        reason,
    };
    let doc: StarterDoc =
        serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
    if doc.kind != "C7" {
        return Err(corrupt(format!("kind {:?}", doc.kind)));
    }
    let cycles: Result<Vec<Cycle>> = doc
        .cycles
        .iter()
        .map(|c| {
            if c.iter().any(|&(j, i)| j > 6 || i > 2) {
                return Err(corrupt("vertex out of Z_7 x Z_3".to_string()));
            }
            Cycle::new(c.iter().map(|&(j, i)| Vertex::new(j, i)).collect())
        })
        .collect();
    let starter = TwoFactor::new(cycles?)?;
    check_starter(&starter).map_err(|e| corrupt(e.to_string()))?;
    let mut tags: Vec<(u16, u16, u8)> = starter
        .edge_classes()
        .iter()
        .map(|c| {
            let (i, j) = c.groups();
            (i, j, c.difference())
        })
        .collect();
    tags.sort();
    let mut declared = doc.classes.clone();
    declared.sort();
    if tags != declared {
        return Err(corrupt("class tags disagree with the cycles".to_string()));
    }
    Ok(starter)
}

/// The all-heptagon factorization: develops a starter mod 7 into 7
/// pairwise edge-disjoint C7-factors covering all 147 cross edges.
/// With no starter supplied, the bundled one is used.
pub fn c7_uniform_tripartite(starter: Option<&TwoFactor>) -> Result<Factorization> {
    let starter = match starter {
        Some(s) => {
            check_starter(s)?;
            s.clone()
        }
        None => bundled_starter()?,
    };
    let fac = Factorization::new(21, develop_mod7(&starter))?;
    let report = verify_block(&fac, &Ambient::tripartite([0, 1, 2]), 0, 7);
    if !report.accepted() {
        return Err(Error::VerificationFailed {
            component: "c7_uniform_tripartite".to_string(),
            report: report.to_string(),
        });
    }
    Ok(fac)
}

/// The within-part heptagon triple for one K_7: `E_ii(d)` for d = 1, 2, 3.
pub fn part_c7_triple(part: u16) -> Factorization {
    let factors: Vec<TwoFactor> = (1..=3)
        .map(|d| part_hamilton_factor(part, d).expect("d in 1..=3"))
        .collect();
    Factorization::new(7, factors).expect("one part, three Hamilton cycles")
}

/// `(K_{7,7,7}; C3^alpha, C7^{7-alpha})` on the block's groups, for
/// `alpha in {0,1,3,5,7}`; triangle-factors come first. Every output is
/// checked against the tripartite ambient before it is returned.
pub fn tripartite_factorization(block: &TripartiteBlock) -> Result<Factorization> {
    let alpha = block.alpha;
    let local = match alpha {
        0 => c7_uniform_tripartite(None)?,
        1 => {
            let mut factors = vec![triangle_factor_from_triple(0, 0, 0)?];
            for pair in HeptagonPair::ALL {
                let (f1, f2) = heptagon_factor_pair(pair);
                factors.push(f1);
                factors.push(f2);
            }
            Factorization::new(21, factors)?
        }
        3 => {
            let mut factors: Vec<TwoFactor> = (0..3)
                .map(|i| rotated_triangle_factor(i, 0, 1, 6))
                .collect::<Result<_>>()?;
            for pair in [HeptagonPair::D25, HeptagonPair::D34] {
                let (f1, f2) = heptagon_factor_pair(pair);
                factors.push(f1);
                factors.push(f2);
            }
            Factorization::new(21, factors)?
        }
        5 => {
            let mut factors: Vec<TwoFactor> = [
                (0, 1, 6),
                (2, 0, 5),
                (5, 2, 0),
                (6, 6, 2),
                (1, 5, 1),
            ]
            .into_iter()
            .map(|(d0, d1, d2)| triangle_factor_from_triple(d0, d1, d2))
            .collect::<Result<_>>()?;
            let (f1, f2) = heptagon_factor_pair(HeptagonPair::D34);
            factors.push(f1);
            factors.push(f2);
            Factorization::new(21, factors)?
        }
        7 => {
            let mut factors: Vec<TwoFactor> = Vec::with_capacity(7);
            for i in 0..3 {
                factors.push(rotated_triangle_factor(i, 1, 2, 4)?);
            }
            for j in 0..3 {
                factors.push(rotated_triangle_factor(j, 3, 5, 6)?);
            }
            factors.push(triangle_factor_from_triple(0, 0, 0)?);
            Factorization::new(21, factors)?
        }
        other => return Err(Error::InadmissibleAlpha { alpha: other }),
    };
    let fac = if block.groups == [0, 1, 2] {
        local
    } else {
        local.relabel_groups(|i| block.groups[i as usize])?
    };
    let report = verify_block(
        &fac,
        &Ambient::tripartite(block.groups),
        alpha,
        block.beta(),
    );
    if !report.accepted() {
        return Err(Error::VerificationFailed {
            component: format!("tripartite_factorization(alpha={alpha})"),
            report: report.to_string(),
        });
    }
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet};

    #[test]
    fn zero_triple_is_aligned_matching() {
        let f = triangle_factor_from_triple(0, 0, 0).unwrap();
        assert_eq!(f.kind(), FactorKind::C3);
        for l in 0..7u8 {
            let tri = Cycle::new(vec![vx(l, 0), vx(l, 1), vx(l, 2)]).unwrap();
            assert!(f.cycles().contains(&tri), "missing aligned triangle {l}");
        }
    }

    #[test]
    fn triple_124_contains_expected_triangle() {
        let f = triangle_factor_from_triple(1, 2, 4).unwrap();
        let tri = Cycle::new(vec![vx(0, 0), vx(1, 1), vx(3, 2)]).unwrap();
        assert!(f.cycles().contains(&tri));
    }

    #[test]
    fn non_zero_sum_rejected() {
        assert!(matches!(
            triangle_factor_from_triple(1, 2, 3),
            Err(Error::NotZeroSumTriple { .. })
        ));
    }

    #[test]
    fn part_hamilton_orders() {
        let walk = |d: u8| -> Vec<u8> {
            let f = part_hamilton_factor(0, d).unwrap();
            f.cycles()[0].vertices().iter().map(|v| v.residue()).collect()
        };
        assert_eq!(walk(1), vec![0, 1, 2, 3, 4, 5, 6]);
        // canonical orientation picks the smaller neighbor of 0 first
        assert_eq!(walk(2), vec![0, 2, 4, 6, 1, 3, 5]);
        assert_eq!(walk(3), vec![0, 3, 6, 2, 5, 1, 4]);
        assert!(part_hamilton_factor(0, 0).is_err());
        assert!(part_hamilton_factor(0, 4).is_err());
    }

    #[test]
    fn heptagon_pair_16_contains_paper_cycle() {
        let (f1, _) = heptagon_factor_pair(HeptagonPair::D16);
        let want = Cycle::new(vec![
            vx(0, 0),
            vx(1, 1),
            vx(2, 2),
            vx(3, 0),
            vx(4, 1),
            vx(5, 0),
            vx(6, 1),
        ])
        .unwrap();
        assert!(f1.cycles().contains(&want));
    }

    #[test]
    fn heptagon_pair_25_contains_paper_cycle() {
        let (f1, _) = heptagon_factor_pair(HeptagonPair::D25);
        let want = Cycle::new(vec![
            vx(0, 0),
            vx(2, 1),
            vx(4, 2),
            vx(6, 0),
            vx(1, 1),
            vx(3, 0),
            vx(5, 1),
        ])
        .unwrap();
        assert!(f1.cycles().contains(&want));
    }

    #[test]
    fn heptagon_pairs_tile_their_classes() {
        // the union identity is asserted inside the constructor; also check
        // the two factors are edge-disjoint
        for pair in HeptagonPair::ALL {
            let (f1, f2) = heptagon_factor_pair(pair);
            let e1: HashSet<Edge> = f1.edges().collect();
            let e2: HashSet<Edge> = f2.edges().collect();
            assert_eq!(e1.len(), 21);
            assert_eq!(e2.len(), 21);
            assert!(e1.is_disjoint(&e2));
        }
    }

    #[test]
    fn bundled_starter_loads_and_develops() {
        let fac = c7_uniform_tripartite(None).unwrap();
        assert_eq!(fac.factors().len(), 7);
        let edges: HashSet<Edge> = fac.edges().collect();
        assert_eq!(edges.len(), 147);
    }

    #[test]
    fn colliding_starter_names_the_class() {
        // a legitimate C7-factor that reuses E_01(0): development must refuse
        let cycles = vec![
            Cycle::new(vec![
                vx(0, 0), vx(0, 1), vx(0, 2), vx(1, 0), vx(1, 1), vx(1, 2), vx(2, 1),
            ])
            .unwrap(),
            Cycle::new(vec![
                vx(2, 0), vx(2, 2), vx(3, 0), vx(3, 2), vx(4, 0), vx(3, 1), vx(4, 2),
            ])
            .unwrap(),
            Cycle::new(vec![
                vx(5, 0), vx(4, 1), vx(6, 0), vx(5, 1), vx(5, 2), vx(6, 1), vx(6, 2),
            ])
            .unwrap(),
        ];
        let starter = TwoFactor::new(cycles).unwrap();
        match c7_uniform_tripartite(Some(&starter)) {
            Err(Error::StarterClassCollision(c)) => {
                assert_eq!(c, DifferenceClass::new(0, 1, 0).unwrap());
            }
            other => panic!("expected class collision, got {other:?}"),
        }
    }

    #[test]
    fn factorization_catalog_per_alpha() {
        for alpha in [0usize, 1, 3, 5, 7] {
            let fac = tripartite_factorization(&TripartiteBlock::local(alpha)).unwrap();
            assert_eq!(fac.factors().len(), 7);
            assert_eq!(fac.r(), alpha);
            assert_eq!(fac.s(), 7 - alpha);
            // triangle-factors come first
            for (k, f) in fac.factors().iter().enumerate() {
                let want = if k < alpha { FactorKind::C3 } else { FactorKind::C7 };
                assert_eq!(f.kind(), want, "alpha={alpha} factor {k}");
            }
        }
        assert!(matches!(
            tripartite_factorization(&TripartiteBlock::local(2)),
            Err(Error::InadmissibleAlpha { alpha: 2 })
        ));
    }

    #[test]
    fn used_differences_partition_each_pair() {
        // per cross pair, the multiset of differences over all factors is
        // {0..6} with each class appearing its full 7 times
        for alpha in [0usize, 1, 3, 5, 7] {
            let fac = tripartite_factorization(&TripartiteBlock::local(alpha)).unwrap();
            let mut count: HashMap<DifferenceClass, usize> = HashMap::new();
            for f in fac.factors() {
                for c in f.edge_classes() {
                    *count.entry(c).or_insert(0) += 1;
                }
            }
            assert_eq!(count.len(), 21, "alpha={alpha}");
            assert!(count.values().all(|&n| n == 7), "alpha={alpha}");
        }
    }

    #[test]
    fn alpha3_triangle_factors_match_class_recipe() {
        let fac = tripartite_factorization(&TripartiteBlock::local(3)).unwrap();
        for i in 0..3u16 {
            let mut want: Vec<Edge> = Vec::new();
            for (offset, d) in [(0u16, 0u8), (1, 1), (2, 6)] {
                want.extend(expand_difference_class(
                    DifferenceClass::new((i + offset) % 3, (i + offset + 1) % 3, d).unwrap(),
                ));
            }
            want.sort();
            let mut got: Vec<Edge> = fac.factors()[i as usize].edges().collect();
            got.sort();
            assert_eq!(got, want, "alpha=3 factor {i}");
        }
    }

    #[test]
    fn alpha5_uses_listed_triples() {
        let fac = tripartite_factorization(&TripartiteBlock::local(5)).unwrap();
        let want = [(0u8, 1u8, 6u8), (2, 0, 5), (5, 2, 0), (6, 6, 2), (1, 5, 1)];
        for (k, (d0, d1, d2)) in want.into_iter().enumerate() {
            let mut expected: Vec<Edge> = Vec::new();
            for (i, j, d) in [(0u16, 1u16, d0), (1, 2, d1), (2, 0, d2)] {
                expected.extend(expand_difference_class(DifferenceClass::new(i, j, d).unwrap()));
            }
            expected.sort();
            let mut got: Vec<Edge> = fac.factors()[k].edges().collect();
            got.sort();
            assert_eq!(got, expected, "alpha=5 factor {k}");
        }
    }

    #[test]
    fn relabeled_block_verifies_on_its_groups() {
        let block = TripartiteBlock {
            groups: [4, 1, 8],
            alpha: 3,
        };
        let fac = tripartite_factorization(&block).unwrap();
        let groups: HashSet<u16> = fac.vertex_set().iter().map(|v| v.group()).collect();
        assert_eq!(groups, HashSet::from([4, 1, 8]));
    }
}
