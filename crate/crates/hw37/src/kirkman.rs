//! Kirkman triple systems KTS(v) and the blow-up of K_n into
//! K_{7,7,7}-factors plus one K_21-factor.
//!
//! Systems of order 9, 15, 21 and 27 ship as verified data assets; the
//! trivial order 3 is built inline; anything larger goes through the
//! seeded backtracking search in [`crate::search`].

use crate::assets;
use crate::cert::KtsDoc;
use crate::error::{Error, Result};
use crate::search::{self, SearchConfig};
use crate::verify::verify_kts;

/// A resolvable Steiner triple system: `(v-1)/2` parallel classes of
/// `v/3` disjoint triples, every point pair in exactly one triple.
/// Construction re-verifies the definition, so a held value is trusted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KirkmanSystem {
    v: usize,
    classes: Vec<Vec<[usize; 3]>>,
}

impl KirkmanSystem {
    /// Canonicalizes (sorting points in triples, triples in classes,
    /// classes by their triple lists) and verifies pair coverage.
    pub fn new(v: usize, classes: Vec<Vec<[usize; 3]>>) -> Result<Self> {
        let mut classes: Vec<Vec<[usize; 3]>> = classes
            .into_iter()
            .map(|class| {
                let mut class: Vec<[usize; 3]> = class
                    .into_iter()
                    .map(|mut t| {
                        t.sort();
                        t
                    })
                    .collect();
                class.sort();
                class
            })
            .collect();
        classes.sort();
        let system = KirkmanSystem { v, classes };
        let report = verify_kts(&system.to_doc());
        if !report.accepted() {
            return Err(Error::VerificationFailed {
                component: format!("KTS({v})"),
                report: report.to_string(),
            });
        }
        Ok(system)
    }

    /// The one-class system on three points.
    pub fn trivial() -> Self {
        KirkmanSystem {
            v: 3,
            classes: vec![vec![[0, 1, 2]]],
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn classes(&self) -> &[Vec<[usize; 3]>] {
        &self.classes
    }

    pub fn to_doc(&self) -> KtsDoc {
        KtsDoc {
            v: self.v,
            classes: self.classes.clone(),
        }
    }

    pub fn from_doc(doc: &KtsDoc) -> Result<Self> {
        KirkmanSystem::new(doc.v, doc.classes.clone())
    }
}

fn bundled(v: usize) -> Option<(&'static str, &'static str)> {
    match v {
        9 => Some(("kts9.json", assets::KTS_9)),
        15 => Some(("kts15.json", assets::KTS_15)),
        21 => Some(("kts21.json", assets::KTS_21)),
        27 => Some(("kts27.json", assets::KTS_27)),
        _ => None,
    }
}

/// A Kirkman triple system of order `v ≡ 3 (mod 6)`: trivial for v = 3,
/// a bundled verified asset for v in {9, 15, 21, 27}, and a budgeted
/// search beyond that.
pub fn kirkman_triple_system(v: usize) -> Result<KirkmanSystem> {
    if v < 3 || v % 6 != 3 {
        return Err(Error::BadKirkmanOrder { v });
    }
    if v == 3 {
        return Ok(KirkmanSystem::trivial());
    }
    if let Some((name, embedded)) = bundled(v) {
        let text = assets::load(name, embedded)?;
        let doc = KtsDoc::from_json(&text).map_err(|e| Error::AssetCorrupt {
            name: name.to_string(),
            reason: e.to_string(),
        })?;
        if doc.v != v {
            return Err(Error::AssetCorrupt {
                name: name.to_string(),
                reason: format!("asset claims v={}, wanted {v}", doc.v),
            });
        }
        return KirkmanSystem::from_doc(&doc).map_err(|e| Error::AssetCorrupt {
            name: name.to_string(),
            reason: e.to_string(),
        });
    }
    let outcome = search::resolvable_sts_search(v, &SearchConfig::default())?;
    match outcome.result {
        Some(system) => Ok(system),
        None => Err(Error::SearchExhausted {
            target: format!("KTS({v})"),
            nodes: outcome.nodes_expanded,
        }),
    }
}

/// How K_n splits into complete blocks once a KTS(6t+3) is blown up by 7:
/// `3t` factors of K_{7,7,7} blocks and one spanning set of K_21 blocks.
/// Triples are triples of ambient group indices.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub n: usize,
    pub tripartite_block_factors: Vec<Vec<[u16; 3]>>,
    pub k21_blocks: Vec<[u16; 3]>,
}

/// Replaces each KTS point with a group of 7 vertices. The first parallel
/// class (in canonical order) becomes the K_21 class: its blocks keep the
/// within-group edges. Every remaining class becomes a K_{7,7,7}-factor.
pub fn blow_up(kts: &KirkmanSystem) -> BlockDecomposition {
    let to_groups = |class: &Vec<[usize; 3]>| -> Vec<[u16; 3]> {
        class
            .iter()
            .map(|t| [t[0] as u16, t[1] as u16, t[2] as u16])
            .collect()
    };
    let k21_blocks = to_groups(&kts.classes()[0]);
    let tripartite_block_factors = kts.classes()[1..].iter().map(to_groups).collect();
    BlockDecomposition {
        n: 7 * kts.v(),
        tripartite_block_factors,
        k21_blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent pair-coverage oracle: brute-force enumeration of all
    /// pairs in all triples, none missing, none doubled.
    fn pair_oracle(v: usize, classes: &[Vec<[usize; 3]>]) {
        let mut seen = HashSet::new();
        for class in classes {
            let mut points: Vec<usize> = class.iter().flatten().copied().collect();
            points.sort();
            assert_eq!(points, (0..v).collect::<Vec<_>>(), "class not a partition");
            for t in class {
                for a in 0..3 {
                    for b in (a + 1)..3 {
                        assert!(seen.insert((t[a].min(t[b]), t[a].max(t[b]))));
                    }
                }
            }
        }
        assert_eq!(seen.len(), v * (v - 1) / 2);
    }

    #[test]
    fn trivial_system() {
        let k = kirkman_triple_system(3).unwrap();
        assert_eq!(k.classes(), &[vec![[0, 1, 2]]]);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(kirkman_triple_system(7).is_err());
        assert!(kirkman_triple_system(12).is_err());
    }

    #[test]
    fn bundled_v9_is_affine_shaped() {
        let k = kirkman_triple_system(9).unwrap();
        assert_eq!(k.classes().len(), 4);
        let triples: usize = k.classes().iter().map(|c| c.len()).sum();
        assert_eq!(triples, 12);
        pair_oracle(9, k.classes());
    }

    #[test]
    fn bundled_v15_covers_105_pairs() {
        let k = kirkman_triple_system(15).unwrap();
        assert_eq!(k.classes().len(), 7);
        let triples: usize = k.classes().iter().map(|c| c.len()).sum();
        assert_eq!(triples, 35);
        pair_oracle(15, k.classes());
    }

    #[test]
    fn bundled_v21_and_v27_verify() {
        for v in [21, 27] {
            let k = kirkman_triple_system(v).unwrap();
            assert_eq!(k.classes().len(), (v - 1) / 2);
            pair_oracle(v, k.classes());
        }
    }

    #[test]
    fn mutated_triple_breaks_pair_coverage() {
        let k = kirkman_triple_system(9).unwrap();
        let mut classes = k.classes().to_vec();
        classes[1][0] = [0, 1, 3];
        assert!(matches!(
            KirkmanSystem::new(9, classes),
            Err(Error::VerificationFailed { .. })
        ));
    }

    #[test]
    fn blow_up_degenerate_t0() {
        let bd = blow_up(&KirkmanSystem::trivial());
        assert_eq!(bd.n, 21);
        assert!(bd.tripartite_block_factors.is_empty());
        assert_eq!(bd.k21_blocks, vec![[0, 1, 2]]);
    }

    #[test]
    fn blow_up_v9_edge_accounting() {
        let kts = kirkman_triple_system(9).unwrap();
        let bd = blow_up(&kts);
        assert_eq!(bd.n, 63);
        assert_eq!(bd.tripartite_block_factors.len(), 3);
        assert_eq!(bd.k21_blocks.len(), 3);
        // 3 factors x 3 blocks x 147 cross edges + 3 blocks x 210 = |E(K_63)|
        let cross: usize = bd
            .tripartite_block_factors
            .iter()
            .map(|f| f.len() * 147)
            .sum();
        let within = bd.k21_blocks.len() * 210;
        assert_eq!(cross + within, 63 * 62 / 2);
        // every group pair in exactly one block
        let mut pairs = HashSet::new();
        let all_blocks = bd
            .tripartite_block_factors
            .iter()
            .flatten()
            .chain(bd.k21_blocks.iter());
        for b in all_blocks {
            for a in 0..3 {
                for c in (a + 1)..3 {
                    assert!(pairs.insert((b[a].min(b[c]), b[a].max(b[c]))));
                }
            }
        }
        assert_eq!(pairs.len(), 9 * 8 / 2);
    }
}
