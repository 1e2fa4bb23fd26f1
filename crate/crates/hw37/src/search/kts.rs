//! Class-by-class backtracking for resolvable Steiner triple systems.
//!
//! Symmetry seeding fixes the first parallel class to the canonical
//! consecutive partition. Classes are then found by randomized exact-cover
//! DFS over the unused pairs; the last few classes are solved by full
//! backtracking (the greedy endgame is where naive class-at-a-time search
//! dies), and any dead attempt restarts from the seed's next substream.

use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kirkman::KirkmanSystem;
use crate::search::{Meter, SearchConfig, SearchOutcome};

/// Ticks allowed to a single greedy class before the attempt is abandoned.
const CLASS_TICKS: u64 = 2_000;
/// Ticks allowed to the exhaustive endgame of one attempt.
const ENDGAME_TICKS: u64 = 100_000;
/// Number of final classes solved exactly rather than greedily.
const ENDGAME_CLASSES: usize = 3;

struct PairMatrix {
    v: usize,
    used: Vec<bool>,
}

impl PairMatrix {
    fn new(v: usize) -> Self {
        PairMatrix {
            v,
            used: vec![false; v * v],
        }
    }

    fn is_used(&self, a: usize, b: usize) -> bool {
        self.used[a * self.v + b]
    }

    fn set(&mut self, t: &[usize; 3], value: bool) {
        for x in 0..3 {
            for y in (x + 1)..3 {
                self.used[t[x] * self.v + t[y]] = value;
                self.used[t[y] * self.v + t[x]] = value;
            }
        }
    }
}

/// One parallel class by randomized DFS over free pairs; `None` on dead
/// end or tick exhaustion.
fn build_class(
    v: usize,
    pairs: &mut PairMatrix,
    rng: &mut ChaCha8Rng,
    meter: &mut Meter,
    local: &mut u64,
) -> Option<Vec<[usize; 3]>> {
    let mut class: Vec<[usize; 3]> = Vec::with_capacity(v / 3);
    if dfs_class(v, pairs, rng, meter, local, &mut class, 0u128) {
        Some(class)
    } else {
        None
    }
}

fn dfs_class(
    v: usize,
    pairs: &mut PairMatrix,
    rng: &mut ChaCha8Rng,
    meter: &mut Meter,
    local: &mut u64,
    class: &mut Vec<[usize; 3]>,
    covered: u128,
) -> bool {
    if class.len() == v / 3 {
        return true;
    }
    if *local == 0 || !meter.tick(covered as u64) {
        return false;
    }
    *local -= 1;
    let x = (0..v).find(|&p| covered & (1 << p) == 0).expect("incomplete class has free points");
    let rest: Vec<usize> = ((x + 1)..v)
        .filter(|&y| covered & (1 << y) == 0 && !pairs.is_used(x, y))
        .collect();
    let mut cands: Vec<(usize, usize)> = Vec::new();
    for (i, &y) in rest.iter().enumerate() {
        for &z in &rest[(i + 1)..] {
            if !pairs.is_used(y, z) {
                cands.push((y, z));
            }
        }
    }
    cands.shuffle(rng);
    for (y, z) in cands {
        let t = [x, y, z];
        pairs.set(&t, true);
        class.push(t);
        if dfs_class(
            v,
            pairs,
            rng,
            meter,
            local,
            class,
            covered | (1 << x) | (1 << y) | (1 << z),
        ) {
            return true;
        }
        class.pop();
        pairs.set(&t, false);
        if *local == 0 || meter.exhausted() {
            return false;
        }
    }
    false
}

/// Exact backtracking over the last `left` classes: classes are built the
/// same way but failure unwinds into earlier classes of the endgame
/// instead of abandoning the attempt.
fn endgame(
    v: usize,
    pairs: &mut PairMatrix,
    left: usize,
    rng: &mut ChaCha8Rng,
    meter: &mut Meter,
    local: &mut u64,
    out: &mut Vec<Vec<[usize; 3]>>,
) -> bool {
    if left == 0 {
        return true;
    }
    let mut class: Vec<[usize; 3]> = Vec::with_capacity(v / 3);
    endgame_class(v, pairs, left, rng, meter, local, out, &mut class, 0u128)
}

#[allow(clippy::too_many_arguments)]
fn endgame_class(
    v: usize,
    pairs: &mut PairMatrix,
    left: usize,
    rng: &mut ChaCha8Rng,
    meter: &mut Meter,
    local: &mut u64,
    out: &mut Vec<Vec<[usize; 3]>>,
    class: &mut Vec<[usize; 3]>,
    covered: u128,
) -> bool {
    if class.len() == v / 3 {
        out.push(class.clone());
        if endgame(v, pairs, left - 1, rng, meter, local, out) {
            return true;
        }
        out.pop();
        return false;
    }
    if *local == 0 || !meter.tick((left as u64) << 56 | covered as u64) {
        return false;
    }
    *local -= 1;
    let x = (0..v).find(|&p| covered & (1 << p) == 0).expect("incomplete class has free points");
    let rest: Vec<usize> = ((x + 1)..v)
        .filter(|&y| covered & (1 << y) == 0 && !pairs.is_used(x, y))
        .collect();
    let mut cands: Vec<(usize, usize)> = Vec::new();
    for (i, &y) in rest.iter().enumerate() {
        for &z in &rest[(i + 1)..] {
            if !pairs.is_used(y, z) {
                cands.push((y, z));
            }
        }
    }
    cands.shuffle(rng);
    for (y, z) in cands {
        let t = [x, y, z];
        pairs.set(&t, true);
        class.push(t);
        if endgame_class(
            v,
            pairs,
            left,
            rng,
            meter,
            local,
            out,
            class,
            covered | (1 << x) | (1 << y) | (1 << z),
        ) {
            return true;
        }
        class.pop();
        pairs.set(&t, false);
        if *local == 0 || meter.exhausted() {
            return false;
        }
    }
    false
}

/// Seeded, budgeted search for a KTS(v). Every success is re-verified by
/// [`KirkmanSystem::new`] before being surfaced; exhaustion reports the
/// nodes spent and proves nothing.
pub fn resolvable_sts_search(v: usize, cfg: &SearchConfig) -> Result<SearchOutcome<KirkmanSystem>> {
    if v < 3 || v % 6 != 3 || v > 120 {
        return Err(Error::BadKirkmanOrder { v });
    }
    let cap = cfg.budget.node_cap();
    let mut meter = Meter::new(cap);
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);

    if v == 3 {
        return Ok(SearchOutcome {
            result: Some(KirkmanSystem::trivial()),
            seed: cfg.seed,
            node_cap: cap,
            nodes_expanded: 0,
            trace_hash: meter.hash(),
        });
    }

    let nclasses = (v - 1) / 2;
    let endgame_depth = ENDGAME_CLASSES.min(nclasses - 1);
    let greedy_classes = nclasses - 1 - endgame_depth;

    let result = 'attempts: loop {
        if meter.exhausted() {
            break None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(master.next_u64());
        let mut pairs = PairMatrix::new(v);
        let seed_class: Vec<[usize; 3]> = (0..v / 3).map(|k| [3 * k, 3 * k + 1, 3 * k + 2]).collect();
        for t in &seed_class {
            pairs.set(t, true);
        }
        let mut classes = vec![seed_class];

        for _ in 0..greedy_classes {
            let mut local = CLASS_TICKS;
            match build_class(v, &mut pairs, &mut rng, &mut meter, &mut local) {
                Some(class) => {
                    for t in &class {
                        pairs.set(t, true);
                    }
                    classes.push(class);
                }
                None => continue 'attempts,
            }
        }

        let mut tail: Vec<Vec<[usize; 3]>> = Vec::new();
        let mut local = ENDGAME_TICKS;
        if endgame(v, &mut pairs, endgame_depth, &mut rng, &mut meter, &mut local, &mut tail) {
            classes.extend(tail);
            break Some(KirkmanSystem::new(v, classes)?);
        }
    };

    Ok(SearchOutcome {
        result,
        seed: cfg.seed,
        node_cap: cap,
        nodes_expanded: meter.nodes(),
        trace_hash: meter.hash(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::Budget;
    use crate::verify::verify_kts;

    #[test]
    fn v3_is_immediate() {
        let out = resolvable_sts_search(3, &SearchConfig::default()).unwrap();
        assert_eq!(out.nodes_expanded, 0);
        assert!(out.result.is_some());
    }

    #[test]
    fn rejects_bad_order() {
        assert!(resolvable_sts_search(8, &SearchConfig::default()).is_err());
    }

    #[test]
    fn finds_kts9_from_scratch() {
        let out = resolvable_sts_search(9, &SearchConfig::new(1, Budget::Nodes(2_000_000))).unwrap();
        let system = out.result.expect("KTS(9) is easy");
        assert_eq!(system.classes().len(), 4);
        assert!(verify_kts(&system.to_doc()).accepted());
    }

    #[test]
    fn finds_kts15_with_seeding() {
        let out =
            resolvable_sts_search(15, &SearchConfig::new(1, Budget::Nodes(80_000_000))).unwrap();
        let system = out.result.expect("KTS(15) search should land within the cap");
        assert_eq!(system.classes().len(), 7);
        assert!(verify_kts(&system.to_doc()).accepted());
        // same pair coverage law as the bundled asset, not the same system
        let bundled = crate::kirkman::kirkman_triple_system(15).unwrap();
        assert_eq!(bundled.classes().len(), system.classes().len());
    }

    #[test]
    fn deterministic_traces() {
        let cfg = SearchConfig::new(11, Budget::Nodes(50_000));
        let a = resolvable_sts_search(15, &cfg).unwrap();
        let b = resolvable_sts_search(15, &cfg).unwrap();
        assert_eq!(a.nodes_expanded, b.nodes_expanded);
        assert_eq!(a.trace_hash, b.trace_hash);
    }
}
