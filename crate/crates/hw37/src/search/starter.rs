//! Backtracking search for a cyclic starter: a C7-factor of K_{7,7,7}
//! whose 21 edges occupy all 21 cross difference classes exactly once.
//! Developing such a factor mod 7 tiles the whole block into 7
//! heptagon-factors, which is the alpha = 0 ingredient.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::design::{Cycle, TwoFactor, Vertex};
use crate::search::{Meter, SearchConfig, SearchOutcome};
use crate::tripartite::c7_uniform_tripartite;

/// Part patterns for one heptagon: length-7 sequences over {0,1,2} with no
/// two cyclically adjacent entries equal. Any tripartite 7-cycle follows
/// one of these, so each part shows up 1, 2 or 3 times.
pub fn part_patterns() -> Vec<[u8; 7]> {
    let mut out = Vec::new();
    for code in 0..3u32.pow(7) {
        let mut pat = [0u8; 7];
        let mut c = code;
        for slot in pat.iter_mut() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        if (0..7).all(|k| pat[k] != pat[(k + 1) % 7]) {
            out.push(pat);
        }
    }
    out
}

fn class_index(a: (u8, u8), b: (u8, u8)) -> usize {
    // (residue, part) pairs; part pair ranks: (0,1)=0, (0,2)=1, (1,2)=2
    let ((ra, pa), (rb, pb)) = if a.1 <= b.1 { (a, b) } else { (b, a) };
    let pair = match (pa, pb) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("within-part edge in starter search"),
    };
    let d = ((7 + rb - ra) % 7) as usize;
    pair * 7 + d
}

struct StarterSearch<'a> {
    rng: ChaCha8Rng,
    meter: Meter,
    patterns: Vec<[u8; 7]>,
    used_vertices: u32,
    used_classes: u32,
    cycles: Vec<Vec<(u8, u8)>>,
    current: Vec<(u8, u8)>,
    observer: Option<&'a mut dyn FnMut(&[(u8, u8)], u32)>,
}

impl<'a> StarterSearch<'a> {
    fn vertex_bit(v: (u8, u8)) -> u32 {
        1u32 << (v.1 as u32 * 7 + v.0 as u32)
    }

    fn run(&mut self) -> Option<Vec<Vec<(u8, u8)>>> {
        self.start_cycle()
    }

    /// Anchors a new cycle at the minimum unused vertex and tries each
    /// compatible part pattern.
    fn start_cycle(&mut self) -> Option<Vec<Vec<(u8, u8)>>> {
        if self.cycles.len() == 3 {
            return Some(self.cycles.clone());
        }
        let anchor = (0..21)
            .find(|&k| self.used_vertices & (1 << k) == 0)
            .map(|k| ((k % 7) as u8, (k / 7) as u8))
            .expect("fewer than 3 cycles leaves unused vertices");
        let mut order: Vec<usize> = (0..self.patterns.len()).collect();
        order.shuffle(&mut self.rng);
        for pi in order {
            let pat = self.patterns[pi];
            if pat[0] != anchor.1 {
                continue;
            }
            // capacity pruning: pattern may not demand more of a part
            // than remains unused
            let mut need = [0u8; 3];
            for &p in &pat {
                need[p as usize] += 1;
            }
            let fits = (0..3).all(|part| {
                let free = (0..7)
                    .filter(|&j| self.used_vertices & Self::vertex_bit((j, part as u8)) == 0)
                    .count() as u8;
                need[part] <= free
            });
            if !fits {
                continue;
            }
            self.current.push(anchor);
            self.used_vertices |= Self::vertex_bit(anchor);
            if let Some(hit) = self.extend(&pat, 1) {
                return Some(hit);
            }
            self.used_vertices &= !Self::vertex_bit(anchor);
            self.current.pop();
            if self.meter.exhausted() {
                return None;
            }
        }
        None
    }

    fn extend(&mut self, pat: &[u8; 7], pos: usize) -> Option<Vec<Vec<(u8, u8)>>> {
        if !self.meter.tick(((self.cycles.len() as u64) << 8) | pos as u64) {
            return None;
        }
        if let Some(obs) = self.observer.as_mut() {
            obs(&self.current, self.used_classes);
        }
        if pos == 7 {
            let close = class_index(self.current[6], self.current[0]);
            if self.used_classes & (1 << close) != 0 {
                return None;
            }
            self.used_classes |= 1 << close;
            self.cycles.push(self.current.clone());
            let saved = std::mem::take(&mut self.current);
            if let Some(hit) = self.start_cycle() {
                return Some(hit);
            }
            self.current = saved;
            self.cycles.pop();
            self.used_classes &= !(1 << close);
            return None;
        }
        let part = pat[pos];
        let mut residues: Vec<u8> = (0..7)
            .filter(|&j| self.used_vertices & Self::vertex_bit((j, part)) == 0)
            .collect();
        residues.shuffle(&mut self.rng);
        for j in residues {
            let v = (j, part);
            let step = class_index(*self.current.last().unwrap(), v);
            if self.used_classes & (1 << step) != 0 {
                continue; // class reuse is never extended
            }
            self.used_classes |= 1 << step;
            self.used_vertices |= Self::vertex_bit(v);
            self.current.push(v);
            if let Some(hit) = self.extend(pat, pos + 1) {
                return Some(hit);
            }
            self.current.pop();
            self.used_vertices &= !Self::vertex_bit(v);
            self.used_classes &= !(1 << step);
            if self.meter.exhausted() {
                return None;
            }
        }
        None
    }
}

fn run_search(
    cfg: &SearchConfig,
    observer: Option<&mut dyn FnMut(&[(u8, u8)], u32)>,
) -> SearchOutcome<TwoFactor> {
    let mut search = StarterSearch {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        meter: Meter::new(cfg.budget.node_cap()),
        patterns: part_patterns(),
        used_vertices: 0,
        used_classes: 0,
        cycles: Vec::new(),
        current: Vec::new(),
        observer,
    };
    let raw = search.run();
    let result = raw.map(|cycles| {
        let factor = TwoFactor::new(
            cycles
                .into_iter()
                .map(|c| {
                    Cycle::new(
                        c.into_iter()
                            .map(|(j, i)| Vertex::new(j, i as u16))
                            .collect(),
                    )
                    .expect("search emits valid cycles")
                })
                .collect(),
        )
        .expect("search emits disjoint cycles");
        // independent gate: the developed factorization must verify
        c7_uniform_tripartite(Some(&factor)).expect("searched starter develops cleanly");
        factor
    });
    SearchOutcome {
        result,
        seed: cfg.seed,
        node_cap: cfg.budget.node_cap(),
        nodes_expanded: search.meter.nodes(),
        trace_hash: search.meter.hash(),
    }
}

/// Searches for a cyclic starter. On success the returned factor has
/// already been developed and verifier-checked; on exhaustion the outcome
/// is inconclusive (existence is not disproved).
pub fn starter_c7_search(cfg: &SearchConfig) -> SearchOutcome<TwoFactor> {
    run_search(cfg, None)
}
