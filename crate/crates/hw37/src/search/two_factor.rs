//! Factor-at-a-time backtracking for 2-factorizations with prescribed
//! triangle/heptagon counts. This is the engine behind the open-case
//! probes: HW(21; r, 10-r; 3, 7) for r in {2,4,6} and the even-alpha
//! tripartite gap. Both are open, so the expected outcome is an honest
//! budget exhaustion; any success would be verifier-checked and is worth
//! publishing.

use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::design::{Cycle, Factorization, TwoFactor, Vertex};
use crate::error::{Error, Result};
use crate::search::{Meter, SearchConfig, SearchOutcome};
use crate::verify::{verify_block, Ambient};

/// Ticks allowed to one factor before the attempt restarts.
const FACTOR_TICKS: u64 = 30_000;

/// The ambient graph a 2-factorization search runs on: some groups of 7,
/// with or without the within-group edges.
#[derive(Clone, Debug)]
pub struct SearchGraph {
    pub groups: Vec<u16>,
    pub cross_only: bool,
}

impl SearchGraph {
    pub fn complete_k21() -> Self {
        SearchGraph {
            groups: vec![0, 1, 2],
            cross_only: false,
        }
    }

    pub fn tripartite_block() -> Self {
        SearchGraph {
            groups: vec![0, 1, 2],
            cross_only: true,
        }
    }

    fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self
            .groups
            .iter()
            .flat_map(|&g| (0..7).map(move |j| Vertex::new(j, g)))
            .collect();
        vs.sort();
        vs
    }

    fn ambient(&self) -> Ambient {
        Ambient::custom(self.groups.clone(), self.cross_only)
    }
}

struct FactorSearch {
    m: usize,
    adj: Vec<u32>,
    rng: ChaCha8Rng,
}

impl FactorSearch {
    /// One spanning set of vertex-disjoint `len`-cycles over the available
    /// edges, as index cycles. `None` on dead end or tick exhaustion.
    fn build_factor(
        &mut self,
        len: usize,
        meter: &mut Meter,
        local: &mut u64,
    ) -> Option<Vec<Vec<usize>>> {
        let mut cycles = Vec::with_capacity(self.m / len);
        if self.cover(len, 0, &mut cycles, meter, local) {
            Some(cycles)
        } else {
            None
        }
    }

    fn cover(
        &mut self,
        len: usize,
        covered: u32,
        cycles: &mut Vec<Vec<usize>>,
        meter: &mut Meter,
        local: &mut u64,
    ) -> bool {
        if cycles.len() == self.m / len {
            return true;
        }
        let anchor = (0..self.m).find(|&k| covered & (1 << k) == 0).expect("cover incomplete");
        let mut path = vec![anchor];
        self.grow(len, covered | (1 << anchor), &mut path, cycles, meter, local)
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        len: usize,
        covered: u32,
        path: &mut Vec<usize>,
        cycles: &mut Vec<Vec<usize>>,
        meter: &mut Meter,
        local: &mut u64,
    ) -> bool {
        if *local == 0 || !meter.tick(((cycles.len() as u64) << 32) | covered as u64) {
            return false;
        }
        *local -= 1;
        let last = *path.last().unwrap();
        if path.len() == len {
            // close the cycle back to its anchor
            if self.adj[last] & (1 << path[0]) == 0 {
                return false;
            }
            let cycle = path.clone();
            for w in cycle.windows(2) {
                self.remove_edge(w[0], w[1]);
            }
            self.remove_edge(last, cycle[0]);
            cycles.push(cycle.clone());
            if self.cover(len, covered, cycles, meter, local) {
                return true;
            }
            cycles.pop();
            for w in cycle.windows(2) {
                self.add_edge(w[0], w[1]);
            }
            self.add_edge(last, cycle[0]);
            return false;
        }
        let mut nexts: Vec<usize> = (0..self.m)
            .filter(|&k| covered & (1 << k) == 0 && self.adj[last] & (1 << k) != 0)
            .collect();
        nexts.shuffle(&mut self.rng);
        for next in nexts {
            path.push(next);
            if self.grow(len, covered | (1 << next), path, cycles, meter, local) {
                return true;
            }
            path.pop();
            if *local == 0 || meter.exhausted() {
                return false;
            }
        }
        false
    }

    fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }
}

/// Searches for a 2-factorization of `graph` into `r` triangle-factors
/// followed by `s` heptagon-factors. Factors are built one at a time;
/// a factor that cannot complete within its tick budget restarts the
/// attempt on the seed's next substream. Any returned factorization has
/// passed the independent verifier.
pub fn two_factor_search(
    graph: &SearchGraph,
    r: usize,
    s: usize,
    cfg: &SearchConfig,
) -> SearchOutcome<Factorization> {
    let vertices = graph.vertices();
    let m = vertices.len();
    assert!(m <= 32, "engine uses 32-bit vertex masks");
    let full_adj: Vec<u32> = (0..m)
        .map(|a| {
            let mut mask = 0u32;
            for b in 0..m {
                if a != b && (!graph.cross_only || vertices[a].group() != vertices[b].group()) {
                    mask |= 1 << b;
                }
            }
            mask
        })
        .collect();

    let cap = cfg.budget.node_cap();
    let mut meter = Meter::new(cap);
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);

    let plan: Vec<usize> = std::iter::repeat_n(3, r)
        .chain(std::iter::repeat_n(7, s))
        .collect();

    let found = 'attempts: loop {
        if meter.exhausted() {
            break None;
        }
        let mut search = FactorSearch {
            m,
            adj: full_adj.clone(),
            rng: ChaCha8Rng::seed_from_u64(master.next_u64()),
        };
        let mut factors: Vec<Vec<Vec<usize>>> = Vec::with_capacity(plan.len());
        for &len in &plan {
            let mut local = FACTOR_TICKS;
            match search.build_factor(len, &mut meter, &mut local) {
                Some(cycles) => factors.push(cycles),
                // conflict: restart the whole attempt on a fresh substream
                None => continue 'attempts,
            }
        }
        break Some(factors);
    };

    let result = found.map(|factors| {
        let fac = Factorization::new(
            m,
            factors
                .into_iter()
                .map(|cycles| {
                    TwoFactor::new(
                        cycles
                            .into_iter()
                            .map(|c| {
                                Cycle::new(c.into_iter().map(|k| vertices[k]).collect())
                                    .expect("search cycles are valid")
                            })
                            .collect(),
                    )
                    .expect("search cycles are disjoint")
                })
                .collect(),
        )
        .expect("search factors span the graph");
        let report = verify_block(&fac, &graph.ambient(), r, s);
        assert!(
            report.accepted(),
            "engine produced an invalid factorization:\n{report}"
        );
        fac
    });

    SearchOutcome {
        result,
        seed: cfg.seed,
        node_cap: cap,
        nodes_expanded: meter.nodes(),
        trace_hash: meter.hash(),
    }
}

/// Best-effort hunt for the open cases HW(21; r, 10-r; 3, 7), r in
/// {2,4,6}. Exhaustion is the expected outcome and proves nothing; a
/// success would be a publishable certificate.
pub fn open21_search(r: usize, cfg: &SearchConfig) -> Result<SearchOutcome<Factorization>> {
    if !matches!(r, 2 | 4 | 6) {
        return Err(Error::NotAnOpenCase { r });
    }
    Ok(two_factor_search(
        &SearchGraph::complete_k21(),
        r,
        10 - r,
        cfg,
    ))
}

/// Probes the gap next to the admissible alpha set: does K_{7,7,7} have a
/// 2-factorization with an even number of triangle-factors? Not addressed
/// by the constructions; nothing in this crate depends on the answer.
pub fn tripartite_even_probe(alpha: usize, cfg: &SearchConfig) -> Result<SearchOutcome<Factorization>> {
    if alpha == 0 {
        return Err(Error::NotAnEvenProbe { alpha });
    }
    if !matches!(alpha, 2 | 4 | 6) {
        return Err(Error::NotAnEvenProbe { alpha });
    }
    Ok(two_factor_search(
        &SearchGraph::tripartite_block(),
        alpha,
        7 - alpha,
        cfg,
    ))
}
