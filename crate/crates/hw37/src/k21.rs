//! 2-factorizations of K_21 into `gamma` triangle-factors and
//! `10 - gamma` heptagon-factors, gamma in {0,1,3,5,7,8,9,10}.
//!
//! gamma <= 7 composes a tripartite factorization with the three
//! within-part heptagon-factors. gamma = 8 and 9 develop explicit base
//! triangle-factors mod 7 and top up with fixed difference-class factors.
//! gamma = 10 is a Kirkman triple system read as triangle-factors.
//! gamma in {2,4,6} is open; the search lab probes it, nothing here
//! claims it.

use crate::design::{
    disjoint_union, develop_mod7, merge_edge_disjoint, Cycle, Factorization, TwoFactor, Vertex,
};
use crate::error::{Error, Result};
use crate::kirkman::kirkman_triple_system;
use crate::tripartite::{
    part_c7_triple, part_hamilton_factor, triangle_factor_from_triple, tripartite_factorization,
    TripartiteBlock,
};
use crate::verify::{verify_block, Ambient};

/// Which K_21 factorization to build and where to put it.
#[derive(Clone, Copy, Debug)]
pub struct K21Plan {
    pub gamma: usize,
    pub groups: [u16; 3],
}

impl K21Plan {
    pub fn local(gamma: usize) -> Self {
        K21Plan {
            gamma,
            groups: [0, 1, 2],
        }
    }

    pub fn delta(&self) -> usize {
        10 - self.gamma
    }
}

pub const ADMISSIBLE_GAMMA: [usize; 8] = [0, 1, 3, 5, 7, 8, 9, 10];

fn vx(j: u8, i: u16) -> Vertex {
    Vertex::new(j, i)
}

fn triangles(spec: &[[(u8, u16); 3]]) -> TwoFactor {
    let cycles: Vec<Cycle> = spec
        .iter()
        .map(|t| Cycle::new(t.iter().map(|&(j, i)| vx(j, i)).collect()).expect("fixture triangle"))
        .collect();
    TwoFactor::new(cycles).expect("fixture factor")
}

/// Base triangle-factor for the gamma = 8 construction; its orbit under
/// development mod 7 supplies 7 of the 8 triangle-factors. Its 21 edges
/// occupy 21 distinct difference classes, which is exactly why the orbit
/// is edge-disjoint.
pub fn gamma8_base_factor() -> TwoFactor {
    triangles(&[
        [(0, 0), (1, 0), (2, 1)],
        [(1, 1), (4, 1), (5, 2)],
        [(1, 2), (6, 2), (3, 0)],
        [(2, 0), (6, 1), (4, 2)],
        [(4, 0), (0, 1), (3, 2)],
        [(5, 0), (3, 1), (2, 2)],
        [(6, 0), (5, 1), (0, 2)],
    ])
}

/// Base triangle-factor for the gamma = 9 construction.
pub fn gamma9_base_factor() -> TwoFactor {
    triangles(&[
        [(0, 0), (1, 0), (6, 1)],
        [(0, 1), (1, 1), (4, 2)],
        [(0, 2), (2, 2), (3, 0)],
        [(2, 0), (4, 0), (4, 1)],
        [(3, 1), (5, 1), (3, 2)],
        [(5, 2), (6, 2), (5, 0)],
        [(6, 0), (2, 1), (1, 2)],
    ])
}

/// Heptagon-factor made of one within-part Hamilton cycle per part, with
/// differences `ds = (d_0, d_1, d_2)`.
fn within_c7_factor(ds: [u8; 3]) -> TwoFactor {
    let cycles: Vec<Cycle> = ds
        .iter()
        .enumerate()
        .map(|(part, &d)| {
            part_hamilton_factor(part as u16, d).expect("d in 1..=3").cycles()[0].clone()
        })
        .collect();
    TwoFactor::new(cycles).expect("parts are disjoint")
}

/// The three within-part heptagon-factors of `⋃ K_{V_i}`: factor k pairs
/// difference k+1 across all three parts.
pub fn within_part_c7_factors() -> Factorization {
    disjoint_union(&[part_c7_triple(0), part_c7_triple(1), part_c7_triple(2)])
        .expect("parts are vertex-disjoint")
}

/// `(K_21; C3^gamma, C7^{10-gamma})` on the plan's groups; triangle-factors
/// first. Checked against the 21-vertex complete ambient before returning.
pub fn k21_factorization(plan: &K21Plan) -> Result<Factorization> {
    let gamma = plan.gamma;
    let local = match gamma {
        0 | 1 | 3 | 5 | 7 => {
            let block = tripartite_factorization(&TripartiteBlock::local(gamma))?;
            merge_edge_disjoint(&block, &within_part_c7_factors())?
        }
        8 => {
            let mut factors = develop_mod7(&gamma8_base_factor());
            factors.push(triangle_factor_from_triple(0, 0, 0)?);
            factors.push(within_c7_factor([2, 1, 1]));
            factors.push(within_c7_factor([3, 2, 3]));
            Factorization::new(21, factors)?
        }
        9 => {
            let mut factors = develop_mod7(&gamma9_base_factor());
            factors.push(triangle_factor_from_triple(1, 2, 4)?);
            factors.push(triangle_factor_from_triple(4, 1, 2)?);
            factors.push(within_c7_factor([3, 3, 3]));
            Factorization::new(21, factors)?
        }
        10 => {
            let kts = kirkman_triple_system(21)?;
            let factors: Result<Vec<TwoFactor>> = kts
                .classes()
                .iter()
                .map(|class| {
                    let cycles: Result<Vec<Cycle>> = class
                        .iter()
                        .map(|t| {
                            Cycle::new(
                                t.iter()
                                    .map(|&p| vx((p % 7) as u8, (p / 7) as u16))
                                    .collect(),
                            )
                        })
                        .collect();
                    TwoFactor::new(cycles?)
                })
                .collect();
            Factorization::new(21, factors?)?
        }
        other => return Err(Error::InadmissibleGamma { gamma: other }),
    };
    let fac = if plan.groups == [0, 1, 2] {
        local
    } else {
        local.relabel_groups(|i| plan.groups[i as usize])?
    };
    let report = verify_block(&fac, &Ambient::block_k21(plan.groups), gamma, plan.delta());
    if !report.accepted() {
        return Err(Error::VerificationFailed {
            component: format!("k21_factorization(gamma={gamma})"),
            report: report.to_string(),
        });
    }
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{expand_difference_class, DifferenceClass, Edge, FactorKind};
    use std::collections::{HashMap, HashSet};

    #[test]
    fn catalog_per_gamma() {
        for gamma in ADMISSIBLE_GAMMA {
            let fac = k21_factorization(&K21Plan::local(gamma)).unwrap();
            assert_eq!(fac.factors().len(), 10, "gamma={gamma}");
            assert_eq!(fac.r(), gamma);
            assert_eq!(fac.s(), 10 - gamma);
            let edges: HashSet<Edge> = fac.edges().collect();
            assert_eq!(edges.len(), 210, "gamma={gamma}: 10 x 21 = |E(K_21)|");
        }
        assert!(matches!(
            k21_factorization(&K21Plan::local(2)),
            Err(Error::InadmissibleGamma { gamma: 2 })
        ));
    }

    #[test]
    fn gamma8_base_matches_fixture_triangles() {
        let base = gamma8_base_factor();
        for tri in [
            Cycle::new(vec![vx(0, 0), vx(1, 0), vx(2, 1)]).unwrap(),
            Cycle::new(vec![vx(6, 0), vx(5, 1), vx(0, 2)]).unwrap(),
        ] {
            assert!(base.cycles().contains(&tri));
        }
        // developing once shifts the first triangle to (1_0, 2_0, 3_1)
        let shifted = base.shift_residues(1);
        let want = Cycle::new(vec![vx(1, 0), vx(2, 0), vx(3, 1)]).unwrap();
        assert!(shifted.cycles().contains(&want));
    }

    #[test]
    fn gamma8_base_occupies_the_expected_classes() {
        let base = gamma8_base_factor();
        let classes: HashSet<DifferenceClass> = base.edge_classes().into_iter().collect();
        assert_eq!(classes.len(), 21, "development disjointness witness");
        let mut want: HashSet<DifferenceClass> = HashSet::new();
        for d in 1..=6 {
            want.insert(DifferenceClass::new(0, 1, d).unwrap());
            want.insert(DifferenceClass::new(1, 2, d).unwrap());
            want.insert(DifferenceClass::new(2, 0, d).unwrap());
        }
        want.insert(DifferenceClass::new(0, 0, 1).unwrap());
        want.insert(DifferenceClass::new(1, 1, 3).unwrap());
        want.insert(DifferenceClass::new(2, 2, 2).unwrap());
        assert_eq!(classes, want);
    }

    #[test]
    fn gamma9_base_has_distinct_classes() {
        let classes: HashSet<DifferenceClass> =
            gamma9_base_factor().edge_classes().into_iter().collect();
        assert_eq!(classes.len(), 21);
    }

    #[test]
    fn gamma9_final_heptagon_factor_is_the_uniform_triple() {
        let fac = k21_factorization(&K21Plan::local(9)).unwrap();
        let last = &fac.factors()[9];
        assert_eq!(last.kind(), FactorKind::C7);
        let mut want: Vec<Edge> = Vec::new();
        for part in 0..3u16 {
            want.extend(expand_difference_class(
                DifferenceClass::new(part, part, 3).unwrap(),
            ));
        }
        want.sort();
        let mut got: Vec<Edge> = last.edges().collect();
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn developed_gammas_cover_catalog_uniformly() {
        // every one of the 30 classes is hit exactly 7 times (once per edge)
        for gamma in [8usize, 9] {
            let fac = k21_factorization(&K21Plan::local(gamma)).unwrap();
            let mut count: HashMap<DifferenceClass, usize> = HashMap::new();
            for f in fac.factors() {
                for c in f.edge_classes() {
                    *count.entry(c).or_insert(0) += 1;
                }
            }
            assert_eq!(count.len(), 30, "gamma={gamma}");
            assert!(count.values().all(|&n| n == 7), "gamma={gamma}");
        }
    }

    #[test]
    fn low_gamma_agrees_with_manual_composition() {
        for gamma in [0usize, 1, 3, 5, 7] {
            let fac = k21_factorization(&K21Plan::local(gamma)).unwrap();
            let manual = merge_edge_disjoint(
                &tripartite_factorization(&TripartiteBlock::local(gamma)).unwrap(),
                &within_part_c7_factors(),
            )
            .unwrap();
            assert_eq!(fac.factors(), manual.factors(), "gamma={gamma}");
        }
    }

    #[test]
    fn relabeled_plan_lands_on_its_groups() {
        let plan = K21Plan {
            gamma: 8,
            groups: [3, 6, 11],
        };
        let fac = k21_factorization(&plan).unwrap();
        let groups: HashSet<u16> = fac.vertex_set().iter().map(|v| v.group()).collect();
        assert_eq!(groups, HashSet::from([3, 6, 11]));
    }
}
