//! End-to-end pipeline: which HW(n; r, s; 3, 7) exist, how the triangle
//! budget r splits into per-block parameters, and the assembly of a full
//! K_n certificate out of blown-up Kirkman systems, tripartite blocks and
//! K_21 blocks.
//!
//! For n = 42t + 21 the factorization carries 3t K_{7,7,7}-factors (block
//! i contributing alpha_i triangle-factors) and one K_21-factor
//! (contributing gamma), so r = gamma + sum(alpha_i). The case table maps
//! (n, r) to an admissible split. Two of its b = 2 rows are used with
//! their gamma values swapped relative to the obvious assignment: the
//! checksum gamma + sum(alpha_i) = r forces the swap, and the regression
//! tests pin both repaired rows.

use std::fmt;

use crate::design::{disjoint_union, merge_edge_disjoint, Factorization};
use crate::error::{Error, Result};
use crate::k21::{k21_factorization, K21Plan, ADMISSIBLE_GAMMA};
use crate::kirkman::{blow_up, kirkman_triple_system};
use crate::tripartite::{tripartite_factorization, TripartiteBlock};
use crate::verify::verify_factorization;

pub const ADMISSIBLE_ALPHA: [usize; 5] = [0, 1, 3, 5, 7];

/// The r values for which this crate can build an HW(n; r, s; 3, 7).
/// Empty unless n ≡ 21 (mod 42). For n = 21 the three open cases are
/// excluded; for larger orders every r up to (n-1)/2 is constructible,
/// including the uniform endpoints.
pub fn feasible_r(n: usize) -> Vec<usize> {
    if n % 42 != 21 {
        return Vec::new();
    }
    if n == 21 {
        return ADMISSIBLE_GAMMA.to_vec();
    }
    (0..=(n - 1) / 2).collect()
}

/// A split of the triangle budget: `r = gamma + sum(alphas)`, every alpha
/// in {0,1,3,5,7}, gamma in {0,1,3,5,7,8,9,10}, one alpha per
/// K_{7,7,7}-factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssignmentPlan {
    pub t: usize,
    pub r: usize,
    /// r = 7a + b with 0 <= b < 7.
    pub a: usize,
    pub b: usize,
    pub gamma: usize,
    pub alphas: Vec<usize>,
    /// True on the two rows where the checksum forced a repair.
    pub repaired: bool,
}

impl AssignmentPlan {
    pub fn checksum(&self) -> usize {
        self.gamma + self.alphas.iter().sum::<usize>()
    }
}

impl fmt::Display for AssignmentPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={} a={} b={} gamma={} alpha={:?}{}",
            self.r,
            self.a,
            self.b,
            self.gamma,
            self.alphas,
            if self.repaired { " (repaired)" } else { "" }
        )
    }
}

/// `count` sevens, zero-padded to the 3t slots.
fn sevens(count: usize, slots: usize) -> Vec<usize> {
    let mut alphas = vec![7; count];
    alphas.resize(slots, 0);
    alphas
}

/// `first` then `count` sevens, zero-padded.
fn lead(first: usize, count: usize, slots: usize) -> Vec<usize> {
    let mut alphas = vec![first];
    alphas.extend(std::iter::repeat_n(7, count));
    alphas.resize(slots, 0);
    alphas
}

/// Splits r over gamma and the 3t block alphas for n = 42t + 21, t >= 1.
/// (n = 21 needs no plan; the K_21 catalog is used directly.)
pub fn assignment_plan(n: usize, r: usize) -> Result<AssignmentPlan> {
    if n % 42 != 21 || n < 63 {
        return Err(Error::BadOrder { n });
    }
    let t = (n - 21) / 42;
    let slots = 3 * t;
    if r > (n - 1) / 2 {
        return Err(Error::InfeasibleR {
            n,
            r,
            reason: format!("r exceeds (n-1)/2 = {}", (n - 1) / 2),
        });
    }
    let a = r / 7;
    let b = r % 7;
    let (gamma, alphas, repaired) = match (b, a) {
        (0, a) if a <= slots => (0, sevens(a, slots), false),
        (0, _) => (7, sevens(slots, slots), false),
        (1, a) if a <= slots => (1, sevens(a, slots), false),
        (1, _) => (8, sevens(slots, slots), false),
        (2, a) if a < slots => (1, lead(1, a, slots), false),
        // the next two rows carry swapped gamma values; the naive
        // assignment misses the checksum by one in each direction
        (2, a) if a == slots => (8, lead(1, slots - 1, slots), true),
        (2, _) => (9, sevens(slots, slots), true),
        (3, a) if a <= slots => (3, sevens(a, slots), false),
        (3, _) => (10, sevens(slots, slots), false), // s = 0 endpoint
        (4, a) if a < slots => (3, lead(1, a, slots), false),
        (4, _) => (8, lead(3, slots - 1, slots), false),
        (5, _) => (5, sevens(a, slots), false),
        (6, a) if a < slots => (1, lead(5, a, slots), false),
        (6, _) => (8, lead(5, slots - 1, slots), false),
        _ => unreachable!("b < 7"),
    };
    let plan = AssignmentPlan {
        t,
        r,
        a,
        b,
        gamma,
        alphas,
        repaired,
    };
    debug_assert_eq!(plan.alphas.len(), slots);
    if plan.checksum() != r
        || !ADMISSIBLE_GAMMA.contains(&plan.gamma)
        || !plan.alphas.iter().all(|x| ADMISSIBLE_ALPHA.contains(x))
    {
        return Err(Error::InfeasibleR {
            n,
            r,
            reason: format!("no admissible split (candidate {plan})"),
        });
    }
    Ok(plan)
}

fn check_feasible(n: usize, r: usize) -> Result<()> {
    if n % 42 != 21 {
        return Err(Error::BadOrder { n });
    }
    if n == 21 && matches!(r, 2 | 4 | 6) {
        return Err(Error::InfeasibleR {
            n,
            r,
            reason: "open case: existence of HW(21;r,s;3,7) for r in {2,4,6} is unresolved \
                     (the open-case search can hunt for a certificate, never a refutation)"
                .to_string(),
        });
    }
    if !feasible_r(n).contains(&r) {
        return Err(Error::InfeasibleR {
            n,
            r,
            reason: format!("r must lie in 0..={}", (n - 1) / 2),
        });
    }
    Ok(())
}

/// Builds HW(n; r, (n-1)/2 - r; 3, 7) and verifies it before returning.
///
/// n = 21 is the K_21 catalog. Larger n blows a KTS(6t+3) up into 3t
/// K_{7,7,7}-factors plus a K_21-factor, factorizes every block per the
/// assignment plan, glues each block-factor with the vertex-disjoint
/// union, and merges the edge-disjoint layers. Internal verification
/// failures abort with the failing component named; no unverified
/// certificate is ever returned.
pub fn assemble_hw(n: usize, r: usize) -> Result<Factorization> {
    check_feasible(n, r)?;
    let s = (n - 1) / 2 - r;

    let fac = if n == 21 {
        k21_factorization(&K21Plan::local(r))?
    } else {
        let plan = assignment_plan(n, r)?;
        let kts = kirkman_triple_system(6 * plan.t + 3)?;
        let blocks = blow_up(&kts);

        let k21_parts: Result<Vec<Factorization>> = blocks
            .k21_blocks
            .iter()
            .map(|&groups| {
                k21_factorization(&K21Plan {
                    gamma: plan.gamma,
                    groups,
                })
            })
            .collect();
        let mut layers = vec![disjoint_union(&k21_parts?)?];

        for (i, factor_blocks) in blocks.tripartite_block_factors.iter().enumerate() {
            let parts: Result<Vec<Factorization>> = factor_blocks
                .iter()
                .map(|&groups| {
                    tripartite_factorization(&TripartiteBlock {
                        groups,
                        alpha: plan.alphas[i],
                    })
                })
                .collect();
            layers.push(disjoint_union(&parts?)?);
        }

        let mut whole = layers.remove(0);
        for layer in layers {
            whole = merge_edge_disjoint(&whole, &layer)?;
        }
        whole.sorted_by_kind()
    };

    let report = verify_factorization(&fac, n, r, s);
    if !report.accepted() {
        return Err(Error::VerificationFailed {
            component: format!("assemble_hw({n},{r})"),
            report: report.to_string(),
        });
    }
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::FactorKind;

    #[test]
    fn feasible_sets() {
        assert_eq!(feasible_r(21), vec![0, 1, 3, 5, 7, 8, 9, 10]);
        assert!(feasible_r(35).is_empty());
        assert!(feasible_r(22).is_empty());
        assert_eq!(feasible_r(63), (0..=31).collect::<Vec<_>>());
    }

    #[test]
    fn feasible_r_matches_plan_success() {
        // derived oracle: for n = 63 every r in 0..=31 admits a plan, and
        // nothing above does
        for r in 0..=31 {
            assert!(assignment_plan(63, r).is_ok(), "r={r}");
        }
        assert!(assignment_plan(63, 32).is_err());
    }

    #[test]
    fn paper_row_examples() {
        let plan = assignment_plan(63, 9).unwrap();
        assert_eq!((plan.a, plan.b), (1, 2));
        assert_eq!(plan.gamma, 1);
        assert_eq!(plan.alphas, vec![1, 7, 0]);
        assert!(!plan.repaired);
        assert_eq!(plan.checksum(), 9);

        let endpoint = assignment_plan(63, 31).unwrap();
        assert_eq!(endpoint.gamma, 10);
        assert_eq!(endpoint.alphas, vec![7, 7, 7]);
        assert_eq!(endpoint.checksum(), 31);
    }

    #[test]
    fn repaired_rows_pass_checksum_where_paper_values_fail() {
        // b=2, a=3t: repaired row uses gamma=8
        let plan = assignment_plan(63, 23).unwrap();
        assert_eq!((plan.a, plan.b), (3, 2));
        assert_eq!(plan.gamma, 8);
        assert_eq!(plan.alphas, vec![1, 7, 7]);
        assert!(plan.repaired);
        assert_eq!(plan.checksum(), 23);
        // the unrepaired assignment (gamma=9 with the same alphas) misses
        let would_be = 9 + 1 + 7 + 7;
        assert_ne!(would_be, 23);

        // b=2, a=3t+1: repaired row uses gamma=9
        let plan = assignment_plan(63, 30).unwrap();
        assert_eq!((plan.a, plan.b), (4, 2));
        assert_eq!(plan.gamma, 9);
        assert_eq!(plan.alphas, vec![7, 7, 7]);
        assert!(plan.repaired);
        assert_eq!(plan.checksum(), 30);
        let would_be = 8 + 21;
        assert_ne!(would_be, 30);
    }

    #[test]
    fn checksum_holds_for_all_small_t() {
        for t in 1..=3 {
            let n = 42 * t + 21;
            for r in feasible_r(n) {
                let plan = assignment_plan(n, r).unwrap();
                assert_eq!(plan.checksum(), r, "n={n} r={r}");
                assert_eq!(plan.alphas.len(), 3 * t);
                assert!(ADMISSIBLE_GAMMA.contains(&plan.gamma));
                assert!(plan.alphas.iter().all(|x| ADMISSIBLE_ALPHA.contains(x)));
            }
        }
    }

    #[test]
    fn open_cases_and_bad_orders_rejected() {
        assert!(matches!(assemble_hw(21, 2), Err(Error::InfeasibleR { .. })));
        assert!(matches!(assemble_hw(22, 1), Err(Error::BadOrder { n: 22 })));
        assert!(matches!(assemble_hw(35, 1), Err(Error::BadOrder { n: 35 })));
        assert!(matches!(assemble_hw(63, 32), Err(Error::InfeasibleR { .. })));
    }

    #[test]
    fn assembles_k21_catalog() {
        let fac = assemble_hw(21, 8).unwrap();
        assert_eq!(fac.factors().len(), 10);
        assert_eq!((fac.r(), fac.s()), (8, 2));
    }

    #[test]
    fn assembles_n63_middle_case() {
        let fac = assemble_hw(63, 9).unwrap();
        assert_eq!(fac.factors().len(), 31);
        assert_eq!((fac.r(), fac.s()), (9, 22));
        // canonical order: triangles first
        for (k, f) in fac.factors().iter().enumerate() {
            let want = if k < 9 { FactorKind::C3 } else { FactorKind::C7 };
            assert_eq!(f.kind(), want);
        }
    }

    #[test]
    fn assembles_uniform_endpoints() {
        let all_hept = assemble_hw(63, 0).unwrap();
        assert_eq!((all_hept.r(), all_hept.s()), (0, 31));
        let all_tri = assemble_hw(63, 31).unwrap();
        assert_eq!((all_tri.r(), all_tri.s()), (31, 0));
    }
}
