//! The ten-factor catalog for K_21: gamma triangle-factors plus
//! 10 - gamma heptagon-factors for gamma in {0,1,3,5,7,8,9,10}. The
//! gamma = 8 and 9 entries develop an explicit base factor mod 7; the
//! sweep prints each base and the class-occupancy witness that makes the
//! development edge-disjoint.
//!
//! Run: cargo run --example k21_sweep

use std::collections::HashSet;

use hw37::design::DifferenceClass;
use hw37::k21::{gamma8_base_factor, gamma9_base_factor, k21_factorization, K21Plan};
use hw37::verify::{verify_block, Ambient};

fn main() {
    for gamma in [0usize, 1, 3, 5, 7, 8, 9, 10] {
        let fac = k21_factorization(&K21Plan::local(gamma)).unwrap();
        let report = verify_block(&fac, &Ambient::block_k21([0, 1, 2]), gamma, 10 - gamma);
        println!(
            "gamma={gamma}: {} C3 + {} C7, 210 edges, verifier: {}",
            fac.r(),
            fac.s(),
            report
        );
    }

    for (label, base) in [("gamma=8", gamma8_base_factor()), ("gamma=9", gamma9_base_factor())] {
        println!("\nbase triangle-factor for the {label} construction:");
        for c in base.cycles() {
            print!(" {c}");
        }
        let classes: HashSet<DifferenceClass> = base.edge_classes().into_iter().collect();
        println!(
            "\n  21 edges occupying {} distinct difference classes (development witness)",
            classes.len()
        );
    }

    println!("\ngamma in {{2,4,6}} is open; see `hw37 search open21 --r 2|4|6`.");
}
