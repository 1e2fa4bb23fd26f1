//! Verifier soundness in action: every mutation operator applied to an
//! accepted certificate must produce a rejection with a concrete witness.
//!
//! Run: cargo run --example verifier_mutations

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hw37::assemble::assemble_hw;
use hw37::mutate::{mutate, ALL_MUTATIONS};
use hw37::verify::{verify_raw, Ambient, RawFactorization};

fn main() {
    let fac = assemble_hw(21, 8).unwrap();
    let raw = RawFactorization::from_factorization(&fac);
    let ambient = Ambient::complete(21);
    assert!(verify_raw(&raw, &ambient, 8, 2).accepted());
    println!("baseline HW(21;8,2;3,7): accepted\n");

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for op in ALL_MUTATIONS {
        let mutant = mutate(&raw, op, &mut rng).unwrap();
        let report = verify_raw(&mutant, &ambient, 8, 2);
        println!("{op:?}:");
        assert!(!report.accepted(), "{op:?} must be caught");
        for v in report.violations().iter().take(2) {
            println!("  witness: {v}");
        }
        if report.total_violations() > 2 {
            println!("  ({} violations total)", report.total_violations());
        }
    }

    // seeded sweep: rejection rate over many random mutations
    let mut rejected = 0;
    let runs = 500;
    for k in 0..runs {
        let op = ALL_MUTATIONS[k % ALL_MUTATIONS.len()];
        if let Some(mutant) = mutate(&raw, op, &mut rng) {
            if !verify_raw(&mutant, &ambient, 8, 2).accepted() {
                rejected += 1;
            }
        }
    }
    println!("\nseeded sweep: {rejected}/{runs} mutants rejected");
    assert_eq!(rejected, runs);
}
