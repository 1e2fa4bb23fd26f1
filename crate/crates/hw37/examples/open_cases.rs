//! Budgeted probes of the genuinely open territory: HW(21; r, 10-r; 3, 7)
//! for r in {2,4,6}, and K_{7,7,7} with an even number of
//! triangle-factors. Inconclusive runs are the expected outcome; a
//! success would be a verified, publishable certificate with its seed.
//!
//! Run: cargo run --release --example open_cases

use hw37::cert::Certificate;
use hw37::search::{open21_search, tripartite_even_probe, Budget, SearchConfig};

fn main() {
    println!("HW(21; r, 10-r; 3, 7), r in {{2,4,6}} — unresolved either way:");
    for r in [2usize, 4, 6] {
        let cfg = SearchConfig::new(2026, Budget::Nodes(3_000_000));
        let out = open21_search(r, &cfg).unwrap();
        match &out.result {
            Some(fac) => {
                println!("r={r}: FOUND (verify independently and publish!)");
                print!("{}", Certificate::from_factorization(fac).to_json());
            }
            None => println!(
                "r={r}: inconclusive after {} nodes (seed {}, trace {:016x})",
                out.nodes_expanded, out.seed, out.trace_hash
            ),
        }
    }

    println!("\n(K_7,7,7; C3^alpha, C7^(7-alpha)), alpha in {{2,4,6}} — not covered by the catalog:");
    for alpha in [2usize, 4, 6] {
        let cfg = SearchConfig::new(2026, Budget::Nodes(3_000_000));
        let out = tripartite_even_probe(alpha, &cfg).unwrap();
        match &out.result {
            Some(_) => println!("alpha={alpha}: FOUND — this would extend the K_21 catalog via the block merge"),
            None => println!(
                "alpha={alpha}: inconclusive after {} nodes",
                out.nodes_expanded
            ),
        }
    }

    println!("\nexhaustion proves nothing: these searches hunt certificates, not refutations.");
}
