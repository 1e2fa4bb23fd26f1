//! Kirkman triple systems and the blow-up that turns KTS(6t+3) into a
//! decomposition of K_{42t+21} into K_{7,7,7}-factors plus one
//! K_21-factor, with exact edge accounting.
//!
//! Run: cargo run --example kirkman_blowup

use hw37::kirkman::{blow_up, kirkman_triple_system};
use hw37::verify::verify_kts;

fn main() {
    for v in [3usize, 9, 15, 21, 27] {
        let kts = kirkman_triple_system(v).unwrap();
        let report = verify_kts(&kts.to_doc());
        println!(
            "KTS({v}): {} classes of {} triples, verifier: {report}",
            kts.classes().len(),
            v / 3,
        );
    }

    let kts = kirkman_triple_system(9).unwrap();
    println!("\nKTS(9) classes:");
    for class in kts.classes() {
        println!("  {class:?}");
    }

    let blocks = blow_up(&kts);
    let cross: usize = blocks
        .tripartite_block_factors
        .iter()
        .map(|f| f.len() * 147)
        .sum();
    let within = blocks.k21_blocks.len() * 210;
    println!(
        "\nblow-up to n={}: {} K_7,7,7-factors of {} blocks each + {} K_21 blocks",
        blocks.n,
        blocks.tripartite_block_factors.len(),
        blocks.tripartite_block_factors[0].len(),
        blocks.k21_blocks.len(),
    );
    println!(
        "edges: {} cross + {} within-block = {} = {}*{}/2",
        cross,
        within,
        cross + within,
        blocks.n,
        blocks.n - 1
    );
}
