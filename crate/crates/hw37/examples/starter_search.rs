//! Finding the all-heptagon ingredient from scratch: a cyclic starter
//! whose 21 edges hit all 21 cross difference classes once, so its
//! translates mod 7 tile K_{7,7,7} into 7 heptagon-factors.
//!
//! Run: cargo run --example starter_search

use hw37::search::{starter_c7_search, Budget, SearchConfig};
use hw37::tripartite::{c7_uniform_tripartite, starter_doc_json};

fn main() {
    let cfg = SearchConfig::new(1, Budget::Nodes(10_000_000));
    let out = starter_c7_search(&cfg);
    println!(
        "starter search: {} after {} of {} nodes (trace {:016x})",
        out.outcome_label(),
        out.nodes_expanded,
        out.node_cap,
        out.trace_hash
    );
    let starter = out.result.expect("search finds a starter quickly");
    println!("cycles:");
    for c in starter.cycles() {
        println!("  {c}");
    }

    let fac = c7_uniform_tripartite(Some(&starter)).unwrap();
    println!(
        "developed mod 7: {} C7-factors covering {} edges, verified",
        fac.s(),
        fac.edges().count()
    );

    println!("\nasset form (save and point HW37_ASSET_DIR at it):");
    print!("{}", starter_doc_json(&starter));
}
