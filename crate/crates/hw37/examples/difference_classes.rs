//! The difference-method vocabulary: classes E_ij(d), their expansion
//! into edge orbits, the 30-class catalog of a 3-group block, and
//! development mod 7.
//!
//! Run: cargo run --example difference_classes

use hw37::design::{class_catalog, develop_mod7, expand_difference_class, DifferenceClass};
use hw37::tripartite::triangle_factor_from_triple;

fn main() {
    // E_01(3): the orbit {l_0, (l+3)_1}
    let class = DifferenceClass::new(0, 1, 3).unwrap();
    println!("{class} expands to:");
    for e in expand_difference_class(class) {
        print!(" {e}");
    }
    println!("\n");

    // within-group differences live in {1,2,3}; raw 5 normalizes to 2
    let within = DifferenceClass::new(0, 0, 5).unwrap();
    println!("E_00(5) normalizes to {within}\n");

    let catalog = class_catalog([0, 1, 2]);
    let edges: usize = catalog
        .iter()
        .map(|&c| expand_difference_class(c).len())
        .sum();
    println!(
        "catalog of a 3-group block: {} classes x 7 edges = {} = |E(K_21)|\n",
        catalog.len(),
        edges
    );

    // a zero-sum triple of cross differences closes into triangles c
    let factor = triangle_factor_from_triple(1, 2, 4).unwrap();
    println!("triangle-factor from the triple (1,2,4):");
    for c in factor.cycles() {
        print!(" {c}");
    }
    println!();

    // developing mod 7 translates residues; the orbit of a factor whose
    // edges occupy distinct classes tiles those classes completely
    let orbit = develop_mod7(&factor);
    println!(
        "development gives {} translates; translate 1 starts {}",
        orbit.len(),
        orbit[1].cycles()[0]
    );
}
