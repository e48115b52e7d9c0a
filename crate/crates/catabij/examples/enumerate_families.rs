//! Enumerate all four families at small sizes and print the counts, with a
//! couple of objects shown in full.
//!
//! Run with: `cargo run --example enumerate_families`

use catabij::enumerate;

fn main() {
    println!("tableaux:");
    for (a, i, b) in [(2, 1, 2), (3, 1, 2), (2, 1, 3), (4, 2, 4)] {
        println!("  ({a},{i},{b}): {}", enumerate::skyt(a, i, b).len());
    }

    println!("paths by semi-length, against the Catalan numbers:");
    for n in 1..=8 {
        let paths = enumerate::dyck_paths(n);
        println!(
            "  n={n}: {} (C_{n} = {})",
            paths.len(),
            enumerate::catalan(n)
        );
    }

    println!("triangulations and dissections of the hexagon:");
    println!(
        "  all triangulations: {}",
        enumerate::triangulations(6).len()
    );
    for i in 0..=3 {
        println!(
            "  dissections with {i} chord(s): {}",
            enumerate::dissections(6, i).len()
        );
    }

    println!("\nthe two members of the smallest tableau family:");
    for t in enumerate::skyt(2, 1, 2) {
        println!("{t}\n");
    }

    println!("the class of semi-length 8 with two long ascents and three singletons:");
    for p in enumerate::dyck_class(8, 2, 3).iter().take(5) {
        println!("  {p}");
    }
    println!("  ... {} in total", enumerate::dyck_class(8, 2, 3).len());
}
