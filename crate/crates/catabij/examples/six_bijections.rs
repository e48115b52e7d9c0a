//! Walk one tableau through all six maps and back.
//!
//! Run with: `cargo run --example six_bijections`

use std::collections::BTreeMap;

use catabij::maps::{
    dyck_to_tableau, dyck_to_triangulation, tableau_to_dyck, tableau_to_triangulation,
    triangulation_to_dyck, triangulation_to_tableau,
};
use catabij::{nom, SkewTableau};

fn main() {
    // The 15-cell tableau with parameters (7, 2, 6).
    let mut entries = BTreeMap::new();
    for (r, v) in (5..=11).zip([2, 3, 6, 8, 9, 14, 15]) {
        entries.insert((r, 1), v);
    }
    for (r, v) in (5..=6).zip([7, 11]) {
        entries.insert((r, 2), v);
    }
    for (r, v) in (1..=6).zip([1, 4, 5, 10, 12, 13]) {
        entries.insert((r, 3), v);
    }
    let t = SkewTableau::new(7, 2, 6, &entries).unwrap();
    println!("tableau:\n{t}\n");

    let blocks = nom(&t);
    println!("its block partition:");
    for (k, block) in blocks.blocks().iter().enumerate() {
        println!("  A_{} = {:?}", k + 1, block);
    }

    let p = tableau_to_dyck(&t);
    println!("\ntableau -> path:          {p}");
    println!(
        "path -> tableau inverts:  {}",
        dyck_to_tableau(&p).unwrap() == t
    );

    let tri = tableau_to_triangulation(&t);
    println!(
        "\ntableau -> triangulation: {}",
        tri.to_string().replace('\n', "  ")
    );
    println!(
        "triangulation -> tableau inverts: {}",
        triangulation_to_tableau(&tri).unwrap() == t
    );

    let via_path = dyck_to_triangulation(&p).unwrap();
    println!("\nthe triangle of maps commutes: {}", via_path == tri);
    println!(
        "triangulation -> path:    {}",
        triangulation_to_dyck(&tri).unwrap()
    );
}
