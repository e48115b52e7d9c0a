//! Contract a triangulation with no singular fans down to a dissection, and
//! expand it back.
//!
//! Run with: `cargo run --example dissection_bridge`

use catabij::{
    dissection_to_triangulation, triangulation_to_dissection_detailed, PolygonSubdivision,
};

fn main() {
    let t = PolygonSubdivision::new(
        16,
        [
            (1, 3),
            (1, 4),
            (1, 5),
            (5, 16),
            (5, 12),
            (6, 10),
            (6, 11),
            (6, 12),
            (7, 9),
            (7, 10),
            (12, 14),
            (12, 15),
            (12, 16),
        ],
    )
    .unwrap();
    println!("triangulation: {}", t.to_string().replace('\n', "  "));

    let (d, detail) = triangulation_to_dissection_detailed(&t).unwrap();
    println!("contracted boundary edges: {:?}", detail.contracted_edges);
    for (k, class) in detail.merged_classes.iter().enumerate() {
        if class.len() > 1 {
            println!(
                "  vertices {class:?} merge into dissection vertex {}",
                k + 1
            );
        }
    }
    println!("dissection: {}", d.to_string().replace('\n', "  "));

    let back = dissection_to_triangulation(&d).unwrap();
    println!(
        "expanding the dissection restores the triangulation: {}",
        back == t
    );
}
