//! Decompose a triangulation into fans and rebuild it from the sizes and
//! origin gaps alone.
//!
//! Run with: `cargo run --example fan_decomposition`

use catabij::{
    classify_triangulation, fan_decompose, fans, reconstruct_from_fans, PolygonSubdivision,
};

fn main() {
    let t = PolygonSubdivision::new(
        12,
        [
            (2, 4),
            (2, 7),
            (2, 12),
            (4, 7),
            (5, 7),
            (7, 9),
            (7, 10),
            (7, 11),
            (7, 12),
        ],
    )
    .unwrap();
    println!("triangulation: {}", t.to_string().replace('\n', "  "));

    for fan in fans(&t).unwrap() {
        println!(
            "  fan at {}: {} triangle(s), corners {:?}",
            fan.origin,
            fan.size(),
            fan.corners
        );
    }

    let fd = fan_decompose(&t).unwrap();
    println!("sizes:   {:?}", fd.sizes());
    println!("origins: {:?}", fd.origins());
    println!("gaps:    {:?}", fd.gaps());

    let back = reconstruct_from_fans(&fd, 12).unwrap();
    println!("rebuilt from sizes and gaps alone: {}", back == t);

    let class = classify_triangulation(&t).unwrap();
    println!(
        "class: {} non-singular fan(s), {} singular, last fan non-singular: {}",
        class.non_singular, class.singular, class.last_fan_big
    );
}
