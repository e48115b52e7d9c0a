//! Write SVG renderings: a fan-shaded triangulation and a lattice path.
//!
//! Run with: `cargo run --example render_svg`

use catabij::{render_ascii, render_svg, Object, PolygonSubdivision, SvgStyle};

fn main() {
    let dir = std::path::Path::new("target/render");
    std::fs::create_dir_all(dir).expect("create output directory");

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
    let svg = render_svg(&Object::Subdivision(t), SvgStyle::Fans).unwrap();
    let path = dir.join("triangulation.svg");
    std::fs::write(&path, svg).expect("write svg");
    println!("wrote {}", path.display());

    let p: catabij::DyckPath = "UDUUUDDUDUDDUUUUDDDD".parse().unwrap();
    println!("\n{}\n", render_ascii(&Object::Path(p.clone())));
    let svg = render_svg(&Object::Path(p), SvgStyle::Plain).unwrap();
    let path = dir.join("path.svg");
    std::fs::write(&path, svg).expect("write svg");
    println!("wrote {}", path.display());
}
