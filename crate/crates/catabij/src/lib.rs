//! Four families of Catalan-like combinatorial objects and the explicit
//! bijections between them.
//!
//! The families:
//!
//! - [`SkewTableau`] — standard fillings of a hook-like skew diagram with an
//!   upper stem, two full rows, and a lower stem, parameterized by `(a, i, b)`.
//! - [`DyckPath`] — balanced `U`/`D` paths classified by the number of long
//!   ascents and singleton ascents.
//! - [`PolygonSubdivision`] — an `n`-gon with pairwise non-crossing chords;
//!   maximal chord sets are triangulations, classified by their fan
//!   decomposition.
//! - Dissections — subdivisions with a fixed chord count, tied to the
//!   triangulation families through an edge-contraction bijection.
//!
//! The [`maps`] module holds the six bijections between the first three
//! families, [`bridge`] the dissection/triangulation bijection, [`enumerate`]
//! exhaustive generators, and [`verify`] a harness that brute-force checks
//! every counting identity at small sizes.
//!
//! Start with the runnable programs under `examples/` for a tour.

mod bridge;
mod dyck;
mod error;
mod fans;
mod format;
mod nom;
mod polygon;
mod render;
mod tableau;

pub mod enumerate;
pub mod maps;
pub mod verify;

pub use bridge::{
    dissection_to_triangulation, triangulation_to_dissection, triangulation_to_dissection_detailed,
    ContractionDetail,
};
pub use dyck::{DyckPath, DyckStats, Step};
pub use error::{Error, Result};
pub use fans::{
    classify_triangulation, fan_decompose, fans, reconstruct_from_fans, Fan, FanDecomposition,
    TriangulationClass,
};
pub use format::{parse_object, serialize_object, Format, Object};
pub use nom::{nom, unnom, NomincreasingPartition};
pub use polygon::{Chord, PolygonSubdivision};
pub use render::{render_ascii, render_svg, SvgStyle};
pub use tableau::SkewTableau;
