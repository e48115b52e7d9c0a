use thiserror::Error;

/// Errors raised while validating objects or applying maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The given cells do not form the diagram for the requested shape
    /// parameters, or the parameters themselves are out of range.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Tableau entries are not exactly the numbers 1..=N.
    #[error("entries are not a bijection onto 1..={n}: {reason}")]
    NotBijective { n: usize, reason: String },

    /// A row of the tableau fails to increase left to right.
    #[error("row order violated at cell ({row}, {col})")]
    RowOrder { row: usize, col: usize },

    /// A column of the tableau fails to increase top to bottom.
    #[error("column order violated at cell ({row}, {col})")]
    ColOrder { row: usize, col: usize },

    /// The step sequence is not a balanced path with non-negative prefixes.
    #[error("not a Dyck path: violation at step index {index}")]
    NotDyck { index: usize },

    /// A chord joins two adjacent (or equal) polygon vertices.
    #[error("chord {0}-{1} joins adjacent vertices")]
    AdjacentEndpoints(usize, usize),

    /// Two chords cross in the interior of the polygon.
    #[error("chords {0}-{1} and {2}-{3} cross")]
    CrossingChords(usize, usize, usize, usize),

    /// The same chord was given twice.
    #[error("duplicate chord {0}-{1}")]
    DuplicateChord(usize, usize),

    /// A chord endpoint lies outside 1..=n.
    #[error("vertex {vertex} is out of range for a {n}-gon")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// The subdivision does not have the n-3 chords of a triangulation.
    #[error("not a triangulation: {chords} chords on a {n}-gon (need {})", n - 3)]
    NotTriangulation { n: usize, chords: usize },

    /// A fan decomposition cannot be realized as a triangulation of the
    /// requested polygon.
    #[error("inconsistent fan decomposition: {0}")]
    InconsistentDecomposition(String),

    /// The object is outside the class the map is defined on.
    #[error("class violation: {0}")]
    ClassViolation(String),

    /// The blocks fail the structural conditions of a nomincreasing
    /// partition (disjoint cover of 1..=N, increasing minima, increasing
    /// second minima along the blocks of size > 1).
    #[error("not a nomincreasing partition: {0}")]
    NotNomincreasing(String),

    /// The partition does not have the block profile of the requested
    /// shape parameters.
    #[error("profile mismatch for parameters (a={a}, i={i}, b={b}): {reason}")]
    ProfileMismatch {
        a: usize,
        i: usize,
        b: usize,
        reason: String,
    },

    /// Reconstructing a tableau from the blocks produced an array that
    /// breaks row or column order.
    #[error("fill violation: {0}")]
    FillViolation(String),

    /// Unknown identity name passed to the verification harness.
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    /// Malformed textual input.
    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError {
        line: usize,
        col: usize,
        msg: String,
    },

    /// The object kind cannot be rendered in the requested output form.
    #[error("unsupported render: {0}")]
    UnsupportedRender(String),
}

pub type Result<T> = std::result::Result<T, Error>;
