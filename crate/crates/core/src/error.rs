//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),

    #[error("edge ({i}, {j}) has an endpoint outside 1..={n}")]
    EdgeOutOfRange { i: usize, j: usize, n: usize },

    #[error("vertex {v} outside 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("graph order must be at least {min} (got {n})")]
    OrderTooSmall { n: usize, min: usize },

    #[error("graph is disconnected: {0}")]
    Disconnected(&'static str),

    #[error("family constraint violated: {0}")]
    FamilyConstraint(String),

    #[error("matrix contains a non-finite entry")]
    NonFiniteEntry,

    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: max |a_ij - a_ji| = {max_asymmetry:e}")]
    NotSymmetric { max_asymmetry: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{algorithm} did not converge after {sweeps} sweeps")]
    NoConvergence {
        algorithm: &'static str,
        sweeps: usize,
    },

    #[error("rank tolerance must be positive (got {0})")]
    InvalidTolerance(f64),

    #[error("point list is empty")]
    EmptyPointList,

    #[error("realization has {points} points but the graph has {vertices} vertices")]
    PointCountMismatch { points: usize, vertices: usize },

    #[error("vector is not unit length: |w| = {0}")]
    NonUnitVector(f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
