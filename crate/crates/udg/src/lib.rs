//! Single-source shortest path trees in unit-disk graphs.
//!
//! A unit-disk graph over a planar point set `P` connects every pair of
//! points at Euclidean distance at most `r` (by default 1). This crate
//! computes exact shortest path trees in that graph without ever building
//! its edge set, which can be quadratic:
//!
//! * [`unweighted::unweighted_sssp`] grows hop-count levels through the
//!   Delaunay triangulation of `P`, testing candidate membership with a
//!   per-level nearest-neighbour index. Runs in `O(n log n)`.
//! * [`weighted::weighted_sssp`] runs a Dijkstra variant whose frontier is
//!   driven by a dynamic bichromatic closest pair structure under the
//!   additively weighted metric `δ(r, b) = dist[b] + ‖r − b‖`.
//!
//! The [`oracle`] module carries brute-force baselines (explicit graph
//! construction, textbook BFS/Dijkstra, a naive closest-pair scan) and
//! seeded instance generators used by the test suite and the CLI verifier.

pub mod delaunay;
pub mod geom;
mod kd;
pub mod nn_index;
pub mod oracle;
pub mod tree;
pub mod unweighted;
pub mod wbcp;
pub mod weighted;

pub use geom::{Point, PointSet};
pub use tree::ShortestPathTree;

/// Errors reported by the solver and its supporting structures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("point {index} has non-finite coordinates ({x}, {y})")]
    NonFiniteCoordinate { index: usize, x: f64, y: f64 },
    #[error("point set must contain at least one point")]
    EmptyPointSet,
    #[error("index {index} out of range for {count} points")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("nearest-neighbour index needs a nonempty member list")]
    EmptyMembers,
    #[error("triangle ({0}, {1}, {2}) is degenerate (collinear vertices)")]
    DegenerateTriangle(usize, usize, usize),
    #[error("point {0} is already tracked by the closest-pair structure")]
    AlreadyTracked(usize),
    #[error("point {0} is not currently blue")]
    NotBlue(usize),
    #[error("point {0} is not currently red")]
    NotRed(usize),
    #[error("blue weight must be finite and nonnegative, got {0}")]
    InvalidWeight(f64),
    #[error("side length must be positive and finite, got {0}")]
    InvalidSideLength(f64),
    #[error("could not satisfy the threshold margin after {attempts} resamples")]
    MarginInfeasible { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
