//! Exact-arithmetic tools for colourful Carathéodory problems.
//!
//! A [`Configuration`] holds `d + 1` finite colour classes of rational points
//! in `R^d`. The crate checks sufficient conditions for a colourful simplex
//! to contain the origin ([`conditions`]), finds one by pivoting
//! ([`solver`], [`pivot`], [`planar`]) and counts all of them by brute force
//! ([`census`]). Nothing is computed in floating point.

pub mod census;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod gen;
pub mod geometry;
pub mod linprog;
pub mod pivot;
pub mod planar;
pub mod solver;

pub use census::ColourfulSimplex;
pub use error::{Error, Result};
pub use geometry::{Configuration, Point, PointId, Scalar, Sign, Transversal};
pub use linprog::HullCertificate;
pub use solver::SolveResult;
