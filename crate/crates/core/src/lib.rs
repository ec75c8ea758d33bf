//! Riemannian shape analysis of closed planar curves under second-order
//! Sobolev metrics.
//!
//! The library discretizes curves and paths of curves with B-splines,
//! computes Sobolev inner products and path energies together with their
//! exact gradients, and solves the geodesic boundary and initial value
//! problems on the space of unparametrized curves modulo rotations and
//! translations. Shape statistics (distance matrices, Karcher means,
//! tangent PCA, multidimensional scaling, agglomerative clustering) are
//! built on top of the two geodesic solvers.

pub mod bspline;
pub mod bvp;
pub mod curve;
pub mod error;
pub mod io;
pub mod ivp;
pub mod metric;
pub mod stats;

pub use bspline::{BasisKind, QuadratureGrid, SplineBasis};
pub use error::{Error, Result};
