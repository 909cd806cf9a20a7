//! Semirings of characteristic one, the square of the tropical integers,
//! Newton polygons, Frobenius correspondences, points of the arithmetic
//! topos and numerical checks of the explicit formula.

pub mod correspondences;
pub mod error;
pub mod expr;
mod json;
pub mod points;
pub mod polygon;
pub mod slope;
pub mod square;
pub mod svg;
pub mod tropical;
pub mod zeta;

pub use correspondences::{compose, make_correspondence, Correspondence, ReducedCorrespondence};
pub use error::{Error, Result};
pub use points::Supernatural;
pub use polygon::{cancellation_witness, gamma, sigma, NewtonPolygon};
pub use slope::Slope;
pub use square::Staircase;
pub use tropical::{BoolSemifield, RmaxElem, Semiring, ZminElem};
