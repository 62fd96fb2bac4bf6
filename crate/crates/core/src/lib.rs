//! Exact circular-arc graphs and their Gromov hyperbolicity.
//!
//! Arc families live on the unit circle with rational endpoints measured in
//! turns. From a family we build the intersection graph, compute the minimum
//! number of arcs covering the circle and the hyperbolicity constant of the
//! graph seen as a metric graph with unit edges, and check the known bounds
//! relating the two.
//!
//! ```
//! use circarc::{circle::ArcFamily, cover, hyperbolicity, intersection};
//!
//! let fam: ArcFamily = "a 0/1 1/5\nb 1/5 2/5\nc 2/5 3/5\nd 3/5 4/5\ne 4/5 0/1\n".parse().unwrap();
//! let model = intersection::build(&fam);
//! assert_eq!(cover::rho(&fam).rho, 5);
//! let report = hyperbolicity::delta_exact(&model.graph, hyperbolicity::DEFAULT_GEODESIC_CAP);
//! assert_eq!(report.delta.to_string(), "5/4");
//! ```

pub mod circle;
pub mod classify;
pub mod cover;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hyperbolicity;
pub mod intersection;
pub mod transforms;
pub mod value;
pub mod verify;

pub use error::{Error, Result};
pub use value::{QuarterValue, Rational};
