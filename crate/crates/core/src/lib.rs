//! ECH capacities of convex toric domains in ℂ².
//!
//! A toric domain is described by its moment region, a polygon in the closed
//! first quadrant. Capacities are minimal lengths of convex lattice loops
//! measured by the region's support function, computed exactly over the
//! rationals.

pub mod embed;
pub mod error;
pub mod lattice;
pub mod norm;
pub mod oracle;
pub mod rational;
pub mod region;

pub use error::{Error, ErrorClass, Result};
pub use lattice::{
    brute_force_capacities, capacities, capacities_with, CapacitySequence, ConvexLoop, CountRule,
    LoopRecord, SearchOptions,
};
pub use norm::{LatticeVector, SupportNorm};
pub use rational::Rational;
pub use region::{ellipsoid_intersection, MomentRegion, Point, Polygon, StarPolygon};
