//! Command-line front end for `toric-ech`.

pub mod commands;
pub mod render;
pub mod selftest;
pub mod spec;

pub use commands::{run, Cli, Outcome, RunConfig};
pub use spec::{RegionSpec, Shape};
