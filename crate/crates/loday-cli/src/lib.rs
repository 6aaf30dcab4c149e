//! Command-line companion to `loday-core`: JSON interchange for
//! algebra bundles, a catalog of example structures, seeded
//! verification suites, and the `loday` binary's command surface.
//!
//! The library side exists so integration tests can drive the same
//! code paths the binary uses — parsing, binding, suites, reports —
//! without shelling out.

pub mod bind;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod gen;
pub mod json;
pub mod report;
pub mod suite;
