//! Fixtures, Thom-Sebastiani sums, spectrum-jump verifiers and the check
//! suites behind the `motspec` command.

pub mod fixtures;
pub mod io;
pub mod steenbrink;
pub mod suites;
pub mod ts;
