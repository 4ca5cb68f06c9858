//! File formats, report rendering and verification suites on top of `hopfkit-core`.

pub mod format;
pub mod output;
pub mod suite;
