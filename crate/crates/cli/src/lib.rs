//! File formats, fixture corpus and end-to-end pipelines behind the `cotilt` binary.

pub mod field;
pub mod fixtures;
pub mod formats;
pub mod pipeline;
pub mod report;
