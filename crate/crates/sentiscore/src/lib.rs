//! File formats, report rendering and the `sentiscore` command line on top of
//! [`sentiscore_core`].

pub mod cli;
mod error;
pub mod report;
pub mod tsv;

pub use error::{Error, LineError, Result};
