//! File formats, the benchmark harness and the command-line front end for
//! `secant-sketch-core`.

pub mod bench;
pub mod cli;
mod error;
pub mod io;

pub use error::{Error, Result};
