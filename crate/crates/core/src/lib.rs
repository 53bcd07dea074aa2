pub mod error;
pub mod exact_algebra;
pub mod cli;
pub mod dl_calculus;
pub mod group_data;
pub mod stack_points;
pub mod symmetric_functions;

pub use error::{Error, Result};
