pub mod error;
pub mod field;
pub mod linalg;
pub mod algebra;
pub mod haction;
pub mod hopfzoo;
pub mod doc;
pub mod pi;
pub mod cli;

pub use error::{Error, Result};
