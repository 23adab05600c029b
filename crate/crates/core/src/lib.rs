pub mod cli;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideals;
mod linalg;
pub mod poly;
pub mod sally;

pub use error::{Error, Result};
