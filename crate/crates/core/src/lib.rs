pub mod compiler;
pub mod embedding;
pub mod error;
pub mod experiment;
pub mod hilbert;
pub mod linalg;
pub mod monotones;
pub mod noise;
pub mod pauli;
pub mod random;

pub use error::{Error, Result};
