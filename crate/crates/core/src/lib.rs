pub mod builtins;
pub mod cli;
pub mod complex;
pub mod deform;
pub mod dos;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod potts;
pub mod spectral;
pub mod topology;

pub use complex::{Complex, FVector, Simplex};
pub use error::{Error, Result};
pub use graph::Graph;
