pub mod cli;
pub mod error;
pub mod fock;
pub mod liouville;
pub mod models;
pub mod qpt;
pub mod quasispin;
pub mod spectra;

pub use error::{Error, Result};
