pub mod aks;
pub mod cli;
pub mod criteria;
pub mod crypto;
mod decimal;
pub mod error;
pub mod expsum;
pub mod modarith;
pub mod poly;
pub mod primes;
pub mod structure;

pub use error::{Error, Result};
