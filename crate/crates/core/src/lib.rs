pub mod cli;
pub mod coleman;
pub mod curve;
pub mod error;
pub mod frobenius;
pub mod padic;
pub mod series;

pub use error::{Error, Result};
pub use padic::{ArithOp, PadicNumber};
