//! Classification of finite simple graphs through their basic k-covers:
//! unmixedness, the domain property and the square conditions SC, WSC and
//! MSC, each computed along independent routes that can be cross-checked.

pub mod classify;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod graph;
pub mod suite;

pub use error::{Error, Result};
