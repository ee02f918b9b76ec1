pub mod concave;
pub mod error;
pub mod identities;
pub mod involution;
pub mod partition;
pub mod series;
pub mod stats;

pub use error::{Error, Result};
