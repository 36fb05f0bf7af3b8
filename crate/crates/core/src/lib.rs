pub mod algebra;
pub mod cli;
pub mod complexes;
pub mod cones;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod gen;
pub mod morphisms;
pub mod oracle;
pub mod scalars;
pub mod walks;

pub use error::{Error, Result};
