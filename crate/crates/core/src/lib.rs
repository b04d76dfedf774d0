pub mod app;
pub mod blocks;
pub mod code;
pub mod combinatorics;
pub mod design;
pub mod error;
pub mod field;
pub mod linalg;
pub mod report;
pub mod support;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldRecord, UnitPoint};
