//! Quasi-unary (QU) strings: n-dimensional discrete taxicab geometry written
//! in a base-(4n+1) digit alphabet.
//!
//! A string is a walk on the integer lattice. Each axis `i` has four digits:
//! `i+` and `i-` draw a unit edge, `i+o` and `i-o` move the pen without
//! drawing. `0` does nothing, and a `.` marks where the origin sits.
//!
//! ```
//! use qu_core::{Dimension, MetricConfig, QuString, metric};
//!
//! let cab = QuString::parse("1+{3}2+{4}", Dimension::PLANE).unwrap();
//! assert_eq!(metric::taxicab_length(&cab, &MetricConfig::default()), 7.into());
//! ```

pub mod digit;
pub mod error;
pub mod graph;
pub mod metric;
pub mod notation;
pub mod render;
pub mod string;
pub mod transform;

pub use digit::{Digit, Dimension, Sign};
pub use error::{Error, ParseDiagnostic, Result};
pub use graph::LatticeSample;
pub use metric::{DisplacementVector, MetricConfig, Rational};
pub use render::{DrawnShape, RenderConfig, Trace};
pub use string::QuString;
pub use transform::TransformPattern;
