//! Exact focal loci of plane congruences in P4 and classification of the congruences whose
//! general focal conic is degenerate.
//!
//! Everything is computed over the rationals. "General point" statements are checked at
//! seeded random rational base points, with second-order Taylor jets carrying the
//! derivatives the focal equations need.

pub mod binform;
pub mod certificate;
pub mod chart;
pub mod classify;
pub mod developable;
pub mod error;
pub mod focal;
pub mod frame;
pub mod generators;
pub mod jet;
pub mod label;
pub mod linalg;
pub mod lines;
pub mod oracle;
pub mod poly;
pub mod proj;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod transform;

pub use chart::{parse_chart, PlaneChart};
pub use error::{Error, Result};
pub use jet::Jet2;
pub use label::ClassLabel;
pub use scalar::Scalar;
