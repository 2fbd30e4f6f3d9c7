//! Quasi-cyclic product codes.
//!
//! Builds quasi-cyclic codes over finite fields and their reduced bases,
//! forms product codes of quasi-cyclic component codes, certifies
//! minimum-distance lower bounds from eigenvalue data, and decodes phased
//! burst errors up to the certified radius.

pub mod decoder;
pub mod error;
pub mod galois;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod polyring;
pub mod product;
pub mod qcc;
pub mod spectral;

pub use decoder::{DecodeResult, DecoderSetup, Outcome};
pub use error::{Error, Result};
pub use galois::{field_extend, Elem, Extension, Field};
pub use oracle::OracleBudget;
pub use polyring::{Poly, PolyMatrix, PolyRing, RowOp};
pub use product::ProductSpec;
pub use qcc::QuasiCyclicCode;
pub use spectral::{BoundCertificate, ColumnCode, Distance, SpectralReport};
