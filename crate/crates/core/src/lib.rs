//! Exact and numeric Laplacian spectra of small simple graphs, exhaustive
//! cospectral search, and replays of structural spectral-characterization
//! arguments for path-friendship graphs.

pub mod canon;
pub mod checks;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod report;
pub mod scalar;
pub mod search;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph, RootedGraph, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6, Graph6Reader};
pub use spectral::{IntPoly, Spectrum, Tolerances};

/// Characteristic polynomial with arbitrary-precision coefficients.
pub type CharPoly = IntPoly<num_bigint::BigInt>;
/// Characteristic polynomial with `i128` coefficients, exact for small orders.
pub type CharPoly128 = IntPoly<i128>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
