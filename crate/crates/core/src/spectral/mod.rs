//! Laplacian spectra: exact characteristic polynomials, numeric eigenvalues,
//! spectrum-derived invariants, walk counts and eigenvalue bounds.
//!
//! The Laplacian is taken as `L = D − A`, positive semidefinite with
//! spectrum `μ₁ ≥ … ≥ μ_n = 0`.

mod bounds;
mod charpoly;
mod invariants;
mod spectrum;

pub use bounds::{check_bounds, complement_duality, interlacing_check, BoundOutcome, BoundsReport, InterlacingReport};
pub use charpoly::{char_poly, char_poly_in, IntPoly, I128_SAFE_ORDER};
pub use invariants::{
    closed_walks, coefficients_l, epsilon_invariant, invariants_from_spectrum, theta, ClosedWalks, LCoefficients,
    SpectralInvariants, COEFFICIENT_SIGN,
};
pub use spectrum::{eigenvalues, submatrix_eigenvalues, Spectrum};

pub(crate) use bounds::bounds_with_spectrum;
pub(crate) use charpoly::exact_div;

use crate::graph::Graph;
use crate::linalg::SquareMatrix;
use num_traits::{FromPrimitive, Zero};

/// Numeric tolerances. Defaults: value assertions `1e-10`, cross-graph
/// comparisons `1e-8`, multiplicity grouping `1e-6`, μ₁ separation `1e-9`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    pub num: f64,
    pub check: f64,
    pub mult: f64,
    pub sep: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { num: 1e-10, check: 1e-8, mult: 1e-6, sep: 1e-9 }
    }
}

impl Tolerances {
    /// Every tolerance set to `tau`, never tighter than the defaults.
    pub fn loosened(tau: f64) -> Self {
        let d = Tolerances::default();
        Tolerances { num: d.num.max(tau), check: d.check.max(tau), mult: d.mult.max(tau), sep: d.sep }
    }
}

/// `D − A` with entries in `T`.
pub fn laplacian<T: Clone + Zero + FromPrimitive + std::ops::Neg<Output = T>>(g: &Graph) -> SquareMatrix<T> {
    let one = T::from_i64(1).expect("representable");
    SquareMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            T::from_usize(g.degree(i)).expect("representable")
        } else if g.has_edge(i, j) {
            -one.clone()
        } else {
            T::zero()
        }
    })
}

/// Adjacency matrix with entries in `T`.
pub fn adjacency<T: Clone + Zero + FromPrimitive>(g: &Graph) -> SquareMatrix<T> {
    let one = T::from_i64(1).expect("representable");
    SquareMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { one.clone() } else { T::zero() })
}
