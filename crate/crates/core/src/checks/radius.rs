//! Exact classification of connected graphs whose largest Laplacian
//! eigenvalue is below 4.

use crate::canon::canonical_form;
use crate::enumerate::{enumerate, EnumFilter};
use crate::error::Result;
use crate::generators::{cycle, path};
use crate::graph::Graph;
use crate::spectral::char_poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// `μ₁ < 4`, decided by counting roots of the characteristic polynomial at or above 4.
pub fn radius_below_four(g: &Graph) -> bool {
    let p = char_poly(g);
    let four = BigRational::from_integer(BigInt::from(4));
    p.real_roots_above(&four) == 0 && p.multiplicity_at(&four) == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusClassification {
    pub n: usize,
    pub connected: usize,
    /// Canonical graph6 of the graphs with `μ₁ < 4`, sorted.
    pub below: Vec<String>,
    /// `P_n`, and `C_n` for odd `n ≥ 3`.
    pub expected: Vec<String>,
    pub pass: bool,
}

/// Classifies every connected graph on `n` vertices.
pub fn small_radius_classify(n: usize) -> Result<RadiusClassification> {
    let mut connected = 0;
    let mut below = Vec::new();
    enumerate(&EnumFilter::new(n).connected(true), false, |g| {
        connected += 1;
        if radius_below_four(&g) {
            below.push(canonical_form(&g));
        }
    })?;
    below.sort();
    let mut expected = Vec::new();
    if n >= 1 {
        expected.push(canonical_form(&path(n)?.graph));
    }
    if n >= 3 && n % 2 == 1 {
        expected.push(canonical_form(&cycle(n)?.graph));
    }
    expected.sort();
    let pass = below == expected;
    Ok(RadiusClassification { n, connected, below, expected, pass })
}
