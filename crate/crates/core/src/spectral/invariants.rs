use super::{adjacency, exact_div, IntPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::SquareMatrix;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Quantities readable from the Laplacian characteristic polynomial alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralInvariants {
    pub n: usize,
    pub m: usize,
    #[serde(with = "bigint_string")]
    pub spanning_trees: BigInt,
    pub components: usize,
    pub sum_sq_degrees: u64,
}

impl SpectralInvariants {
    /// The same five quantities computed combinatorially from `g`, with the
    /// spanning-tree count taken from a Kirchhoff minor.
    pub fn direct(g: &Graph) -> Self {
        let n = g.order();
        let components = g.component_count();
        let spanning_trees = if components == 1 { kirchhoff_minor(g) } else { BigInt::zero() };
        SpectralInvariants {
            n,
            m: g.edge_count(),
            spanning_trees,
            components,
            sum_sq_degrees: g.degree_sequence().sum_of_squares(),
        }
    }
}

/// Determinant of the Laplacian with the last row and column removed.
fn kirchhoff_minor(g: &Graph) -> BigInt {
    let n = g.order();
    if n <= 1 {
        return BigInt::one();
    }
    let l: SquareMatrix<BigInt> = super::laplacian(g);
    crate::linalg::determinant(&l.without(n - 1))
}

/// Recovers `n`, `m`, component count, spanning-tree count and `Σdᵢ²` from
/// `p = det(xI − L)`.
pub fn invariants_from_spectrum(p: &IntPoly<BigInt>) -> Result<SpectralInvariants> {
    let bad = |why: &str| Error::InvalidCharPoly(why.to_string());
    let n = p.degree();
    if !p.coeff(n).is_one() {
        return Err(bad("not monic"));
    }
    if n == 0 {
        return Ok(SpectralInvariants { n, m: 0, spanning_trees: BigInt::zero(), components: 0, sum_sq_degrees: 0 });
    }
    if !p.coeff(0).is_zero() {
        return Err(bad("zero is not a root"));
    }
    let top = -p.coeff(n - 1);
    let m_big = exact_div(&top, &BigInt::from(2)).ok_or_else(|| bad("odd coefficient of x^(n-1)"))?;
    if m_big.is_negative() {
        return Err(bad("negative edge count"));
    }
    let m = m_big.to_usize().ok_or_else(|| bad("edge count out of range"))?;
    let components = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let spanning_trees = if components == 1 {
        let c1 = p.coeff(1);
        let signed = if (n - 1).is_multiple_of(2) { c1 } else { -c1 };
        exact_div(&signed, &BigInt::from(n)).ok_or_else(|| bad("coefficient of x not divisible by n"))?
    } else {
        BigInt::zero()
    };
    let sum_sq_degrees = if n >= 2 {
        let mb = BigInt::from(m);
        let v: BigInt = (BigInt::from(2) * &mb * &mb - &mb - p.coeff(n - 2)) * 2;
        v.to_u64().ok_or_else(|| bad("negative sum of squared degrees"))?
    } else {
        0
    };
    Ok(SpectralInvariants { n, m, spanning_trees, components, sum_sq_degrees })
}

/// Closed-walk count computed as `tr(Aᵏ)` and from the subgraph-count formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedWalks {
    pub length: usize,
    pub trace: i64,
    pub formula: i64,
}

impl ClosedWalks {
    pub fn agree(&self) -> bool {
        self.trace == self.formula
    }
}

fn adjacency_trace_power(g: &Graph, k: usize) -> i64 {
    let a: SquareMatrix<i64> = adjacency(g);
    let n = g.order();
    let mut p = a.clone();
    for _ in 1..k {
        p = SquareMatrix::from_fn(n, |i, j| (0..n).map(|t| p[(i, t)] * a[(t, j)]).sum());
    }
    (0..n).map(|i| p[(i, i)]).sum()
}

/// Closed walks of length 2, 3 or 4.
pub fn closed_walks(g: &Graph, length: usize) -> Result<ClosedWalks> {
    let m = g.edge_count() as i64;
    let c = g.count_subgraphs();
    let formula = match length {
        2 => 2 * m,
        3 => 6 * c.triangles as i64,
        4 => 2 * m + 4 * c.paths3 as i64 + 8 * c.cycles4 as i64,
        _ => return Err(Error::InvalidParams(format!("closed-walk length must be 2, 3 or 4, got {length}"))),
    };
    Ok(ClosedWalks { length, trace: adjacency_trace_power(g, length), formula })
}

/// `tr(A³) − Σ(dᵢ − 2)³`, equal across Laplacian-cospectral graphs.
pub fn epsilon_invariant(g: &Graph) -> i64 {
    let tr3 = 6 * g.triangle_count() as i64;
    tr3 - g.degrees().iter().map(|&d| (d as i64 - 2).pow(3)).sum::<i64>()
}

/// `θ(v) = Σ_{u∼v} deg u / deg v`, exactly.
pub fn theta(g: &Graph, v: usize) -> Result<Ratio<i64>> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    let d = g.degree(v) as i64;
    if d == 0 {
        return Err(Error::IsolatedVertex(v));
    }
    let s: i64 = g.neighbors(v).map(|u| g.degree(u) as i64).sum();
    Ok(Ratio::new(s, d))
}

/// Index mapping between the closed-form coefficients `lᵢ` and the
/// coefficients `cⱼ` of `det(xI − L)`: `lᵢ = COEFFICIENT_SIGN · c_{n−i}`.
///
/// The closed forms are read from the top of the polynomial; with `L = D − A`
/// no sign change is needed (fixed by the small-order test below).
pub const COEFFICIENT_SIGN: i64 = 1;

/// `l₀ … l₃` from the degree/triangle closed forms and from the polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LCoefficients {
    /// `None` where the closed form is not an integer.
    pub closed_form: [Option<i128>; 4],
    pub from_char_poly: [i128; 4],
}

impl LCoefficients {
    pub fn agree(&self) -> bool {
        self.closed_form.iter().zip(&self.from_char_poly).all(|(a, b)| *a == Some(*b))
    }
}

/// Evaluates both routes for `l₀ … l₃`. Coefficients beyond the degree are zero.
pub fn coefficients_l(g: &Graph, p: &IntPoly<BigInt>) -> LCoefficients {
    let n = g.order();
    let m = g.edge_count() as i128;
    let ds = g.degree_sequence();
    let s2 = ds.sum_of_squares() as i128;
    let s3 = ds.sum_of_cubes() as i128;
    let t = g.triangle_count() as i128;
    let exact = |num: i128, den: i128| (num % den == 0).then_some(num / den);
    let closed_form = [
        Some(1),
        Some(-2 * m),
        exact(2 * (2 * m * m - m) - s2, 2),
        exact(-4 * m * m * m + 6 * m * m + 3 * m * s2 - s3 - 3 * s2 + 6 * t, 3),
    ];
    let from_char_poly = std::array::from_fn(|i| {
        if i > n {
            0
        } else {
            (COEFFICIENT_SIGN as i128) * p.coeff(n - i).to_i128().expect("coefficient fits i128")
        }
    });
    LCoefficients { closed_form, from_char_poly }
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
