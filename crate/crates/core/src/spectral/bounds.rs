use super::{eigenvalues, submatrix_eigenvalues, theta, Spectrum, Tolerances};
use crate::error::Result;
use crate::graph::Graph;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundOutcome {
    Pass,
    Fail,
    Skipped,
}

impl BoundOutcome {
    fn of(applicable: bool, holds: bool) -> Self {
        match (applicable, holds) {
            (false, _) => BoundOutcome::Skipped,
            (true, true) => BoundOutcome::Pass,
            (true, false) => BoundOutcome::Fail,
        }
    }

    pub fn ok(self) -> bool {
        self != BoundOutcome::Fail
    }
}

/// Degree-based bounds on `μ₁` and `μ₂` evaluated against the numeric spectrum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub d1: usize,
    pub d2: usize,
    /// `max_v (deg v + θ(v))` as an exact fraction `"p/q"`, or `None` when some vertex is isolated.
    pub theta_max: Option<String>,
    pub lower: usize,
    pub upper_sum: usize,
    pub mu1: f64,
    pub mu2: f64,
    /// `μ₁ ≥ d₁ + 1`, for graphs with an edge.
    pub max_degree_lower: BoundOutcome,
    /// `μ₁ = d₁ + 1` within tolerance.
    pub max_degree_equality: bool,
    /// For connected graphs: equality holds exactly when `d₁ = n − 1`.
    pub max_degree_equality_consistent: BoundOutcome,
    /// `μ₁ ≤ max_v (deg v + θ(v))`, for connected graphs on two or more vertices.
    pub theta_upper: BoundOutcome,
    pub theta_equality: bool,
    /// `μ₁ ≤ d₁ + d₂`, for graphs on two or more vertices.
    pub degree_sum_upper: BoundOutcome,
    /// `μ₂ ≥ d₂`, for connected graphs on three or more vertices.
    pub second_lower: BoundOutcome,
}

impl BoundsReport {
    pub fn pass(&self) -> bool {
        [
            self.max_degree_lower,
            self.max_degree_equality_consistent,
            self.theta_upper,
            self.degree_sum_upper,
            self.second_lower,
        ]
        .iter()
        .all(|o| o.ok())
    }
}

/// Evaluates every applicable bound with slack `tol.num`.
pub fn check_bounds(g: &Graph, tol: &Tolerances) -> Result<BoundsReport> {
    let spectrum: Spectrum = eigenvalues(g)?;
    Ok(bounds_with_spectrum(g, &spectrum, tol))
}

pub(crate) fn bounds_with_spectrum(g: &Graph, spectrum: &Spectrum, tol: &Tolerances) -> BoundsReport {
    let n = g.order();
    let ds = g.degree_sequence();
    let (d1, d2) = (ds.max(), ds.second());
    let mu1 = spectrum.mu(1);
    let mu2 = spectrum.mu(2);
    let tau = tol.num;
    let connected = n >= 1 && g.is_connected();
    let has_edge = g.edge_count() > 0;

    let theta_max: Option<Ratio<i64>> = (0..n)
        .map(|v| theta(g, v).ok().map(|t| t + Ratio::from_integer(g.degree(v) as i64)))
        .collect::<Option<Vec<_>>>()
        .and_then(|v| v.into_iter().max());
    let theta_f = theta_max.map(|t| t.to_f64().unwrap());

    let lower = d1 + 1;
    let max_degree_equality = has_edge && (mu1 - lower as f64).abs() <= tau;
    let theta_applicable = connected && n >= 2;
    BoundsReport {
        d1,
        d2,
        theta_max: theta_max.map(|t| t.to_string()),
        lower,
        upper_sum: d1 + d2,
        mu1,
        mu2,
        max_degree_lower: BoundOutcome::of(has_edge, mu1 >= lower as f64 - tau),
        max_degree_equality,
        max_degree_equality_consistent: BoundOutcome::of(connected && has_edge, max_degree_equality == (d1 + 1 == n)),
        theta_upper: BoundOutcome::of(theta_applicable, theta_f.is_some_and(|t| mu1 <= t + tau)),
        theta_equality: theta_applicable && theta_f.is_some_and(|t| (mu1 - t).abs() <= tau),
        degree_sum_upper: BoundOutcome::of(n >= 2, mu1 <= (d1 + d2) as f64 + tau),
        second_lower: BoundOutcome::of(connected && n >= 3, mu2 >= d2 as f64 - tau),
    }
}

/// `max_{1≤i<n} |μ̄ᵢ − (n − μ_{n−i})|` between the spectra of `g` and its complement.
pub fn complement_duality(g: &Graph) -> Result<f64> {
    let n = g.order();
    let s: Spectrum = eigenvalues(g)?;
    let c: Spectrum = eigenvalues(&g.complement())?;
    Ok((1..n).map(|i| (c.mu(i) - (n as f64 - s.mu(n - i))).abs()).fold(0.0, f64::max))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlacingReport {
    pub vertex: usize,
    pub sub: Vec<f64>,
    /// Largest amount by which an interlacing inequality is violated (0 if none).
    pub max_violation: f64,
    pub pass: bool,
}

/// Checks `μ₁ ≥ λ₁ ≥ μ₂ ≥ … ≥ λ_{n−1} ≥ μ_n` for the Laplacian with vertex `v`'s
/// row and column deleted, with slack `tol.num`.
pub fn interlacing_check(g: &Graph, v: usize, tol: &Tolerances) -> Result<InterlacingReport> {
    if v >= g.order() {
        return Err(crate::error::Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    let s: Spectrum = eigenvalues(g)?;
    let sub = submatrix_eigenvalues::<f64>(g, v)?;
    let mut worst = 0.0f64;
    for (i, &lambda) in sub.iter().enumerate() {
        worst = worst.max(lambda - s.mu(i + 1));
        worst = worst.max(s.mu(i + 2) - lambda);
    }
    Ok(InterlacingReport { vertex: v, sub, max_violation: worst, pass: worst <= tol.num })
}
