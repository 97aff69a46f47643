//! Eigenvalue windows for path-friendship graphs: the location of `μ₁` and
//! the bound `μ₂ < 4`, the latter replayed through the components left by
//! deleting the centre.

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::generators::{path, PathFriendshipSpec};
use crate::graph::Graph;
use crate::linalg::{symmetric_eigenvalues, SquareMatrix};
use crate::spectral::{eigenvalues, Spectrum, Tolerances};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowReport {
    pub spec: String,
    pub s: usize,
    pub k: usize,
    pub lower: f64,
    pub upper: f64,
    pub mu1: f64,
    pub pass: bool,
}

/// `μ₁ = 2s + 1` when there are no paths, otherwise `2s+k+1 ≤ μ₁ ≤ 2s+k+2`, each within `tol.num`.
pub fn mu1_window(spec: &PathFriendshipSpec, tol: &Tolerances) -> Result<WindowReport> {
    let (s, k) = (spec.triangles(), spec.path_count());
    let spectrum: Spectrum = eigenvalues(&spec.graph())?;
    let mu1 = spectrum.largest();
    let (lower, upper) = if k == 0 {
        ((2 * s + 1) as f64, (2 * s + 1) as f64)
    } else {
        ((2 * s + k + 1) as f64, (2 * s + k + 2) as f64)
    };
    let pass = mu1 >= lower - tol.num && mu1 <= upper + tol.num;
    Ok(WindowReport { spec: spec.to_string(), s, k, lower, upper, mu1, pass })
}

/// [`mu1_window`] over every spec with `s` triangles and `k` paths on `n` vertices.
pub fn mu1_window_sweep(s: usize, k: usize, n: usize, tol: &Tolerances) -> Result<Vec<WindowReport>> {
    PathFriendshipSpec::all_with_order(n, s)
        .into_iter()
        .filter(|p| p.triangles() == s && p.path_count() == k)
        .map(|p| mu1_window(&p, tol))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentRadius {
    /// Canonical graph6 of the component.
    pub component: String,
    pub order: usize,
    /// Largest eigenvalue of the entrywise absolute value of the component's block of `M_v`.
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SecondEigenvalueReport {
    pub spec: String,
    pub mu2: f64,
    pub components: Vec<ComponentRadius>,
    /// The components are `s` copies of `K₂` and the paths `P_{t₁}, …, P_{t_k}`.
    pub structure_ok: bool,
    pub radii_ok: bool,
    pub pass: bool,
}

/// Checks `μ₂ < 4 − tol.num`, and that each component of `G − v` (`v` the
/// centre) gives a block of `|M_v|` with spectral radius below 4.
pub fn second_eigenvalue_bound(spec: &PathFriendshipSpec, tol: &Tolerances) -> Result<SecondEigenvalueReport> {
    let g = spec.graph();
    let v = 0;
    if g.degree(v) != g.degree_sequence().max() {
        return Err(Error::Structure(format!("{spec}: centre is not a maximum-degree vertex")));
    }
    let spectrum: Spectrum = eigenvalues(&g)?;
    let mu2 = spectrum.mu(2);
    let components = centre_components(&g, v)?;

    let mut expected: Vec<String> = vec![canonical_form(&Graph::complete(2)?); spec.triangles()];
    for &t in spec.paths() {
        expected.push(canonical_form(&path(t)?.graph));
    }
    expected.sort();
    let mut found: Vec<String> = components.iter().map(|c| c.component.clone()).collect();
    found.sort();

    let structure_ok = found == expected;
    let radii_ok = components.iter().all(|c| c.radius < 4.0 - tol.num);
    let below = mu2 < 4.0 - tol.num;
    Ok(SecondEigenvalueReport {
        spec: spec.to_string(),
        mu2,
        components,
        structure_ok,
        radii_ok,
        pass: below && structure_ok && radii_ok,
    })
}

/// Components of `g − v` with the radius of their `|M_v|` blocks.
pub fn centre_components(g: &Graph, v: usize) -> Result<Vec<ComponentRadius>> {
    let rest: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
    let h = g.induced(&rest);
    let mut out = Vec::new();
    for comp in h.components() {
        let members = comp;
        let original: Vec<usize> = members.iter().map(|&i| rest[i]).collect();
        let block = SquareMatrix::from_fn(original.len(), |i, j| {
            let (a, b) = (original[i], original[j]);
            if i == j {
                g.degree(a) as f64
            } else if g.has_edge(a, b) {
                1.0
            } else {
                0.0
            }
        });
        let radius = symmetric_eigenvalues(&block)?.first().copied().unwrap_or(0.0);
        out.push(ComponentRadius { component: canonical_form(&h.induced(&members)), order: members.len(), radius });
    }
    Ok(out)
}
