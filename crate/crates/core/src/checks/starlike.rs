//! Separation of starlike trees by their Laplacian spectra: exact
//! characteristic polynomials must differ, and the gaps between largest
//! eigenvalues are reported.

use crate::error::Result;
use crate::generators::{PathFriendshipSpec, StarlikeSpec};
use crate::spectral::{char_poly, eigenvalues, Spectrum, Tolerances};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NearTie {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub trees: usize,
    pub pairs: usize,
    /// Every pair has distinct characteristic polynomials.
    pub distinct_polys: bool,
    /// Smallest `|μ₁(S) − μ₁(T)|` over pairs; `None` with fewer than two trees.
    pub min_gap: Option<f64>,
    pub closest: Option<(Vec<usize>, Vec<usize>)>,
    /// Pairs closer than `tol.sep`. Informational: distinct polynomials do
    /// not by themselves force distinct largest roots.
    pub near_ties: Vec<NearTie>,
}

/// Compares every pair in `specs`, which must be pairwise non-isomorphic.
pub fn separation(specs: &[StarlikeSpec], tol: &Tolerances) -> Result<SeparationReport> {
    let data = specs
        .iter()
        .map(|s| {
            let g = s.graph();
            let mu: Spectrum = eigenvalues(&g)?;
            Ok((s.all_branches(), char_poly(&g), mu.largest()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SeparationReport {
        trees: data.len(),
        pairs: 0,
        distinct_polys: true,
        min_gap: None,
        closest: None,
        near_ties: Vec::new(),
    };
    for i in 0..data.len() {
        for j in i + 1..data.len() {
            report.pairs += 1;
            let (a, b) = (&data[i], &data[j]);
            if a.1 == b.1 {
                report.distinct_polys = false;
            }
            let gap = (a.2 - b.2).abs();
            if report.min_gap.is_none_or(|g| gap < g) {
                report.min_gap = Some(gap);
                report.closest = Some((a.0.clone(), b.0.clone()));
            }
            if gap < tol.sep {
                report.near_ties.push(NearTie { a: a.0.clone(), b: b.0.clone(), gap });
            }
        }
    }
    Ok(report)
}

/// All starlike trees on `n` vertices, optionally restricted to `k` branches.
pub fn starlike_mu1_separation(n: usize, k: Option<usize>, tol: &Tolerances) -> Result<SeparationReport> {
    let specs: Vec<StarlikeSpec> =
        StarlikeSpec::all_with_order(n).into_iter().filter(|s| k.is_none_or(|k| s.branch_count() == k)).collect();
    separation(&specs, tol)
}

/// Reductions `(2s, t)` of every path-friendship graph on `n` vertices with
/// `s` triangles and `k` paths.
pub fn reduction_mu1_separation(s: usize, k: usize, n: usize, tol: &Tolerances) -> Result<SeparationReport> {
    let specs: Vec<StarlikeSpec> = PathFriendshipSpec::all_with_order(n, s)
        .into_iter()
        .filter(|p| p.triangles() == s && p.path_count() == k)
        .map(|p| p.starlike_reduction())
        .collect();
    separation(&specs, tol)
}
