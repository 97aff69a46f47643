//! Per-graph spectrum reports: exact characteristic polynomial, eigenvalues,
//! spectrum-derived invariants and bounds, with the tolerances used.

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectral::{
    bounds_with_spectrum, char_poly, eigenvalues, invariants_from_spectrum, BoundsReport, SpectralInvariants, Spectrum,
    Tolerances,
};
use serde::{Deserialize, Serialize};

/// Eigenvalues within this distance of an integer are printed as that integer.
pub const SNAP: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Coefficients of `det(xI − L)` as decimal strings, constant term first.
    pub charpoly: Vec<String>,
    /// Eigenvalues, non-increasing.
    pub mu: Vec<f64>,
    pub invariants: SpectralInvariants,
    pub bounds: BoundsReport,
    pub tolerances: Tolerances,
}

fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= SNAP {
        r + 0.0
    } else {
        x
    }
}

pub fn spectrum_record(g: &Graph, tol: &Tolerances) -> Result<SpectrumRecord> {
    let p = char_poly(g);
    let spectrum: Spectrum = eigenvalues(g)?;
    let invariants = invariants_from_spectrum(&p)?;
    let bounds = bounds_with_spectrum(g, &spectrum, tol);
    Ok(SpectrumRecord {
        graph6: to_graph6(g),
        n: g.order(),
        m: g.edge_count(),
        charpoly: p.coeffs().iter().map(|c| c.to_string()).collect(),
        mu: spectrum.values().iter().map(|&x| snap(x)).collect(),
        invariants,
        bounds,
        tolerances: *tol,
    })
}

impl SpectrumRecord {
    pub const CSV_HEADER: [&'static str; 13] = [
        "graph6",
        "n",
        "m",
        "charpoly",
        "mu",
        "components",
        "spanning_trees",
        "sum_sq_degrees",
        "d1",
        "d2",
        "mu1",
        "mu2",
        "bounds_pass",
    ];

    /// One CSV row; list-valued columns are space-separated.
    pub fn csv_row(&self) -> Vec<String> {
        let join = |v: Vec<String>| v.join(" ");
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            join(self.charpoly.clone()),
            join(self.mu.iter().map(|x| x.to_string()).collect()),
            self.invariants.components.to_string(),
            self.invariants.spanning_trees.to_string(),
            self.invariants.sum_sq_degrees.to_string(),
            self.bounds.d1.to_string(),
            self.bounds.d2.to_string(),
            snap(self.bounds.mu1).to_string(),
            snap(self.bounds.mu2).to_string(),
            self.bounds.pass().to_string(),
        ]
    }

    /// A short human-readable block.
    pub fn plain(&self) -> String {
        let mu: Vec<String> = self.mu.iter().map(|x| format!("{x:.10}")).collect();
        format!(
            "{}  n={} m={}\n  charpoly: [{}]\n  mu: [{}]\n  components={} spanning_trees={} sum_sq_degrees={}\n  bounds: {}\n",
            self.graph6,
            self.n,
            self.m,
            self.charpoly.join(", "),
            mu.join(", "),
            self.invariants.components,
            self.invariants.spanning_trees,
            self.invariants.sum_sq_degrees,
            if self.bounds.pass() { "pass" } else { "FAIL" },
        )
    }
}
