use super::{laplacian, IntPoly};
use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{symmetric_eigenvalues, SquareMatrix};
use crate::scalar::Real;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Laplacian eigenvalues sorted non-increasing, `μ₁ ≥ … ≥ μ_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<F: Real = f64> {
    values: Vec<F>,
}

impl<F: Real> Spectrum<F> {
    /// Wraps eigenvalues, sorting them non-increasing.
    pub fn from_values(mut values: Vec<F>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Spectrum { values }
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `μᵢ`, 1-based. Out of range yields zero.
    pub fn mu(&self, i: usize) -> F {
        i.checked_sub(1).and_then(|k| self.values.get(k)).copied().unwrap_or_else(F::zero)
    }

    pub fn largest(&self) -> F {
        self.mu(1)
    }

    pub fn sum(&self) -> F {
        self.values.iter().fold(F::zero(), |a, &b| a + b)
    }

    /// Groups eigenvalues closer than `tol` to their neighbour into
    /// `(mean, multiplicity)` pairs, in non-increasing order.
    pub fn multiplicities(&self, tol: F) -> Vec<(F, usize)> {
        self.clusters(tol)
            .into_iter()
            .map(|c| {
                let k = F::from_usize(c.len()).unwrap();
                (c.iter().fold(F::zero(), |a, &b| a + b) / k, c.len())
            })
            .collect()
    }

    fn clusters(&self, tol: F) -> Vec<Vec<F>> {
        let mut out: Vec<Vec<F>> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some(c) if (*c.last().unwrap() - v).abs() <= tol => c.push(v),
                _ => out.push(vec![v]),
            }
        }
        out
    }

    /// Certifies, by exact root counting on `p`, that every cluster of
    /// eigenvalues (grouped at `mult_tol`) spans exactly as many roots of `p`
    /// as it has members once widened by `delta` on each side.
    pub fn matches_char_poly(&self, p: &IntPoly<BigInt>, delta: f64, mult_tol: f64) -> bool {
        if p.degree() != self.len() {
            return false;
        }
        let tol = F::from_f64(mult_tol).unwrap();
        let mut total = 0;
        for c in self.clusters(tol) {
            let hi = c.first().unwrap().to_f64().unwrap() + delta;
            let lo = c.last().unwrap().to_f64().unwrap() - delta;
            let (Some(lo), Some(hi)) = (BigRational::from_float(lo), BigRational::from_float(hi)) else {
                return false;
            };
            let inside = p.real_roots_between(&lo, &hi);
            if inside != c.len() {
                return false;
            }
            total += inside;
        }
        total == self.len()
    }
}

/// Laplacian eigenvalues of `g` in precision `F`.
pub fn eigenvalues<F: Real>(g: &Graph) -> Result<Spectrum<F>> {
    let l: SquareMatrix<F> = laplacian(g);
    Ok(Spectrum::from_values(symmetric_eigenvalues(&l)?))
}

/// Eigenvalues of the Laplacian with row and column `v` deleted.
pub fn submatrix_eigenvalues<F: Real>(g: &Graph, v: usize) -> Result<Vec<F>> {
    let l: SquareMatrix<F> = laplacian(g);
    symmetric_eigenvalues(&l.without(v))
}
