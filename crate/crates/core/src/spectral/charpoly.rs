//! Exact Laplacian characteristic polynomials.
//!
//! `det(xI − L)` is evaluated at `x = 0, 1, …, n` by fraction-free
//! elimination and the coefficients are recovered by Newton interpolation on
//! those nodes. Both steps divide only where the quotient is integral.

use super::laplacian;
use crate::graph::Graph;
use crate::linalg::{determinant, SquareMatrix};
use crate::scalar::ExactRing;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest order for which every intermediate of the elimination fits in `i128`.
///
/// Entries after step `k` are minors bounded by Hadamard's inequality; their
/// pairwise products stay below `2^127` up to `n = 13`.
pub const I128_SAFE_ORDER: usize = 12;

/// Polynomial `Σ coeffs[i] xⁱ` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntPoly<T> {
    coeffs: Vec<T>,
}

impl<T: ExactRing> IntPoly<T> {
    /// Drops leading zero coefficients.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `xⁱ`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Interpolates the unique polynomial of degree ≤ `values.len() − 1`
    /// through `(k, values[k])`, provided its coefficients lie in `T`.
    pub fn interpolate_at_naturals(values: &[T]) -> Self {
        let mut dd = values.to_vec();
        let n = dd.len();
        for j in 1..n {
            let denom = T::from_i64(j as i64);
            for i in (j..n).rev() {
                dd[i] = (dd[i].clone() - dd[i - 1].clone()) / denom.clone();
            }
        }
        // Horner on the Newton basis ∏(x − j).
        let mut poly: Vec<T> = vec![];
        for j in (0..n).rev() {
            let shift = T::from_i64(j as i64);
            let mut next = vec![T::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() + c.clone();
                next[i] = next[i].clone() - shift.clone() * c.clone();
            }
            next[0] = next[0].clone() + dd[j].clone();
            poly = next;
        }
        IntPoly::new(poly)
    }

    /// Coefficients of `p(y + a)` in `y`.
    pub fn taylor_shift(&self, a: &T) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                c[j] = c[j].clone() + a.clone() * c[j + 1].clone();
            }
        }
        IntPoly::new(c)
    }

    /// Sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for c in &self.coeffs {
            let s = if c.is_positive() {
                1
            } else if c.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn to_bigint(&self) -> IntPoly<BigInt> {
        IntPoly { coeffs: self.coeffs.iter().map(|c| c.to_bigint().expect("integral coefficient")).collect() }
    }
}

impl IntPoly<BigInt> {
    /// `bⁿ p((y + a) / b)` for `x = a / b`, `b > 0`: an integer polynomial
    /// whose positive roots correspond to roots of `p` above `x`.
    fn shifted_to(&self, x: &BigRational) -> IntPoly<BigInt> {
        let (a, b) = (x.numer().clone(), x.denom().clone());
        let n = self.degree();
        let mut scale = BigInt::one();
        let mut scaled = vec![BigInt::zero(); self.coeffs.len()];
        for i in (0..self.coeffs.len()).rev() {
            scaled[i] = &self.coeffs[i] * &scale;
            if i > 0 {
                scale *= &b;
            }
        }
        debug_assert!(n == 0 || scaled.len() == n + 1);
        IntPoly::new(scaled).taylor_shift(&a)
    }

    /// Number of roots strictly greater than `x`, with multiplicity.
    ///
    /// Exact for real-rooted polynomials, where Descartes' rule of signs
    /// counts positive roots without overestimate.
    pub fn real_roots_above(&self, x: &BigRational) -> usize {
        self.shifted_to(x).sign_variations()
    }

    /// Multiplicity of `x` as a root.
    pub fn multiplicity_at(&self, x: &BigRational) -> usize {
        let q = self.shifted_to(x);
        q.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Roots in the open interval `(lo, hi)`, with multiplicity.
    pub fn real_roots_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let above_lo = self.real_roots_above(lo);
        let at_or_above_hi = self.real_roots_above(hi) + self.multiplicity_at(hi);
        above_lo.saturating_sub(at_or_above_hi)
    }

    /// Isolates every root of a real-rooted polynomial whose roots lie in
    /// `[0, bound]` to intervals of width at most `2^-bits`, returning
    /// midpoints in non-increasing order with multiplicity.
    pub fn isolate_real_roots(&self, bound: u64, bits: u32) -> Vec<f64> {
        let mut out = Vec::new();
        let zero = BigRational::zero();
        let m0 = self.multiplicity_at(&zero);
        let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let mut stack = vec![(zero.clone(), BigRational::from_integer(BigInt::from(bound) + 1))];
        while let Some((lo, hi)) = stack.pop() {
            let count = self.real_roots_between(&lo, &hi);
            if count == 0 {
                continue;
            }
            if &hi - &lo <= width {
                let mid = (&lo + &hi) / BigInt::from(2);
                let v = ratio_to_f64(&mid);
                out.extend(std::iter::repeat_n(v, count));
                continue;
            }
            let mid = (&lo + &hi) / BigInt::from(2);
            let at_mid = self.multiplicity_at(&mid);
            if at_mid > 0 {
                out.extend(std::iter::repeat_n(ratio_to_f64(&mid), at_mid));
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.extend(std::iter::repeat_n(0.0, m0));
        out.sort_by(|a, b| b.partial_cmp(a).unwrap());
        out
    }
}

pub(crate) fn ratio_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl<T: fmt::Display + ExactRing> fmt::Display for IntPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display + ExactRing> fmt::Debug for IntPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// `det(xI − L)` in the ring `T`. The caller guarantees `T` is wide enough.
pub fn char_poly_in<T: ExactRing>(g: &Graph) -> IntPoly<T> {
    let n = g.order();
    let lap: SquareMatrix<i64> = laplacian(g);
    let values: Vec<T> = (0..=n)
        .map(|k| {
            let kk = T::from_i64(k as i64);
            let m = SquareMatrix::from_fn(n, |i, j| {
                let l = T::from_i64(lap[(i, j)]);
                if i == j {
                    kk.clone() - l
                } else {
                    -l
                }
            });
            determinant(&m)
        })
        .collect();
    IntPoly::interpolate_at_naturals(&values)
}

/// Exact Laplacian characteristic polynomial with big-integer coefficients.
pub fn char_poly(g: &Graph) -> IntPoly<BigInt> {
    if g.order() <= I128_SAFE_ORDER {
        char_poly_in::<i128>(g).to_bigint()
    } else {
        char_poly_in::<BigInt>(g)
    }
}

/// Exact integer division helper used by coefficient recoveries.
pub(crate) fn exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn big(v: &[i64]) -> IntPoly<BigInt> {
        IntPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn triangle() {
        // det(xI − L(K3)) = x (x − 3)²
        let p = char_poly(&Graph::complete(3).unwrap());
        assert_eq!(p, big(&[0, 9, -6, 1]));
        assert_eq!(p.to_string(), "x^3 - 6x^2 + 9x");
    }

    #[test]
    fn edgeless() {
        assert_eq!(char_poly(&Graph::empty(2).unwrap()), big(&[0, 0, 1]));
        assert_eq!(char_poly(&Graph::empty(0).unwrap()), big(&[1]));
        assert_eq!(char_poly(&Graph::empty(1).unwrap()), big(&[0, 1]));
    }

    #[test]
    fn path_on_three() {
        // eigenvalues 3, 1, 0
        let p = char_poly(&generators::path(3).unwrap().graph);
        assert_eq!(p, big(&[0, 3, -4, 1]));
    }

    #[test]
    fn bigint_and_i128_routes_agree() {
        let g = generators::lollipop(9, 4).unwrap().graph;
        assert_eq!(char_poly_in::<i128>(&g).to_bigint(), char_poly_in::<BigInt>(&g));
        let r: IntPoly<num_rational::Ratio<i128>> = char_poly_in(&g);
        assert!(r.coeffs().iter().all(|c| c.is_integer()));
    }

    #[test]
    fn large_order_uses_big_integers() {
        let g = generators::cycle(30).unwrap().graph;
        let p = char_poly(&g);
        assert_eq!(p.degree(), 30);
        assert_eq!(p.coeff(29), BigInt::from(-60));
        // τ(C30) = 30: coefficient of x is (−1)^{n−1} n τ
        assert_eq!(p.coeff(1), BigInt::from(-900));
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let p = big(&[5, -3, 0, 2, 1]);
        let values: Vec<BigInt> = (0..5).map(|k| p.eval(&BigInt::from(k))).collect();
        assert_eq!(IntPoly::interpolate_at_naturals(&values), p);
    }

    #[test]
    fn taylor_shift_matches_substitution() {
        let p = big(&[1, 2, 3]);
        // p(y + 2) = 3y² + 14y + 17
        assert_eq!(p.taylor_shift(&BigInt::from(2)), big(&[17, 14, 3]));
    }

    #[test]
    fn root_counting() {
        // x (x − 3)²
        let p = big(&[0, 9, -6, 1]);
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(p.real_roots_above(&q(-1, 2)), 3);
        assert_eq!(p.real_roots_above(&q(1, 1)), 2);
        assert_eq!(p.real_roots_above(&q(3, 1)), 0);
        assert_eq!(p.multiplicity_at(&q(3, 1)), 2);
        assert_eq!(p.multiplicity_at(&q(0, 1)), 1);
        assert_eq!(p.real_roots_between(&q(5, 2), &q(7, 2)), 2);
        let roots = p.isolate_real_roots(3, 30);
        assert_eq!(roots.len(), 3);
        assert!((roots[0] - 3.0).abs() < 1e-8 && (roots[1] - 3.0).abs() < 1e-8 && roots[2] == 0.0);
    }
}
