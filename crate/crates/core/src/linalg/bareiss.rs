use super::SquareMatrix;
use crate::scalar::ExactRing;

/// Determinant by fraction-free Gaussian elimination.
///
/// Every division is exact: after step `k` each entry is a `(k+1)×(k+1)`
/// minor of the input, so the quotient stays in the ring.
pub fn determinant<T: ExactRing>(m: &SquareMatrix<T>) -> T {
    let n = m.dim();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let v = a[(i, j)].clone() * pivot.clone() - lead.clone() * a[(k, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let det = a[(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}
