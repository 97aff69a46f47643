use super::SquareMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted non-increasing.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls below
/// `T::jacobi_tolerance()` times the Frobenius norm of the input.
pub fn symmetric_eigenvalues<T: Real>(m: &SquareMatrix<T>) -> Result<Vec<T>> {
    let n = m.dim();
    let mut a = m.clone();
    let norm = frobenius(&a);
    let threshold = T::jacobi_tolerance() * norm;
    let mut converged = norm == T::zero();
    let mut sweeps = 0;
    while !converged {
        if off_diagonal(&a) <= threshold {
            converged = true;
            break;
        }
        if sweeps == MAX_SWEEPS {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps });
    }
    let mut values: Vec<T> = (0..n).map(|i| a[(i, i)]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    Ok(values)
}

fn frobenius<T: Real>(a: &SquareMatrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            s += a[(i, j)] * a[(i, j)];
        }
    }
    s.sqrt()
}

fn off_diagonal<T: Real>(a: &SquareMatrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// One rotation in the `(p, q)` plane zeroing `a[p][q]`.
fn rotate<T: Real>(a: &mut SquareMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == T::zero() {
        return;
    }
    let two = T::one() + T::one();
    let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
    let t = {
        let r = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
        if theta < T::zero() {
            -r
        } else {
            r
        }
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = T::zero();
    a[(q, p)] = T::zero();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_closed_form() {
        let m = SquareMatrix::from_fn(2, |i, j| [[2.0, 1.0], [1.0, 2.0]][i][j]);
        let ev = symmetric_eigenvalues(&m).unwrap();
        assert!((ev[0] - 3.0f64).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn tridiagonal_path_laplacian() {
        // P_n Laplacian: eigenvalues 4 sin²(kπ/2n), k = 0..n−1
        let n = 9;
        let m = SquareMatrix::from_fn(n, |i, j| {
            if i == j {
                if i == 0 || i == n - 1 {
                    1.0
                } else {
                    2.0
                }
            } else if i.abs_diff(j) == 1 {
                -1.0
            } else {
                0.0
            }
        });
        let ev = symmetric_eigenvalues(&m).unwrap();
        let mut expect: Vec<f64> =
            (0..n).map(|k| 4.0 * (k as f64 * std::f64::consts::PI / (2.0 * n as f64)).sin().powi(2)).collect();
        expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (a, b) in ev.iter().zip(&expect) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn single_precision_works() {
        let m = SquareMatrix::from_fn(3, |i, j| if i == j { 2.0f32 } else { -1.0 });
        let ev = symmetric_eigenvalues(&m).unwrap();
        assert!((ev[0] - 3.0).abs() < 1e-5 && (ev[1] - 3.0).abs() < 1e-5 && ev[2].abs() < 1e-5);
    }

    #[test]
    fn zero_and_empty() {
        let z: SquareMatrix<f64> = SquareMatrix::from_fn(4, |_, _| 0.0);
        assert_eq!(symmetric_eigenvalues(&z).unwrap(), vec![0.0; 4]);
        let e: SquareMatrix<f64> = SquareMatrix::from_fn(0, |_, _| 0.0);
        assert!(symmetric_eigenvalues(&e).unwrap().is_empty());
    }
}
