//! Independent ground-truth engines: exact characteristic polynomials straight
//! from integer matrices, and a numeric symmetric eigensolver.
//!
//! The exact route never touches the recurrences: det(xI - M) is evaluated at
//! n + 1 integer points with fraction-free Bareiss elimination and interpolated
//! exactly over the rationals.

use crate::cayley::IntMatrix;
use crate::polyalg::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("matrix must have dimension >= 1")]
    Dimension,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
}

/// det(lambda I - M), both as a polynomial in lambda and rewritten in a = 2 - lambda.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    /// Monic polynomial in the variable lambda.
    pub in_lambda: IntPoly,
    /// (-1)^n * in_lambda(2 - a): monic in a, directly comparable to A_n.
    pub in_a: IntPoly,
}

/// Fraction-free Bareiss determinant over the integers.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &num / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Evaluation points 0, 1, -1, 2, -2, ... keep Bareiss magnitudes small.
fn eval_points(count: usize) -> Vec<BigInt> {
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(BigInt::zero());
        } else {
            pts.push(BigInt::from(k));
            if pts.len() < count {
                pts.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    pts
}

/// Exact Lagrange interpolation through (x_i, y_i), asserting integer output.
fn interpolate_exact(points: &[BigInt], values: &[BigInt]) -> IntPoly {
    let mut acc = vec![BigRational::zero(); points.len()];
    for (i, (xi, yi)) in points.iter().zip(values).enumerate() {
        // basis_i = prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::from_integer(yi.clone())];
        for (j, xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(xi - xj);
            let shift = BigRational::from_integer(xj.clone());
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                let scaled = c / &denom;
                next[d + 1] += &scaled;
                next[d] -= &scaled * &shift;
            }
            basis = next;
        }
        for (d, c) in basis.into_iter().enumerate() {
            acc[d] += c;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated charpoly must be integral");
            c.to_integer()
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// Exact characteristic polynomial det(lambda I - M).
pub fn charpoly_exact(m: &IntMatrix) -> Result<CharPoly, OracleError> {
    let n = m.dim();
    if n == 0 {
        return Err(OracleError::Dimension);
    }
    let points = eval_points(n + 1);
    let values: Vec<BigInt> = points
        .iter()
        .map(|x| {
            let mut shifted = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    shifted[i][j] = if i == j {
                        x - m.get(i, j)
                    } else {
                        -m.get(i, j)
                    };
                }
            }
            bareiss_det(shifted)
        })
        .collect();
    let in_lambda = interpolate_exact(&points, &values);
    debug_assert!(in_lambda.is_monic() && in_lambda.degree() == Some(n));
    // a = 2 - lambda, so lambda = 2 - a; (-1)^n restores a monic leading term.
    let two_minus_a = IntPoly::from_i64s(&[2, -1]);
    let mut in_a = in_lambda.compose(&two_minus_a);
    if n % 2 == 1 {
        in_a = -in_a;
    }
    Ok(CharPoly { in_lambda, in_a })
}

pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric integer matrix, ascending, by cyclic Jacobi
/// rotations on a float copy.
pub fn eig_numeric(m: &IntMatrix, tol: f64) -> Result<Vec<f64>, OracleError> {
    let n = m.dim();
    if n == 0 {
        return Err(OracleError::Dimension);
    }
    if !m.is_symmetric() {
        return Err(OracleError::NotSymmetric);
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = m.get(i, j).to_f64().expect("Laplacian entries fit in f64");
        }
    }
    let off_norm = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off_norm(&a) >= tol {
        if sweeps >= MAX_SWEEPS {
            return Err(OracleError::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < tol / (n as f64 * n as f64) {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eigs)
}

/// Real roots of an integer polynomial in [lo, hi] with multiplicities:
/// square-free decomposition first, then sign-change bisection on each
/// square-free factor. Intended for polynomials whose roots are real and
/// well separated (every A_n qualifies: roots are 2cos(2 pi k/n)).
pub fn real_roots_with_multiplicity(
    p: &IntPoly,
    lo: f64,
    hi: f64,
) -> Result<Vec<(f64, u32)>, crate::polyalg::PolyError> {
    let dec = crate::polyalg::squarefree_decomposition(p)?;
    let mut roots = Vec::new();
    for (factor, mult) in &dec.factors {
        let deg = factor.degree().unwrap_or(0);
        if deg == 0 {
            continue;
        }
        let samples = (deg * 200).max(2000);
        let step = (hi - lo) / samples as f64;
        let mut prev_x = lo;
        let mut prev_y = factor.eval_f64(prev_x);
        for i in 1..=samples {
            let x = lo + step * i as f64;
            let y = factor.eval_f64(x);
            if prev_y == 0.0 {
                roots.push((prev_x, *mult));
            } else if prev_y * y < 0.0 {
                let (mut a, mut b) = (prev_x, x);
                let (mut fa, _) = (prev_y, y);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    let fm = factor.eval_f64(mid);
                    if fm == 0.0 || (b - a) < 1e-14 {
                        a = mid;
                        b = mid;
                        break;
                    }
                    if fa * fm < 0.0 {
                        b = mid;
                    } else {
                        a = mid;
                        fa = fm;
                    }
                }
                roots.push((0.5 * (a + b), *mult));
            }
            prev_x = x;
            prev_y = y;
        }
        if prev_y == 0.0 {
            roots.push((prev_x, *mult));
        }
    }
    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{cayley_graph, laplacian_of, GroupSpec};
    use crate::sequences::SequenceCache;

    fn cycle_laplacian(n: u64) -> IntMatrix {
        let g = GroupSpec::cyclic(n);
        laplacian_of(&cayley_graph(&g, &g.default_generators()).unwrap())
    }

    #[test]
    fn one_by_one() {
        let cp = charpoly_exact(&cycle_laplacian(1)).unwrap();
        assert_eq!(cp.in_lambda, IntPoly::var());
    }

    #[test]
    fn z2_charpoly() {
        let cp = charpoly_exact(&cycle_laplacian(2)).unwrap();
        // lambda^2 - 2 lambda
        assert_eq!(cp.in_lambda, IntPoly::from_i64s(&[0, -2, 1]));
        // not A_2 = a^2 - 4
        assert_ne!(cp.in_a, IntPoly::from_i64s(&[-4, 0, 1]));
    }

    #[test]
    fn matches_recurrence_for_cycles() {
        let mut cache = SequenceCache::new();
        for n in 3..=16 {
            let cp = charpoly_exact(&cycle_laplacian(n as u64)).unwrap();
            assert_eq!(cp.in_a, cache.a(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn charpoly_invariant_relation() {
        // in_a(a) = (-1)^n in_lambda(2 - a)
        for n in [2u64, 5, 8] {
            let cp = charpoly_exact(&cycle_laplacian(n)).unwrap();
            let mut other = cp.in_lambda.compose(&IntPoly::from_i64s(&[2, -1]));
            if n % 2 == 1 {
                other = -other;
            }
            assert_eq!(cp.in_a, other);
        }
    }

    #[test]
    fn eig_examples() {
        let e = eig_numeric(&cycle_laplacian(3), 1e-12).unwrap();
        let expect = [0.0, 3.0, 3.0];
        for (x, y) in e.iter().zip(expect) {
            assert!((x - y).abs() < 1e-9, "{e:?}");
        }
        let e = eig_numeric(&cycle_laplacian(6), 1e-12).unwrap();
        let expect = [0.0, 1.0, 1.0, 3.0, 3.0, 4.0];
        for (x, y) in e.iter().zip(expect) {
            assert!((x - y).abs() < 1e-9, "{e:?}");
        }
        let e = eig_numeric(&IntMatrix::zeros(4), 1e-12).unwrap();
        assert_eq!(e, vec![0.0; 4]);
    }

    #[test]
    fn eig_rejects_asymmetric() {
        let mut m = IntMatrix::zeros(2);
        m.set(0, 1, BigInt::from(1));
        assert_eq!(eig_numeric(&m, 1e-12), Err(OracleError::NotSymmetric));
    }

    #[test]
    fn eig_sum_is_trace_and_roots_vanish() {
        for n in [4u64, 7, 12, 20] {
            let lap = cycle_laplacian(n);
            let eigs = eig_numeric(&lap, 1e-12).unwrap();
            let sum: f64 = eigs.iter().sum();
            let trace = lap.trace().to_f64().unwrap();
            assert!((sum - trace).abs() < n as f64 * 1e-9);
            let cp = charpoly_exact(&lap).unwrap();
            let scale = 1.0
                + cp.in_lambda
                    .coeffs()
                    .iter()
                    .map(|c| c.to_f64().unwrap().abs())
                    .fold(0.0, f64::max);
            for &e in &eigs {
                assert!(cp.in_lambda.eval_f64(e).abs() <= 1e-6 * scale);
            }
        }
    }
}
