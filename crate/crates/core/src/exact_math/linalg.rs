//! Exact elimination: fraction-free echelon form, RREF, kernels, solving.
//!
//! Forward elimination uses the Bareiss one-step fraction-free scheme —
//! denominators are cleared per row first, after which every intermediate
//! entry is a Gaussian integer and each step divides exactly by the previous
//! pivot, keeping entry growth polynomial.  The echelon form is then
//! normalized to a reduced row-echelon form with leading ones, which is the
//! canonical representative used for subspace comparison.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::matrix::{Matrix, Vector};
use super::scalar::{GaussianRational, Rational};
use super::ExactMathError;

/// Result of a reduced row-echelon computation.
#[derive(Clone, Debug)]
pub struct Rref {
    /// The RREF matrix with zero rows removed: `rank` rows, leading ones,
    /// pivot columns cleared elsewhere, pivot columns strictly increasing.
    pub mat: Matrix,
    /// Pivot column of each remaining row.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Scales each row by the least common multiple of its entries' denominators
/// so that all entries become Gaussian integers.  Row scaling preserves row
/// space, kernel, and (for augmented matrices) solution sets.
fn clear_row_denominators(m: &mut Matrix) {
    for r in 0..m.rows() {
        let mut l = BigInt::one();
        for c in 0..m.cols() {
            let e = &m[(r, c)];
            l = l.lcm(e.re.denom());
            l = l.lcm(e.im.denom());
        }
        if !l.is_one() {
            let s = GaussianRational::new(Rational::from_integer(l), Rational::new(0.into(), 1.into()));
            for c in 0..m.cols() {
                let v = &m[(r, c)] * &s;
                m[(r, c)] = v;
            }
        }
    }
}

/// Bareiss fraction-free forward elimination, in place.  Returns the list of
/// `(row, col)` pivots.
fn bareiss_echelon(m: &mut Matrix) -> Vec<(usize, usize)> {
    clear_row_denominators(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = GaussianRational::one();
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for pc in 0..cols {
        let Some(hit) = (pr..rows).find(|&r| !m[(r, pc)].is_zero()) else {
            continue;
        };
        m.swap_rows(pr, hit);
        let piv = m[(pr, pc)].clone();
        for r in pr + 1..rows {
            for c in pc + 1..cols {
                let num = &(&m[(r, c)] * &piv) - &(&m[(r, pc)] * &m[(pr, c)]);
                m[(r, c)] = &num / &prev;
            }
            m[(r, pc)] = GaussianRational::zero();
        }
        prev = piv;
        pivots.push((pr, pc));
        pr += 1;
        if pr == rows {
            break;
        }
    }
    pivots
}

/// Reduced row-echelon form with zero rows dropped.
pub fn rref(m: &Matrix) -> Rref {
    let mut work = m.clone();
    let pivots = bareiss_echelon(&mut work);
    // Normalize pivots to one and clear above.
    for &(r, c) in &pivots {
        let inv = work[(r, c)].inv().expect("pivot is nonzero");
        for cc in c..work.cols() {
            let v = &work[(r, cc)] * &inv;
            work[(r, cc)] = v;
        }
    }
    for idx in (0..pivots.len()).rev() {
        let (r, c) = pivots[idx];
        for above in 0..r {
            let factor = work[(above, c)].clone();
            if factor.is_zero() {
                continue;
            }
            for cc in c..work.cols() {
                let v = &work[(above, cc)] - &(&factor * &work[(r, cc)]);
                work[(above, cc)] = v;
            }
        }
    }
    let mat = Matrix::from_fn(pivots.len(), work.cols(), |r, c| work[(r, c)].clone());
    Rref {
        mat,
        pivots: pivots.into_iter().map(|(_, c)| c).collect(),
    }
}

pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    bareiss_echelon(&mut work).len()
}

/// Basis of the right null space `{v : M·v = 0}`, one vector per free
/// column, in free-column order.
pub fn kernel(m: &Matrix) -> Vec<Vector> {
    let r = rref(m);
    let pivot_set: Vec<usize> = r.pivots.clone();
    let mut out = Vec::new();
    for free in 0..m.cols() {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = Vector::zeros(m.cols());
        v[free] = GaussianRational::one();
        for (row, &pc) in pivot_set.iter().enumerate() {
            v[pc] = -&r.mat[(row, free)];
        }
        out.push(v);
    }
    out
}

/// Solves `M·x = rhs` exactly; free variables are set to zero.
pub fn solve(m: &Matrix, rhs: &Vector) -> Result<Vector, ExactMathError> {
    if m.rows() != rhs.len() {
        return Err(ExactMathError::DimensionMismatch(format!(
            "solve: {} rows vs rhs length {}",
            m.rows(),
            rhs.len()
        )));
    }
    let aug = Matrix::from_fn(m.rows(), m.cols() + 1, |r, c| {
        if c < m.cols() {
            m[(r, c)].clone()
        } else {
            rhs[r].clone()
        }
    });
    let r = rref(&aug);
    if r.pivots.contains(&m.cols()) {
        return Err(ExactMathError::Inconsistent);
    }
    let mut x = Vector::zeros(m.cols());
    for (row, &pc) in r.pivots.iter().enumerate() {
        x[pc] = r.mat[(row, m.cols())].clone();
    }
    Ok(x)
}

/// Exact inverse, or `None` if the matrix is singular or not square.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    });
    let r = rref(&aug);
    if r.rank() < n || r.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |row, col| r.mat[(row, n + col)].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: i64, d: i64) -> GaussianRational {
        GaussianRational::rat(n, d)
    }

    #[test]
    fn rref_is_canonical() {
        // Two different spanning sets of the same plane give identical RREFs.
        let a = Matrix::from_rows(&[
            Vector(vec![gr(2, 1), gr(4, 1), gr(0, 1)]),
            Vector(vec![gr(1, 1), gr(1, 1), gr(1, 1)]),
        ]);
        let b = Matrix::from_rows(&[
            Vector(vec![gr(3, 1), gr(5, 1), gr(1, 1)]),
            Vector(vec![gr(1, 1), gr(3, 1), gr(-1, 1)]),
        ]);
        assert_eq!(rref(&a).mat, rref(&b).mat);
    }

    #[test]
    fn kernel_annihilates() {
        let m = Matrix::from_rows(&[
            Vector(vec![gr(1, 1), gr(2, 1), gr(3, 1)]),
            Vector(vec![gr(2, 1), gr(4, 1), gr(6, 1)]),
        ]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        let m = Matrix::from_rows(&[
            Vector(vec![gr(1, 1), gr(1, 1)]),
            Vector(vec![gr(1, 1), gr(-1, 1)]),
        ]);
        let x = solve(&m, &Vector(vec![gr(3, 1), gr(1, 1)])).unwrap();
        assert_eq!(x, Vector(vec![gr(2, 1), gr(1, 1)]));

        let sing = Matrix::from_rows(&[
            Vector(vec![gr(1, 1), gr(1, 1)]),
            Vector(vec![gr(2, 1), gr(2, 1)]),
        ]);
        assert_eq!(
            solve(&sing, &Vector(vec![gr(0, 1), gr(1, 1)])),
            Err(ExactMathError::Inconsistent)
        );
    }

    #[test]
    fn invert_round_trip() {
        let m = Matrix::from_rows(&[
            Vector(vec![gr(1, 2), GaussianRational::i()]),
            Vector(vec![gr(0, 1), gr(2, 1)]),
        ]);
        let inv = invert(&m).unwrap();
        assert!(m.mul_mat(&inv).is_identity());
        assert!(inv.mul_mat(&m).is_identity());
    }
}
