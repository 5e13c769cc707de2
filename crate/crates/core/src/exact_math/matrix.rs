//! Dense vectors, matrices, and rank-3 tensors over ℚ(i).
//!
//! `Tensor3` is the carrier for structure constants: a multiplication tensor
//! stores `c[i][j][k]` meaning `e_i·e_j = Σ_k c[i][j][k] e_k`, and a
//! comultiplication tensor stores `d[i][j][k]` meaning
//! `Δ(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k`.  Keeping both in the same index
//! convention makes dualization a pure transposition.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::GaussianRational;

/// A column vector with exact entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<GaussianRational>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![GaussianRational::zero(); n])
    }

    /// The standard basis vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v[i] = GaussianRational::one();
        v
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> GaussianRational) -> Self {
        Vector((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GaussianRational> {
        self.0.iter()
    }

    /// Indices and values of the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len());
        Vector::from_fn(self.len(), |i| &self[i] + &other[i])
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len());
        Vector::from_fn(self.len(), |i| &self[i] - &other[i])
    }

    pub fn scale(&self, c: &GaussianRational) -> Vector {
        Vector::from_fn(self.len(), |i| &self[i] * c)
    }

    pub fn add_assign_scaled(&mut self, other: &Vector, c: &GaussianRational) {
        assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (dst, src) in self.0.iter_mut().zip(other.iter()) {
            *dst += &(src * c);
        }
    }

    /// Plain bilinear pairing `Σ_i self_i · other_i` (covector applied to a
    /// vector when `self` holds functional coordinates).
    pub fn dot(&self, other: &Vector) -> GaussianRational {
        assert_eq!(self.len(), other.len());
        let mut acc = GaussianRational::zero();
        for (a, b) in self.iter().zip(other.iter()) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Kronecker product; index `(i, j)` of the result is `i·other.len() + j`.
    pub fn kron(&self, other: &Vector) -> Vector {
        let m = other.len();
        Vector::from_fn(self.len() * m, |k| &self[k / m] * &other[k % m])
    }
}

impl Index<usize> for Vector {
    type Output = GaussianRational;
    fn index(&self, i: usize) -> &GaussianRational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut GaussianRational {
        &mut self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A dense `rows × cols` matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose rows are the given vectors (all the same length).
    pub fn from_rows(rows: &[Vector]) -> Self {
        let cols = rows.first().map_or(0, Vector::len);
        Matrix::from_fn(rows.len(), cols, |r, c| rows[r][c].clone())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vector]) -> Self {
        let rows = cols.first().map_or(0, Vector::len);
        Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector(self.row(r).to_vec())
    }

    pub fn col_vector(&self, c: usize) -> Vector {
        Vector::from_fn(self.rows, |r| self[(r, c)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] + &other[(r, c)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] - &other[(r, c)])
    }

    pub fn scale(&self, k: &GaussianRational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] * k)
    }

    pub fn mul_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = Vector::zeros(self.rows);
        for (k, coeff) in v.support() {
            for r in 0..self.rows {
                let a = &self[(r, k)];
                if !a.is_zero() {
                    out[r] += &(a * coeff);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols);
        let mut acc = GaussianRational::zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Kronecker product: `(A ⊗ B)[(i·rB + k, j·cB + l)] = A[i][j]·B[k][l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (ri, rk) = (r / other.rows, r % other.rows);
                let (cj, cl) = (c / other.cols, c % other.cols);
                &self[(ri, cj)] * &other[(rk, cl)]
            },
        )
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}  ", self[(r, c)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A dense rank-3 tensor with shape `(d0, d1, d2)`, laid out row-major so the
/// fiber `t[i][j][·]` is a contiguous slice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    d0: usize,
    d1: usize,
    d2: usize,
    data: Vec<GaussianRational>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            d0,
            d1,
            d2,
            data: vec![GaussianRational::zero(); d0 * d1 * d2],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d0, self.d1, self.d2)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &GaussianRational {
        &self.data[(i * self.d1 + j) * self.d2 + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: GaussianRational) {
        self.data[(i * self.d1 + j) * self.d2 + k] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &GaussianRational) {
        let slot = &mut self.data[(i * self.d1 + j) * self.d2 + k];
        *slot += v;
    }

    /// The contiguous fiber `t[i][j][·]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[GaussianRational] {
        let base = (i * self.d1 + j) * self.d2;
        &self.data[base..base + self.d2]
    }

    pub fn fiber_vector(&self, i: usize, j: usize) -> Vector {
        Vector(self.fiber(i, j).to_vec())
    }

    /// Nonzero entries `(j, k, value)` of the plane `t[i][·][·]`.
    pub fn plane_support(&self, i: usize) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        let base = i * self.d1 * self.d2;
        let d2 = self.d2;
        self.data[base..base + self.d1 * self.d2]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(off, v)| (off / d2, off % d2, v))
    }

    /// Transposes the given pair of axes, e.g. `permute((1, 0, 2))`.
    pub fn permute(&self, order: (usize, usize, usize)) -> Tensor3 {
        let dims = [self.d0, self.d1, self.d2];
        let (o0, o1, o2) = order;
        let mut out = Tensor3::zeros(dims[o0], dims[o1], dims[o2]);
        for i in 0..self.d0 {
            for j in 0..self.d1 {
                for k in 0..self.d2 {
                    let idx = [i, j, k];
                    out.set(idx[o0], idx[o1], idx[o2], self.get(i, j, k).clone());
                }
            }
        }
        out
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3 {}x{}x{}", self.d0, self.d1, self.d2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_product_and_transpose() {
        let a = Matrix::from_fn(2, 3, |r, c| GaussianRational::from_int((r * 3 + c) as i64));
        let b = Matrix::identity(3);
        assert_eq!(a.mul_mat(&b), a);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn kron_indexing() {
        let a = Matrix::from_fn(2, 2, |r, c| GaussianRational::from_int((r + 2 * c) as i64));
        let id = Matrix::identity(3);
        let k = a.kron(&id);
        assert_eq!(k.rows(), 6);
        assert_eq!(k[(0, 0)], a[(0, 0)]);
        assert_eq!(k[(3, 0)], a[(1, 0)]);
        assert_eq!(k[(4, 1)], a[(1, 0)]);
    }

    #[test]
    fn tensor_fibers() {
        let mut t = Tensor3::zeros(2, 2, 3);
        t.set(1, 0, 2, GaussianRational::i());
        assert_eq!(t.fiber(1, 0)[2], GaussianRational::i());
        let support: Vec<_> = t.plane_support(1).map(|(j, k, _)| (j, k)).collect();
        assert_eq!(support, vec![(0, 2)]);
        let p = t.permute((1, 0, 2));
        assert_eq!(*p.get(0, 1, 2), GaussianRational::i());
    }
}
