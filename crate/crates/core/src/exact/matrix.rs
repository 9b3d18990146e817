use std::ops::{Add, Neg, Sub};

use super::scalar::Scalar;

/// Dense matrix of a linear map `K^cols -> K^rows`, stored row-major.
///
/// Tensor powers use the row-major basis `e_i ⊗ e_j -> i * n + j`, so
/// `kron(f, g)` is the matrix of `f ⊗ g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose column `j` is `cols[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn row_vector(v: &[Scalar]) -> Self {
        Matrix { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in compose");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    /// Composes a chain right to left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
    pub fn chain(maps: &[&Matrix]) -> Self {
        let (last, rest) = maps.split_last().expect("empty chain");
        rest.iter().rev().fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Matrix) -> Self {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of `f_1 ⊗ ... ⊗ f_k`.
    pub fn kron_all(maps: &[&Matrix]) -> Self {
        let (first, rest) = maps.split_first().expect("empty tensor product");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` if singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).recip().expect("nonzero pivot");
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &factor);
                inv.axpy_row(r, col, &factor);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j) * s;
            self.set(r, j, v);
        }
    }

    /// `row[r] -= factor * row[src]`
    fn axpy_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if !s.is_zero() {
                let v = self.get(r, j) - &(factor * s);
                self.set(r, j, v);
            }
        }
    }

    /// Permutation of tensor factors of `V_0 ⊗ ... ⊗ V_{k-1}` (with `dims[t] = dim V_t`):
    /// output factor `t` is input factor `perm[t]`.
    pub fn permutation(dims: &[usize], perm: &[usize]) -> Matrix {
        assert_eq!(dims.len(), perm.len());
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut m = Matrix::zeros(total, total);
        for col in 0..total {
            let idx = unflatten(col, dims);
            let out_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            m.set(flatten(&out_idx, &out_dims), col, Scalar::one());
        }
        m
    }

    /// The flip `V ⊗ W -> W ⊗ V`.
    pub fn flip(v: usize, w: usize) -> Matrix {
        Matrix::permutation(&[v, w], &[1, 0])
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// Multi-index of a flat tensor index, most significant factor first.
pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for t in (0..dims.len()).rev() {
        idx[t] = flat % dims[t];
        flat /= dims[t];
    }
    idx
}

pub fn flatten(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, v: &[i64]) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| Scalar::from_int(v[i * cols + j]))
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), Matrix::identity(3));
        assert_eq!(inv.compose(&a), Matrix::identity(3));
        // det = 2*1 - 1*(0-3) = 5, so entries are fifths
        assert_eq!(inv.get(0, 0).to_string(), "1/5");
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert!(m(2, 2, &[1, 0, 0, 0]).inverse().is_none());
    }

    #[test]
    fn kron_matches_tensor_of_vectors() {
        let f = m(2, 2, &[1, 2, 3, 4]);
        let g = m(2, 2, &[0, 1, 1, 0]);
        let x = vec![Scalar::from_int(1), Scalar::from_int(-1)];
        let y = vec![Scalar::from_int(2), Scalar::from_int(5)];
        let xy = Matrix::column_vector(&x).kron(&Matrix::column_vector(&y));
        let lhs = f.kron(&g).apply(xy.entries());
        let rhs = Matrix::column_vector(&f.apply(&x)).kron(&Matrix::column_vector(&g.apply(&y)));
        assert_eq!(lhs, rhs.entries());
    }

    #[test]
    fn permutation_moves_factors() {
        // e_1 ⊗ e_0 ⊗ e_2 in 2⊗2⊗3 goes to e_2 ⊗ e_1 ⊗ e_0 under perm [2,0,1]
        let p = Matrix::permutation(&[2, 2, 3], &[2, 0, 1]);
        let col = flatten(&[1, 0, 2], &[2, 2, 3]);
        let row = flatten(&[2, 1, 0], &[3, 2, 2]);
        assert!(p.get(row, col).is_one());
        assert_eq!(p.column(col).iter().filter(|x| !x.is_zero()).count(), 1);
        assert_eq!(Matrix::flip(2, 2).compose(&Matrix::flip(2, 2)), Matrix::identity(4));
    }

    #[test]
    fn index_round_trip() {
        let dims = [3, 2, 4];
        for f in 0..24 {
            assert_eq!(flatten(&unflatten(f, &dims), &dims), f);
        }
    }
}
