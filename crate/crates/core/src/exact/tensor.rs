//! Structure tensors over a fixed basis `e_0, ..., e_{n-1}`.

use super::matrix::{flatten, Matrix};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Linear endomorphism; column `j` is the image of `e_j`.
pub type Endo = Matrix;

/// Multiplication `e_i e_j = Σ_k c[i][j][k] e_k`, stored as an `n × n²` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mul {
    dim: usize,
    m: Matrix,
}

impl Mul {
    pub fn zero(dim: usize) -> Self {
        Mul { dim, m: Matrix::zeros(dim, dim * dim) }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let m = Matrix::from_fn(dim, dim * dim, |k, col| f(col / dim, col % dim, k));
        Mul { dim, m }
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        let dim = m.rows();
        if m.cols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication matrix is {}×{}, expected {dim}×{}",
                m.rows(),
                m.cols(),
                dim * dim
            )));
        }
        Ok(Mul { dim, m })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.m.get(k, i * self.dim + j)
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.m.set(k, i * self.dim + j, v);
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn apply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        mul_apply(self, a, b)
    }
}

/// Comultiplication `Δ(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k`, stored as an `n² × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comul {
    dim: usize,
    m: Matrix,
}

impl Comul {
    pub fn zero(dim: usize) -> Self {
        Comul { dim, m: Matrix::zeros(dim * dim, dim) }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let m = Matrix::from_fn(dim * dim, dim, |row, i| f(i, row / dim, row % dim));
        Comul { dim, m }
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        let dim = m.cols();
        if m.rows() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication matrix is {}×{}, expected {}×{dim}",
                m.rows(),
                m.cols(),
                dim * dim
            )));
        }
        Ok(Comul { dim, m })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.m.get(j * self.dim + k, i)
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.m.set(j * self.dim + k, i, v);
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn apply(&self, a: &[Scalar]) -> Elem2 {
        comul_apply(self, a)
    }
}

/// Element of `A ⊗ A`: `Σ m[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem2 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Elem2 {
    pub fn zero(dim: usize) -> Self {
        Elem2 { dim, coeffs: vec![Scalar::zero(); dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let coeffs = (0..dim * dim).map(|x| f(x / dim, x % dim)).collect();
        Elem2 { dim, coeffs }
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), dim * dim);
        Elem2 { dim, coeffs }
    }

    /// `a ⊗ b`
    pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Self {
        assert_eq!(a.len(), b.len());
        Elem2::from_fn(a.len(), |i, j| &a[i] * &b[j])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs[i * self.dim + j] = v;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// Element of `A ⊗ A ⊗ A`, also used for rank-3 value tensors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem3 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Elem3 {
    pub fn zero(dim: usize) -> Self {
        Elem3 { dim, coeffs: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), dim * dim * dim);
        Elem3 { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[flatten(&[i, j, k], &[self.dim; 3])]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Elem3) -> Elem3 {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Elem3) -> Elem3 {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Elem3 {
        Elem3 { dim: self.dim, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    fn combine(&self, other: &Elem3, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Elem3 {
        assert_eq!(self.dim, other.dim);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        Elem3 { dim: self.dim, coeffs }
    }
}

/// Bilinear form `σ(e_i, e_j) = s[i][j]`, stored as a `1 × n²` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiForm {
    dim: usize,
    m: Matrix,
}

impl BiForm {
    pub fn zero(dim: usize) -> Self {
        BiForm { dim, m: Matrix::zeros(1, dim * dim) }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        BiForm { dim, m: Matrix::from_fn(1, dim * dim, |_, x| f(x / dim, x % dim)) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.m.get(0, i * self.dim + j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.m.set(0, i * self.dim + j, v);
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// `σ(a, b)`
    pub fn eval(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (i, ai) in a.iter().enumerate().take(self.dim) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(self.dim) {
                let c = self.get(i, j);
                if !c.is_zero() && !bj.is_zero() {
                    s += ai * &(c * bj);
                }
            }
        }
        s
    }

    /// The same coefficients read as an element of `A ⊗ A`.
    pub fn to_elem2(&self) -> Elem2 {
        Elem2::from_fn(self.dim, |i, j| self.get(i, j).clone())
    }

    pub fn from_elem2(r: &Elem2) -> Self {
        BiForm::from_fn(r.dim(), |i, j| r.get(i, j).clone())
    }
}

/// Basis vector `e_i` of `K^n`.
pub fn basis(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn endo_inverse(f: &Endo, name: &str) -> Result<Endo> {
    f.inverse().ok_or_else(|| Error::SingularMap(name.to_string()))
}

/// `μ(a ⊗ b)` computed from the coefficients.
pub fn mul_apply(mul: &Mul, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = mul.dim();
    let mut out = vec![Scalar::zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n) {
            if bj.is_zero() {
                continue;
            }
            let ab = ai * bj;
            for (k, o) in out.iter_mut().enumerate() {
                let c = mul.get(i, j, k);
                if !c.is_zero() {
                    *o += &ab * c;
                }
            }
        }
    }
    out
}

/// `Δ(a)` computed from the coefficients.
pub fn comul_apply(comul: &Comul, a: &[Scalar]) -> Elem2 {
    let n = comul.dim();
    let mut out = Elem2::zero(n);
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for j in 0..n {
            for k in 0..n {
                let d = comul.get(i, j, k);
                if !d.is_zero() {
                    let v = out.get(j, k) + &(ai * d);
                    out.set(j, k, v);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// Dual numbers: e0 = 1, e1 = x, x² = 0.
    fn dual_numbers() -> Mul {
        Mul::from_fn(2, |i, j, k| if i + j == k { s(1) } else { s(0) })
    }

    #[test]
    fn mul_apply_dual_numbers() {
        let m = dual_numbers();
        // (1 + x)(1 + x) = 1 + 2x
        let a = vec![s(1), s(1)];
        assert_eq!(mul_apply(&m, &a, &a), vec![s(1), s(2)]);
        assert_eq!(m.matrix().apply(Elem2::tensor(&a, &a).coeffs()), vec![s(1), s(2)]);
    }

    #[test]
    fn comul_apply_matches_matrix() {
        // Δ(x^n) = Σ_p x^p ⊗ x^{n-p} on span{1, x, x²}
        let d = Comul::from_fn(3, |i, j, k| if j + k == i { s(1) } else { s(0) });
        let x2 = basis(3, 2);
        let e = comul_apply(&d, &x2);
        assert_eq!(e.coeffs(), d.matrix().apply(&x2).as_slice());
        assert!(e.get(0, 2).is_one() && e.get(1, 1).is_one() && e.get(2, 0).is_one());
        assert!(e.get(1, 2).is_zero());
    }

    #[test]
    fn biform_eval() {
        let sigma = BiForm::from_fn(2, |i, j| s((i * 2 + j) as i64));
        assert_eq!(sigma.eval(&basis(2, 1), &basis(2, 0)), s(2));
        assert_eq!(sigma.eval(&[s(1), s(1)], &[s(1), s(1)]), s(6));
    }

    #[test]
    fn endo_inverse_reports_singular() {
        let f = Matrix::from_fn(2, 2, |i, j| if i == 0 && j == 0 { s(1) } else { s(0) });
        assert!(matches!(endo_inverse(&f, "alpha"), Err(Error::SingularMap(n)) if n == "alpha"));
    }
}
