//! Algebraic structures as plain data over fixed bases.
//!
//! Twisting maps are stored as matrices whose column `j` is the image of `e_j`.
//! Actions and coactions are stored as matrices of linear maps; the indexed
//! accessors follow the file format's conventions.

use crate::error::{Error, Result};
use crate::exact::{basis, mul_apply, Comul, Elem2, Elem3, Endo, Matrix, Mul, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub mul: Mul,
    pub alpha: Endo,
    pub beta: Endo,
    pub unit: Option<Vec<Scalar>>,
}

impl Algebra {
    /// Untwisted algebra: both maps are the identity.
    pub fn plain(mul: Mul, unit: Option<Vec<Scalar>>) -> Self {
        let n = mul.dim();
        Algebra { mul, alpha: Endo::identity(n), beta: Endo::identity(n), unit }
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }

    pub fn mul_matrix(&self) -> &Matrix {
        self.mul.matrix()
    }

    pub fn unit_or_err(&self) -> Result<&Vec<Scalar>> {
        self.unit.as_ref().ok_or(Error::MissingUnit)
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        mul_apply(&self.mul, a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub comul: Comul,
    pub psi: Endo,
    pub omega: Endo,
    pub counit: Option<Vec<Scalar>>,
}

impl Coalgebra {
    pub fn plain(comul: Comul, counit: Option<Vec<Scalar>>) -> Self {
        let n = comul.dim();
        Coalgebra { comul, psi: Endo::identity(n), omega: Endo::identity(n), counit }
    }

    pub fn dim(&self) -> usize {
        self.comul.dim()
    }

    pub fn comul_matrix(&self) -> &Matrix {
        self.comul.matrix()
    }

    pub fn counit_or_err(&self) -> Result<&Vec<Scalar>> {
        self.counit.as_ref().ok_or(Error::MissingCounit)
    }
}

/// A λ-infinitesimal BiHom-bialgebra candidate `(A, μ, Δ, α, β, ψ, ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    pub lambda: Scalar,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, lambda: Scalar) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        Ok(Bialgebra { algebra, coalgebra, lambda })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mu(&self) -> &Matrix {
        self.algebra.mul.matrix()
    }

    pub fn delta(&self) -> &Matrix {
        self.coalgebra.comul.matrix()
    }

    pub fn alpha(&self) -> &Endo {
        &self.algebra.alpha
    }

    pub fn beta(&self) -> &Endo {
        &self.algebra.beta
    }

    pub fn psi(&self) -> &Endo {
        &self.coalgebra.psi
    }

    pub fn omega(&self) -> &Endo {
        &self.coalgebra.omega
    }
}

/// Left module with action `e_i ▷ f_p = Σ_q g[i][p][q] f_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub dim: usize,
    /// `A ⊗ M -> M`
    pub action: Matrix,
    pub alpha: Endo,
    pub beta: Endo,
}

impl LeftModule {
    pub fn from_fn(n: usize, dim: usize, mut g: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let action = Matrix::from_fn(dim, n * dim, |q, col| g(col / dim, col % dim, q));
        LeftModule { dim, action, alpha: Endo::identity(dim), beta: Endo::identity(dim) }
    }

    /// The algebra acting on itself by multiplication.
    pub fn regular(a: &Algebra) -> Self {
        LeftModule {
            dim: a.dim(),
            action: a.mul_matrix().clone(),
            alpha: a.alpha.clone(),
            beta: a.beta.clone(),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.cols() / self.dim.max(1)
    }

    pub fn get(&self, i: usize, p: usize, q: usize) -> &Scalar {
        self.action.get(q, i * self.dim + p)
    }
}

/// Right module with action `f_p ◁ e_i = Σ_q g[p][i][q] f_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub dim: usize,
    /// `M ⊗ A -> M`
    pub action: Matrix,
    pub alpha: Endo,
    pub beta: Endo,
}

impl RightModule {
    pub fn from_fn(n: usize, dim: usize, mut g: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let action = Matrix::from_fn(dim, dim * n, |q, col| g(col / n, col % n, q));
        RightModule { dim, action, alpha: Endo::identity(dim), beta: Endo::identity(dim) }
    }

    pub fn regular(a: &Algebra) -> Self {
        RightModule {
            dim: a.dim(),
            action: a.mul_matrix().clone(),
            alpha: a.alpha.clone(),
            beta: a.beta.clone(),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.cols() / self.dim.max(1)
    }

    pub fn get(&self, p: usize, i: usize, q: usize) -> &Scalar {
        let n = self.algebra_dim();
        self.action.get(q, p * n + i)
    }
}

/// Bimodule sharing one pair of twisting maps between both actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub dim: usize,
    /// `A ⊗ M -> M`
    pub left: Matrix,
    /// `M ⊗ A -> M`
    pub right: Matrix,
    pub alpha: Endo,
    pub beta: Endo,
}

impl Bimodule {
    pub fn regular(a: &Algebra) -> Self {
        Bimodule {
            dim: a.dim(),
            left: a.mul_matrix().clone(),
            right: a.mul_matrix().clone(),
            alpha: a.alpha.clone(),
            beta: a.beta.clone(),
        }
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule {
            dim: self.dim,
            action: self.left.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }

    pub fn right_module(&self) -> RightModule {
        RightModule {
            dim: self.dim,
            action: self.right.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }
}

/// Left comodule with coaction `ρ(f_p) = Σ_{i,q} h[p][i][q] e_i ⊗ f_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    pub dim: usize,
    /// `M -> A ⊗ M`
    pub coaction: Matrix,
    pub psi: Endo,
    pub omega: Endo,
}

impl LeftComodule {
    pub fn from_fn(n: usize, dim: usize, mut h: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let coaction = Matrix::from_fn(n * dim, dim, |row, p| h(p, row / dim, row % dim));
        LeftComodule { dim, coaction, psi: Endo::identity(dim), omega: Endo::identity(dim) }
    }

    pub fn regular(c: &Coalgebra) -> Self {
        LeftComodule {
            dim: c.dim(),
            coaction: c.comul_matrix().clone(),
            psi: c.psi.clone(),
            omega: c.omega.clone(),
        }
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coaction.rows() / self.dim.max(1)
    }

    pub fn get(&self, p: usize, i: usize, q: usize) -> &Scalar {
        self.coaction.get(i * self.dim + q, p)
    }
}

/// Right comodule with coaction `φ(f_p) = Σ_{q,i} h[p][q][i] f_q ⊗ e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    pub dim: usize,
    /// `M -> M ⊗ A`
    pub coaction: Matrix,
    pub psi: Endo,
    pub omega: Endo,
}

impl RightComodule {
    pub fn from_fn(n: usize, dim: usize, mut h: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let coaction = Matrix::from_fn(dim * n, dim, |row, p| h(p, row / n, row % n));
        RightComodule { dim, coaction, psi: Endo::identity(dim), omega: Endo::identity(dim) }
    }

    pub fn regular(c: &Coalgebra) -> Self {
        RightComodule {
            dim: c.dim(),
            coaction: c.comul_matrix().clone(),
            psi: c.psi.clone(),
            omega: c.omega.clone(),
        }
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coaction.rows() / self.dim.max(1)
    }

    pub fn get(&self, p: usize, q: usize, i: usize) -> &Scalar {
        let n = self.coalgebra_dim();
        self.coaction.get(q * n + i, p)
    }
}

/// Left Hopf module: the carrier maps are `α_M, β_M` from the module and
/// `ψ_M, ω_M` from the comodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule {
    pub bialgebra: Bialgebra,
    pub module: LeftModule,
    pub comodule: LeftComodule,
}

impl HopfModule {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn regular(b: &Bialgebra) -> Self {
        HopfModule {
            bialgebra: b.clone(),
            module: LeftModule::regular(&b.algebra),
            comodule: LeftComodule::regular(&b.coalgebra),
        }
    }
}

/// Hopf bimodule: both actions and both coactions on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfBimodule {
    pub bialgebra: Bialgebra,
    pub bimodule: Bimodule,
    /// `M -> A ⊗ M`
    pub left_coaction: Matrix,
    /// `M -> M ⊗ A`
    pub right_coaction: Matrix,
    pub psi: Endo,
    pub omega: Endo,
}

impl HopfBimodule {
    pub fn regular(b: &Bialgebra) -> Self {
        HopfBimodule {
            bialgebra: b.clone(),
            bimodule: Bimodule::regular(&b.algebra),
            left_coaction: b.delta().clone(),
            right_coaction: b.delta().clone(),
            psi: b.psi().clone(),
            omega: b.omega().clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim
    }

    pub fn left_comodule(&self) -> LeftComodule {
        LeftComodule {
            dim: self.dim(),
            coaction: self.left_coaction.clone(),
            psi: self.psi.clone(),
            omega: self.omega.clone(),
        }
    }

    pub fn right_comodule(&self) -> RightComodule {
        RightComodule {
            dim: self.dim(),
            coaction: self.right_coaction.clone(),
            psi: self.psi.clone(),
            omega: self.omega.clone(),
        }
    }

    pub fn left_hopf_module(&self) -> HopfModule {
        HopfModule {
            bialgebra: self.bialgebra.clone(),
            module: self.bimodule.left_module(),
            comodule: self.left_comodule(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxter {
    pub algebra: Algebra,
    pub operator: Endo,
    pub lambda: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dendriform {
    pub prec: Mul,
    pub succ: Mul,
    pub alpha: Endo,
    pub beta: Endo,
}

impl Dendriform {
    pub fn dim(&self) -> usize {
        self.prec.dim()
    }

    /// The algebra with product `≺ + ≻`.
    pub fn total(&self) -> Algebra {
        let m = self.prec.matrix() + self.succ.matrix();
        Algebra {
            mul: Mul::from_matrix(m).expect("same shape"),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            unit: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLie {
    pub product: Mul,
    pub alpha: Endo,
    pub beta: Endo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieCoalgebra {
    pub coproduct: Comul,
    pub psi: Endo,
    pub omega: Endo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmented {
    pub algebra: Algebra,
    pub chi: Vec<Scalar>,
    pub lambda: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaugmented {
    pub coalgebra: Coalgebra,
    pub zeta: Vec<Scalar>,
    pub lambda: Scalar,
}

/// `a ▷ (x ⊗ y) = ω(a)x ⊗ β(y)` on `A ⊗ A`.
pub fn act_pair_left(alg: &Algebra, omega: &Endo, a: &[Scalar], xy: &Elem2) -> Elem2 {
    let n = alg.dim();
    let wa = omega.apply(a);
    let mut out = Elem2::zero(n);
    for i in 0..n {
        for j in 0..n {
            let c = xy.get(i, j);
            if c.is_zero() {
                continue;
            }
            let left = alg.product(&wa, &basis(n, i));
            let right = alg.beta.column(j);
            add_tensor(&mut out, c, &left, &right);
        }
    }
    out
}

/// `(x ⊗ y) ◁ a = α(x) ⊗ yψ(a)` on `A ⊗ A`.
pub fn act_pair_right(alg: &Algebra, psi: &Endo, xy: &Elem2, a: &[Scalar]) -> Elem2 {
    let n = alg.dim();
    let pa = psi.apply(a);
    let mut out = Elem2::zero(n);
    for i in 0..n {
        for j in 0..n {
            let c = xy.get(i, j);
            if c.is_zero() {
                continue;
            }
            let left = alg.alpha.column(i);
            let right = alg.product(&basis(n, j), &pa);
            add_tensor(&mut out, c, &left, &right);
        }
    }
    out
}

fn add_tensor(out: &mut Elem2, c: &Scalar, x: &[Scalar], y: &[Scalar]) {
    for (p, xp) in x.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        let cx = c * xp;
        for (q, yq) in y.iter().enumerate() {
            if !yq.is_zero() {
                let v = out.get(p, q) + &(&cx * yq);
                out.set(p, q, v);
            }
        }
    }
}

/// `a ▷ (x ⊗ y ⊗ z) = ω(a)x ⊗ β(y) ⊗ β(z)` on `A^{⊗3}`.
pub fn act_triple_left(alg: &Algebra, omega: &Endo, a: &[Scalar], t: &Elem3) -> Elem3 {
    let n = alg.dim();
    let id = Matrix::identity(n);
    let wa = Matrix::column_vector(&omega.apply(a));
    let left_mult = alg.mul_matrix().compose(&wa.kron(&id));
    let map = Matrix::kron_all(&[&left_mult, &alg.beta, &alg.beta]);
    Elem3::from_coeffs(n, map.apply(t.coeffs()))
}

/// `(x ⊗ y ⊗ z) ◁ a = α(x) ⊗ α(y) ⊗ zψ(a)` on `A^{⊗3}`.
pub fn act_triple_right(alg: &Algebra, psi: &Endo, t: &Elem3, a: &[Scalar]) -> Elem3 {
    let n = alg.dim();
    let id = Matrix::identity(n);
    let pa = Matrix::column_vector(&psi.apply(a));
    let right_mult = alg.mul_matrix().compose(&id.kron(&pa));
    let map = Matrix::kron_all(&[&alg.alpha, &alg.alpha, &right_mult]);
    Elem3::from_coeffs(n, map.apply(t.coeffs()))
}

/// The bimodule structure on `M ⊗ N ⊗ V`:
/// `a ▷ (m ⊗ n ⊗ v) = ω(a)▷m ⊗ β_N(n) ⊗ β_V(v)` and
/// `(m ⊗ n ⊗ v) ◁ a = α_M(m) ⊗ α_N(n) ⊗ v◁ψ(a)`.
pub fn bimodule_triple(
    alg: &Algebra,
    psi: &Endo,
    omega: &Endo,
    m: &Bimodule,
    n: &Bimodule,
    v: &Bimodule,
) -> Result<Bimodule> {
    let mut pre = crate::axioms::maps_commute(&[
        ("alpha", &alg.alpha),
        ("beta", &alg.beta),
        ("psi", psi),
        ("omega", omega),
    ]);
    if let Some(bad) = pre.violations.first() {
        let (a, b) = bad.equation_id.split_once('/').unwrap_or(("", ""));
        return Err(Error::NonCommutingMaps(a.to_string(), b.to_string()));
    }
    for (name, f) in [("psi", psi), ("omega", omega)] {
        pre = crate::axioms::multiplicative(alg, f, name);
        if !pre.passed() {
            return Err(Error::NonMultiplicativeMap(name.to_string()));
        }
    }
    let a_dim = alg.dim();
    for b in [m, n, v] {
        if b.left.cols() != a_dim * b.dim || b.right.cols() != a_dim * b.dim {
            return Err(Error::DimensionMismatch("bimodule over a different algebra".into()));
        }
    }
    let im = Matrix::identity(m.dim);
    let iv = Matrix::identity(v.dim);
    let left_m = m.left.compose(&omega.kron(&im));
    let left = Matrix::kron_all(&[&left_m, &n.beta, &v.beta]);
    let right_v = v.right.compose(&iv.kron(psi));
    let right = Matrix::kron_all(&[&m.alpha, &n.alpha, &right_v]);
    Ok(Bimodule {
        dim: m.dim * n.dim * v.dim,
        left,
        right,
        alpha: Matrix::kron_all(&[&m.alpha, &n.alpha, &v.alpha]),
        beta: Matrix::kron_all(&[&m.beta, &n.beta, &v.beta]),
    })
}
