use super::require;
use crate::axioms::{check_augmented, check_bihom_algebra, check_bihom_coalgebra, check_coaugmented, comultiplicative, multiplicative};
use crate::error::{Error, Result};
use crate::exact::{Comul, Matrix, Mul, Scalar};
use crate::report::Report;
use crate::structures::{Algebra, Augmented, Bialgebra, Coalgebra, Coaugmented};

fn check_weights(a: &Scalar, b: &Scalar) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::WeightMismatch { expected: a.to_string(), found: b.to_string() })
    }
}

/// Product on `A ⊗ B`:
/// `(a⊗b)(a'⊗b') = χ_B(b) aa' ⊗ β(b') + χ_A(a') α(a) ⊗ bb' + λ χ_A(a')χ_B(b) α(a) ⊗ β(b')`.
fn aug_product(a: &Algebra, chi_a: &[Scalar], b: &Algebra, chi_b: &[Scalar], lambda: &Scalar) -> Matrix {
    let (na, nb) = (a.dim(), b.dim());
    let p = Matrix::permutation(&[na, nb, na, nb], &[0, 2, 1, 3]);
    let ca = Matrix::row_vector(chi_a);
    let cb = Matrix::row_vector(chi_b);
    let a_alpha_chi = a.alpha.kron(&ca);
    let b_chi_beta = cb.kron(&b.beta);
    let t1 = a.mul_matrix().kron(&b_chi_beta);
    let t2 = a_alpha_chi.kron(b.mul_matrix());
    let t3 = a_alpha_chi.kron(&b_chi_beta).scale(lambda);
    (&(&t1 + &t2) + &t3).compose(&p)
}

/// Tensor product of two λ-augmented BiHom-associative algebras, basis `e_i ⊗ f_j`
/// in row-major order.
pub fn aug_tensor_product(a: &Augmented, b: &Augmented) -> Result<Augmented> {
    check_weights(&a.lambda, &b.lambda)?;
    for x in [a, b] {
        require(check_bihom_algebra(&x.algebra))?;
        require(check_augmented(x))?;
    }
    let mul = Mul::from_matrix(aug_product(&a.algebra, &a.chi, &b.algebra, &b.chi, &a.lambda))?;
    let chi = Matrix::row_vector(&a.chi).kron(&Matrix::row_vector(&b.chi)).entries().to_vec();
    Ok(Augmented {
        algebra: Algebra {
            mul,
            alpha: a.algebra.alpha.kron(&b.algebra.alpha),
            beta: a.algebra.beta.kron(&b.algebra.beta),
            unit: None,
        },
        chi,
        lambda: a.lambda.clone(),
    })
}

/// Coproduct on `C ⊗ D`:
/// `Δ(c⊗d) = (c₁⊗ζ_D)⊗(c₂⊗ψ(d)) + (ω(c)⊗d₁)⊗(ζ_C⊗d₂) + λ(ω(c)⊗ζ_D)⊗(ζ_C⊗ψ(d))`.
fn coaug_coproduct(c: &Coalgebra, zc: &[Scalar], d: &Coalgebra, zd: &[Scalar], lambda: &Scalar) -> Matrix {
    let (nc, nd) = (c.dim(), d.dim());
    let q = Matrix::permutation(&[nc, nc, nd, nd], &[0, 2, 1, 3]);
    let zc = Matrix::column_vector(zc);
    let zd = Matrix::column_vector(zd);
    let c_omega_z = c.omega.kron(&zc);
    let d_z_psi = zd.kron(&d.psi);
    let t1 = c.comul_matrix().kron(&d_z_psi);
    let t2 = c_omega_z.kron(d.comul_matrix());
    let t3 = c_omega_z.kron(&d_z_psi).scale(lambda);
    q.compose(&(&(&t1 + &t2) + &t3))
}

pub fn coaug_tensor_product(c: &Coaugmented, d: &Coaugmented) -> Result<Coaugmented> {
    check_weights(&c.lambda, &d.lambda)?;
    for x in [c, d] {
        require(check_bihom_coalgebra(&x.coalgebra))?;
        require(check_coaugmented(x))?;
    }
    let comul = Comul::from_matrix(coaug_coproduct(&c.coalgebra, &c.zeta, &d.coalgebra, &d.zeta, &c.lambda))?;
    let zeta = Matrix::column_vector(&c.zeta).kron(&Matrix::column_vector(&d.zeta)).entries().to_vec();
    Ok(Coaugmented {
        coalgebra: Coalgebra {
            comul,
            psi: c.coalgebra.psi.kron(&d.coalgebra.psi),
            omega: c.coalgebra.omega.kron(&d.coalgebra.omega),
            counit: None,
        },
        zeta,
        lambda: c.lambda.clone(),
    })
}

/// Whether `Δ: A -> A ⊗ A` is a morphism of BiHom algebras, where `A ⊗ A`
/// carries the augmented tensor product with `χ = ε`.
pub fn check_delta_morphism(b: &Bialgebra) -> Result<Report> {
    let n = b.dim();
    let eps = b.coalgebra.counit_or_err()?;
    let prod = aug_product(&b.algebra, eps, &b.algebra, eps, &b.lambda);
    let d = b.delta();
    let mut r = Report::new();
    r.compare("(T2.21)", &d.compose(b.mu()), &prod.compose(&d.kron(d)), &[n, n], &[n, n]);
    r.merge(comultiplicative(d, b.alpha(), "(T2.21a)"));
    r.merge(comultiplicative(d, b.beta(), "(T2.21b)"));
    Ok(r)
}

/// Whether `μ: A ⊗ A -> A` is a morphism of BiHom coalgebras, where `A ⊗ A`
/// carries the coaugmented tensor coproduct with `ζ = 1`.
pub fn check_mu_comorphism(b: &Bialgebra) -> Result<Report> {
    let n = b.dim();
    let unit = b.algebra.unit.as_ref().ok_or(Error::MissingUnit)?;
    let co = coaug_coproduct(&b.coalgebra, unit, &b.coalgebra, unit, &b.lambda);
    let mu = b.mu();
    let mut r = Report::new();
    r.compare("(T2.21c)", &b.delta().compose(mu), &mu.kron(mu).compose(&co), &[n, n], &[n, n]);
    r.merge(multiplicative(&b.algebra, b.psi(), "(T2.21d)"));
    r.merge(multiplicative(&b.algebra, b.omega(), "(T2.21e)"));
    Ok(r)
}
