use super::{inv, require, same_dim};
use crate::axioms::{check_bihom_algebra, check_bihom_coalgebra, commute, comultiplicative, multiplicative};
use crate::error::{Error, Result};
use crate::exact::{BiForm, Comul, Elem2, Endo, Matrix, Mul, Scalar};
use crate::report::Report;
use crate::structures::{Algebra, Bialgebra, Coalgebra};

/// Checks the standing hypotheses for building a coproduct from `r`:
/// a unital BiHom-associative algebra with invertible `α, β`, maps `ψ, ω`
/// that are multiplicative, fix the unit and commute with everything, and
/// `r` invariant under all four maps.
pub fn validate_qt_data(alg: &Algebra, psi: &Endo, omega: &Endo, r: &Elem2) -> Result<()> {
    let n = alg.dim();
    same_dim("psi", n, psi.rows())?;
    same_dim("omega", n, omega.rows())?;
    same_dim("r", n, r.dim())?;
    inv(&alg.alpha, "alpha")?;
    inv(&alg.beta, "beta")?;
    let u = alg.unit_or_err()?.clone();
    require(check_bihom_algebra(alg))?;
    let mut pre = Report::new();
    commute(&mut pre, "(1.7a)", psi, omega);
    commute(&mut pre, "(12.1a)", &alg.alpha, psi);
    commute(&mut pre, "(12.1b)", &alg.alpha, omega);
    commute(&mut pre, "(12.1c)", &alg.beta, psi);
    commute(&mut pre, "(12.1d)", &alg.beta, omega);
    pre.merge(multiplicative(alg, psi, "(12.3a)"));
    pre.merge(multiplicative(alg, omega, "(12.3b)"));
    pre.compare_vectors("(12.30a)", &psi.apply(&u), &u, &[n]);
    pre.compare_vectors("(12.30b)", &omega.apply(&u), &u, &[n]);
    require(pre)?;
    for (name, f) in [("alpha", &alg.alpha), ("beta", &alg.beta), ("psi", psi), ("omega", omega)] {
        if f.kron(f).apply(r.coeffs()) != r.coeffs() {
            return Err(Error::NotInvariant(name.to_string()));
        }
    }
    Ok(())
}

/// `Δ_r(a) = ωα⁻¹(a)r¹ ⊗ β(r²) − α(r¹) ⊗ r²ψβ⁻¹(a) − λ ω(a) ⊗ 1`,
/// or with last term `−λ 1 ⊗ ψ(a)` when `anti`.
pub fn delta_r(alg: &Algebra, psi: &Endo, omega: &Endo, r: &Elem2, lambda: &Scalar, anti: bool) -> Result<Bialgebra> {
    validate_qt_data(alg, psi, omega, r)?;
    let (al, be) = (&alg.alpha, &alg.beta);
    let ai = inv(al, "alpha")?;
    let bi = inv(be, "beta")?;
    let mu = alg.mul_matrix();
    let rc = Matrix::column_vector(r.coeffs());
    let u = Matrix::column_vector(alg.unit.as_ref().expect("validated"));
    let t1 = mu.kron(be).compose(&omega.compose(&ai).kron(&rc));
    let t2 = al.kron(mu).compose(&rc.kron(&psi.compose(&bi)));
    let t3 = if anti { u.kron(psi) } else { omega.kron(&u) };
    let d = &(&t1 - &t2) - &t3.scale(lambda);
    Ok(Bialgebra {
        algebra: alg.clone(),
        coalgebra: Coalgebra {
            comul: Comul::from_matrix(d)?,
            psi: psi.clone(),
            omega: omega.clone(),
            counit: None,
        },
        lambda: lambda.clone(),
    })
}

/// Dual of [`validate_qt_data`] for a bilinear form on a counital coalgebra.
pub fn validate_coqt_data(coalg: &Coalgebra, alpha: &Endo, beta: &Endo, sigma: &BiForm) -> Result<()> {
    let n = coalg.dim();
    same_dim("alpha", n, alpha.rows())?;
    same_dim("beta", n, beta.rows())?;
    same_dim("sigma", n, sigma.dim())?;
    inv(&coalg.psi, "psi")?;
    inv(&coalg.omega, "omega")?;
    let e = Matrix::row_vector(coalg.counit_or_err()?);
    require(check_bihom_coalgebra(coalg))?;
    let mut pre = Report::new();
    commute(&mut pre, "(1.2a)", alpha, beta);
    commute(&mut pre, "(12.1a)", alpha, &coalg.psi);
    commute(&mut pre, "(12.1b)", alpha, &coalg.omega);
    commute(&mut pre, "(12.1c)", beta, &coalg.psi);
    commute(&mut pre, "(12.1d)", beta, &coalg.omega);
    pre.merge(comultiplicative(coalg.comul_matrix(), alpha, "(12.2a)"));
    pre.merge(comultiplicative(coalg.comul_matrix(), beta, "(12.2b)"));
    pre.compare("(12.31a)", &e.compose(alpha), &e, &[n], &[]);
    pre.compare("(12.31b)", &e.compose(beta), &e, &[n], &[]);
    require(pre)?;
    let s = sigma.matrix();
    for (name, f) in [("alpha", alpha), ("beta", beta), ("psi", &coalg.psi), ("omega", &coalg.omega)] {
        if s.compose(&f.kron(f)) != *s {
            return Err(Error::NotInvariant(name.to_string()));
        }
    }
    Ok(())
}

/// `μ_σ(c ⊗ d) = αω⁻¹(c₁)σ(c₂, ψ(d)) − σ(ω(c), d₁)βψ⁻¹(d₂) − λ α(c)ε(d)`,
/// or with last term `−λ ε(c)β(d)` when `anti`.
pub fn mu_sigma(coalg: &Coalgebra, alpha: &Endo, beta: &Endo, sigma: &BiForm, lambda: &Scalar, anti: bool) -> Result<Bialgebra> {
    validate_coqt_data(coalg, alpha, beta, sigma)?;
    let n = coalg.dim();
    let (ps, om) = (&coalg.psi, &coalg.omega);
    let pi = inv(ps, "psi")?;
    let oi = inv(om, "omega")?;
    let d = coalg.comul_matrix();
    let s = sigma.matrix();
    let e = Matrix::row_vector(coalg.counit.as_ref().expect("validated"));
    let id = Matrix::identity(n);
    let t1 = alpha.compose(&oi).kron(&s.compose(&id.kron(ps))).compose(&d.kron(&id));
    let t2 = s.compose(&om.kron(&id)).kron(&beta.compose(&pi)).compose(&id.kron(d));
    let t3 = if anti { e.kron(beta) } else { alpha.kron(&e) };
    let m = &(&t1 - &t2) - &t3.scale(lambda);
    Ok(Bialgebra {
        algebra: Algebra { mul: Mul::from_matrix(m)?, alpha: alpha.clone(), beta: beta.clone(), unit: None },
        coalgebra: coalg.clone(),
        lambda: lambda.clone(),
    })
}
