use super::{require, require_bialgebra, same_dim, Side};
use crate::axioms::{check_bihom_algebra, check_bihom_coalgebra, commute, comultiplicative, multiplicative};
use crate::error::{Error, Result};
use crate::exact::{Comul, Endo, Matrix, Mul, Scalar};
use crate::report::Report;
use crate::structures::{Algebra, Bialgebra, Coalgebra};

/// Twists an untwisted λ-infinitesimal bialgebra by four pairwise commuting
/// maps that are both algebra and coalgebra morphisms:
/// `μ' = μ ∘ (α ⊗ β)`, `Δ' = (ω ⊗ ψ) ∘ Δ`.
pub fn yau_twist(b: &Bialgebra, alpha: &Endo, beta: &Endo, psi: &Endo, omega: &Endo) -> Result<Bialgebra> {
    let n = b.dim();
    for (name, f) in [("alpha", b.alpha()), ("beta", b.beta()), ("psi", b.psi()), ("omega", b.omega())] {
        if !f.is_identity() {
            return Err(Error::Invalid(format!("the input's {name} must be the identity")));
        }
    }
    require_bialgebra(b)?;
    let maps = [("alpha", alpha), ("beta", beta), ("psi", psi), ("omega", omega)];
    for (name, f) in maps {
        same_dim(name, n, f.rows())?;
        same_dim(name, n, f.cols())?;
    }
    for (i, (a, f)) in maps.iter().enumerate() {
        for (c, g) in &maps[i + 1..] {
            if f.compose(g) != g.compose(f) {
                return Err(Error::NonCommutingMaps(a.to_string(), c.to_string()));
            }
        }
    }
    for (name, f) in maps {
        if !multiplicative(&b.algebra, f, "(1.2)").passed() {
            return Err(Error::NotMorphism { map: name.into(), equation_id: "(1.2)".into() });
        }
        if !comultiplicative(b.delta(), f, "(1.7)").passed() {
            return Err(Error::NotMorphism { map: name.into(), equation_id: "(1.7)".into() });
        }
    }
    let mul = Mul::from_matrix(b.mu().compose(&alpha.kron(beta)))?;
    let comul = Comul::from_matrix(omega.kron(psi).compose(b.delta()))?;
    let unit = b
        .algebra
        .unit
        .clone()
        .filter(|u| maps.iter().all(|(_, f)| f.apply(u) == *u));
    let counit = b.coalgebra.counit.clone().filter(|e| {
        let e = Matrix::row_vector(e);
        maps.iter().all(|(_, f)| e.compose(f) == e)
    });
    Ok(Bialgebra {
        algebra: Algebra { mul, alpha: alpha.clone(), beta: beta.clone(), unit },
        coalgebra: Coalgebra { comul, psi: psi.clone(), omega: omega.clone(), counit },
        lambda: b.lambda.clone(),
    })
}

/// `Δ(a) = −λ ω(a) ⊗ 1` (left) or `Δ(a) = −λ 1 ⊗ ψ(a)` (right) on a unital algebra.
pub fn trivial_coproduct(alg: &Algebra, psi: &Endo, omega: &Endo, lambda: &Scalar, side: Side) -> Result<Bialgebra> {
    let n = alg.dim();
    same_dim("psi", n, psi.rows())?;
    same_dim("omega", n, omega.rows())?;
    let u = Matrix::column_vector(alg.unit_or_err()?);
    require(check_bihom_algebra(alg))?;
    let mut pre = Report::new();
    commute(&mut pre, "(1.7a)", psi, omega);
    commute(&mut pre, "(12.1a)", &alg.alpha, psi);
    commute(&mut pre, "(12.1b)", &alg.alpha, omega);
    commute(&mut pre, "(12.1c)", &alg.beta, psi);
    commute(&mut pre, "(12.1d)", &alg.beta, omega);
    pre.merge(multiplicative(alg, psi, "(12.3a)"));
    pre.merge(multiplicative(alg, omega, "(12.3b)"));
    let uv = alg.unit.as_ref().expect("checked");
    pre.compare_vectors("(12.30a)", &psi.apply(uv), uv, &[n]);
    pre.compare_vectors("(12.30b)", &omega.apply(uv), uv, &[n]);
    require(pre)?;
    let d = match side {
        Side::Left => omega.kron(&u),
        Side::Right => u.kron(psi),
    };
    let comul = Comul::from_matrix(d.scale(&-lambda))?;
    Ok(Bialgebra {
        algebra: alg.clone(),
        coalgebra: Coalgebra { comul, psi: psi.clone(), omega: omega.clone(), counit: None },
        lambda: lambda.clone(),
    })
}

/// `μ(a ⊗ b) = −λ α(a)ε(b)` (left) or `μ(a ⊗ b) = −λ ε(a)β(b)` (right) on a counital coalgebra.
pub fn trivial_product(coalg: &Coalgebra, alpha: &Endo, beta: &Endo, lambda: &Scalar, side: Side) -> Result<Bialgebra> {
    let n = coalg.dim();
    same_dim("alpha", n, alpha.rows())?;
    same_dim("beta", n, beta.rows())?;
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
    let m = match side {
        Side::Left => alpha.kron(&e),
        Side::Right => e.kron(beta),
    };
    let mul = Mul::from_matrix(m.scale(&-lambda))?;
    Ok(Bialgebra {
        algebra: Algebra { mul, alpha: alpha.clone(), beta: beta.clone(), unit: None },
        coalgebra: coalg.clone(),
        lambda: lambda.clone(),
    })
}
