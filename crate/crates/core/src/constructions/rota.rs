use super::{inv, pow, require, validate_qt_data};
use crate::axioms::{check_bihom_algebra, check_rota_baxter};
use crate::error::{Error, Result};
use crate::exact::{Elem2, Endo, Matrix, Mul, Scalar};
use crate::structures::{Algebra, Dendriform, RotaBaxter};
use crate::ybe::abhybe_residual;

/// Which equation `r` solves: weight `λ` (`Plus`) or `−λ` (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Which half of the dendriform pair absorbs the `λab` term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendriformVariant {
    /// `a ≺ b = aR(b) + λab`, `a ≻ b = R(a)b`.
    Prec,
    /// `a ≺ b = aR(b)`, `a ≻ b = R(a)b + λab`.
    Succ,
}

/// `R(a) = ∓ β²ψ(r¹)(α⁻¹β⁻¹(a) αω(r²))`: the minus sign for a solution of
/// weight `λ` (`Sign::Plus`), the plus sign for weight `−λ` (`Sign::Minus`).
/// The result is a Rota–Baxter operator of weight `λ`.
pub fn rota_baxter_from_r(alg: &Algebra, psi: &Endo, omega: &Endo, r: &Elem2, lambda: &Scalar, sign: Sign) -> Result<RotaBaxter> {
    validate_qt_data(alg, psi, omega, r)?;
    let anti = sign == Sign::Minus;
    if !abhybe_residual(alg, psi, omega, r, lambda, anti)?.is_solution {
        return Err(Error::NotYbeSolution);
    }
    let n = alg.dim();
    let (al, be, mu) = (&alg.alpha, &alg.beta, alg.mul_matrix());
    let ai = inv(al, "alpha")?;
    let bi = inv(be, "beta")?;
    let id = Matrix::identity(n);
    let rc = Matrix::column_vector(r.coeffs());
    // a ↦ r¹ ⊗ a ⊗ r²
    let spread = Matrix::permutation(&[n, n, n], &[0, 2, 1]).compose(&rc.kron(&id));
    let maps = Matrix::kron_all(&[&pow(be, 2).compose(psi), &ai.compose(&bi), &al.compose(omega)]);
    let op = Matrix::chain(&[mu, &id.kron(mu), &maps, &spread]);
    let operator = match sign {
        Sign::Plus => -&op,
        Sign::Minus => op,
    };
    Ok(RotaBaxter { algebra: alg.clone(), operator, lambda: lambda.clone() })
}

pub fn dendriform_from_rb(rb: &RotaBaxter, variant: DendriformVariant) -> Result<Dendriform> {
    require(check_bihom_algebra(&rb.algebra))?;
    require(check_rota_baxter(rb))?;
    let n = rb.algebra.dim();
    let mu = rb.algebra.mul_matrix();
    let id = Matrix::identity(n);
    let mut prec = mu.compose(&id.kron(&rb.operator));
    let mut succ = mu.compose(&rb.operator.kron(&id));
    let extra = mu.scale(&rb.lambda);
    match variant {
        DendriformVariant::Prec => prec = &prec + &extra,
        DendriformVariant::Succ => succ = &succ + &extra,
    }
    Ok(Dendriform {
        prec: Mul::from_matrix(prec)?,
        succ: Mul::from_matrix(succ)?,
        alpha: rb.algebra.alpha.clone(),
        beta: rb.algebra.beta.clone(),
    })
}

#[allow(clippy::too_many_arguments)]
pub fn dendriform_from_qt(
    alg: &Algebra,
    psi: &Endo,
    omega: &Endo,
    r: &Elem2,
    lambda: &Scalar,
    sign: Sign,
    variant: DendriformVariant,
) -> Result<Dendriform> {
    dendriform_from_rb(&rota_baxter_from_r(alg, psi, omega, r, lambda, sign)?, variant)
}
